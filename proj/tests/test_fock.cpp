// Copyright 2026 The dwa-verify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "core/context.hpp"
#include "core/reconstruct.hpp"
#include "fock/fock.hpp"
#include "fock/fock_space.hpp"
#include "wcurrents/wcurrents.hpp"

using namespace dwa;

TEST_CASE("boson commutator value from the closed formula") {
  // N=2, i=j=1, n=1 at (q,t) = (3/2,5/3): -(1-q)(1-1/t)(1-p)/(1-p^2) = -(1-q)(1-1/t)/(1+p).
  auto c = make_generic_ctx(2, Rat(3, 2), Rat(5, 3));
  Rat q(3, 2), t(5, 3), p = q / t;
  Rat expect = -(1 - q) * (1 - 1 / t) / (1 + p);
  CHECK(boson_commutator(c, 1, 1, 1) == AlgNum(expect));
  CHECK(boson_commutator(c, 1, 2, 1, 2).is_zero());
}

TEST_CASE("boson commutator symmetry and constraint properties") {
  for (int N = 2; N <= 5; ++N)
    for (auto [q, t] : default_generic_points()) {
      auto c = make_generic_ctx(N, q, t);
      for (int n = 1; n <= 4; ++n) {
        for (int i = 1; i <= N; ++i)
          for (int j = 1; j <= N; ++j)
            CHECK(boson_commutator(c, i, j, -n) == AlgNum(0) - boson_commutator(c, j, i, n));
        for (int j = 1; j <= N; ++j) {
          AlgNum left(0), right(0);
          for (int i = 1; i <= N; ++i) {
            left += c.p_pow(i * n) * boson_commutator(c, i, j, n);
            right += c.p_pow(-i * n) * boson_commutator(c, j, i, n);
          }
          CHECK(left.is_zero());
          CHECK(right.is_zero());
        }
      }
    }
}

TEST_CASE("vacuum eigenvalues of the zero modes") {
  auto c = make_generic_ctx(3, Rat(2, 7), Rat(3, 5));
  auto hw = HighestWeight<AlgNum>::vacuum(3);
  // e_1(s^2, 1, s^-2)
  CHECK(hw_eigenvalue_w(c, hw, 1) == c.s_pow(2) + AlgNum(1) + c.s_pow(-2));
  CHECK(hw_eigenvalue_w(c, hw, 3) == AlgNum(1));
  FockSpace<AlgNum> fs(c, hw, 4);
  CHECK(w_mode_matrix_element<AlgNum>(fs, {}, {{2, 0}}, {}) == hw_eigenvalue_w(c, hw, 2));
}

TEST_CASE("W^N acts as the identity and W^0 as 1") {
  for (int N = 2; N <= 4; ++N) {
    auto c = make_generic_ctx(N, Rat(3, 2), Rat(5, 3));
    FockSpace<AlgNum> fs(c, sample_highest_weight<AlgNum>(N), 4);
    for (int level = 0; level <= 3; ++level)
      for (const auto& m : fs.basis(level)) {
        auto v = fs.basis_vec(m);
        CHECK(fs.w_mode(N, 0, v) == v);
        CHECK(fs.w_mode(0, 0, v) == v);
        CHECK(fs.w_mode(N, 1, v).is_zero());
        CHECK(fs.w_mode(N, -1, v).is_zero());
      }
  }
}

TEST_CASE("Fock engine agrees with the free-field correlator") {
  for (int N = 2; N <= 4; ++N) {
    auto c = make_generic_ctx(N, Rat(2, 7), Rat(3, 5));
    for (const auto& hw : {HighestWeight<AlgNum>::vacuum(N), sample_highest_weight<AlgNum>(N)}) {
      FockSpace<AlgNum> fs(c, hw, 6);
      for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j) {
          auto corr = w_correlator(c, hw, {{i, 0}, {j, 0}}, 3);
          for (int n = 0; n <= 3; ++n)
            CHECK(w_mode_matrix_element<AlgNum>(fs, {{i, n}}, {}, {{j, -n}}) == corr.coeff(n));
        }
      // Three points: coefficient at (n1, n1+n2) is <W_{n1} W_{n2} W_{n3}>.
      auto corr3 = w_correlator(c, hw, {{1, 0}, {N - 1, 0}, {1, 0}}, 3);
      for (int n1 = 0; n1 <= 3; ++n1)
        for (int n3 = -3; n3 <= 0; ++n3) {
          int n2 = -n1 - n3;
          if (n1 + n2 < 0 || n1 + n2 > 3) continue;
          auto me = w_mode_matrix_element<AlgNum>(fs, {{1, n1}}, {{N - 1, n2}}, {{1, n3}});
          CHECK(me == corr3.coeff({n1, n1 + n2}));
        }
    }
  }
}

TEST_CASE("regular products match the reconstructed two-point function") {
  // Vacuum value of lim f^{a,b}(x) W^a(z) W^b(xz) at x = s^e against the
  // rational function rebuilt from f(x) <W^a W^b>, including points where
  // individual contraction patterns are singular.
  struct Case {
    int N, a, b, e;
  };
  for (auto cs : {Case{2, 1, 1, 3}, Case{3, 1, 2, 0}, Case{3, 2, 2, 5}, Case{4, 1, 3, 0}, Case{4, 2, 2, 0},
                  Case{4, 1, 2, 1}}) {
    auto c = make_generic_ctx(cs.N, Rat(3, 2), Rat(5, 3));
    auto hw = sample_highest_weight<AlgNum>(cs.N);
    FockSpace<AlgNum> fs(c, hw, 4);
    auto series = f_series(c, cs.a, cs.b, 40) * w_correlator(c, hw, {{cs.a, 0}, {cs.b, 0}}, 40).renamed({"x"});
    auto rf = rational_reconstruct_search(series, 30);
    REQUIRE(rf);
    AlgNum x0 = c.s_pow(cs.e);
    AlgNum expect = rf->num.eval(x0) / rf->den.eval(x0);
    auto v = regular_pair_mode(fs, cs.a, cs.b, 0, cs.e, 0, fs.vacuum());
    CHECK(fs.vacuum_coefficient(v) == expect);
  }
}
