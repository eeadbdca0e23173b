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

#include "doctest.h"
#include "fock/fock.hpp"
#include "limits/limits.hpp"
#include "structfn/structfn.hpp"

using namespace dwa;

TEST_CASE("Limit II scalars") {
  auto c = make_limit_two_ctx(3, 2, 4);
  AlgNum eta = AlgNum::generator(c.field);
  CHECK(c.p.coeff(0) == eta * eta);
  // -(1-q)(1-t^{-1})/(1-p) = hbar + O(hbar^2)
  HbarSeries pre = HbarSeries(AlgNum(0)) - c.fusion_c();
  CHECK(pre.coeff(0).is_zero());
  CHECK(pre.coeff(1) == AlgNum(1));
}

TEST_CASE("hbar expansion of f for N = 2") {
  auto c = make_limit_two_ctx(2, 2, 4);
  auto f = hbar_expand_f(c, 1, 1, 8);
  // hbar^0 part: (1-x)/(1+x) = 1 - 2x + 2x^2 - ...
  CHECK(f.coeff(0) == HbarSeries(AlgNum(1)));
  CHECK(f.coeff(0).exact());
  for (int n = 1; n <= 8; ++n) CHECK(f.coeff(n).coeff(0) == AlgNum(n % 2 ? -2 : 2));
  auto g = g_series(2, 3, 1, 1, 8);
  auto f3 = hbar_expand_f(make_limit_two_ctx(2, 3, 4), 1, 1, 8);
  for (int n = 0; n <= 8; ++n) CHECK(f3.coeff(n).coeff(0) == g.coeff(n));
}

TEST_CASE("Limit II relation reduces to the Z-algebra relation") {
  auto r = verify_limit_II_relation(2, 2, 1, 1, 12);
  CHECK(r.status == Status::Pass);
  CHECK(r.details["central"] == true);
  CHECK(r.details["hbar2_terms"] == Json{{"D^1 delta(eta^2 zeta2/zeta1)", "-2"}});  // k eta^2 with eta^2 = -1
  r = verify_limit_II_relation(3, 1, 1, 1, 12);
  CHECK(r.status == Status::Pass);
  CHECK(r.details["central"] == false);
  r = verify_limit_II_relation(3, 2, 2, 1, 12);
  CHECK(r.status == Status::Pass);
}

TEST_CASE("Z-algebra right-hand side distinguishes the level and the ranks") {
  auto c = make_limit_two_ctx(3, 2, 5);
  auto rhs = limit_two_rhs(c, 1, 2, 2);
  CHECK(rhs.orders[0].empty());
  CHECK(rhs.orders[1].empty());
  CHECK(rhs.orders[2] == z_algebra_rhs(3, 2, 1, 2));
  CHECK(rhs.orders[2] != z_algebra_rhs(3, 1, 1, 2));
  CHECK(limit_two_rhs(c, 1, 1, 2).orders[2] != z_algebra_rhs(3, 2, 2, 2));
}

TEST_CASE("correlator order in Limit II") {
  for (int n = 1; n <= 3; ++n) CHECK(verify_correlator_order(2, 2, n, 6).status == Status::Pass);
  // The one-point function vanishes at hbar = 0 for every N.
  for (int N = 2; N <= 5; ++N) {
    auto c = make_limit_two_ctx(N, 1, 3);
    CHECK(hw_eigenvalue_w(c, HighestWeight<HbarSeries>::vacuum(N), 1).coeff(0).is_zero());
  }
}

TEST_CASE("Limit I zero modes") {
  auto c = make_limit_one_ctx(2, Rat(3, 2), 5);
  // [2]_p = 2 cosh(hbar/4) = 2 + hbar^2/16 + ...
  HbarSeries w = hw_eigenvalue_w(c, HighestWeight<HbarSeries>::vacuum(2), 1);
  CHECK(w.coeff(0) == AlgNum(2));
  CHECK(w.coeff(1).is_zero());
  CHECK(w.coeff(2) == AlgNum(Rat(1, 16)));
  for (int N = 2; N <= 4; ++N) {
    Rat b(N + 1, N);
    b.canonicalize();
    CHECK(verify_limit_I_binomials(b, N, 3).status == Status::Pass);
  }
  CHECK_THROWS_AS(verify_limit_I_binomials(Rat(2), 2, 3), std::invalid_argument);
}
