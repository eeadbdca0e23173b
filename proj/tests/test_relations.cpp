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

#include <map>
#include <random>

#include "doctest.h"
#include "relations/relations.hpp"

using namespace dwa;

namespace {

std::vector<GenericCtx> both_points(int N) {
  std::vector<GenericCtx> out;
  for (const auto& [q, t] : default_generic_points()) out.push_back(make_generic_ctx(N, q, t));
  return out;
}

void require_pass(const CheckRecord& r) {
  INFO(r.suite << " " << r.case_key.dump() << " " << r.message << " " << r.witness.dump());
  CHECK(r.status == Status::Pass);
}

}  // namespace

TEST_CASE("delta mode weight against the expanded delta function") {
  // delta(u z2/z1) F(z1, z2) with F a random Laurent polynomial, expanded
  // termwise with delta(z) = sum_k z^k, against u^n [z2^{-(n+m)}] F(u z2, z2).
  auto c = make_generic_ctx(3, Rat(3, 2), Rat(5, 3));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    int u_exp = d(rng);
    std::map<std::pair<int, int>, AlgNum> F;
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) F[{a, b}] = AlgNum(Rat(d(rng)));
    AlgNum u = c.s_pow(u_exp);
    for (int n = -4; n <= 4; ++n)
      for (int m = -4; m <= 4; ++m) {
        AlgNum direct(0);
        for (int k = -20; k <= 20; ++k)  // delta term u^k z2^k z1^{-k}
          for (const auto& [ab, x] : F)
            if (ab.first - k == -n && ab.second + k == -m) direct = direct + power(u, c.s_pow(-u_exp), k) * x;
        AlgNum restricted(0);
        for (const auto& [ab, x] : F)
          if (ab.first + ab.second == -(n + m)) restricted = restricted + power(u, c.s_pow(-u_exp), ab.first) * x;
        CHECK(direct == delta_mode_weight(c, u_exp, n) * restricted);
      }
  }
}

TEST_CASE("W^1 monomials up to a level") {
  auto kets = w1_monomials(3, false);
  CHECK(kets.size() == 7);  // empty, 1, 2, 11, 3, 21, 111
  auto bras = w1_monomials(3, true);
  CHECK(bras.size() == 7);
  CHECK(bras[3].size() == 2);
  CHECK(bras[3][0].mode == 1);
  CHECK(kets[3][0].mode == -1);
}

TEST_CASE("i = 1 relation, N = 2 and N = 3") {
  RelationWindow w{3, 3};
  for (const auto& c : both_points(2)) {
    auto hw = HighestWeight<AlgNum>::vacuum(2);
    require_pass(verify_w1wj(c, 1, w, hw));
    require_pass(verify_w1wj(c, 2, w, hw));  // j = N: the right-hand side is zero
  }
  auto c = make_generic_ctx(3, Rat(3, 2), Rat(5, 3));
  for (int j = 1; j <= 3; ++j) require_pass(verify_w1wj(c, j, RelationWindow{2, 2}, sample_highest_weight<AlgNum>(3)));
}

TEST_CASE("a wrong right-hand side is detected") {
  auto c = make_generic_ctx(2, Rat(3, 2), Rat(5, 3));
  auto hw = sample_highest_weight<AlgNum>(2);
  FockSpace<AlgNum> fs(c, hw, 4);
  auto terms = w1wj_terms(c, 1);
  terms[1].coef = AlgNum(0) - terms[1].coef;  // flip one delta term
  CheckRecord rec;
  IdentityStats st;
  check_quadratic_relation(fs, 1, 1, {{"flipped", terms}}, RelationWindow{2, 2}, rec, st);
  CHECK(rec.status == Status::Fail);
  CHECK(rec.witness.contains("n"));
}

TEST_CASE("i = 2 relation, N = 3") {
  RelationWindow w{2, 2};
  for (const auto& c : both_points(3)) {
    require_pass(verify_w2wj(c, 2, w, sample_highest_weight<AlgNum>(3)));
    require_pass(verify_w2wj(c, 3, w, HighestWeight<AlgNum>::vacuum(3)));
  }
}

TEST_CASE("general relation, N = 3") {
  RelationWindow w{2, 2};
  auto c = make_generic_ctx(3, Rat(3, 2), Rat(5, 3));
  auto hw = sample_highest_weight<AlgNum>(3);
  require_pass(verify_wiwj(c, 2, 2, w, hw));
  require_pass(verify_wiwj(c, 0, 2, w, hw));  // trivial boundary
  require_pass(verify_wiwj(c, 1, 3, w, hw));  // k-sum empty after W^{>N} = 0
  require_pass(verify_wiwj(c, 1, 1, w, hw));
}

TEST_CASE("cross-engine agreement for i = 2") {
  auto c = make_generic_ctx(3, Rat(2, 7), Rat(3, 5));
  require_pass(verify_cross_engine(c, 2, RelationWindow{2, 2}, sample_highest_weight<AlgNum>(3)));
}

TEST_CASE("normal ordering formula") {
  RelationWindow w{2, 2};
  auto c2 = make_generic_ctx(2, Rat(3, 2), Rat(5, 3));
  require_pass(verify_nowwj(c2, 1, 1, 6, w, sample_highest_weight<AlgNum>(2)));
  require_pass(verify_nowwj(c2, 0, 1, 3, w, sample_highest_weight<AlgNum>(2)));
  CHECK_THROWS_AS(verify_nowwj(c2, 1, 1, 2, w, sample_highest_weight<AlgNum>(2)), std::invalid_argument);
  auto c3 = make_generic_ctx(3, Rat(3, 2), Rat(5, 3));
  require_pass(verify_nowwj(c3, 1, 2, 8, w, sample_highest_weight<AlgNum>(3)));
}

TEST_CASE("fusion") {
  RelationWindow w{2, 2};
  auto c2 = make_generic_ctx(2, Rat(3, 2), Rat(5, 3));
  for (int sign : {1, -1}) {
    require_pass(verify_fusion(c2, FusionKind::W1Wj, 1, 1, sign, w, HighestWeight<AlgNum>::vacuum(2)));
    require_pass(verify_fusion(c2, FusionKind::WiWj, 0, 1, sign, w, sample_highest_weight<AlgNum>(2)));
  }
  auto c3 = make_generic_ctx(3, Rat(3, 2), Rat(5, 3));
  for (int sign : {1, -1}) {
    require_pass(verify_fusion(c3, FusionKind::W1Wj, 1, 2, sign, w, sample_highest_weight<AlgNum>(3)));
    require_pass(verify_fusion(c3, FusionKind::WiWj, 1, 2, sign, w, sample_highest_weight<AlgNum>(3)));
  }
}

TEST_CASE("pole sets") {
  auto c2 = make_generic_ctx(2, Rat(3, 2), Rat(5, 3));
  auto r = verify_poles(c2, 1, 1, 24, HighestWeight<AlgNum>::vacuum(2));
  require_pass(r);
  CHECK(r.details["denominator_roots"] == Json::array({"s^-2", "s^2"}));
  auto c3 = make_generic_ctx(3, Rat(3, 2), Rat(5, 3));
  r = verify_poles(c3, 1, 2, 24, sample_highest_weight<AlgNum>(3));
  require_pass(r);
  CHECK(r.details["denominator_roots"] == Json::array({"s^-3", "s^3"}));
  r = verify_poles(c3, 1, 3, 24, sample_highest_weight<AlgNum>(3));
  require_pass(r);
  CHECK(r.details["denominator_degree"] == 0);
  r = verify_poles(c3, 0, 2, 24, sample_highest_weight<AlgNum>(3));
  require_pass(r);
  CHECK(r.details["denominator_degree"] == 0);
}
