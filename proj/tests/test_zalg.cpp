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
#include "structfn/structfn.hpp"
#include "zalg/zalg.hpp"

using namespace dwa;

TEST_CASE("gl bracket examples") {
  auto E = [](int i, int j, int n) { return GlElement::symbol(i, j, n); };
  CHECK(gl_bracket(E(1, 2, 0), E(2, 1, 0)) == cartan_h(1, 0));
  CHECK(gl_bracket(E(1, 2, 1), E(2, 1, -1)) == cartan_h(1, 0) + GlElement::khat());
  CHECK(gl_bracket(E(1, 2, 0), E(3, 4, 5)).is_zero());
  // [H^1_n, H^1_m] = 2 k n delta_{n+m,0}
  CHECK(gl_bracket(cartan_h(1, 2), cartan_h(1, -2)) == GlElement::khat(AlgNum(4)));
}

TEST_CASE("principal basis for N = 2") {
  PrincipalBasis pb(2);
  CHECK(pb.beta(1) == GlElement::symbol(1, 2, 0) + GlElement::symbol(2, 1, 1));
  CHECK(gl_bracket(pb.beta(1), pb.beta(-1)) == GlElement::khat());
  CHECK(gl_bracket(pb.x(1, 0), pb.x(1, 0)).is_zero());
  // central term k n omega^{mu n} with omega = -1; the beta_0 coefficient vanishes
  CHECK(gl_bracket(pb.x(1, 1), pb.x(1, -1)) == GlElement::khat(AlgNum(-1)));
  CHECK_THROWS_AS(pb.beta(2), std::invalid_argument);
}

TEST_CASE("principal relations and grading") {
  for (int N = 2; N <= 4; ++N) {
    auto r = verify_principal_relations(N, 2 * N + 1);
    CHECK(r.status == Status::Pass);
  }
  PrincipalBasis pb(3);
  CHECK(principal_degree(pb.x(2, 4), 3) == 4);
  CHECK(principal_degree(pb.beta(-5), 3) == -5);
  CHECK_FALSE(principal_degree(GlElement::symbol(1, 2, 0) + GlElement::symbol(1, 1, 0), 3).has_value());
}

TEST_CASE("a perturbed realization breaks the central relation") {
  // [x^{(1)}_1, x^{(2)}_{-1}] for N = 3: coefficient omega^{1} - omega^{-2} = 0 on beta_0,
  // central part k n omega^{mu n} = omega.
  PrincipalBasis pb(3);
  GlElement expect = GlElement::khat(pb.omega_pow(1));
  CHECK(gl_bracket(pb.x(1, 1), pb.x(2, -1)) == expect);
  CHECK_FALSE(gl_bracket(pb.x(1, 1), pb.x(2, -1).scaled(pb.omega_pow(1))) == expect);
}

TEST_CASE("bracket properties on random elements") {
  for (int N = 2; N <= 4; ++N) CHECK(check_bracket_properties(N, 150, 11u + N).status == Status::Pass);
}

TEST_CASE("splitting of the Cartan part gives g") {
  auto ex = exchange_factor(2, 2, 1, 1, 10);
  CHECK(ex.coeff(0) == AlgNum(1));
  for (int n = 1; n <= 10; ++n) CHECK(ex.coeff(n) == AlgNum(n % 2 ? -2 : 2));  // (1-x)/(1+x)
  CHECK(verify_splitting_consistency(3, 1, 1, 2, 12).status == Status::Pass);
  CHECK(verify_splitting_consistency(3, 2, 2, 2, 12).status == Status::Pass);
}
