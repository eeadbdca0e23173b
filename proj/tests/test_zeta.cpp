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
#include "zeta/zeta.hpp"

using namespace dwa;

TEST_CASE("Bernoulli numbers and zeta values") {
  CHECK(bernoulli(1) == Rat(1, 6));
  CHECK(bernoulli(2) == Rat(1, 30));
  CHECK(bernoulli(3) == Rat(1, 42));
  CHECK(bernoulli(6) == Rat(691, 2730));
  CHECK(zeta_negative_odd(1) == Rat(-1, 12));
  CHECK(zeta_negative_odd(2) == Rat(1, 120));
  CHECK_THROWS_AS(bernoulli(0), std::invalid_argument);
  CHECK(verify_zeta_values(6).status == Status::Pass);
}

TEST_CASE("a-coefficients") {
  // (1-e^x)(1-e^{-bx}) = -b x^2 + ..., and the remaining factor is 1/2 at x = 0
  auto a = a_coefficients(2, 1, Rat(3, 2), 3);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == Rat(-3, 4));
  for (int N = 3; N <= 5; ++N)
    for (int i = 1; i < N; ++i) CHECK(a_coefficients(N, i, Rat(N + 1, N), 6) == a_coefficients(N, N - i, Rat(N + 1, N), 6));
  CHECK_THROWS_AS(a_coefficients(3, 0, Rat(4, 3), 2), std::invalid_argument);
}

TEST_CASE("zeta-regularized identity") {
  for (int N = 2; N <= 5; ++N)
    for (int i = 1; i < N; ++i)
      for (Rat b : {Rat(N + 1, N), Rat(N, N + 1)}) {
        auto r = verify_zeta_identity(N, i, b, 6);
        CHECK_MESSAGE(r.status == Status::Pass, r.case_key.dump());
      }
  CHECK_THROWS_AS(verify_zeta_identity(2, 1, Rat(2), 4), std::invalid_argument);
}

TEST_CASE("log sinh expansion") { CHECK(verify_log_sinh(6).status == Status::Pass); }

TEST_CASE("vacuum eigenvalues") {
  for (int N = 2; N <= 5; ++N)
    for (int i = 0; i <= N; ++i)
      for (auto [q, t] : default_generic_points()) {
        auto c = make_generic_ctx(N, q, t);
        CHECK(verify_vacuum_eigenvalue(c, i).status == Status::Pass);
      }
  auto c = make_generic_ctx(2, Rat(3, 2), Rat(5, 3));
  CHECK(p_binomial(c, 2, 1) == c.s_pow(1) + c.s_pow(-1));
}
