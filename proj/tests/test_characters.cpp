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

#include <vector>

#include "characters/characters.hpp"
#include "doctest.h"

using namespace dwa;

namespace {

// Partition counts by the classic coin-change recursion, independent of any series code.
std::vector<mpz_class> partition_counts(int n_max) {
  std::vector<mpz_class> p(n_max + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n_max; ++part)
    for (int n = part; n <= n_max; ++n) p[n] += p[n - part];
  return p;
}

std::vector<long> coefficients(const QSeries& f, const Rat& start, int count) {
  std::vector<long> out;
  for (int n = 0; n < count; ++n) out.push_back(f.coeff(start + Rat(n)).get_si());
  return out;
}

}  // namespace

TEST_CASE("inverse Euler function counts partitions") {
  auto p = partition_counts(30);
  QSeries e = euler_inverse(Rat(30));
  for (int n = 0; n <= 30; ++n) CHECK(e.coeff(Rat(n)) == p[n]);
  CHECK(p[30] == 5604);
  CHECK_THROWS_AS(e.coeff(Rat(31)), std::out_of_range);
}

TEST_CASE("QSeries arithmetic") {
  QSeries a(2, Rat(5));
  a.add(Rat(1, 2), 3);
  a.add(Rat(6), 1);  // above the cutoff, dropped
  CHECK(a.terms().size() == 1);
  CHECK_THROWS_AS(a.coeff(Rat(1, 3)), std::invalid_argument);
  QSeries b = a.shifted(Rat(1, 3));
  CHECK(b.resolution() == 6);
  CHECK(b.cutoff() == Rat(16, 3));
  CHECK(b.coeff(Rat(5, 6)) == 3);
  QSeries one(1, Rat(5));
  one.add(Rat(0), 1);
  CHECK(a * one == a);
  CHECK(first_difference(a, a - one) == Rat(0));
}

TEST_CASE("Rocha-Caridi examples") {
  // Ising vacuum
  QSeries ising = rocha_caridi(3, 4, Rat(1), Rat(1), Rat(6));
  CHECK(coefficients(ising, Rat(0), 7) == std::vector<long>{1, 0, 1, 1, 2, 2, 3});
  // leading coefficient 1
  for (int s = 1; s <= 3; ++s) CHECK(rocha_caridi(2, 4, Rat(1), Rat(s), Rat(10)).coeff(Rat(0)) == 1);
  // more m-terms never change the truncation
  CHECK(rocha_caridi(2, 4, Rat(1), Rat(2), Rat(20), 3) == rocha_caridi(2, 4, Rat(1), Rat(2), Rat(20)));
}

TEST_CASE("character examples") {
  CHECK(dza_prefactor(2, Rat(1)) == Rat(1, 8));
  CHECK(dza_prefactor(2, Rat(0)) == Rat(0));
  // k = 2, j = 0: the exponent is 2m^2, so (1 - 2y^2 + 2y^8 - ...)/(y;y)_inf
  QSeries c = dza_character(2, Rat(0), Rat(10));
  QSeries sum(1, Rat(10));
  sum.add(Rat(0), 1);
  sum.add(Rat(2), -2);
  sum.add(Rat(8), 2);
  CHECK(c == (sum * euler_inverse(Rat(10))).with_resolution(16));
  // k = 2, j = 1: y^{1/8} (1 - y - y^3 + ...)/(y;y)_inf
  QSeries c1 = dza_character(2, Rat(1), Rat(41, 8));
  QSeries sum1(1, Rat(5));
  sum1.add(Rat(0), 1);
  sum1.add(Rat(1), -1);
  sum1.add(Rat(3), -1);
  CHECK(c1 == (sum1 * euler_inverse(Rat(5))).shifted(Rat(1, 8)).with_resolution(16));
  CHECK(dza_character(3, Rat(3, 2), Rat(10)) == dza_character(3, Rat(-3, 2), Rat(10)));
  CHECK_THROWS_AS(dza_character(3, Rat(1), Rat(5)), std::invalid_argument);
  CHECK_THROWS_AS(dza_character(2, Rat(2), Rat(5)), std::invalid_argument);
}

TEST_CASE("character identity") {
  for (int k = 2; k <= 4; ++k)
    for (int twoj = -k; twoj <= k; twoj += 2) {
      auto r = verify_char_identity(k, Rat(twoj, 2), Rat(20));
      CHECK_MESSAGE(r.status == Status::Pass, (r.case_key.dump() + " " + r.message));
    }
}

TEST_CASE("a wrong prefactor is detected") {
  QSeries lhs = dza_character(3, Rat(1, 2), Rat(12));
  QSeries rhs = rocha_caridi(2, 5, Rat(1), Rat(3), Rat(12)).shifted(dza_prefactor(3, Rat(1, 2)) + Rat(1, 40));
  CHECK(first_difference(lhs, rhs).has_value());
}
