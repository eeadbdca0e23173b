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

#include "core/algnum.hpp"
#include "core/context.hpp"
#include "core/hbar.hpp"
#include "core/properties.hpp"
#include "core/reconstruct.hpp"
#include "core/series.hpp"

using namespace dwa;

namespace {

Rat small_rat(std::mt19937_64& g) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  Rat r(num(g), den(g));
  r.canonicalize();
  return r;
}

AlgNum random_element(std::mt19937_64& g, const FieldPtr& f) {
  std::vector<Rat> c;
  for (int i = 0; i < f->degree(); ++i) c.push_back(small_rat(g));
  return AlgNum(f, c);
}

std::vector<Rat> ints(std::initializer_list<int> xs) {
  std::vector<Rat> r;
  for (int x : xs) r.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("rational parsing round trip") {
  CHECK(parse_rat("3/2") == Rat(3, 2));
  CHECK(parse_rat("-4/6") == Rat(-2, 3));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(rat_to_string(parse_rat("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_polynomial(8) == ints({1, 0, 0, 0, 1}));
  CHECK(cyclotomic_polynomial(10) == ints({1, -1, 1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
}

TEST_CASE("cyc_reduce normal forms") {
  for (int N = 2; N <= 5; ++N) {
    // eta^N = -1, eta^{2N} = 1, and the full sum of powers vanishes.
    CHECK(cyc_reduce(N, {{N, Rat(1)}}) == AlgNum(-1));
    CHECK(cyc_reduce(N, {{2 * N, Rat(1)}}) == AlgNum(1));
    CHECK(cyc_reduce(N, {{-1, Rat(1)}}) * cyc_reduce(N, {{1, Rat(1)}}) == AlgNum(1));
    std::vector<std::pair<int, Rat>> all;
    for (int k = 0; k < 2 * N; ++k) all.emplace_back(k, Rat(1));
    CHECK(cyc_reduce(N, all).is_zero());
  }
  // N = 2: eta = i, so (1 + i)^2 = 2i.
  auto one_plus_i = cyc_reduce(2, {{0, Rat(1)}, {1, Rat(1)}});
  CHECK(one_plus_i * one_plus_i == cyc_reduce(2, {{1, Rat(2)}}));
}

TEST_CASE("number field axioms on random elements") {
  std::mt19937_64 g(20261016);
  std::vector<FieldPtr> fields = {NumberField::cyclotomic(4), NumberField::cyclotomic(6),
                                  NumberField::cyclotomic(8), NumberField::cyclotomic(10),
                                  NumberField::quadratic(Rat(9, 10)), NumberField::quadratic(Rat(10, 21))};
  for (const auto& f : fields) {
    for (int trial = 0; trial < 25; ++trial) {
      AlgNum a = random_element(g, f), b = random_element(g, f), c = random_element(g, f);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == AlgNum(1));
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("quadratic generator squares to the radicand") {
  auto f = NumberField::quadratic(Rat(9, 10));
  AlgNum s = AlgNum::generator(f);
  CHECK(s * s == AlgNum(Rat(9, 10)));
  CHECK(s.to_string() == "s");
  auto sq = NumberField::quadratic(Rat(4, 9));
  CHECK(sq->degree() == 1);
  CHECK(AlgNum::generator(sq) == AlgNum(Rat(2, 3)));
}

TEST_CASE("hbar series arithmetic") {
  const int T = 8;
  auto ea = HbarSeries::exp_linear(AlgNum(Rat(1, 3)), T);
  auto eb = HbarSeries::exp_linear(AlgNum(Rat(-5, 2)), T);
  CHECK(ea * eb == HbarSeries::exp_linear(AlgNum(Rat(1, 3) - Rat(5, 2)), T));
  CHECK((ea.log() == HbarSeries({AlgNum(0), AlgNum(Rat(1, 3))}, T)));
  // (e^h - 1)/(e^{2h} - 1) = 1/(1 + e^h) = 1/2 - h/4 + h^3/48 - h^5/480 + ...
  auto e1 = HbarSeries::exp_linear(AlgNum(1), T);
  auto e2 = HbarSeries::exp_linear(AlgNum(2), T);
  auto r = (e1 - HbarSeries(1)) / (e2 - HbarSeries(1));
  CHECK(r.prec() == T - 1);
  CHECK(r.coeff(0) == AlgNum(Rat(1, 2)));
  CHECK(r.coeff(1) == AlgNum(Rat(-1, 4)));
  CHECK(r.coeff(2).is_zero());
  CHECK(r.coeff(3) == AlgNum(Rat(1, 48)));
  CHECK(r.coeff(5) == AlgNum(Rat(-1, 480)));
  CHECK_THROWS_AS(r.coeff(T - 1), std::out_of_range);
  CHECK_THROWS_AS(HbarSeries(1) / (e1 - HbarSeries(1)), std::domain_error);
}

TEST_CASE("product window rule") {
  auto a = LaurentWindow<AlgNum>::univariate("x", -1, 4);
  auto b = LaurentWindow<AlgNum>::univariate("x", 2, 3);
  auto c = a * b;
  CHECK(c.lo(0) == 1);
  CHECK(c.hi(0) == std::min(4 + 2, 3 - 1));
  CHECK_THROWS_AS(c.coeff(3), std::out_of_range);
  CHECK(c.coeff(0).is_zero());
}

TEST_CASE("series exp and log") {
  auto x = LaurentWindow<AlgNum>::univariate("x", 0, 10);
  x.set(1, AlgNum(1));
  auto e = series_exp(x);
  for (int n = 0; n <= 10; ++n) CHECK(e.coeff(n) == AlgNum(Rat(1) / factorial(n)));
  CHECK(series_log(e) == x);

  // exp(x + y) = exp(x) exp(y) in two variables.
  std::vector<std::string> v = {"x", "y"};
  LaurentWindow<AlgNum> lx(v, {0, 0}, {5, 5}), ly(v, {0, 0}, {5, 5});
  lx.set({1, 0}, AlgNum(1));
  ly.set({0, 1}, AlgNum(1));
  CHECK(series_exp(lx + ly) == series_exp(lx) * series_exp(ly));

  // Random round trips.
  std::mt19937_64 g(7);
  auto f = NumberField::cyclotomic(6);
  for (int trial = 0; trial < 10; ++trial) {
    LaurentWindow<AlgNum> l(v, {0, 0}, {4, 3});
    l.for_each([&](const std::vector<int>& ex, const AlgNum&) {
      if (ex[0] + ex[1] > 0) l.set(ex, random_element(g, f));
    });
    auto ex = series_exp(l);
    CHECK(series_log(ex) == l);
  }
}

TEST_CASE("rational reconstruction") {
  // Fibonacci: 1/(1 - x - x^2).
  auto s = LaurentWindow<AlgNum>::univariate("x", 0, 12);
  long a = 1, b = 1;
  for (int n = 0; n <= 12; ++n) {
    s.set(n, AlgNum(a));
    long c = a + b;
    a = b;
    b = c;
  }
  auto r = rational_reconstruct(s, 0, 2);
  REQUIRE(r);
  CHECK(r->num == Polynomial<AlgNum>({AlgNum(1)}));
  CHECK(r->den == Polynomial<AlgNum>({AlgNum(1), AlgNum(-1), AlgNum(-1)}));

  // exp is not rational: no (4,4) fit over 13 coefficients.
  auto x = LaurentWindow<AlgNum>::univariate("x", 0, 12);
  x.set(1, AlgNum(1));
  CHECK_FALSE(rational_reconstruct(series_exp(x), 4, 4));
  CHECK_THROWS_AS(rational_reconstruct(s, 6, 6), std::invalid_argument);

  // The search finds the minimal pair.
  auto found = rational_reconstruct_search(s, 8);
  REQUIRE(found);
  CHECK(found->den.degree() == 2);
}

TEST_CASE("generic contexts") {
  auto c = make_generic_ctx(3, Rat(3, 2), Rat(5, 3));
  CHECK(c.p == AlgNum(Rat(9, 10)));
  CHECK(c.s * c.s == c.p);
  CHECK(c.s_pow(-3) * c.s_pow(3) == AlgNum(1));
  CHECK_THROWS_AS(make_generic_ctx(3, Rat(2), Rat(2)), std::invalid_argument);
  CHECK_THROWS_AS(make_generic_ctx(3, Rat(2), Rat(-2)), std::invalid_argument);
  auto r = make_generic_ctx_resampled(3, Rat(2), Rat(2));
  CHECK(!(r.p == AlgNum(1)));
}

TEST_CASE("limit contexts") {
  auto c = make_limit_two_ctx(3, 2, 6);
  CHECK(c.q * c.tinv == c.p);
  CHECK(c.s * c.s == c.p);
  CHECK(c.s * c.sinv == HbarSeries(1));
  // eta^N = -1 at hbar^0.
  CHECK(c.s_pow(3).coeff(0) == AlgNum(-1));
  auto l = make_limit_one_ctx(2, Rat(3, 2), 6);
  CHECK(l.q * l.tinv == l.p);
  CHECK(l.s * l.s == l.p);
}

TEST_CASE("retained product coefficients ignore unknown terms") {
  auto r = check_window_products(300, 17u);
  CHECK(r.status == Status::Pass);
  CHECK(r.details["coefficients_checked"].get<long>() > 1000);
}
