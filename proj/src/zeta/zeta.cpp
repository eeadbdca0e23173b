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

#include "zeta/zeta.hpp"

#include <chrono>

#include "core/series.hpp"
#include "fock/fock.hpp"
#include "structfn/structfn.hpp"

namespace dwa {

namespace {

using PS = LaurentWindow<Rat>;

PS ps(int order) { return PS::univariate("x", 0, order); }

/// e^{c x} to the given order.
PS exp_series(const Rat& c, int order) {
  PS f = ps(order);
  Rat term(1);
  for (int n = 0; n <= order; ++n) {
    f.set(n, term);
    term = term * c / Rat(n + 1);
  }
  return f;
}

/// (1 - e^{c x}) / x.
PS one_minus_exp_over_x(const Rat& c, int order) {
  PS e = exp_series(c, order + 1);
  PS f = ps(order);
  for (int n = 0; n <= order; ++n) f.set(n, Rat(0) - e.coeff({n + 1}));
  return f;
}

/// sinh(c x) / x.
PS sinh_over_x(const Rat& c, int order) {
  PS a = exp_series(c, order + 1), b = exp_series(-c, order + 1);
  PS f = ps(order);
  for (int n = 0; n <= order; ++n) f.set(n, (a.coeff({n + 1}) - b.coeff({n + 1})) / Rat(2));
  return f;
}

Rat canon(Rat x) {
  x.canonicalize();
  return x;
}

}  // namespace

Rat bernoulli(int m) {
  if (m < 1) throw std::invalid_argument("Bernoulli number needs m >= 1");
  const int order = 2 * m;
  // x/(e^x - 1) = 1 / ((e^x - 1)/x)
  PS d = ps(order);
  Rat fact(1);
  for (int n = 0; n <= order; ++n) {
    fact = fact * Rat(n + 1);  // (n+1)!
    d.set(n, Rat(1) / fact);
  }
  PS g = series_inverse(d);
  // coefficient of x^{2m} is (-1)^{m-1} B_m / (2m)!
  Rat c = g.coeff({order}) * factorial(order);
  return canon(m % 2 ? c : Rat(0) - c);
}

Rat zeta_negative_odd(int m) {
  Rat b = bernoulli(m);
  return canon((m % 2 ? Rat(-1) : Rat(1)) * b / Rat(2 * m));
}

std::vector<Rat> a_coefficients(int N, int i, const Rat& beta, int M) {
  if (i < 1 || i > N - 1) throw std::invalid_argument("a-coefficients need 1 <= i <= N-1");
  if (M < 1) throw std::invalid_argument("a-coefficients need M >= 1");
  const int order = 2 * M;
  const Rat g = canon(Rat(1) - beta);  // p^n = e^{(1-beta) n hbar}
  // Each 1 - e^{cx} = x (1 - e^{cx})/x; four factors above, two below: x^2 in front.
  PS num = one_minus_exp_over_x(Rat(1), order) * one_minus_exp_over_x(-beta, order) *
           one_minus_exp_over_x(g * i, order) * one_minus_exp_over_x(g * (N - i), order);
  PS den = one_minus_exp_over_x(g, order) * one_minus_exp_over_x(g * N, order);
  PS r = num * series_inverse(den);  // coefficient of x^{n} is that of x^{n+2}
  std::vector<Rat> a;
  for (int e = 1; e <= order; ++e) {
    Rat c = e >= 2 ? r.coeff({e - 2}) : Rat(0);
    if (e % 2 == 1) {
      if (!is_zero(c)) throw std::domain_error("odd power of n hbar in the a-expansion");
      continue;
    }
    a.push_back(canon(c));
  }
  return a;
}

CheckRecord verify_zeta_identity(int N, int i, const Rat& beta, int M) {
  auto t0 = std::chrono::steady_clock::now();
  CheckRecord rec;
  rec.suite = "zeta.identity";
  rec.case_key = {{"N", N}, {"i", i}, {"beta", beta.get_str()}, {"M", M}};
  rec.truncations = {{"hbar_order", 2 * M}};
  Rat b1 = canon(Rat(N + 1, N)), b2 = canon(Rat(N, N + 1));
  if (beta != b1 && beta != b2) throw std::invalid_argument("zeta identity needs beta = (N+1)/N or N/(N+1)");
  const int order = 2 * M;
  auto a = a_coefficients(N, i, beta, M);
  PS L = ps(order);
  Json aj = Json::array();
  for (int m = 1; m <= M; ++m) {
    L.set(2 * m, a[m - 1] * zeta_negative_odd(m));
    aj.push_back(a[m - 1].get_str());
  }
  PS lhs = series_exp(L);
  // [n] = sinh(n y)/sinh(y), y = (1-beta) hbar / 2; the x factors cancel in the ratio.
  const Rat y = canon((Rat(1) - beta) / Rat(2));
  const PS inv_base = series_inverse(sinh_over_x(y, order));
  auto bracket = [&](int n) { return sinh_over_x(y * n, order) * inv_base; };
  PS top = PS::constant({"x"}, Rat(1), order), bottom = PS::constant({"x"}, Rat(1), order);
  for (int n = 1; n <= N; ++n) top = top * bracket(n);
  for (int n = 1; n <= i; ++n) bottom = bottom * bracket(n);
  for (int n = 1; n <= N - i; ++n) bottom = bottom * bracket(n);
  PS ratio = top * series_inverse(bottom) * PS::constant({"x"}, Rat(1) / binomial(N, i), order);
  PS rhs = ratio * ratio;
  for (int e = 0; e <= order; ++e)
    if (lhs.coeff({e}) != rhs.coeff({e})) {
      rec.fail("zeta-regularized value differs from the p-binomial ratio",
               {{"hbar_order", e}, {"lhs", lhs.coeff({e}).get_str()}, {"rhs", rhs.coeff({e}).get_str()}});
      break;
    }
  rec.details = {{"a_coefficients", aj}};
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

CheckRecord verify_log_sinh(int M) {
  CheckRecord rec;
  rec.suite = "zeta.log_sinh";
  rec.case_key = {{"M", M}};
  const int order = 2 * M;
  PS lhs = series_log(sinh_over_x(Rat(1), order));  // log(sinh x) - log x
  for (int n = 1; n <= M; ++n) {
    Rat expect = (n % 2 ? Rat(1) : Rat(-1)) * Rat(mpz_class(1) << (2 * n - 1)) * bernoulli(n) /
                 (factorial(2 * n) * Rat(n));
    expect.canonicalize();
    if (lhs.coeff({2 * n}) != expect || !is_zero(lhs.coeff({2 * n - 1})))
      rec.fail("log sinh coefficient differs", {{"power", 2 * n}, {"lhs", lhs.coeff({2 * n}).get_str()}, {"rhs", expect.get_str()}});
  }
  rec.details = {{"coefficients_checked", order}};
  return rec;
}

CheckRecord verify_zeta_values(int M) {
  CheckRecord rec;
  rec.suite = "zeta.values";
  rec.case_key = {{"M", M}};
  Json z = Json::object();
  for (int m = 1; m <= M; ++m) {
    Rat b = bernoulli(m);
    if (b <= 0) rec.fail("Bernoulli number not positive in this convention", {{"m", m}});
    z[std::to_string(1 - 2 * m)] = zeta_negative_odd(m).get_str();
  }
  if (zeta_negative_odd(1) != Rat(-1, 12)) rec.fail("zeta(-1) is not -1/12");
  if (Rat(12) * zeta_negative_odd(1) != Rat(-1)) rec.fail("12 zeta(-1) is not -1");
  rec.details = {{"zeta", z}};
  return rec;
}

CheckRecord verify_vacuum_eigenvalue(const GenericCtx& c, int i) {
  CheckRecord rec;
  rec.suite = "vacuum_eigenvalue";
  rec.case_key = {{"N", c.N}, {"i", i}, {"q", c.q_point.get_str()}, {"t", c.t_point.get_str()}};
  auto hw = HighestWeight<AlgNum>::vacuum(c.N);
  AlgNum w = hw_eigenvalue_w(c, hw, i);
  AlgNum pascal = p_binomial(c, c.N, i);
  auto qint = [&](int n) { return (c.s_pow(n) - c.s_pow(-n)) / (c.s - c.sinv); };
  AlgNum fact(1);
  for (int n = 1; n <= c.N; ++n) fact = fact * qint(n);
  for (int n = 1; n <= i; ++n) fact = fact / qint(n);
  for (int n = 1; n <= c.N - i; ++n) fact = fact / qint(n);
  if (!(w == pascal)) rec.fail("eigenvalue differs from the Gaussian binomial", {{"w", scalar_json(w)}, {"expected", scalar_json(pascal)}});
  if (!(w == fact)) rec.fail("eigenvalue differs from the factorial form", {{"w", scalar_json(w)}, {"expected", scalar_json(fact)}});
  rec.details = {{"value", scalar_json(w)}};
  return rec;
}

}  // namespace dwa
