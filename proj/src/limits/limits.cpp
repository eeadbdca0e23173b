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

#include "limits/limits.hpp"

#include <chrono>

#include "fock/fock.hpp"
#include "relations/relation_engine.hpp"
#include "structfn/structfn.hpp"
#include "wcurrents/wcurrents.hpp"

namespace dwa {

namespace {

using Clock = std::chrono::steady_clock;

int mod(int a, int n) { return ((a % n) + n) % n; }

void add_to(ZExpr& e, const ZKey& k, const AlgNum& x) {
  if (x.is_zero()) return;
  auto it = e.find(k);
  if (it == e.end()) {
    e.emplace(k, x);
    return;
  }
  it->second = it->second + x;
  if (it->second.is_zero()) e.erase(it);
}

AlgNum eta_pow(const FieldPtr& f, int N, int e) {
  return power(AlgNum::generator(f), AlgNum::generator(f).inverse(), mod(e, 2 * N));
}

Json zexpr_json(const ZExpr& e) {
  Json j = Json::object();
  for (const auto& [k, x] : e) j[k.describe()] = scalar_json(x);
  return j;
}

/// RHS for i <= j, keys in (zeta_1, zeta_2) of this ordering.
ZRhs rhs_ordered(const HbarCtx& c, int i, int j, int order_h) {
  const int N = c.N;
  ZRhs out;
  out.orders.assign(static_cast<std::size_t>(order_h) + 1, ZExpr{});
  for (const auto& t : wiwj_terms(c, i, j)) {
    const auto& oc = t.content;
    // z1 = s^u z2 with z_a = s^{1-a'} zeta_a: delta(s^{u+i-j} zeta_2/zeta_1).
    const int root = t.delta_exp + i - j;
    int rank = -1, arg = 0;
    HbarSeries weight = t.coef;
    if (oc.kind == OpContent::kSingle) {
      if (oc.a != 0 && oc.a != N) {
        // W^m(s^e z2) = W^m(s^{1-m} s^{e+m-j} zeta_2) -> hbar eta^m z^m(eta^{e+m-j} zeta_2)
        rank = oc.a;
        arg = mod(oc.eA + oc.a - j, 2 * N);
        if (t.coef.valuation() < 1)
          throw std::logic_error("single-current term with an O(1) coefficient in Limit II");
        weight = weight * HbarSeries::hbar() * HbarSeries(eta_pow(c.field, N, oc.a));
      }
    } else {
      if (t.coef.valuation() < 1) throw std::logic_error("two-current term with an O(1) coefficient in Limit II");
      ++out.two_current_terms;
      continue;
    }
    // delta(a y) = sum_d [L^d/d!] D^d delta(a0 y), L = log(a/a0).
    HbarSeries a = c.s_pow(root);
    AlgNum a0 = a.coeff(0);
    HbarSeries L = (a * HbarSeries(a0.inverse())).log();
    HbarSeries Ld(AlgNum(1));
    for (int d = 0; d <= order_h; ++d) {
      HbarSeries term = weight * Ld;
      for (int h = 0; h <= order_h; ++h)
        add_to(out.orders[h], ZKey{mod(root, 2 * N), d, rank, arg}, term.coeff(h));
      Ld = Ld * L * HbarSeries(AlgNum(Rat(1, d + 1)));
    }
  }
  return out;
}

}  // namespace

std::string ZKey::describe() const {
  std::string s = dpow == 0 ? "delta" : "D^" + std::to_string(dpow) + " delta";
  s += "(eta^" + std::to_string(root) + " zeta2/zeta1)";
  if (rank >= 0) s += " z^" + std::to_string(rank) + "(eta^" + std::to_string(arg) + " zeta2)";
  return s;
}

LaurentWindow<HbarSeries> hbar_expand_f(const HbarCtx& c, int i, int j, int order_x, int shift) {
  if (c.mode != ScalarMode::LimitII && c.mode != ScalarMode::LimitI)
    throw std::invalid_argument("hbar_expand_f needs a limit context");
  auto L = LaurentWindow<HbarSeries>::univariate("x", 0, order_x);
  for (int n = 1; n <= order_x; ++n) {
    HbarSeries term = f_log_term(c, i, j, n);  // throws std::domain_error when ill-defined
    if (term.prec() < 1) throw std::domain_error("exponent term of f has no known hbar coefficient");
    L.set(n, term * c.s_pow(shift * n));
  }
  return series_exp(L);
}

ZRhs limit_two_rhs(const HbarCtx& c, int i, int j, int order_h) {
  const int N = c.N;
  if (i < 1 || j < 1 || i > N - 1 || j > N - 1) throw std::invalid_argument("Limit II relation needs 1 <= i, j <= N-1");
  if (i <= j) return rhs_ordered(c, i, j, order_h);
  // Exchanging the currents: LHS_{ij}(z1, z2) = -RHS_{ji}(z2, z1), and
  // D^d delta(a zeta1/zeta2) = (-1)^d D^d delta(a^{-1} zeta2/zeta1).
  ZRhs sw = rhs_ordered(c, j, i, order_h);
  ZRhs out;
  out.two_current_terms = sw.two_current_terms;
  for (const auto& e : sw.orders) {
    ZExpr t;
    for (const auto& [k, x] : e) {
      if (k.dpow > 0 && k.rank >= 0)
        throw std::logic_error("derivative of delta times a current cannot be re-centred");
      ZKey nk{mod(-k.root, 2 * N), k.dpow, k.rank, k.rank >= 0 ? mod(k.arg - k.root, 2 * N) : 0};
      add_to(t, nk, k.dpow % 2 ? x : AlgNum(0) - x);
    }
    out.orders.push_back(t);
  }
  return out;
}

ZExpr z_algebra_rhs(int N, int k, int i, int j) {
  auto f = NumberField::cyclotomic(2 * N);
  AlgNum e = eta_pow(f, N, i + j);
  ZExpr z;
  if ((i + j) % N != 0) {
    add_to(z, ZKey{mod(2 * i, 2 * N), 0, (i + j) % N, mod(2 * i, 2 * N)}, e);
    add_to(z, ZKey{mod(-2 * j, 2 * N), 0, (i + j) % N, 0}, AlgNum(0) - e);
  } else {
    add_to(z, ZKey{mod(2 * i, 2 * N), 1, -1, 0}, AlgNum(k) * e);
  }
  return z;
}

CheckRecord verify_limit_II_relation(int N, int k, int i, int j, int order_x, int order_h) {
  auto t0 = Clock::now();
  CheckRecord rec;
  rec.suite = "limit2.relation";
  rec.case_key = {{"N", N}, {"k", k}, {"i", i}, {"j", j}};
  rec.truncations = {{"x_order", order_x}, {"hbar_order", order_h}};
  rec.assumptions = {
      "W^i(p^{(1-i)/2} zeta) = hbar eta^i z^i(zeta) + O(hbar^2) as a formal substitution rule",
      "products of two nontrivial currents, with their finite f-scalars, are O(hbar^2); with the O(hbar) "
      "prefactor these terms start at hbar^3",
      "z^m(p^a zeta) = z^m(omega^a zeta) + O(hbar)"};
  try {
    auto c = make_limit_two_ctx(N, k, order_h + 3);
    // Left side: hbar^0 of f^{i,j}(s^{i-j} y) and f^{j,i}(s^{j-i} y) against g.
    long coeffs = 0;
    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
      auto f = hbar_expand_f(c, a, b, order_x, a - b);
      auto g = g_series(N, k, a, b, order_x);
      for (int n = 0; n <= order_x; ++n) {
        ++coeffs;
        if (f.coeff(n).valuation() < 0 || !(f.coeff(n).coeff(0) == g.coeff(n))) {
          rec.fail("hbar^0 part of f differs from the Z-algebra structure function",
                   {{"f", std::to_string(a) + "," + std::to_string(b)}, {"x_power", n},
                    {"f0", scalar_json(f.coeff(n).coeff(0))}, {"g", scalar_json(g.coeff(n))}});
          break;
        }
      }
    }
    rec.details["structure_function_coefficients"] = coeffs;
    auto rhs = limit_two_rhs(c, i, j, order_h);
    rec.details["two_current_terms"] = rhs.two_current_terms;
    for (int h = 0; h < 2 && h <= order_h; ++h) {
      if (!rhs.orders[h].empty())
        rec.fail("low hbar order of the relation does not vanish", {{"hbar_order", h}, {"terms", zexpr_json(rhs.orders[h])}});
    }
    if (order_h >= 2) {
      ZExpr expect = z_algebra_rhs(N, k, i, j);
      if (rhs.orders[2] != expect)
        rec.fail("hbar^2 coefficient differs from the Z-algebra relation",
                 {{"hbar_order", 2}, {"got", zexpr_json(rhs.orders[2])}, {"expected", zexpr_json(expect)}});
      rec.details["hbar2_terms"] = zexpr_json(rhs.orders[2]);
      rec.details["central"] = (i + j) % N == 0;
    }
  } catch (const std::out_of_range& e) {
    rec.status = Status::Inconclusive;
    rec.message = std::string("hbar precision exhausted: ") + e.what();
  }
  rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rec;
}

CheckRecord verify_correlator_order(int N, int k, int n_points, int order_x) {
  auto t0 = Clock::now();
  CheckRecord rec;
  rec.suite = "limit2.correlator_order";
  rec.case_key = {{"N", N}, {"k", k}, {"n", n_points}};
  rec.truncations = {{"x_order", order_x}, {"hbar_order", n_points}};
  rec.assumptions = {"highest weight is the vacuum"};
  try {
    auto c = make_limit_two_ctx(N, k, n_points + 2);
    auto hw = HighestWeight<HbarSeries>::vacuum(N);
    long checked = 0;
    if (n_points == 1) {
      ++checked;
      HbarSeries w = hw_eigenvalue_w(c, hw, 1);
      if (w.valuation() < 1) rec.fail("one-point function is O(1)", {{"value", scalar_json(w)}});
    } else {
      std::vector<WInsertion> ins(static_cast<std::size_t>(n_points), WInsertion{1, 0});
      auto corr = w_correlator(c, hw, ins, order_x);
      corr.for_each([&](const std::vector<int>& ex, const HbarSeries& x) {
        ++checked;
        if (rec.passed() && x.valuation() < n_points) {
          if (x.prec() < n_points) throw std::out_of_range("coefficient known to fewer orders than n");
          rec.fail("correlator coefficient below the expected hbar order",
                   {{"exponents", ex}, {"value", scalar_json(x)}});
        }
      });
    }
    rec.details["coefficients_checked"] = checked;
  } catch (const std::out_of_range& e) {
    rec.status = Status::Inconclusive;
    rec.message = std::string("hbar precision exhausted: ") + e.what();
  }
  rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rec;
}

CheckRecord verify_limit_I_binomials(const Rat& beta, int N, int window, int hbar_order) {
  auto t0 = Clock::now();
  CheckRecord rec;
  rec.suite = "limit1.binomials";
  rec.case_key = {{"N", N}, {"beta", beta.get_str()}};
  rec.truncations = {{"hbar_order", hbar_order - 1}, {"mode_window", window}};
  Rat b1(N + 1, N), b2(N, N + 1);
  b1.canonicalize();
  b2.canonicalize();
  if (beta != b1 && beta != b2) throw std::invalid_argument("Limit I needs beta = (N+1)/N or N/(N+1)");
  try {
    auto c = make_limit_one_ctx(N, beta, hbar_order);
    auto hw = HighestWeight<HbarSeries>::vacuum(N);
    Json eig = Json::object();
    for (int i = 0; i <= N; ++i) {
      HbarSeries w = hw_eigenvalue_w(c, hw, i);
      HbarSeries closed = p_binomial(c, N, i);
      eig[std::to_string(i)] = scalar_json(w);
      for (int h = 0; h < hbar_order; ++h)
        if (!(w.coeff(h) == closed.coeff(h)))
          rec.fail("zero-mode eigenvalue differs from the p-binomial", {{"i", i}, {"hbar_order", h}});
      if (!(w.coeff(0) == AlgNum(binomial(N, i))) || !w.coeff(1).is_zero())
        rec.fail("zero-mode eigenvalue is not binom(N,i) + O(hbar^2)", {{"i", i}, {"value", scalar_json(w)}});
      if (i == 0 && !(w == HbarSeries(AlgNum(1)))) rec.fail("W^0 eigenvalue is not 1", {{"value", scalar_json(w)}});
    }
    rec.details["eigenvalues"] = eig;
    long checked = 0;
    for (int a = 1; a < N; ++a)
      for (int b = 1; b < N; ++b) {
        auto corr = w_correlator(c, hw, {{a, 0}, {b, 0}}, window);
        for (int n = 1; n <= window; ++n) {
          ++checked;
          HbarSeries x = corr.coeff({n});
          if (x.valuation() < 2)
            rec.fail("non-zero-mode matrix element is not O(hbar^2)", {{"a", a}, {"b", b}, {"n", n}, {"value", scalar_json(x)}});
        }
      }
    rec.details["matrix_elements_checked"] = checked;
  } catch (const std::out_of_range& e) {
    rec.status = Status::Inconclusive;
    rec.message = std::string("hbar precision exhausted: ") + e.what();
  }
  rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rec;
}

}  // namespace dwa
