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

#include "relations/relations.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "core/reconstruct.hpp"
#include "structfn/regular_product.hpp"

namespace dwa {

std::vector<std::vector<WMode>> w1_monomials(int max_level, bool bra) {
  std::vector<std::vector<WMode>> out;
  out.push_back({});
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      std::vector<WMode> ms;
      for (int n : parts) ms.push_back({1, bra ? n : -n});
      if (bra) std::reverse(ms.begin(), ms.end());
      out.push_back(ms);
      return;
    }
    for (int n = std::min(left, cap); n >= 1; --n) {
      parts.push_back(n);
      rec(left - n, n);
      parts.pop_back();
    }
  };
  for (int level = 1; level <= max_level; ++level) rec(level, level);
  return out;
}

std::string describe_monomial(const std::vector<WMode>& ms, bool bra) {
  std::string s = bra ? "<l|" : "";
  for (const auto& m : ms) s += "W^" + std::to_string(m.rank) + "_" + std::to_string(m.mode) + " ";
  if (!bra) s += "|l>";
  if (bra && !ms.empty()) s.pop_back();
  return s;
}

namespace {

using Clock = std::chrono::steady_clock;

CheckRecord start(const std::string& suite, const GenericCtx& c, Json key, const RelationWindow* w) {
  CheckRecord rec;
  rec.suite = suite;
  key["N"] = c.N;
  key["q"] = c.q_point.get_str();
  key["t"] = c.t_point.get_str();
  rec.case_key = key;
  if (w) rec.truncations = {{"mode_window", w->mode}, {"level", w->level}, {"tail_extra_terms", 5}};
  return rec;
}

Json weight_json(const GenericWeight& hw) {
  Json a = Json::array();
  for (const auto& x : hw.a) a.push_back(scalar_json(x));
  return a;
}

void finish(CheckRecord& rec, const IdentityStats& st, Clock::time_point t0, const GenericWeight& hw) {
  Json stats = st.to_json();
  for (auto& [k, v] : stats.items()) rec.details[k] = v;
  rec.details["highest_weight"] = weight_json(hw);
  rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_range(const GenericCtx& c, int i, int j, bool ordered) {
  if (i < 0 || j < 0 || i > c.N || j > c.N || (ordered && i > j))
    throw std::invalid_argument("current ranks out of range");
}

CheckRecord run_relation(const std::string& suite, const GenericCtx& c, int i, int j,
                         const std::vector<std::pair<std::string, OpSum<AlgNum>>>& routes, const RelationWindow& w,
                         const GenericWeight& hw, bool reversal) {
  auto t0 = Clock::now();
  CheckRecord rec = start(suite, c, {{"i", i}, {"j", j}}, &w);
  IdentityStats st;
  FockSpace<AlgNum> fs(c, hw, w.level + w.mode);
  try {
    check_quadratic_relation(fs, i, j, routes, w, rec, st);
    if (reversal && rec.passed()) {
      // f^{a,b}(x0) W^a W^b equals f^{b,a}(1/x0) W^b W^a for every product used.
      long checked = 0;
      for (const auto& route : routes)
        for (const auto& term : route.second) {
          const auto& oc = term.content;
          if (oc.kind != OpContent::kPair) continue;
          auto rev = OpContent::pair(oc.b, oc.a, oc.eB, oc.eA);
          for (const auto& ket : w1_monomials(w.level, false)) {
            auto psi = apply_w_modes(fs, ket, fs.vacuum());
            for (int M = psi.level - w.level; M <= psi.level; ++M) {
              ++checked;
              if (!(content_mode(fs, oc, M, psi) == content_mode(fs, rev, M, psi))) {
                rec.fail("order reversal of a regular product fails",
                         {{"term", oc.describe()}, {"M", M}, {"ket", describe_monomial(ket, false)}});
                break;
              }
            }
          }
        }
      rec.details["order_reversal_checks"] = checked;
    }
  } catch (const std::domain_error& e) {
    rec.fail(std::string("singular term: ") + e.what());
  }
  Json rhs = Json::object();
  for (const auto& route : routes) {
    Json terms = Json::array();
    for (const auto& t : route.second) terms.push_back(t.content.describe());
    rhs[route.first] = terms;
  }
  rec.details["rhs_terms"] = rhs;
  finish(rec, st, t0, hw);
  return rec;
}

}  // namespace

CheckRecord verify_w1wj(const GenericCtx& c, int j, const RelationWindow& w, const GenericWeight& hw) {
  check_range(c, 1, j, false);
  if (j < 1) throw std::invalid_argument("verify_w1wj needs 1 <= j <= N");
  return run_relation("relations.w1wj", c, 1, j, {{"explicit", w1wj_terms(c, j)}}, w, hw, false);
}

CheckRecord verify_w2wj(const GenericCtx& c, int j, const RelationWindow& w, const GenericWeight& hw) {
  check_range(c, 2, j, true);
  return run_relation("relations.w2wj", c, 2, j, {{"explicit", w2wj_terms(c, j)}}, w, hw, false);
}

CheckRecord verify_wiwj(const GenericCtx& c, int i, int j, const RelationWindow& w, const GenericWeight& hw) {
  check_range(c, i, j, true);
  auto terms = wiwj_terms(c, i, j);
  auto rec = run_relation("relations.wiwj", c, i, j, {{"general", terms}}, w, hw, true);
  rec.details["active_k_terms"] = terms.size() / 2;
  return rec;
}

CheckRecord verify_cross_engine(const GenericCtx& c, int j, const RelationWindow& w, const GenericWeight& hw) {
  check_range(c, 2, j, true);
  return run_relation("relations.cross_engine", c, 2, j,
                      {{"explicit", w2wj_terms(c, j)},
                       {"general", wiwj_terms(c, 2, j)},
                       {"general_normal_ordered", rewrite_with_normal_order(c, wiwj_terms(c, 2, j))}},
                      w, hw, false);
}

CheckRecord verify_nowwj(const GenericCtx& c, int i, int j, int r_exp, const RelationWindow& w,
                         const GenericWeight& hw) {
  check_range(c, i, j, true);
  for (int k = 1; k <= std::min(i, c.N - j); ++k)
    if (r_exp == j - i + 2 * k || r_exp == -(j - i + 2 * k))
      throw std::invalid_argument("r is not a good point for the normal ordering formula");
  auto t0 = Clock::now();
  CheckRecord rec = start("relations.noww", c, {{"i", i}, {"j", j}, {"r_exp", r_exp}}, &w);
  IdentityStats st;
  FockSpace<AlgNum> fs(c, hw, w.level + w.mode);
  OpSum<AlgNum> lhs_terms = simplify_terms<AlgNum>(c.N, {{AlgNum(1), 0, OpContent::pair(i, j, r_exp, 0)}});
  OpSum<AlgNum> rhs_terms = rewrite_with_normal_order(c, lhs_terms, 1);
  BraPairing<AlgNum> bras(fs, w1_monomials(w.level, true));
  auto eval = [&](const OpSum<AlgNum>& ts, int M, const FockSpace<AlgNum>::Vec& psi) {
    FockSpace<AlgNum>::Vec out;
    out.level = psi.level - M;
    for (const auto& t : ts) out.add(t.coef, content_mode(fs, t.content, M, psi));
    return out;
  };
  try {
    for (const auto& ket : w1_monomials(w.level, false)) {
      auto psi = apply_w_modes(fs, ket, fs.vacuum());
      for (int n = -w.mode; n <= w.mode && rec.passed(); ++n) {
        int target = psi.level - n;
        if (target < 0 || target > w.level) {
          ++st.vacuous_by_grading;
          continue;
        }
        Json where = {{"n", n}, {"ket", describe_monomial(ket, false)}};
        compare_vectors(bras, eval(lhs_terms, n, psi), eval(rhs_terms, n, psi), target, where, rec, st);
      }
    }
  } catch (const std::domain_error& e) {
    rec.fail(std::string("singular term: ") + e.what());
  }
  Json terms = Json::array();
  for (const auto& t : rhs_terms) terms.push_back(t.content.describe());
  rec.details["rhs_terms"] = terms;
  finish(rec, st, t0, hw);
  return rec;
}

CheckRecord verify_fusion(const GenericCtx& c, FusionKind kind, int i, int j, int sign, const RelationWindow& w,
                          const GenericWeight& hw) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("fusion sign must be +1 or -1");
  if (kind == FusionKind::W1Wj) {
    if (j < 1 || j > c.N) throw std::invalid_argument("fusion W1Wj needs 1 <= j <= N");
    i = 1;
  } else {
    check_range(c, i, j, true);
  }
  auto t0 = Clock::now();
  CheckRecord rec = start(kind == FusionKind::W1Wj ? "fusion.w1wj" : "fusion.wiwj", c,
                          {{"i", i}, {"j", j}, {"sign", sign}}, &w);
  // The product W^a(s^eA z) W^b(z) times (1 - s^eA x), x = s^{-eA} at the
  // limit, against coef * W^rank(s^shift z).
  int a, b, eA, rank, shift;
  AlgNum coef;
  if (kind == FusionKind::W1Wj) {
    a = 1, b = j, eA = sign * (j + 1), rank = j + 1, shift = sign;
    coef = AlgNum(-sign) * c.fusion_c();
  } else {
    a = j, b = i, eA = -sign * (j + i), rank = j + i, shift = -sign * j;
    // prod_{l=1}^{i-1} gamma(p^{l+1/2}); for i = 0 it is 1/gamma(p^{1/2}) = 0.
    coef = i == 0 ? AlgNum(0) : AlgNum(sign) * c.fusion_c() * gamma_chain(c, i);
    if (i == 0) rec.assumptions.push_back("empty gamma product for i = 0 read as 1/gamma(p^{1/2}) = 0");
  }
  if (rank > c.N) coef = AlgNum(0);
  LinearFactorProduct extra;
  extra.mul_linear(LinearFactorProduct::kOne, eA, 1);
  IdentityStats st;
  try {
    FockSpace<AlgNum> fs(c, hw, w.level + w.mode);
    BraPairing<AlgNum> bras(fs, w1_monomials(w.level, true));
    for (const auto& ket : w1_monomials(w.level, false)) {
      auto psi = apply_w_modes(fs, ket, fs.vacuum());
      for (int M = -w.mode; M <= w.mode && rec.passed(); ++M) {
        int target = psi.level - M;
        if (target < 0 || target > w.level) {
          ++st.vacuous_by_grading;
          continue;
        }
        auto lhs = regular_pair_mode(fs, a, b, eA, 0, M, psi, &extra);
        FockSpace<AlgNum>::Vec rhs;
        rhs.level = target;
        if (!coef.is_zero()) rhs = fs.w_mode(rank, M, psi, shift).scaled(coef);
        compare_vectors(bras, lhs, rhs, target, {{"M", M}, {"ket", describe_monomial(ket, false)}}, rec, st);
      }
    }
  } catch (const std::domain_error& e) {
    rec.fail(std::string("residual pole: ") + e.what());
  }
  // Independent route: the two-point function rebuilt as a rational
  // function, multiplied by the factor and evaluated at the point.
  if (rec.passed()) {
    const int order = 32;
    auto series = f_series(c, a, b, order);
    if (a != 0 && b != 0) series = series * w_correlator(c, hw, {{a, 0}, {b, 0}}, order).renamed({"x"});
    else series = series * LaurentWindow<AlgNum>::constant({"x"}, hw_eigenvalue_w(c, hw, a + b), order);
    auto lin = LaurentWindow<AlgNum>::univariate("x", 0, order);
    lin.set(0, AlgNum(1));
    lin.set(1, AlgNum(0) - c.s_pow(eA));
    series = series * lin;
    auto rf = rational_reconstruct_search(series, 20);
    rec.truncations["x_order"] = order;
    if (!rf) {
      rec.status = Status::Inconclusive;
      rec.message = "two-point function not reconstructed";
    } else {
      AlgNum x0 = c.s_pow(-eA);
      AlgNum den = rf->den.eval(x0);
      if (den.is_zero()) {
        rec.fail("residual pole in the two-point function", {{"route", "correlator"}});
      } else {
        AlgNum lhs = rf->num.eval(x0) / den;
        AlgNum rhs = rank > c.N ? AlgNum(0) : coef * hw_eigenvalue_w(c, hw, rank);
        if (!(lhs == rhs))
          rec.fail("fused two-point function differs",
                   {{"route", "correlator"}, {"lhs", scalar_json(lhs)}, {"rhs", scalar_json(rhs)}});
      }
      rec.details["correlator_route"] = "reconstructed";
    }
  }
  finish(rec, st, t0, hw);
  return rec;
}

CheckRecord verify_poles(const GenericCtx& c, int i, int j, int order, const GenericWeight& hw) {
  check_range(c, i, j, false);
  auto t0 = Clock::now();
  CheckRecord rec = start("poles", c, {{"i", i}, {"j", j}}, nullptr);
  rec.truncations = {{"x_order", order}};
  rec.details["grade"] = "reconstructed";
  rec.details["highest_weight"] = weight_json(hw);
  std::vector<int> expected;
  for (int k = 1; k <= std::min(i, c.N - j); ++k) {
    expected.push_back(j - i + 2 * k);
    expected.push_back(-(j - i + 2 * k));
  }
  std::sort(expected.begin(), expected.end());
  LaurentWindow<AlgNum> series = f_series(c, i, j, order);
  if (i != 0 && j != 0) series = series * w_correlator(c, hw, {{i, 0}, {j, 0}}, order).renamed({"x"});
  else series = series * LaurentWindow<AlgNum>::constant({"x"}, hw_eigenvalue_w(c, hw, i + j), order);
  auto rf = rational_reconstruct_search(series, std::max(0, order / 2 - 2));
  if (!rf) {
    rec.status = Status::Inconclusive;
    rec.message = "no rational function of total degree within the series order";
  } else {
    // Deflate the denominator by the candidate roots s^e.
    Polynomial<AlgNum> den = rf->den;
    std::vector<int> roots;
    const int span = 4 * c.N + 4;
    for (int e = -span; e <= span; ++e) {
      while (den.degree() > 0 && den.eval(c.s_pow(e)).is_zero()) {
        Polynomial<AlgNum> lin({AlgNum(0) - c.s_pow(e), AlgNum(1)});
        auto [quo, rem] = Polynomial<AlgNum>::divmod(den, lin);
        den = quo;
        roots.push_back(e);
      }
    }
    std::sort(roots.begin(), roots.end());
    Json rj = Json::array();
    for (int e : roots) rj.push_back("s^" + std::to_string(e));
    Json ej = Json::array();
    for (int e : expected) ej.push_back("s^" + std::to_string(e));
    rec.details["numerator_degree"] = rf->num.degree();
    rec.details["denominator_degree"] = rf->den.degree();
    rec.details["denominator_roots"] = rj;
    rec.details["expected_roots"] = ej;
    if (den.degree() > 0)
      rec.fail("denominator has roots outside the powers of s", {{"remaining_degree", den.degree()}});
    else if (roots != expected)
      rec.fail("pole set differs from the expected set", {{"found", rj}, {"expected", ej}});
  }
  rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rec;
}

Report relation_suite_w1wj(const GenericCtx& c, const RelationWindow& w) {
  Report r;
  auto hw = sample_highest_weight<AlgNum>(c.N);
  for (int j = 1; j <= c.N; ++j) r.add(verify_w1wj(c, j, w, hw));
  return r;
}

Report relation_suite_w2wj(const GenericCtx& c, const RelationWindow& w) {
  Report r;
  auto hw = sample_highest_weight<AlgNum>(c.N);
  for (int j = 2; j <= c.N; ++j) r.add(verify_w2wj(c, j, w, hw));
  return r;
}

Report relation_suite_wiwj(const GenericCtx& c, const RelationWindow& w) {
  Report r;
  auto hw = sample_highest_weight<AlgNum>(c.N);
  for (int i = 0; i <= c.N; ++i)
    for (int j = i; j <= c.N; ++j) r.add(verify_wiwj(c, i, j, w, hw));
  return r;
}

}  // namespace dwa
