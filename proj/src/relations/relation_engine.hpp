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

#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fock/fock_space.hpp"
#include "report/report.hpp"
#include "structfn/structfn.hpp"
#include "wcurrents/wcurrents.hpp"

namespace dwa {

/// Mode grid for an operator identity: |n|, |m| <= mode, bra/ket level <= level.
struct RelationWindow {
  int mode = 3;
  int level = 3;
};

/// Weight u^n = s^{u_exp n} with which delta(u z2/z1) F(z1, z2) enters the
/// (n, m) mode equation; the rest is the z2^{-(n+m)} coefficient of F(u z2, z2).
template <class K>
K delta_mode_weight(const ScalarCtx<K>& c, int u_exp, int n) {
  return c.s_pow(u_exp * n);
}

/// Operator content of one right-hand-side term, as a function of z2 after
/// the delta function has been used to set z1 = u z2. Positions are powers
/// of s times z2.
struct OpContent {
  enum Kind { kSingle, kPair, kComposite };
  Kind kind = kSingle;
  int a = 0;   // rank of the (first) current
  int b = 0;   // rank of the second current (pair, composite)
  int eA = 0;  // single/pair: first current at s^eA z2; composite: r = s^eA
  int eB = 0;  // pair: second current at s^eB z2; composite: Z = s^eB z2

  static OpContent single(int a, int e) { return {kSingle, a, 0, e, 0}; }
  /// lim f^{a,b}(x) W^a(s^eA z2) W^b(s^eB z2), x -> s^{eB-eA}
  static OpContent pair(int a, int b, int eA, int eB) { return {kPair, a, b, eA, eB}; }
  /// oo W^a(r Z) W^b(Z) oo with r = s^r_exp, Z = s^z_exp z2
  static OpContent composite(int a, int b, int r_exp, int z_exp) { return {kComposite, a, b, r_exp, z_exp}; }

  std::string describe() const {
    std::ostringstream o;
    switch (kind) {
      case kSingle: o << "W^" << a << "(s^" << eA << " z)"; break;
      case kPair: o << "f^{" << a << "," << b << "} W^" << a << "(s^" << eA << " z) W^" << b << "(s^" << eB << " z)"; break;
      case kComposite:
        o << "oo W^" << a << "(s^" << eA << " Z) W^" << b << "(Z) oo, Z = s^" << eB << " z";
        break;
    }
    return o.str();
  }
};

/// coef * delta(s^{delta_exp} z2/z1) * content. For one-variable identities
/// delta_exp is ignored.
template <class K>
struct OpTerm {
  K coef;
  int delta_exp;
  OpContent content;
};

template <class K>
using OpSum = std::vector<OpTerm<K>>;

/// Mode M in z2 of a content on v.
template <class K>
typename FockSpace<K>::Vec content_mode(FockSpace<K>& fs, const OpContent& oc, int M,
                                        const typename FockSpace<K>::Vec& v) {
  const auto& c = fs.ctx();
  switch (oc.kind) {
    case OpContent::kSingle:
      return fs.w_mode(oc.a, M, v, oc.eA);
    case OpContent::kPair:
      return regular_pair_mode(fs, oc.a, oc.b, oc.eA, oc.eB, M, v);
    case OpContent::kComposite:
      return composite_no_mode(fs, oc.a, oc.b, oc.eA, M, v).scaled(c.s_pow(-oc.eB * M));
  }
  throw std::logic_error("unknown content kind");
}

/// Drops terms that vanish because a rank leaves 0..N, and turns products
/// with a trivial factor (W^0 = 1, W^N = 1, f^{0,b} = f^{a,N} = 1) into
/// single currents.
template <class K>
OpSum<K> simplify_terms(int N, const OpSum<K>& in) {
  OpSum<K> out;
  for (auto t : in) {
    auto& oc = t.content;
    if (oc.a < 0 || oc.a > N || (oc.kind != OpContent::kSingle && (oc.b < 0 || oc.b > N))) continue;
    if (oc.kind == OpContent::kPair) {
      if (oc.a == 0) oc = OpContent::single(oc.b, oc.eB);
      else if (oc.b == N) oc = OpContent::single(oc.a, oc.eA);
    }
    out.push_back(t);
  }
  return out;
}

/// The constant -(1-q)(1-t^{-1})/(1-p) of the relations.
template <class K>
K relation_prefactor(const ScalarCtx<K>& c) {
  return K(0) - c.fusion_c();
}

/// Right-hand side for i = 1.
template <class K>
OpSum<K> w1wj_terms(const ScalarCtx<K>& c, int j) {
  K c0 = relation_prefactor(c);
  return simplify_terms<K>(c.N, {{c0, j + 1, OpContent::single(j + 1, 1)},
                                 {K(0) - c0, -(j + 1), OpContent::single(j + 1, -1)}});
}

/// Right-hand side for i = 2 in the explicit form with oo W^1 W^{j+1} oo.
template <class K>
OpSum<K> w2wj_terms(const ScalarCtx<K>& c, int j) {
  K c0 = relation_prefactor(c);
  K g3 = gamma_at(c, 3);
  K one(1);
  K p2 = c.p_pow(2), pj = c.p_pow(j);
  K c00 = c0 * c0;
  OpSum<K> t = {
      {c0 * g3, j + 2, OpContent::single(j + 2, 2)},
      {K(0) - c0 * g3, -(j + 2), OpContent::single(j + 2, -2)},
      {c0, j, OpContent::composite(1, j + 1, j - 2, 1)},
      {K(0) - c0, -j, OpContent::composite(1, j + 1, 2 - j, -1)},
      {c00 * p2 / (one - p2), j, OpContent::single(j + 2, 2)},
      {c00 / (one - pj), j, OpContent::single(j + 2, 0)},
      {K(0) - c00 * pj / (one - pj), -j, OpContent::single(j + 2, 0)},
      {K(0) - c00 / (one - p2), -j, OpContent::single(j + 2, -2)},
  };
  return simplify_terms<K>(c.N, t);
}

/// Right-hand side of the general relation with f^{a,b} W^a W^b products.
template <class K>
OpSum<K> wiwj_terms(const ScalarCtx<K>& c, int i, int j) {
  K c0 = relation_prefactor(c);
  OpSum<K> t;
  for (int k = 1; k <= i; ++k) {
    K ck = c0 * gamma_chain(c, k);
    int u = j - i + 2 * k;
    // delta(p^{(j-i)/2+k} z2/z1) W^{i-k}(p^{-k/2} z1) W^{j+k}(p^{k/2} z2), z1 = s^u z2
    t.push_back({ck, u, OpContent::pair(i - k, j + k, u - k, k)});
    t.push_back({K(0) - ck, -u, OpContent::pair(i - k, j + k, -u + k, -k)});
  }
  return simplify_terms<K>(c.N, t);
}

/// One step of the normal ordering formula applied to every product term
/// f^{a,b}(r^{-1}) W^a(rZ) W^b(Z) with 1 <= a <= b: it becomes
/// oo W^a W^b oo plus products of lower rank a. Repeats until no product
/// with a >= 1 is left, or `steps` rewrites when steps >= 0. Throws
/// std::domain_error for a bad r.
template <class K>
OpSum<K> rewrite_with_normal_order(const ScalarCtx<K>& c, OpSum<K> terms, int steps = -1) {
  K cf = c.fusion_c();
  for (int guard = 0; guard < 64 && steps != 0; ++guard, --steps) {
    OpSum<K> out;
    bool changed = false;
    for (const auto& t : simplify_terms<K>(c.N, terms)) {
      const auto& oc = t.content;
      if (oc.kind != OpContent::kPair || oc.a < 1 || oc.a > oc.b) {
        out.push_back(t);
        continue;
      }
      changed = true;
      const int a = oc.a, b = oc.b, r = oc.eA - oc.eB, z = oc.eB;
      out.push_back({t.coef, t.delta_exp, OpContent::composite(a, b, r, z)});
      for (int k = 1; k <= a; ++k) {
        int d = b - a + 2 * k;
        if (r == d || r == -d) throw std::domain_error("normal ordering at a bad point r");
        K g = t.coef * cf * gamma_chain(c, k);
        K up = K(1) / (K(1) - c.s_pow(r - d));
        K dn = K(1) / (K(1) - c.s_pow(r + d));
        out.push_back({g * up, t.delta_exp, OpContent::pair(a - k, b + k, b - a + k + z, k + z)});
        out.push_back({K(0) - g * dn, t.delta_exp, OpContent::pair(a - k, b + k, -(b - a + k) + z, -k + z)});
      }
    }
    terms = simplify_terms<K>(c.N, out);
    if (!changed) return terms;
  }
  if (steps == 0) return terms;
  throw std::logic_error("normal ordering rewrite did not terminate");
}

/// W^1 monomials W_{-n_1} ... W_{-n_k} |lambda> (n_1 >= ... >= n_k > 0) up
/// to the given level, plus the empty monomial. Bras use the mirrored
/// positive modes.
std::vector<std::vector<WMode>> w1_monomials(int max_level, bool bra);
std::string describe_monomial(const std::vector<WMode>& ms, bool bra);

/// Evaluates <bra| X |ket> for all bras of the right level through dual
/// functionals on the monomial basis.
template <class K>
class BraPairing {
 public:
  using Vec = typename FockSpace<K>::Vec;
  BraPairing(FockSpace<K>& fs, std::vector<std::vector<WMode>> bras) : fs_(fs), bras_(std::move(bras)) {}

  const std::vector<std::vector<WMode>>& bras() const { return bras_; }

  static int level_of(const std::vector<WMode>& b) {
    int l = 0;
    for (const auto& m : b) l += m.mode;
    return l;
  }

  K pair(std::size_t bra, const Vec& v) {
    const auto& phi = functional(bra);
    K acc(0);
    for (const auto& [m, x] : v.terms) {
      auto it = phi.find(m);
      if (it != phi.end()) acc = acc + it->second * x;
    }
    return acc;
  }

 private:
  const std::map<typename FockSpace<K>::Mono, K>& functional(std::size_t bra) {
    auto it = cache_.find(bra);
    if (it != cache_.end()) return it->second;
    std::map<typename FockSpace<K>::Mono, K> phi;
    for (const auto& m : fs_.basis(level_of(bras_[bra]))) {
      K x = fs_.vacuum_coefficient(apply_w_modes(fs_, bras_[bra], fs_.basis_vec(m)));
      if (!dwa::is_zero(x)) phi.emplace(m, x);
    }
    return cache_.emplace(bra, std::move(phi)).first->second;
  }

  FockSpace<K>& fs_;
  std::vector<std::vector<WMode>> bras_;
  std::map<std::size_t, std::map<typename FockSpace<K>::Mono, K>> cache_;
};

/// Statistics collected while checking one identity.
struct IdentityStats {
  long vectors = 0;
  long matrix_elements = 0;
  long vacuous_by_grading = 0;
  long tail_terms = 0;

  Json to_json() const {
    return {{"vector_identities", vectors},
            {"matrix_elements", matrix_elements},
            {"vacuous_by_grading", vacuous_by_grading},
            {"tail_terms_checked", tail_terms}};
  }
};

/// Compares two Fock vectors and all bra pairings with them; records the
/// first mismatch.
template <class K>
bool compare_vectors(BraPairing<K>& bras, const typename FockSpace<K>::Vec& lhs,
                     const typename FockSpace<K>::Vec& rhs, int target_level, const Json& where,
                     CheckRecord& rec, IdentityStats& st) {
  ++st.vectors;
  bool ok = lhs == rhs;
  for (std::size_t b = 0; b < bras.bras().size(); ++b) {
    if (BraPairing<K>::level_of(bras.bras()[b]) != target_level) continue;
    ++st.matrix_elements;
    K x = bras.pair(b, lhs), y = bras.pair(b, rhs);
    if (!(x == y)) {
      Json w = where;
      w["bra"] = describe_monomial(bras.bras()[b], true);
      w["lhs"] = scalar_json(x);
      w["rhs"] = scalar_json(y);
      rec.fail("matrix elements differ", w);
      return false;
    }
  }
  if (!ok) {
    Json w = where;
    w["bra"] = "full Fock vector";
    rec.fail("Fock vectors differ", w);
  }
  return ok;
}

/// Checks, for every (n, m) in the window and every ket, the mode form of
///   f^{i,j}(z2/z1) W^i(z1) W^j(z2) - W^j(z2) W^i(z1) f^{j,i}(z1/z2) = routes[r]
/// for each right-hand side route.
template <class K>
void check_quadratic_relation(FockSpace<K>& fs, int i, int j,
                              const std::vector<std::pair<std::string, OpSum<K>>>& routes,
                              const RelationWindow& w, CheckRecord& rec, IdentityStats& st) {
  using Vec = typename FockSpace<K>::Vec;
  const auto& c = fs.ctx();
  const int tail = 5;
  const int fmax = w.level + 2 * w.mode + tail + 1;
  auto fij = f_series(c, i, j, fmax);
  auto fji = f_series(c, j, i, fmax);
  auto kets = w1_monomials(w.level, false);
  BraPairing<K> bras(fs, w1_monomials(w.level, true));
  for (const auto& ket : kets) {
    if (rec.status == Status::Fail) return;
    Vec psi = apply_w_modes(fs, ket, fs.vacuum());
    const int Lk = psi.level;
    std::map<std::pair<int, int>, Vec> inner;                 // (rank, mode) -> W psi
    std::map<std::tuple<int, int, int, int>, Vec> outer;      // (rank, mode, inner rank, inner mode)
    auto in = [&](int r, int M) -> const Vec& {
      auto key = std::make_pair(r, M);
      auto it = inner.find(key);
      if (it != inner.end()) return it->second;
      return inner.emplace(key, fs.w_mode(r, M, psi)).first->second;
    };
    auto out = [&](int r, int M, int r2, int M2) -> const Vec& {
      auto key = std::make_tuple(r, M, r2, M2);
      auto it = outer.find(key);
      if (it != outer.end()) return it->second;
      return outer.emplace(key, fs.w_mode(r, M, in(r2, M2))).first->second;
    };
    std::map<std::tuple<std::size_t, std::size_t, int>, Vec> content_cache;
    for (int n = -w.mode; n <= w.mode; ++n)
      for (int m = -w.mode; m <= w.mode; ++m) {
        const int target = Lk - n - m;
        if (target < 0 || target > w.level) {
          ++st.vacuous_by_grading;
          continue;
        }
        Vec lhs;
        lhs.level = target;
        // sum_l f^{ij}_l W^i_{n-l} W^j_{m+l}: inner vanishes once m + l > Lk.
        const int l1 = std::max(0, Lk - m);
        for (int l = 0; l <= l1 + tail; ++l) {
          const Vec& v = out(i, n - l, j, m + l);
          if (l > l1) {
            ++st.tail_terms;
            if (!v.is_zero()) rec.fail("nonvanishing tail in the left-hand side", {{"n", n}, {"m", m}, {"l", l}});
            continue;
          }
          lhs.add(fij.coeff(l), v);
        }
        const int l2 = std::max(0, Lk - n);
        for (int l = 0; l <= l2 + tail; ++l) {
          const Vec& v = out(j, m - l, i, n + l);
          if (l > l2) {
            ++st.tail_terms;
            if (!v.is_zero()) rec.fail("nonvanishing tail in the left-hand side", {{"n", n}, {"m", m}, {"l", l}});
            continue;
          }
          lhs.add(K(0) - fji.coeff(l), v);
        }
        for (std::size_t r = 0; r < routes.size(); ++r) {
          Vec rhs;
          rhs.level = target;
          for (std::size_t ti = 0; ti < routes[r].second.size(); ++ti) {
            const auto& term = routes[r].second[ti];
            auto key = std::make_tuple(r, ti, n + m);
            auto it = content_cache.find(key);
            if (it == content_cache.end())
              it = content_cache.emplace(key, content_mode(fs, term.content, n + m, psi)).first;
            rhs.add(term.coef * delta_mode_weight(c, term.delta_exp, n), it->second);
          }
          Json where = {{"n", n}, {"m", m}, {"ket", describe_monomial(ket, false)}, {"route", routes[r].first}};
          if (!compare_vectors(bras, lhs, rhs, target, where, rec, st)) return;
        }
      }
  }
}

}  // namespace dwa
