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

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <tuple>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "core/rat.hpp"
#include "fock/fock.hpp"
#include "structfn/regular_product.hpp"

namespace dwa {

/// Highest weight Fock module of the N bosons h^1..h^N, restricted to the
/// independent flavors 1..N-1.
///
/// The constraint sum_i p^{i n} h^i_n = 0 (and its creation counterpart)
/// is used to eliminate h^N, so states are polynomials in the creation
/// variables h^c_{-n}, c < N. Annihilators act as derivations with
/// coefficients [h^c_n, h^d_{-n}]. A vertex operator
/// Z :exp(sum_n E_n z^n) exp(sum_n D_n z^{-n}): acts on a polynomial by a
/// translation of the variables (the annihilation part) followed by
/// multiplication with the creation exponential.
template <class K>
class FockSpace {
 public:
  /// Monomial in the creation variables: sorted codes 16*n + (c-1).
  using Mono = std::vector<std::uint16_t>;
  using Terms = std::map<Mono, K>;

  /// Homogeneous vector of a fixed level.
  struct Vec {
    int level = 0;
    Terms terms;

    bool is_zero() const {
      for (const auto& [m, x] : terms)
        if (!dwa::is_zero(x)) return false;
      return true;
    }
    void add(const K& a, const Vec& w) {
      if (w.terms.empty()) return;
      if (terms.empty()) level = w.level;
      if (level != w.level) throw std::logic_error("adding Fock vectors of different levels");
      for (const auto& [m, x] : w.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
          K v = a * x;
          if (!dwa::is_zero(v)) terms.emplace(m, std::move(v));
        } else {
          it->second = it->second + a * x;
          if (dwa::is_zero(it->second)) terms.erase(it);
        }
      }
    }
    Vec scaled(const K& a) const {
      Vec r;
      r.add(a, *this);
      r.level = level;
      return r;
    }
    friend bool operator==(const Vec& u, const Vec& w) {
      Vec d = u;
      d.add(K(-1), w);
      return d.is_zero();
    }
  };

  FockSpace(const ScalarCtx<K>& c, HighestWeight<K> hw, int max_level)
      : c_(c), hw_(std::move(hw)), N_(c.N), nc_(c.N - 1), max_level_(max_level) {
    hw_.validate();
    if (max_level < 0 || max_level > 255) throw std::invalid_argument("unsupported Fock level bound");
    gram_.resize(static_cast<std::size_t>(max_level) + 1);
    for (int n = 1; n <= max_level; ++n) {
      gram_[n].assign(static_cast<std::size_t>(nc_), std::vector<K>(static_cast<std::size_t>(nc_)));
      for (int a = 0; a < nc_; ++a)
        for (int b = 0; b < nc_; ++b) gram_[n][a][b] = boson_commutator(c, a + 1, b + 1, n);
    }
  }

  const ScalarCtx<K>& ctx() const { return c_; }
  const HighestWeight<K>& highest_weight() const { return hw_; }
  int N() const { return N_; }
  int max_level() const { return max_level_; }

  Vec vacuum() const {
    Vec v;
    v.terms.emplace(Mono{}, K(1));
    return v;
  }

  K vacuum_coefficient(const Vec& v) const {
    if (v.level != 0) return K(0);
    auto it = v.terms.find(Mono{});
    return it == v.terms.end() ? K(0) : it->second;
  }

  /// Mode M (coefficient of z^{-M}) of :prod_legs Lambda: without zero-mode
  /// factors.
  Vec vertex_mode(const std::vector<Leg>& legs, int M, const Vec& v) {
    Vec out;
    out.level = v.level - M;
    if (out.level < 0 || v.terms.empty()) return out;
    check_level(v.level);
    const Compiled& cg = compiled(legs);
    auto T = translate(v.terms, v.level, cg);
    for (int l = std::max(0, M); l <= v.level; ++l) {
      if (T[l].empty()) continue;
      int k = l - M;
      multiply_into(out.terms, cg.P[k], T[l], K(1));
    }
    return out;
  }

  /// Mode M of :prod_{fixed} Lambda(z) prod_{scaled} Lambda(y z): as a Laurent
  /// polynomial in y; returns y-exponent -> vector.
  std::map<int, Vec> vertex_mode_graded(const std::vector<Leg>& fixed, const std::vector<Leg>& scaled, int M,
                                        const Vec& v) {
    std::map<int, Vec> out;
    const int target = v.level - M;
    if (target < 0 || v.terms.empty()) return out;
    check_level(v.level);
    const Compiled& cf = compiled(fixed);
    const Compiled& cs = compiled(scaled);
    auto T2 = translate(v.terms, v.level, cs);
    for (int l2 = 0; l2 <= v.level; ++l2) {
      if (T2[l2].empty()) continue;
      auto T1 = translate(T2[l2], v.level - l2, cf);
      for (int l1 = 0; l1 + l2 <= v.level; ++l1) {
        if (T1[l1].empty()) continue;
        int k = l1 + l2 - M;
        if (k < 0) continue;
        for (int k2 = 0; k2 <= k; ++k2) {
          const Terms& prod = creation_product(cf, cs, fixed, scaled, k - k2, k2);
          if (prod.empty()) continue;
          Vec& slot = out[k2 - l2];
          slot.level = target;
          multiply_into(slot.terms, prod, T1[l1], K(1));
        }
      }
    }
    return out;
  }

  /// Mode M of W^a(s^base z) on v.
  Vec w_mode(int a, int M, const Vec& v, int base = 0) {
    Vec out;
    out.level = v.level - M;
    if (a < 0 || a > N_ || out.level < 0 || v.terms.empty()) return out;
    for (const auto& S : subsets(a)) {
      Vec part = vertex_mode(w_legs(a, S, base), M, v);
      out.add(w_zero_mode(c_, hw_, S), part);
    }
    return out;
  }

  /// All monomials of the given level.
  std::vector<Mono> basis(int level) const {
    std::vector<Mono> out;
    Mono cur;
    auto rec = [&](auto&& self, int remaining, int max_code) -> void {
      if (remaining == 0) {
        Mono m(cur.rbegin(), cur.rend());
        out.push_back(m);
        return;
      }
      for (int code = max_code; code >= 16; --code) {
        int n = code >> 4, col = code & 15;
        if (col >= nc_ || n > remaining) continue;
        cur.push_back(static_cast<std::uint16_t>(code));
        self(self, remaining - n, code);
        cur.pop_back();
      }
    };
    rec(rec, level, 16 * level + 15);
    return out;
  }

  Vec basis_vec(const Mono& m) const {
    Vec v;
    for (auto code : m) v.level += code >> 4;
    v.terms.emplace(m, K(1));
    return v;
  }

 private:
  struct Compiled {
    std::vector<std::vector<K>> E;  // E[n][c]: creation coefficients
    std::vector<std::vector<K>> g;  // g[n][d]: translation of y_{d,n}
    std::vector<Terms> P;           // P[k]: level-k part of the creation exponential
  };

  void check_level(int level) const {
    if (level > max_level_) throw std::out_of_range("Fock level beyond the engine bound");
  }

  const std::vector<std::vector<int>>& subsets(int a) {
    auto it = subsets_.find(a);
    if (it != subsets_.end()) return it->second;
    return subsets_.emplace(a, subsets_of_size(N_, a)).first->second;
  }

  /// h^s_{-n} in the basis h^c_{-n}, c < N.
  std::vector<K> creation_vector(int s, int n) const {
    std::vector<K> v(static_cast<std::size_t>(nc_), K(0));
    if (s < N_) {
      v[s - 1] = K(1);
    } else {
      // h^N_{-n} = -p^{Nn} sum_c p^{-cn} h^c_{-n}
      for (int col = 1; col <= nc_; ++col) v[col - 1] = K(0) - c_.p_pow((N_ - col) * n);
    }
    return v;
  }

  /// h^s_n in the basis h^c_n, c < N.
  std::vector<K> annihilation_vector(int s, int n) const {
    std::vector<K> v(static_cast<std::size_t>(nc_), K(0));
    if (s < N_) {
      v[s - 1] = K(1);
    } else {
      // h^N_n = -p^{-Nn} sum_c p^{cn} h^c_n
      for (int col = 1; col <= nc_; ++col) v[col - 1] = K(0) - c_.p_pow((col - N_) * n);
    }
    return v;
  }

  const Compiled& compiled(const std::vector<Leg>& legs) {
    auto it = cache_.find(legs);
    if (it != cache_.end()) return it->second;
    Compiled cg;
    const int L = max_level_;
    cg.E.assign(static_cast<std::size_t>(L) + 1, std::vector<K>(static_cast<std::size_t>(nc_), K(0)));
    cg.g.assign(static_cast<std::size_t>(L) + 1, std::vector<K>(static_cast<std::size_t>(nc_), K(0)));
    for (int n = 1; n <= L; ++n) {
      std::vector<K> D(static_cast<std::size_t>(nc_), K(0));
      for (const auto& leg : legs) {
        K up = c_.s_pow(leg.s_exp * n), down = c_.s_pow(-leg.s_exp * n);
        auto cv = creation_vector(leg.flavor, n);
        auto av = annihilation_vector(leg.flavor, n);
        for (int col = 0; col < nc_; ++col) {
          if (!dwa::is_zero(cv[col])) cg.E[n][col] = cg.E[n][col] + up * cv[col];
          if (!dwa::is_zero(av[col])) D[col] = D[col] + down * av[col];
        }
      }
      for (int d = 0; d < nc_; ++d) {
        K acc(0);
        for (int col = 0; col < nc_; ++col)
          if (!dwa::is_zero(D[col])) acc = acc + D[col] * gram_[n][col][d];
        cg.g[n][d] = acc;
      }
    }
    // k P_k = sum_n n E_n P_{k-n}
    cg.P.resize(static_cast<std::size_t>(L) + 1);
    cg.P[0].emplace(Mono{}, K(1));
    for (int k = 1; k <= L; ++k) {
      Terms acc;
      for (int n = 1; n <= k; ++n)
        for (int col = 0; col < nc_; ++col) {
          if (dwa::is_zero(cg.E[n][col])) continue;
          K w = K(n) * cg.E[n][col];
          auto code = static_cast<std::uint16_t>(16 * n + col);
          for (const auto& [m, x] : cg.P[k - n]) {
            Mono mm = m;
            mm.insert(std::upper_bound(mm.begin(), mm.end(), code), code);
            accumulate(acc, std::move(mm), w * x);
          }
        }
      K inv = K(1) / K(k);
      for (auto& [m, x] : acc) x = x * inv;
      prune(acc);
      cg.P[k] = std::move(acc);
    }
    return cache_.emplace(legs, std::move(cg)).first->second;
  }

  const Terms& creation_product(const Compiled& cf, const Compiled& cs, const std::vector<Leg>& fixed,
                                const std::vector<Leg>& scaled, int k1, int k2) {
    auto key = std::make_tuple(fixed, scaled, k1, k2);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    Terms t;
    multiply_into(t, cf.P[k1], cs.P[k2], K(1));
    return products_.emplace(std::move(key), std::move(t)).first->second;
  }

  static void accumulate(Terms& t, Mono m, const K& x) {
    auto it = t.find(m);
    if (it == t.end())
      t.emplace(std::move(m), x);
    else
      it->second = it->second + x;
  }

  static void prune(Terms& t) {
    for (auto it = t.begin(); it != t.end();)
      it = dwa::is_zero(it->second) ? t.erase(it) : std::next(it);
  }

  static void multiply_into(Terms& out, const Terms& a, const Terms& b, const K& scale) {
    for (const auto& [ma, xa] : a)
      for (const auto& [mb, xb] : b) {
        Mono m;
        m.reserve(ma.size() + mb.size());
        std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
        accumulate(out, std::move(m), scale * xa * xb);
      }
    prune(out);
  }

  /// Splits each monomial by the translation y_{d,n} -> y_{d,n} + g_{n,d} w^n;
  /// out[l] collects the parts of total w-degree l.
  std::vector<Terms> translate(const Terms& psi, int level, const Compiled& cg) const {
    std::vector<Terms> out(static_cast<std::size_t>(level) + 1);
    std::vector<std::pair<std::uint16_t, int>> runs;
    Mono rest;
    for (const auto& [m, x] : psi) {
      runs.clear();
      for (auto code : m) {
        if (!runs.empty() && runs.back().first == code)
          ++runs.back().second;
        else
          runs.emplace_back(code, 1);
      }
      rest.clear();
      auto rec = [&](auto&& self, std::size_t r, int l, const K& coef) -> void {
        if (r == runs.size()) {
          Mono mm(rest);
          std::sort(mm.begin(), mm.end());
          accumulate(out[l], std::move(mm), coef);
          return;
        }
        auto [code, e] = runs[r];
        int n = code >> 4, d = code & 15;
        const K& g = cg.g[n][d];
        K gp(1);
        for (int j = 0; j <= e; ++j) {
          if (j > 0) {
            if (dwa::is_zero(g)) break;
            gp = gp * g;
          }
          for (int u = 0; u < e - j; ++u) rest.push_back(code);
          K w = j == 0 ? coef : coef * gp * K(binomial(e, j));
          self(self, r + 1, l + n * j, w);
          rest.resize(rest.size() - static_cast<std::size_t>(e - j));
        }
      };
      rec(rec, 0, 0, x);
    }
    for (auto& t : out) prune(t);
    return out;
  }

  const ScalarCtx<K>& c_;
  HighestWeight<K> hw_;
  int N_, nc_, max_level_;
  std::vector<std::vector<std::vector<K>>> gram_;
  std::map<std::vector<Leg>, Compiled> cache_;
  std::map<std::tuple<std::vector<Leg>, std::vector<Leg>, int, int>, Terms> products_;
  std::map<int, std::vector<std::vector<int>>> subsets_;
};

}  // namespace dwa
