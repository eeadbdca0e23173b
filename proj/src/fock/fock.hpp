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

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core/context.hpp"
#include "core/series.hpp"
#include "structfn/structfn.hpp"

namespace dwa {

/// [h^i_n, h^j_{-n}] = -(1/n)(1-q^n)(1-t^{-n})(1-p^{(N delta_ij - 1)n}) p^{N n [i<j]} / (1-p^{Nn}).
/// Valid for any nonzero n.
template <class K>
K boson_commutator(const ScalarCtx<K>& c, int i, int j, int n) {
  if (n == 0) throw std::invalid_argument("zero modes are central");
  if (i < 1 || i > c.N || j < 1 || j > c.N) throw std::out_of_range("boson flavor out of range");
  const int delta = i == j ? 1 : 0;
  K num = phi(c, n) * (K(1) - c.p_pow((c.N * delta - 1) * n));
  if (i < j) num = num * c.p_pow(c.N * n);
  return K(0) - num / (K(n) * (K(1) - c.p_pow(c.N * n)));
}

/// [h^i_n, h^j_m]: zero unless n + m = 0.
template <class K>
K boson_commutator(const ScalarCtx<K>& c, int i, int j, int n, int m) {
  if (n + m != 0 || n == 0) return K(0);
  return boson_commutator(c, i, j, n);
}

/// Highest weight data: a_i = q^{sqrt(beta) lambda_i}, the eigenvalue of the
/// zero-mode factor of Lambda_i. The product of the a_i must be 1 so that
/// W^N acts as the identity.
template <class K>
struct HighestWeight {
  int N = 0;
  std::vector<K> a;

  static HighestWeight vacuum(int N) { return HighestWeight{N, std::vector<K>(static_cast<std::size_t>(N), K(1))}; }

  void validate() const {
    if (static_cast<int>(a.size()) != N) throw std::invalid_argument("highest weight has wrong length");
    K prod(1);
    for (const auto& x : a) {
      if (x.is_zero()) throw std::invalid_argument("highest weight eigenvalue is zero");
      prod = prod * x;
    }
    if (!(prod == K(1))) throw std::invalid_argument("highest weight eigenvalues must multiply to 1");
  }
};

/// A fixed highest weight with rational, pairwise distinct eigenvalues
/// a_i = (i+1)/(2i+1) for i < N and a_N fixing the product to 1.
template <class K>
HighestWeight<K> sample_highest_weight(int N) {
  HighestWeight<K> hw{N, {}};
  Rat prod(1);
  for (int i = 1; i < N; ++i) {
    Rat a(i + 1, 2 * i + 1);
    a.canonicalize();
    hw.a.emplace_back(a);
    prod *= a;
  }
  hw.a.emplace_back(Rat(1) / prod);
  return hw;
}

/// Zero-mode factor of Lambda_s: a_s p^{(N+1)/2 - s}.
template <class K>
K lambda_zero_mode(const ScalarCtx<K>& c, const HighestWeight<K>& hw, int s) {
  return hw.a[s - 1] * c.s_pow(c.N + 1 - 2 * s);
}

/// One Lambda leg: flavor and position s^{s_exp} times its group's variable.
struct Leg {
  int flavor;
  int s_exp;
  friend bool operator<(const Leg& x, const Leg& y) {
    return std::make_pair(x.flavor, x.s_exp) < std::make_pair(y.flavor, y.s_exp);
  }
  friend bool operator==(const Leg& x, const Leg& y) { return x.flavor == y.flavor && x.s_exp == y.s_exp; }
};

/// Legs of the term Lambda_{j_1}(s^{a-1} z) ... Lambda_{j_a}(s^{1-a} z) of
/// W^a(s^base z), for the subset S = {j_1 < ... < j_a}.
inline std::vector<Leg> w_legs(int a, const std::vector<int>& S, int base) {
  std::vector<Leg> legs;
  for (int alpha = 1; alpha <= a; ++alpha) legs.push_back({S[alpha - 1], base + a + 1 - 2 * alpha});
  return legs;
}

/// prod_alpha a_{j_alpha} p^{(N+1)/2 - j_alpha}
template <class K>
K w_zero_mode(const ScalarCtx<K>& c, const HighestWeight<K>& hw, const std::vector<int>& S) {
  K z(1);
  for (int s : S) z = z * lambda_zero_mode(c, hw, s);
  return z;
}

/// Vacuum expectation value of a radially ordered product of groups of
/// Lambda legs; legs inside one group sit at the same formal variable and
/// are already normal ordered. Returns a series in the consecutive ratios
/// x_a = z_{a+1}/z_a, each to the given order.
template <class K>
LaurentWindow<K> leg_group_correlator(const ScalarCtx<K>& c, const HighestWeight<K>& hw,
                                      const std::vector<std::vector<Leg>>& groups, int order) {
  const std::size_t G = groups.size();
  if (G < 2) throw std::invalid_argument("correlator needs at least two insertion points");
  std::vector<std::string> vars;
  for (std::size_t a = 1; a < G; ++a) vars.push_back("x" + std::to_string(a));
  std::vector<int> lo(G - 1, 0), hi(G - 1, order);
  LaurentWindow<K> L(vars, lo, hi);
  std::map<std::pair<int, int>, std::vector<K>> kernel;
  auto ker = [&](int s, int t) -> const std::vector<K>& {
    auto key = std::make_pair(s, t);
    auto it = kernel.find(key);
    if (it != kernel.end()) return it->second;
    std::vector<K> v(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= order; ++n) v[n] = boson_commutator(c, s, t, n);
    return kernel.emplace(key, std::move(v)).first->second;
  };
  std::vector<int> e(G - 1);
  for (std::size_t a = 0; a < G; ++a)
    for (std::size_t b = a + 1; b < G; ++b)
      for (const auto& ls : groups[a])
        for (const auto& lt : groups[b]) {
          const auto& k = ker(ls.flavor, lt.flavor);
          K step = c.s_pow(lt.s_exp - ls.s_exp), pw(1);
          for (int n = 1; n <= order; ++n) {
            pw = pw * step;
            std::fill(e.begin(), e.end(), 0);
            for (std::size_t v = a; v < b; ++v) e[v] = n;
            L.add_to(e, k[n] * pw);
          }
        }
  K zero(1);
  for (const auto& g : groups)
    for (const auto& l : g) zero = zero * lambda_zero_mode(c, hw, l.flavor);
  return series_exp(L).scaled(zero);
}

/// One Lambda insertion for lambda_correlator.
struct LambdaInsertion {
  int flavor;
  int s_shift = 0;
};

/// <lambda| Lambda_{i_1}(s^{e_1} z_1) ... Lambda_{i_m}(s^{e_m} z_m) |lambda>
/// as a series in x_a = z_{a+1}/z_a.
template <class K>
LaurentWindow<K> lambda_correlator(const ScalarCtx<K>& c, const HighestWeight<K>& hw,
                                   const std::vector<LambdaInsertion>& ins, int order) {
  std::vector<std::vector<Leg>> groups;
  for (const auto& x : ins) {
    if (x.flavor < 1 || x.flavor > c.N) throw std::out_of_range("Lambda flavor out of range");
    groups.push_back({Leg{x.flavor, x.s_shift}});
  }
  return leg_group_correlator(c, hw, groups, order);
}

/// Eigenvalue of W^i_0 on |lambda>: the i-th elementary symmetric function
/// of a_j p^{(N+1)/2 - j}.
template <class K>
K hw_eigenvalue_w(const ScalarCtx<K>& c, const HighestWeight<K>& hw, int i) {
  if (i < 0 || i > c.N) return K(0);
  std::vector<K> e(static_cast<std::size_t>(c.N) + 1, K(0));
  e[0] = K(1);
  for (int s = 1; s <= c.N; ++s) {
    K x = lambda_zero_mode(c, hw, s);
    for (int r = s; r >= 1; --r) e[r] = e[r] + x * e[r - 1];
  }
  return e[i];
}

}  // namespace dwa
