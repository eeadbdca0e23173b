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
#include <vector>

#include "fock/fock.hpp"
#include "fock/fock_space.hpp"
#include "structfn/regular_product.hpp"

namespace dwa {

/// W^rank(s^{s_shift} z) at its own formal variable.
struct WInsertion {
  int rank;
  int s_shift = 0;
};

/// <lambda| W^{r_1}(s^{e_1} z_1) ... W^{r_m}(s^{e_m} z_m) |lambda> as a
/// series in the consecutive ratios x_a = z_{a+1}/z_a. The coefficient at
/// (e_1, ..., e_{m-1}) equals <W_{n_1} ... W_{n_m}> with
/// e_a = n_1 + ... + n_a (times the shift factors).
template <class K>
LaurentWindow<K> w_correlator(const ScalarCtx<K>& c, const HighestWeight<K>& hw, const std::vector<WInsertion>& ins,
                              int order) {
  if (ins.size() < 2) throw std::invalid_argument("w_correlator needs at least two insertions");
  for (const auto& x : ins)
    if (x.rank < 0 || x.rank > c.N) throw std::out_of_range("W rank out of range");
  std::vector<std::vector<std::vector<int>>> choices;
  for (const auto& x : ins) choices.push_back(subsets_of_size(c.N, x.rank));
  std::vector<std::string> vars;
  for (std::size_t a = 1; a < ins.size(); ++a) vars.push_back("x" + std::to_string(a));
  LaurentWindow<K> total(vars, std::vector<int>(ins.size() - 1, 0), std::vector<int>(ins.size() - 1, order));
  std::vector<std::size_t> pick(ins.size(), 0);
  while (true) {
    std::vector<std::vector<Leg>> groups;
    for (std::size_t a = 0; a < ins.size(); ++a)
      groups.push_back(w_legs(ins[a].rank, choices[a][pick[a]], ins[a].s_shift));
    total = total + leg_group_correlator(c, hw, groups, order);
    std::size_t a = 0;
    while (a < ins.size() && ++pick[a] == choices[a].size()) pick[a++] = 0;
    if (a == ins.size()) break;
  }
  return total;
}

/// A W mode W^rank_mode.
struct WMode {
  int rank;
  int mode;
};

/// Applies ops[0] ... ops[k-1] to v, rightmost first.
template <class K>
typename FockSpace<K>::Vec apply_w_modes(FockSpace<K>& fs, const std::vector<WMode>& ops,
                                         typename FockSpace<K>::Vec v) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) v = fs.w_mode(it->rank, it->mode, v);
  return v;
}

/// <lambda| bra mid ket |lambda> for lists of W modes.
template <class K>
K w_mode_matrix_element(FockSpace<K>& fs, const std::vector<WMode>& bra, const std::vector<WMode>& mid,
                        const std::vector<WMode>& ket) {
  std::vector<WMode> all(bra);
  all.insert(all.end(), mid.begin(), mid.end());
  all.insert(all.end(), ket.begin(), ket.end());
  return fs.vacuum_coefficient(apply_w_modes(fs, all, fs.vacuum()));
}

/// Generalized binomial coefficient C(m, j) for any integer m.
inline Rat gen_binomial(long m, int j) {
  Rat acc(1);
  for (int i = 0; i < j; ++i) acc = acc * Rat(m - i) / Rat(i + 1);
  return acc;
}

/// Mode M (in z) of the regular product
///   lim_{x -> s^{eB-eA}} extra(x) f^{a,b}(x) W^a(s^{eA} z) W^b(s^{eB} z),
/// acting on v. Each contraction pattern is expanded around the evaluation
/// point in eps = x/x0 - 1; negative orders must cancel across patterns,
/// otherwise the product is singular there and std::domain_error is thrown.
template <class K>
typename FockSpace<K>::Vec regular_pair_mode(FockSpace<K>& fs, int a, int b, int eA, int eB, int M,
                                             const typename FockSpace<K>::Vec& v,
                                             const LinearFactorProduct* extra = nullptr) {
  using Vec = typename FockSpace<K>::Vec;
  const auto& c = fs.ctx();
  const int N = c.N;
  const int x0 = eB - eA;
  Vec zero;
  zero.level = v.level - M;
  if (a < 0 || a > N || b < 0 || b > N || zero.level < 0) return zero;
  std::map<int, Vec> eps;  // order -> accumulated vector, orders <= 0
  for (const auto& S : subsets_of_size(N, a)) {
    for (const auto& T : subsets_of_size(N, b)) {
      LinearFactorProduct R = pair_factor(N, a, b, S, T);
      if (extra)
        for (const auto& [key, m] : extra->factors())
          R.mul_linear(static_cast<LinearFactorProduct::Kind>(key.first), key.second, m);
      // R(x0 (1+eps)) = eps^val * sum_m rho_m eps^m
      int val = 0;
      K unit(1);
      std::vector<std::pair<K, int>> regular;  // (u, m): factor (1 - u eps)^m
      for (const auto& [key, m] : R.factors()) {
        K kappa = key.first == LinearFactorProduct::kQ ? c.q : key.first == LinearFactorProduct::kTinv ? c.tinv : K(1);
        K w = kappa * c.s_pow(key.second + x0);
        K one_minus = K(1) - w;
        if (key.first == LinearFactorProduct::kOne && key.second + x0 == 0) {
          val += m;
          if (m % 2) unit = K(0) - unit;  // (1 - (1+eps)) = -eps
          continue;
        }
        if (dwa::is_zero(one_minus)) throw std::domain_error("unexpected vanishing factor in regular product");
        unit = unit * power(one_minus, m);
        regular.emplace_back(w / one_minus, m);
      }
      if (val > 0) continue;
      const int D = -val;
      std::vector<K> rho(static_cast<std::size_t>(D) + 1, K(0));
      rho[0] = unit;
      for (const auto& [u, m] : regular) {
        std::vector<K> next(static_cast<std::size_t>(D) + 1, K(0));
        K mu(1);
        std::vector<K> fac(static_cast<std::size_t>(D) + 1);
        for (int j = 0; j <= D; ++j) {
          fac[j] = K(gen_binomial(m, j)) * mu;
          mu = mu * (K(0) - u);
        }
        for (int i = 0; i <= D; ++i)
          for (int j = 0; i + j <= D; ++j) next[i + j] = next[i + j] + rho[i] * fac[j];
        rho = std::move(next);
      }
      K Z = w_zero_mode(c, fs.highest_weight(), S) * w_zero_mode(c, fs.highest_weight(), T);
      auto graded = fs.vertex_mode_graded(w_legs(a, S, eA), w_legs(b, T, eB), M, v);
      for (const auto& [d, phi] : graded) {
        for (int o = val; o <= 0; ++o) {
          K coef(0);
          for (int m = 0; m <= o - val; ++m) coef = coef + K(gen_binomial(d, o - val - m)) * rho[m];
          if (dwa::is_zero(coef)) continue;
          Vec& slot = eps[o];
          slot.level = zero.level;
          slot.add(Z * coef, phi);
        }
      }
    }
  }
  for (const auto& [o, vec] : eps)
    if (o < 0 && !vec.is_zero()) throw std::domain_error("product has a pole at the evaluation point");
  auto it = eps.find(0);
  return it == eps.end() ? zero : it->second;
}

/// Mode n of the normal ordered product oo W^i(s^{r_exp} z) W^j(z) oo via
///   sum_{m>=0} sum_{l<=m} f^{i,j}_l (r^{m-l} W^i_{-m} W^j_{n+m} + r^{l-m-1} W^j_{n-m-1} W^i_{m+1}).
/// The sum over m is cut where the ket level forces every term to vanish,
/// and `tail` further values of m are evaluated and required to vanish.
template <class K>
typename FockSpace<K>::Vec composite_no_mode(FockSpace<K>& fs, int i, int j, int r_exp, int n,
                                             const typename FockSpace<K>::Vec& v, int tail = 5) {
  using Vec = typename FockSpace<K>::Vec;
  const auto& c = fs.ctx();
  Vec out;
  out.level = v.level - n;
  if (out.level < 0) return out;
  const int bound = std::max(v.level - n, v.level - 1);
  const int mmax = std::max(bound, 0) + tail;
  auto f = f_series(c, i, j, mmax);
  for (int m = 0; m <= mmax; ++m) {
    Vec term;
    term.level = out.level;
    // W^j_{n+m} v vanishes when n + m > level; W^i_{m+1} v when m + 1 > level.
    Vec inner1 = fs.w_mode(j, n + m, v);
    Vec inner2 = fs.w_mode(i, m + 1, v);
    Vec a1 = fs.w_mode(i, -m, inner1);
    Vec a2 = fs.w_mode(j, n - m - 1, inner2);
    for (int l = 0; l <= m; ++l) {
      K fl = f.coeff(l);
      if (dwa::is_zero(fl)) continue;
      term.add(fl * c.s_pow(r_exp * (m - l)), a1);
      term.add(fl * c.s_pow(r_exp * (l - m - 1)), a2);
    }
    if (m > bound && !term.is_zero()) throw std::logic_error("normal ordered mode sum has a nonvanishing tail");
    out.add(K(1), term);
  }
  return out;
}

}  // namespace dwa
