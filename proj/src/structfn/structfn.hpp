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
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/context.hpp"
#include "core/series.hpp"
#include "report/report.hpp"

namespace dwa {

/// phi(n) = (1-q^n)(1-t^{-n}), the factor shared by every exponent below.
template <class K>
K phi(const ScalarCtx<K>& c, int n) {
  return (K(1) - c.q_pow(n)) * (K(1) - c.tinv_pow(n));
}

/// n-th term of log f^{i,j}(x):
/// (1/n) phi(n) (1-p^{mn})(1-p^{(N-M)n}) / ((1-p^n)(1-p^{Nn})) p^{|i-j| n/2},
/// m = min(i,j), M = max(i,j).
template <class K>
K f_log_term(const ScalarCtx<K>& c, int i, int j, int n) {
  const int m = std::min(i, j), M = std::max(i, j), d = std::abs(i - j);
  if (m == 0 || M == c.N) return K(0);
  K num = phi(c, n) * (K(1) - c.p_pow(m * n)) * (K(1) - c.p_pow((c.N - M) * n)) * c.s_pow(d * n);
  K den = K(n) * (K(1) - c.p_pow(n)) * (K(1) - c.p_pow(c.N * n));
  return num / den;
}

/// f^{i,j}(s^shift x) as a power series in x up to x^order.
template <class K>
LaurentWindow<K> f_series(const ScalarCtx<K>& c, int i, int j, int order, int shift = 0) {
  if (order < 0) throw std::invalid_argument("negative series order");
  auto L = LaurentWindow<K>::univariate("x", 0, order);
  for (int n = 1; n <= order; ++n) {
    K term = f_log_term(c, i, j, n);
    if (shift != 0) term = term * c.s_pow(shift * n);
    L.set(n, term);
  }
  return series_exp(L);
}

/// gamma(p^{1/2} w) = (1-qw)(1-t^{-1}w)/((1-w)(1-pw)) at w = s^{a-1},
/// i.e. gamma(s^a). Throws std::domain_error at the poles a = 1, a = -1.
template <class K>
K gamma_at(const ScalarCtx<K>& c, int a) {
  K w = c.s_pow(a - 1);
  K den = (K(1) - w) * (K(1) - c.p * w);
  if (den.is_zero()) throw std::domain_error("gamma evaluated at a pole");
  return (K(1) - c.q * w) * (K(1) - c.tinv * w) / den;
}

/// gamma(s^a x) as a power series in x: exp(sum_n phi(n)/n s^{(a-1)n} x^n).
template <class K>
LaurentWindow<K> gamma_series(const ScalarCtx<K>& c, int a, int order) {
  auto L = LaurentWindow<K>::univariate("x", 0, order);
  for (int n = 1; n <= order; ++n) L.set(n, phi(c, n) * c.s_pow((a - 1) * n) / K(n));
  return series_exp(L);
}

/// prod_{l=1}^{k-1} gamma(p^{l+1/2}); empty product is 1.
template <class K>
K gamma_chain(const ScalarCtx<K>& c, int k) {
  K acc(1);
  for (int l = 1; l <= k - 1; ++l) acc = acc * gamma_at(c, 2 * l + 1);
  return acc;
}

/// [n choose i]_p = s^{-i(n-i)} (n choose i)_p with the Gaussian binomial
/// built by the p-Pascal rule, so no division is needed.
template <class K>
K p_binomial(const ScalarCtx<K>& c, int n, int i) {
  if (i < 0 || i > n) return K(0);
  std::vector<K> row{K(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<K> next(static_cast<std::size_t>(m) + 1, K(0));
    for (int k = 0; k <= m; ++k) {
      if (k >= 1) next[k] = next[k] + row[k - 1];
      if (k < m) next[k] = next[k] + c.p_pow(k) * row[k];
    }
    row = std::move(next);
  }
  return c.s_pow(-i * (n - i)) * row[i];
}

/// g^{mu,nu}(x) = exp(-(1/k) sum_{n not = 0 mod N} (1/n)(1-omega^{mu n})(1-omega^{-nu n}) x^n)
/// over Q(eta), eta a primitive 2N-th root of unity, omega = eta^2.
LaurentWindow<AlgNum> g_series(int N, int k, int mu, int nu, int order);

/// Checks the three product identities between shifted f's (and the
/// regularity of the f-scalars entering the general relation) to the given
/// series order at one generic point.
Report check_f_identities(const GenericCtx& c, int order);

}  // namespace dwa
