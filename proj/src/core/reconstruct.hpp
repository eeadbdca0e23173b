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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/linalg.hpp"
#include "core/poly.hpp"
#include "core/series.hpp"

namespace dwa {

template <class K>
struct RationalFunction {
  Polynomial<K> num;
  Polynomial<K> den;  // normalized to den(0) = 1
};

/// Finds P/Q with deg P <= deg_num, deg Q <= deg_den, Q(0) = 1 matching the
/// univariate power series s on its whole known window. Every coefficient
/// beyond the deg_num + deg_den + 1 used to fit must agree as well; if one
/// does not, the candidate is rejected and nullopt is returned.
///
/// Throws std::invalid_argument when the window holds fewer than
/// deg_num + deg_den + 2 coefficients, so at least one is left to check.
template <class K>
std::optional<RationalFunction<K>> rational_reconstruct(const LaurentWindow<K>& s, int deg_num, int deg_den) {
  if (s.nvars() != 1) throw std::invalid_argument("rational reconstruction needs a univariate series");
  if (s.lo(0) < 0) throw std::invalid_argument("rational reconstruction needs a power series");
  if (deg_num < 0 || deg_den < 0) throw std::invalid_argument("negative degree bound");
  const int top = s.hi(0);
  if (top + 1 < deg_num + deg_den + 2)
    throw std::invalid_argument("series window too short: have " + std::to_string(top + 1) +
                                " coefficients, need " + std::to_string(deg_num + deg_den + 2));
  auto c = [&](int k) { return k < 0 ? K(0) : s.coeff(k); };
  // Q_1..Q_dd from sum_{j=0}^{dd} Q_j c_{k-j} = 0 for k = dn+1 .. dn+dd.
  std::vector<K> q(static_cast<std::size_t>(deg_den) + 1, K(0));
  q[0] = K(1);
  if (deg_den > 0) {
    std::vector<std::vector<K>> A(static_cast<std::size_t>(deg_den), std::vector<K>(static_cast<std::size_t>(deg_den)));
    std::vector<K> b(static_cast<std::size_t>(deg_den));
    for (int r = 0; r < deg_den; ++r) {
      int k = deg_num + 1 + r;
      for (int j = 1; j <= deg_den; ++j) A[r][j - 1] = c(k - j);
      b[r] = K(0) - c(k);
    }
    auto sol = solve_linear(std::move(A), std::move(b));
    if (!sol) return std::nullopt;
    for (int j = 1; j <= deg_den; ++j) q[j] = (*sol)[j - 1];
  }
  auto conv = [&](int k) {
    K acc(0);
    for (int j = 0; j <= deg_den && j <= k; ++j) acc = acc + q[j] * c(k - j);
    return acc;
  };
  std::vector<K> p(static_cast<std::size_t>(deg_num) + 1);
  for (int k = 0; k <= deg_num; ++k) p[k] = conv(k);
  for (int k = deg_num + 1; k <= top; ++k)
    if (!is_zero(conv(k))) return std::nullopt;
  return RationalFunction<K>{Polynomial<K>(std::move(p)), Polynomial<K>(std::move(q))};
}

/// Searches degree pairs by increasing total degree (denominator degree
/// ascending within a total) and returns the first consistent fit. Only
/// pairs that leave at least spare coefficients unused are tried.
template <class K>
std::optional<RationalFunction<K>> rational_reconstruct_search(const LaurentWindow<K>& s, int max_total, int spare = 4) {
  const int have = s.hi(0) + 1;
  for (int total = 0; total <= max_total; ++total) {
    if (total + 1 + spare > have) break;
    for (int dd = 0; dd <= total; ++dd) {
      auto r = rational_reconstruct(s, total - dd, dd);
      if (r) return r;
    }
  }
  return std::nullopt;
}

}  // namespace dwa
