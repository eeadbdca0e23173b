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
#include <utility>
#include <vector>

#include "core/scalar.hpp"

namespace dwa {

/// Solves the square system A x = b by exact Gaussian elimination.
/// Returns nullopt when A is singular.
template <class K>
std::optional<std::vector<K>> solve_linear(std::vector<std::vector<K>> A, std::vector<K> b) {
  const std::size_t n = A.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(A[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    K inv = K(1) / A[col][col];
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(A[r][col])) continue;
      K f = A[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) A[r][c] = A[r][c] - f * A[col][c];
      b[r] = b[r] - f * b[col];
    }
  }
  std::vector<K> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

}  // namespace dwa
