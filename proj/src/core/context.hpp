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

#include "core/algnum.hpp"
#include "core/hbar.hpp"
#include "core/rat.hpp"
#include "core/scalar.hpp"

namespace dwa {

enum class ScalarMode { Generic, LimitI, LimitII };

const char* to_string(ScalarMode m);

/// The scalars q, t, p = q/t and s = p^{1/2} of one evaluation point.
///
/// Generic mode: q, t rational, s the generator of Q(sqrt(p)).
/// LimitI: q = e^h, t = e^{beta h}, exact rational hbar series.
/// LimitII: q = e^h, p = omega e^{-h k/N}, s = eta e^{-h k/(2N)} with
/// eta a primitive 2N-th root of unity and omega = eta^2.
template <class K>
class ScalarCtx {
 public:
  int N = 0;
  ScalarMode mode = ScalarMode::Generic;
  K q, qinv, t, tinv, p, pinv, s, sinv;
  FieldPtr field;  // field of the coefficients (may be null for Q)

  // Descriptive data for reports.
  Rat q_point, t_point;  // Generic
  Rat beta;              // LimitI
  int level = 0;         // LimitII
  int hbar_order = 0;    // hbar modes: known coefficients per scalar

  /// s^e for any integer e.
  K s_pow(int e) const {
    auto it = s_table_.find(e);
    if (it != s_table_.end()) return it->second;
    return power(s, sinv, e);
  }
  K p_pow(int n) const { return s_pow(2 * n); }
  K q_pow(int n) const { return power(q, qinv, n); }
  K tinv_pow(int n) const { return power(tinv, t, n); }

  /// (1-q)(1-t^{-1})/(1-p), the fusion constant.
  K fusion_c() const { return (K(1) - q) * (K(1) - tinv) / (K(1) - p); }

  void build_tables(int range) {
    s_table_.clear();
    K up(1), down(1);
    s_table_.emplace(0, K(1));
    for (int e = 1; e <= range; ++e) {
      up = up * s;
      down = down * sinv;
      s_table_.emplace(e, up);
      s_table_.emplace(-e, down);
    }
  }

 private:
  std::map<int, K> s_table_;
};

using GenericCtx = ScalarCtx<AlgNum>;
using HbarCtx = ScalarCtx<HbarSeries>;

/// Generic point. Throws std::invalid_argument when the point is degenerate
/// (q, t or p in {0, 1, -1}, or some 1 - p^{Mn} vanishing for M <= N,
/// n <= check_bound).
GenericCtx make_generic_ctx(int N, const Rat& q, const Rat& t, int check_bound = 64);

/// First non-degenerate point among a deterministic candidate sequence
/// starting with (q, t).
GenericCtx make_generic_ctx_resampled(int N, const Rat& q, const Rat& t, int check_bound = 64);

HbarCtx make_limit_one_ctx(int N, const Rat& beta, int hbar_order);
HbarCtx make_limit_two_ctx(int N, int k, int hbar_order);

/// The two default generic points used throughout the suites.
std::vector<std::pair<Rat, Rat>> default_generic_points();

}  // namespace dwa
