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
#include <string>
#include <tuple>

#include "core/context.hpp"
#include "core/series.hpp"
#include "report/report.hpp"

namespace dwa {

/// f^{i,j}(s^shift x) with hbar-series coefficients; every exponent term
/// is checked to be a well-defined series (std::domain_error otherwise).
LaurentWindow<HbarSeries> hbar_expand_f(const HbarCtx& c, int i, int j, int order_x, int shift = 0);

/// Word in the symbolic currents z^mu after the delta function has fixed
/// zeta_1 in terms of zeta_2:
///   D^dpow delta(eta^root zeta_2/zeta_1) * z^rank(eta^arg zeta_2),
/// with rank = -1 for the unit. Exponents of eta are kept mod 2N.
struct ZKey {
  int root = 0;
  int dpow = 0;
  int rank = -1;
  int arg = 0;
  auto operator<=>(const ZKey&) const = default;
  std::string describe() const;
};

using ZExpr = std::map<ZKey, AlgNum>;

/// Right-hand side of the general relation in Limit II after the formal
/// substitution W^i(p^{(1-i)/2} zeta) -> hbar eta^i z^i(zeta), as one ZExpr
/// per hbar order 0..order_h. Works for any 1 <= i, j <= N-1 (i > j through
/// the relation with the currents exchanged).
struct ZRhs {
  std::vector<ZExpr> orders;
  int two_current_terms = 0;  // O(hbar^3) under the substitution rule
};
ZRhs limit_two_rhs(const HbarCtx& c, int i, int j, int order_h);

/// The Z-algebra right-hand side for (mu, nu) = (i, j), times eta^{i+j}.
ZExpr z_algebra_rhs(int N, int k, int i, int j);

/// hbar^0, hbar^1 of the general relation vanish and hbar^2 reproduces the
/// Z-algebra relation, structure functions included.
CheckRecord verify_limit_II_relation(int N, int k, int i, int j, int order_x, int order_h = 2);

/// <vac| W^1(z_1) ... W^1(z_n) |vac> = O(hbar^n) coefficientwise in Limit II.
CheckRecord verify_correlator_order(int N, int k, int n_points, int order_x);

/// Limit I: <vac|W^i_0|vac> = binom(N, i) + O(hbar^2) exactly to hbar^6
/// against the closed form, and <vac|W^i_n W^j_{-n}|vac> = O(hbar^2) for
/// 1 <= n <= window.
CheckRecord verify_limit_I_binomials(const Rat& beta, int N, int window, int hbar_order = 7);

}  // namespace dwa
