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

#include <vector>

#include "core/context.hpp"
#include "core/rat.hpp"
#include "report/report.hpp"

namespace dwa {

/// B_m in the convention x/(e^x-1) + x/2 = 1 + sum_{n>0} (-1)^{n-1} B_n x^{2n}/(2n)!,
/// so B_1 = 1/6, B_2 = 1/30 and B_m > 0. Throws std::invalid_argument for m < 1.
Rat bernoulli(int m);

/// zeta(1-2m) = (-1)^m B_m / (2m).
Rat zeta_negative_odd(int m);

/// a^i_{2m}, m = 1..M, from
///   (1-q^n)(1-t^{-n}) (1-p^{in})/(1-p^n) (1-p^{(N-i)n})/(1-p^{Nn}) = sum_m a^i_{2m} (n hbar)^{2m}
/// with q = e^hbar, t = q^beta. Throws std::domain_error if an odd power
/// of n hbar survives.
std::vector<Rat> a_coefficients(int N, int i, const Rat& beta, int M);

/// exp(sum_m a^i_{2m} zeta(1-2m) hbar^{2m}) = (binom(N,i)^{-1} [N choose i]_p)^2 to hbar^{2M}.
CheckRecord verify_zeta_identity(int N, int i, const Rat& beta, int M);

/// log(sinh x) = log x + sum_{n>0} (-1)^{n-1} 2^{2n-1} B_n / ((2n)! n) x^{2n} to x^{2M}.
CheckRecord verify_log_sinh(int M);

/// zeta(-1) = -1/12 and the bosonic-string shift 12 zeta(-1) = -1.
CheckRecord verify_zeta_values(int M);

/// hw_eigenvalue_w(vacuum, i) = [N choose i]_p exactly at a generic point,
/// against both the p-Pascal and the factorial form.
CheckRecord verify_vacuum_eigenvalue(const GenericCtx& c, int i);

}  // namespace dwa
