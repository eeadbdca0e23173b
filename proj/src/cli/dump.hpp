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

#include <stdexcept>
#include <string>

#include "core/rat.hpp"
#include "report/report.hpp"

namespace dwa {

struct UnknownIdError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exact coefficients of a named object. Ids:
///   f:N=<n>:i=<i>:j=<j>              f^{i,j}(x) to x^order at (q, t)
///   g:N=<n>:k=<k>:mu=<mu>:nu=<nu>    g^{mu,nu}(x) to x^order
///   a:N=<n>:i=<i>:beta=<b>           a^i_{2m}, m = 1..order
///   bernoulli                        B_1..B_order
///   zeta                             zeta(1-2m), m = 1..order
///   partitions                       1/(y;y)_inf to y^order
///   char:k=<k>:j=<j>                 character series to y^order
/// Rationals print as "num/den" strings; field elements as coefficient
/// vectors in powers of the stated generator.
Json dump_series(const std::string& id, int order, const Rat& q, const Rat& t);

/// Ids dump_series understands, with one-line descriptions.
Json dump_ids();

}  // namespace dwa
