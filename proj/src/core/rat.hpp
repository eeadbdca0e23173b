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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dwa {

/// Exact rational number. GMP keeps it canonical after every operation.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on anything else.
Rat parse_rat(std::string_view text);

/// "num/den", or just "num" for integers.
std::string rat_to_string(const Rat& x);

/// x^e for any integer e; x must be nonzero when e < 0.
Rat rat_pow(const Rat& x, long e);

/// True when x is the square of a rational; the root is written to *root.
bool rat_is_square(const Rat& x, Rat* root);

Rat factorial(int n);
Rat binomial(int n, int k);

}  // namespace dwa
