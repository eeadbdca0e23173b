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

#include "core/rat.hpp"

namespace dwa {

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

/// Generic zero test used by the templated containers. Scalar classes
/// provide a member is_zero().
template <class K>
  requires requires(const K& y) { y.is_zero(); }
bool is_zero(const K& x) {
  return x.is_zero();
}

/// x^e by repeated squaring; inv must equal 1/x when e < 0.
template <class K>
K power(const K& x, const K& inv, long e) {
  K base = e < 0 ? inv : x;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  K acc(1);
  while (n) {
    if (n & 1u) acc = acc * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return acc;
}

template <class K>
K power(const K& x, long e) {
  return e < 0 ? power(x, K(1) / x, e) : power(x, x, e);
}

}  // namespace dwa
