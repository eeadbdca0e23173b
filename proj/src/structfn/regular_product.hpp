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
#include <utility>
#include <vector>

#include "core/context.hpp"
#include "core/series.hpp"

namespace dwa {

/// Product of linear factors (1 - kappa s^e x)^mult with kappa one of q,
/// t^{-1}, 1. This is the shape of f^{a,b}(x) times the contractions between
/// the vertex legs of W^a(z) and W^b(xz): every infinite product cancels and
/// what is left is a finite rational function of x.
class LinearFactorProduct {
 public:
  enum Kind : int { kQ = 0, kTinv = 1, kOne = 2 };

  /// Multiplies by gamma(s^{e+1} x)^c = [(1-q s^e x)(1-t^{-1} s^e x) / ((1-s^e x)(1-s^{e+2} x))]^c.
  void mul_gamma(int e, int c);
  void mul_linear(Kind kind, int e, int c);

  const std::map<std::pair<int, int>, int>& factors() const { return mult_; }
  bool is_one() const { return mult_.empty(); }

  /// True when some denominator factor (1 - s^e x) vanishes at x = s^x_exp.
  bool has_pole_at(int x_exp) const {
    for (const auto& [key, m] : mult_)
      if (m < 0 && key.first == kOne && key.second + x_exp == 0) return true;
    return false;
  }

  /// Value at x = s^x_exp. Throws std::domain_error at a pole.
  template <class K>
  K eval(const ScalarCtx<K>& c, int x_exp) const {
    K num(1), den(1);
    for (const auto& [key, m] : mult_) {
      K kappa = key.first == kQ ? c.q : key.first == kTinv ? c.tinv : K(1);
      K f = K(1) - kappa * c.s_pow(key.second + x_exp);
      for (int r = 0; r < std::abs(m); ++r) (m > 0 ? num : den) = (m > 0 ? num : den) * f;
    }
    if (den.is_zero()) throw std::domain_error("regular product evaluated at a pole");
    return num / den;
  }

  /// Power series in x to the given order.
  template <class K>
  LaurentWindow<K> series(const ScalarCtx<K>& c, int order) const {
    auto L = LaurentWindow<K>::univariate("x", 0, order);
    for (const auto& [key, m] : mult_) {
      K kappa = key.first == kQ ? c.q : key.first == kTinv ? c.tinv : K(1);
      K base = kappa * c.s_pow(key.second);
      K pw(1);
      for (int n = 1; n <= order; ++n) {
        pw = pw * base;
        L.add_to({n}, K(-m) * pw / K(n));
      }
    }
    return series_exp(L);
  }

  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, int> mult_;
};

/// Integer Laurent polynomial, exponent -> coefficient.
using IntLaurent = std::map<int, long long>;

/// L(sigma) such that f^{a,b}(x) prod C_{s_alpha t_beta}(leg ratio) equals
/// prod_e gamma(s^{e+1} x)^{L_e}. S and T list the flavors of the legs of
/// W^a and W^b in increasing order.
IntLaurent pair_exponent_polynomial(int N, int a, int b, const std::vector<int>& S, const std::vector<int>& T);

LinearFactorProduct pair_factor(int N, int a, int b, const std::vector<int>& S, const std::vector<int>& T);

/// All increasing subsets of {1..N} of size a.
std::vector<std::vector<int>> subsets_of_size(int N, int a);

}  // namespace dwa
