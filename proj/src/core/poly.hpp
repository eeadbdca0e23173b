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
#include <utility>
#include <vector>

#include "core/scalar.hpp"

namespace dwa {

/// Dense univariate polynomial, coefficients stored from low to high degree
/// with no trailing zeros.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const K& a, int degree) {
    std::vector<K> c(static_cast<std::size_t>(degree) + 1);
    c.back() = a;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : K(0); }
  const K& lead() const { return c_.back(); }

  K eval(const K& x) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (dwa::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const K& s, const Polynomial& a) {
    std::vector<K> c(a.c_);
    for (auto& x : c) x = s * x;
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  /// Euclidean division; the divisor's leading coefficient must be invertible.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<K> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<K> q(static_cast<std::size_t>(a.degree() - db) + 1, K(0));
    K inv_lead = K(1) / b.lead();
    for (int k = a.degree(); k >= db; --k) {
      if (dwa::is_zero(r[k])) continue;
      K f = r[k] * inv_lead;
      q[k - db] = f;
      for (int i = 0; i <= db; ++i) r[k - db + i] = r[k - db + i] - f * b.c_[i];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

 private:
  void trim() {
    while (!c_.empty() && dwa::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

}  // namespace dwa
