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

#include <climits>
#include <string>
#include <vector>

#include "core/algnum.hpp"

namespace dwa {

/// Truncated power series sum_{k < prec} c_k hbar^k over a number field.
///
/// prec counts the known coefficients; kExact marks a polynomial known to
/// all orders. Arithmetic keeps track of how much precision survives, so a
/// division by a series of hbar-valuation v loses v orders instead of
/// silently producing garbage.
class HbarSeries {
 public:
  static constexpr int kExact = INT_MAX;

  HbarSeries() = default;
  HbarSeries(long v) : HbarSeries(AlgNum(v)) {}  // NOLINT(google-explicit-constructor)
  HbarSeries(int v) : HbarSeries(AlgNum(v)) {}  // NOLINT(google-explicit-constructor)
  HbarSeries(const Rat& v) : HbarSeries(AlgNum(v)) {}  // NOLINT(google-explicit-constructor)
  HbarSeries(const AlgNum& v);  // NOLINT(google-explicit-constructor)
  HbarSeries(std::vector<AlgNum> coeffs, int prec);

  /// exp(a*hbar) to the given precision.
  static HbarSeries exp_linear(const AlgNum& a, int prec);
  /// The series hbar itself (exact).
  static HbarSeries hbar();

  int prec() const { return prec_; }
  bool exact() const { return prec_ == kExact; }
  /// Coefficient of hbar^k; throws std::out_of_range when k >= prec.
  AlgNum coeff(int k) const;
  const std::vector<AlgNum>& known() const { return c_; }
  /// Index of the first nonzero coefficient, or prec when all known ones vanish.
  int valuation() const;
  /// True when every known coefficient vanishes.
  bool is_zero() const;

  HbarSeries truncated(int prec) const;
  HbarSeries shifted_down(int v) const;  // divides by hbar^v, requires valuation >= v

  HbarSeries& operator+=(const HbarSeries& b);
  HbarSeries& operator-=(const HbarSeries& b);
  HbarSeries operator-() const;
  friend HbarSeries operator+(HbarSeries a, const HbarSeries& b) { return a += b; }
  friend HbarSeries operator-(HbarSeries a, const HbarSeries& b) { return a -= b; }
  friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b);
  /// Throws std::domain_error when b vanishes to its precision, or when the
  /// quotient would need negative powers of hbar.
  friend HbarSeries operator/(const HbarSeries& a, const HbarSeries& b);
  HbarSeries& operator*=(const HbarSeries& b) { return *this = *this * b; }
  HbarSeries& operator/=(const HbarSeries& b) { return *this = *this / b; }

  /// Agreement on all coefficients known to both sides.
  friend bool operator==(const HbarSeries& a, const HbarSeries& b);

  /// exp(x) for x with zero constant term.
  HbarSeries exp() const;
  /// log(x) for x with constant term 1.
  HbarSeries log() const;

  std::string to_string() const;

 private:
  void trim();

  std::vector<AlgNum> c_;
  int prec_ = kExact;
};

}  // namespace dwa
