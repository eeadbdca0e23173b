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

#include <memory>
#include <string>
#include <vector>

#include "core/rat.hpp"

namespace dwa {

/// A number field Q[x]/(m(x)) with m monic and irreducible.
///
/// Two families are used: cyclotomic fields Q(eta) with eta a primitive
/// n-th root of unity (modulus the n-th cyclotomic polynomial), and
/// quadratic fields Q(sqrt(d)). When d is a rational square the quadratic
/// field degenerates to degree one and its generator is the rational root.
class NumberField {
 public:
  static std::shared_ptr<const NumberField> cyclotomic(int order);
  static std::shared_ptr<const NumberField> quadratic(const Rat& d, const std::string& name = "s");

  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Monic modulus, low degree first.
  const std::vector<Rat>& modulus() const { return modulus_; }
  /// n for Q(eta_n), 0 otherwise.
  int cyclotomic_order() const { return cyc_order_; }
  const std::string& generator_name() const { return name_; }
  /// Human readable description, for reports.
  std::string describe() const;

  bool same_as(const NumberField& other) const;

 private:
  NumberField(std::vector<Rat> modulus, std::string name, int cyc_order, std::string desc);

  std::vector<Rat> modulus_;
  std::string name_;
  int cyc_order_;
  std::string desc_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// n-th cyclotomic polynomial, low degree first.
std::vector<Rat> cyclotomic_polynomial(int n);

/// Element of a NumberField stored as reduced coefficients in the
/// generator. A null field marks a plain rational, which adopts the field
/// of whatever it is combined with.
class AlgNum {
 public:
  AlgNum() = default;
  AlgNum(long v) : c_{Rat(v)} { trim(); }  // NOLINT(google-explicit-constructor)
  AlgNum(int v) : AlgNum(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  AlgNum(const Rat& v) : c_{v} { trim(); }  // NOLINT(google-explicit-constructor)
  AlgNum(FieldPtr field, std::vector<Rat> coeffs);

  static AlgNum generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  /// Throws std::domain_error unless is_rational().
  Rat rational_value() const;

  AlgNum& operator+=(const AlgNum& b);
  AlgNum& operator-=(const AlgNum& b);
  AlgNum& operator*=(const AlgNum& b);
  AlgNum& operator/=(const AlgNum& b);
  AlgNum operator-() const;
  /// Throws std::domain_error for zero.
  AlgNum inverse() const;

  friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
  friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }
  friend bool operator==(const AlgNum& a, const AlgNum& b);

  /// "3/2" for rationals, otherwise "a + b*s + c*s^2" in the generator name.
  std::string to_string() const;

 private:
  void trim();
  static FieldPtr join(const FieldPtr& a, const FieldPtr& b);
  void reduce();

  FieldPtr field_;
  std::vector<Rat> c_;
};

/// Reduces a Laurent polynomial in eta (eta a primitive 2N-th root of unity,
/// exponents any integers) to canonical form in Q(eta).
AlgNum cyc_reduce(int N, const std::vector<std::pair<int, Rat>>& terms);

}  // namespace dwa
