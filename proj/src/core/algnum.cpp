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

#include "core/algnum.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "core/poly.hpp"

namespace dwa {

namespace {

using RatPoly = Polynomial<Rat>;

std::mutex& field_cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::vector<Rat> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<Rat> xn(static_cast<std::size_t>(n) + 1, Rat(0));
  xn[0] = -1;
  xn[n] = 1;
  RatPoly acc(xn);
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    auto [q, r] = RatPoly::divmod(acc, RatPoly(cyclotomic_polynomial(d)));
    if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    acc = q;
  }
  return acc.coeffs();
}

NumberField::NumberField(std::vector<Rat> modulus, std::string name, int cyc_order, std::string desc)
    : modulus_(std::move(modulus)), name_(std::move(name)), cyc_order_(cyc_order), desc_(std::move(desc)) {}

FieldPtr NumberField::cyclotomic(int order) {
  // Cached so that equal fields share one pointer.
  static std::map<int, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(field_cache_mutex());
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  std::ostringstream d;
  d << "Q(eta), eta a primitive " << order << "-th root of unity";
  FieldPtr f(new NumberField(cyclotomic_polynomial(order), "eta", order, d.str()));
  cache.emplace(order, f);
  return f;
}

FieldPtr NumberField::quadratic(const Rat& d, const std::string& name) {
  static std::map<std::pair<std::string, std::string>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(field_cache_mutex());
  auto key = std::make_pair(d.get_str(), name);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Rat root;
  FieldPtr f;
  if (rat_is_square(d, &root)) {
    f.reset(new NumberField({-root, Rat(1)}, name, 0, name + " = " + root.get_str()));
  } else {
    f.reset(new NumberField({-d, Rat(0), Rat(1)}, name, 0, name + "^2 = " + d.get_str()));
  }
  cache.emplace(key, f);
  return f;
}

std::string NumberField::describe() const { return desc_; }

bool NumberField::same_as(const NumberField& other) const {
  return this == &other || (modulus_ == other.modulus_ && name_ == other.name_);
}

AlgNum::AlgNum(FieldPtr field, std::vector<Rat> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  reduce();
}

AlgNum AlgNum::generator(const FieldPtr& field) { return AlgNum(field, {Rat(0), Rat(1)}); }

Rat AlgNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("algebraic number is not rational: " + to_string());
  return c_.empty() ? Rat(0) : c_[0];
}

void AlgNum::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

void AlgNum::reduce() {
  if (field_) {
    const auto& m = field_->modulus();
    int d = field_->degree();
    for (int k = static_cast<int>(c_.size()) - 1; k >= d; --k) {
      if (sgn(c_[k]) == 0) continue;
      Rat f = c_[k];
      for (int i = 0; i < d; ++i)
        if (sgn(m[i]) != 0) c_[k - d + i] -= f * m[i];
      c_[k] = 0;
    }
  }
  trim();
}

FieldPtr AlgNum::join(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (a->same_as(*b)) return a;
  throw std::domain_error("mixing elements of different number fields");
}

AlgNum& AlgNum::operator+=(const AlgNum& b) {
  field_ = join(field_, b.field_);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& b) {
  field_ = join(field_, b.field_);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  trim();
  return *this;
}

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  AlgNum r;
  r.field_ = AlgNum::join(a.field_, b.field_);
  if (a.c_.empty() || b.c_.empty()) return r;
  if (a.c_.size() == 1 || b.c_.size() == 1) {
    const AlgNum& scalar = a.c_.size() == 1 ? a : b;
    const AlgNum& other = a.c_.size() == 1 ? b : a;
    r.c_ = other.c_;
    for (auto& x : r.c_) x *= scalar.c_[0];
    return r;
  }
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.reduce();
  return r;
}

AlgNum& AlgNum::operator*=(const AlgNum& b) { return *this = *this * b; }
AlgNum& AlgNum::operator/=(const AlgNum& b) { return *this = *this / b; }

AlgNum AlgNum::operator-() const {
  AlgNum r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

AlgNum AlgNum::inverse() const {
  if (c_.empty()) throw std::domain_error("division by zero in number field");
  if (c_.size() == 1) {
    AlgNum r(*this);
    r.c_[0] = Rat(1) / c_[0];
    return r;
  }
  // Extended Euclid: u*a + v*m = g with g a nonzero constant.
  RatPoly m(field_->modulus());
  RatPoly r0 = m, r1(c_);
  RatPoly u0, u1(std::vector<Rat>{Rat(1)});
  while (r1.degree() > 0) {
    auto [q, r] = RatPoly::divmod(r0, r1);
    RatPoly u = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u);
  }
  if (r1.is_zero()) throw std::domain_error("element is a zero divisor: modulus not irreducible");
  Rat inv = Rat(1) / r1.coeff(0);
  std::vector<Rat> c = u1.coeffs();
  for (auto& x : c) x *= inv;
  return AlgNum(field_, std::move(c));
}

bool operator==(const AlgNum& a, const AlgNum& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_ && !a.field_->same_as(*b.field_)) return false;
  return a.c_ == b.c_;
}

std::string AlgNum::to_string() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return c_[0].get_str();
  std::ostringstream out;
  bool first = true;
  const std::string g = field_ ? field_->generator_name() : "x";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Rat v = c_[i];
    if (!first) {
      out << (sgn(v) < 0 ? " - " : " + ");
      v = abs(v);
    }
    first = false;
    if (i == 0) {
      out << v.get_str();
      continue;
    }
    if (v != 1) out << (v == -1 ? std::string("-") : v.get_str() + "*");
    out << g;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

AlgNum cyc_reduce(int N, const std::vector<std::pair<int, Rat>>& terms) {
  const int order = 2 * N;
  std::vector<Rat> raw(static_cast<std::size_t>(order), Rat(0));
  for (const auto& [e, v] : terms) {
    int r = ((e % order) + order) % order;
    raw[r] += v;
  }
  return AlgNum(NumberField::cyclotomic(order), std::move(raw));
}

}  // namespace dwa
