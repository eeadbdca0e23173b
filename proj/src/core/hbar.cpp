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

#include "core/hbar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dwa {

HbarSeries::HbarSeries(const AlgNum& v) : c_{v}, prec_(kExact) { trim(); }

HbarSeries::HbarSeries(std::vector<AlgNum> coeffs, int prec) : c_(std::move(coeffs)), prec_(prec) {
  if (prec_ < 0) throw std::invalid_argument("negative hbar precision");
  if (prec_ != kExact && static_cast<int>(c_.size()) > prec_) c_.resize(static_cast<std::size_t>(prec_));
  trim();
}

HbarSeries HbarSeries::exp_linear(const AlgNum& a, int prec) {
  std::vector<AlgNum> c;
  AlgNum term(1);
  for (int k = 0; k < prec; ++k) {
    c.push_back(term);
    term = term * a / AlgNum(k + 1);
  }
  return HbarSeries(std::move(c), prec);
}

HbarSeries HbarSeries::hbar() { return HbarSeries({AlgNum(0), AlgNum(1)}, kExact); }

void HbarSeries::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

AlgNum HbarSeries::coeff(int k) const {
  if (k < 0) return AlgNum(0);
  if (k >= prec_) throw std::out_of_range("hbar coefficient beyond known precision");
  return k < static_cast<int>(c_.size()) ? c_[k] : AlgNum(0);
}

int HbarSeries::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return prec_;
}

bool HbarSeries::is_zero() const { return c_.empty(); }

HbarSeries HbarSeries::truncated(int prec) const { return HbarSeries(c_, std::min(prec, prec_)); }

HbarSeries HbarSeries::shifted_down(int v) const {
  if (valuation() < v) throw std::domain_error("hbar shift below valuation");
  std::vector<AlgNum> c;
  if (static_cast<int>(c_.size()) > v) c.assign(c_.begin() + v, c_.end());
  return HbarSeries(std::move(c), prec_ == kExact ? kExact : prec_ - v);
}

HbarSeries& HbarSeries::operator+=(const HbarSeries& b) {
  prec_ = std::min(prec_, b.prec_);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
  for (std::size_t k = 0; k < b.c_.size(); ++k) c_[k] += b.c_[k];
  if (prec_ != kExact && static_cast<int>(c_.size()) > prec_) c_.resize(static_cast<std::size_t>(prec_));
  trim();
  return *this;
}

HbarSeries& HbarSeries::operator-=(const HbarSeries& b) {
  prec_ = std::min(prec_, b.prec_);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
  for (std::size_t k = 0; k < b.c_.size(); ++k) c_[k] -= b.c_[k];
  if (prec_ != kExact && static_cast<int>(c_.size()) > prec_) c_.resize(static_cast<std::size_t>(prec_));
  trim();
  return *this;
}

HbarSeries HbarSeries::operator-() const {
  HbarSeries r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

namespace {
int sat_add(int a, int b) {
  if (a == HbarSeries::kExact || b == HbarSeries::kExact) return HbarSeries::kExact;
  return a + b;
}
}  // namespace

HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
  int va = a.valuation(), vb = b.valuation();
  int prec = std::min(sat_add(a.prec_, vb), sat_add(b.prec_, va));
  if (a.c_.empty() || b.c_.empty()) return HbarSeries({}, prec);
  std::size_t n = a.c_.size() + b.c_.size() - 1;
  if (prec != HbarSeries::kExact) n = std::min(n, static_cast<std::size_t>(prec));
  std::vector<AlgNum> c(n);
  for (std::size_t i = 0; i < a.c_.size() && i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size() && i + j < n; ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return HbarSeries(std::move(c), prec);
}

HbarSeries operator/(const HbarSeries& a, const HbarSeries& b) {
  if (b.is_zero()) throw std::domain_error("hbar series division by a series vanishing to its precision");
  int vb = b.valuation();
  if (a.valuation() < vb) throw std::domain_error("hbar series quotient has a pole at hbar = 0");
  HbarSeries an = a.shifted_down(vb), bn = b.shifted_down(vb);
  if (bn.exact() && bn.c_.size() == 1) {
    AlgNum inv = bn.c_[0].inverse();
    std::vector<AlgNum> c = an.c_;
    for (auto& x : c) x = x * inv;
    return HbarSeries(std::move(c), an.prec_);
  }
  int prec = std::min(an.prec_, bn.prec_);
  if (prec == HbarSeries::kExact) throw std::domain_error("exact hbar series division needs a precision");
  std::vector<AlgNum> c(static_cast<std::size_t>(prec));
  AlgNum inv0 = bn.c_[0].inverse();
  for (int k = 0; k < prec; ++k) {
    AlgNum acc = an.coeff(k);
    for (int j = 1; j <= k && j < static_cast<int>(bn.c_.size()); ++j) acc -= bn.c_[j] * c[k - j];
    c[k] = acc * inv0;
  }
  return HbarSeries(std::move(c), prec);
}

bool operator==(const HbarSeries& a, const HbarSeries& b) {
  int prec = std::min(a.prec_, b.prec_);
  std::size_t n = std::max(a.c_.size(), b.c_.size());
  if (prec != HbarSeries::kExact) n = std::min(n, static_cast<std::size_t>(prec));
  for (std::size_t k = 0; k < n; ++k) {
    AlgNum x = k < a.c_.size() ? a.c_[k] : AlgNum(0);
    AlgNum y = k < b.c_.size() ? b.c_[k] : AlgNum(0);
    if (!(x == y)) return false;
  }
  return true;
}

HbarSeries HbarSeries::exp() const {
  if (!coeff(0).is_zero()) throw std::domain_error("exp of an hbar series with nonzero constant term");
  if (exact() && c_.empty()) return HbarSeries(1);
  if (exact()) throw std::domain_error("exp of an exact hbar polynomial needs a precision");
  // k e_k = sum_j j x_j e_{k-j}
  std::vector<AlgNum> e(static_cast<std::size_t>(prec_));
  if (prec_ > 0) e[0] = AlgNum(1);
  for (int k = 1; k < prec_; ++k) {
    AlgNum acc;
    for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j)
      if (!c_[j].is_zero()) acc += AlgNum(j) * c_[j] * e[k - j];
    e[k] = acc / AlgNum(k);
  }
  return HbarSeries(std::move(e), prec_);
}

HbarSeries HbarSeries::log() const {
  if (!(coeff(0) == AlgNum(1))) throw std::domain_error("log of an hbar series with constant term != 1");
  if (exact() && c_.size() == 1) return HbarSeries(0);
  if (exact()) throw std::domain_error("log of an exact hbar polynomial needs a precision");
  std::vector<AlgNum> l(static_cast<std::size_t>(prec_));
  for (int k = 1; k < prec_; ++k) {
    AlgNum acc = AlgNum(k) * coeff(k);
    for (int j = 1; j < k; ++j)
      if (!l[j].is_zero()) acc -= AlgNum(j) * l[j] * coeff(k - j);
    l[k] = acc / AlgNum(k);
  }
  return HbarSeries(std::move(l), prec_);
}

std::string HbarSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c_[k].to_string() << ")";
    if (k > 0) out << "*h^" << k;
  }
  if (first) out << "0";
  if (!exact()) out << " + O(h^" << prec_ << ")";
  return out.str();
}

}  // namespace dwa
