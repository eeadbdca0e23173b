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
#include <optional>
#include <utility>
#include <vector>

#include "core/rat.hpp"
#include "report/report.hpp"

namespace dwa {

/// Truncated series in y with rational exponents. Exponents live on the grid
/// (1/resolution) Z and are stored as integers; every coefficient with
/// exponent <= cutoff is known exactly.
class QSeries {
 public:
  QSeries(long resolution, Rat cutoff);

  long resolution() const { return res_; }
  const Rat& cutoff() const { return cutoff_; }

  /// Throws std::out_of_range above the cutoff and std::invalid_argument off the grid.
  mpz_class coeff(const Rat& e) const;
  /// Adds c y^e; terms above the cutoff are dropped.
  void add(const Rat& e, const mpz_class& c);

  /// Same series on a finer grid; res must be a multiple of resolution().
  QSeries with_resolution(long res) const;
  /// y^e times this series, grid widened as needed.
  QSeries shifted(const Rat& e) const;
  QSeries truncated(const Rat& cutoff) const;

  /// Lowest exponent with a nonzero coefficient, or the cutoff for an empty series.
  Rat floor_exponent() const;
  std::vector<std::pair<Rat, mpz_class>> terms() const;
  Json to_json() const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  /// Same cutoff and the same nonzero terms.
  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  long res_;
  Rat cutoff_;
  std::map<long, mpz_class> c_;
  long key(const Rat& e) const;
};

/// Lowest exponent where a and b differ, compared up to the smaller cutoff.
std::optional<Rat> first_difference(const QSeries& a, const QSeries& b);

/// 1/(y;y)_inf to y^cutoff, by inverting the expanded product.
QSeries euler_inverse(const Rat& cutoff);

/// (1/(y;y)_inf) sum_m (y^{(p2 r - p1 s + m p1 p2) m} - y^{(r + m p1)(s + m p2)}) to y^cutoff.
/// extra_m widens the m-sum past the point where it stops contributing.
QSeries rocha_caridi(int p1, int p2, const Rat& r, const Rat& s, const Rat& cutoff, int extra_m = 0);

/// y^{(2j^2+k)/(4(k+2)) - 1/8} (1/(y;y)_inf) sum_m (-1)^m y^{m(j + (k+2)m/2)} to y^cutoff.
/// Throws std::invalid_argument unless k >= 2 and j is in {-k/2, -k/2+1, ..., k/2}.
QSeries dza_character(int k, const Rat& j, const Rat& cutoff, int extra_m = 0);

Rat dza_prefactor(int k, const Rat& j);

/// dza_character(k, j) = y^{prefactor} rocha_caridi(2, k+2, 1, j + (k+2)/2), coefficient by
/// coefficient. Also checks that three more m-terms change nothing on either side and
/// that j -> -j leaves the character unchanged.
CheckRecord verify_char_identity(int k, const Rat& j, const Rat& cutoff);

}  // namespace dwa
