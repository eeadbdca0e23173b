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
#include <string>
#include <tuple>

#include "core/algnum.hpp"
#include "core/series.hpp"
#include "report/report.hpp"

namespace dwa {

/// E^{i,j}_n of the loop algebra of gl_N.
struct GlSymbol {
  int i = 1, j = 1, n = 0;
  auto operator<=>(const GlSymbol&) const = default;
};

/// Linear combination of E^{i,j}_n plus a multiple of the central symbol
/// khat, over a number field.
struct GlElement {
  std::map<GlSymbol, AlgNum> terms;
  AlgNum central = AlgNum(0);

  static GlElement symbol(int i, int j, int n, const AlgNum& c = AlgNum(1));
  static GlElement khat(const AlgNum& c = AlgNum(1));

  bool is_zero() const;
  void add(const AlgNum& c, const GlElement& x);
  GlElement scaled(const AlgNum& c) const;
  friend GlElement operator+(GlElement a, const GlElement& b) { a.add(AlgNum(1), b); return a; }
  friend GlElement operator-(GlElement a, const GlElement& b) { a.add(AlgNum(-1), b); return a; }
  friend bool operator==(const GlElement& a, const GlElement& b) { return (a - b).is_zero(); }
  std::string to_string() const;
};

/// [E^{i,j}_n, E^{i',j'}_m] = d^{j i'} E^{i,j'}_{n+m} - d^{i j'} E^{i',j}_{n+m}
///                            + d^{i j'} d^{j i'} khat n d_{n+m,0}, extended bilinearly.
GlElement gl_bracket(const GlElement& a, const GlElement& b);

/// H^i_n = E^{i,i}_n - E^{i+1,i+1}_n.
GlElement cartan_h(int i, int n);

/// Generators of the principal picture realized through the basis change.
/// omega is the generator of Q(omega), a primitive N-th root of unity.
class PrincipalBasis {
 public:
  explicit PrincipalBasis(int N);
  int N() const { return N_; }
  const FieldPtr& field() const { return field_; }
  AlgNum omega_pow(int e) const;
  /// beta_n for n not divisible by N.
  GlElement beta(int n) const;
  /// x^{(mu)}_n, mu taken mod N and nonzero.
  GlElement x(int mu, int n) const;

 private:
  int N_;
  FieldPtr field_;
  AlgNum omega_, omegainv_;
};

/// Principal degree (j - i) + N n when all terms share it, otherwise nullopt.
std::optional<int> principal_degree(const GlElement& x, int N);

/// All brackets among beta_n, x^{(mu)}_n with |n|, |m| <= window against the
/// principal-gradation relations.
CheckRecord verify_principal_relations(int N, int window);

/// Exchange factor of the Cartan exponentials in the splitting of x^{(mu)},
/// built from [beta_n, beta_{-n}] computed with gl_bracket.
LaurentWindow<AlgNum> exchange_factor(int N, int k, int mu, int nu, int order);

/// exchange_factor against g^{mu,nu} coefficientwise.
CheckRecord verify_splitting_consistency(int N, int k, int mu, int nu, int order);

/// Antisymmetry and Jacobi identity on random elements; seeded.
CheckRecord check_bracket_properties(int N, int samples, unsigned seed);

}  // namespace dwa
