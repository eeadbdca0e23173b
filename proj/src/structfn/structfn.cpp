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

#include "structfn/structfn.hpp"

#include "core/reconstruct.hpp"
#include "fock/fock.hpp"
#include "structfn/regular_product.hpp"
#include "wcurrents/wcurrents.hpp"

namespace dwa {

LaurentWindow<AlgNum> g_series(int N, int k, int mu, int nu, int order) {
  if (N < 2 || k < 1) throw std::invalid_argument("g-series needs N >= 2 and k >= 1");
  auto L = LaurentWindow<AlgNum>::univariate("x", 0, order);
  for (int n = 1; n <= order; ++n) {
    if (n % N == 0) continue;
    // omega^{mu n} = eta^{2 mu n}
    AlgNum a = cyc_reduce(N, {{0, Rat(1)}, {2 * mu * n, Rat(-1)}});
    AlgNum b = cyc_reduce(N, {{0, Rat(1)}, {-2 * nu * n, Rat(-1)}});
    L.set(n, AlgNum(Rat(-1, k * n)) * a * b);
  }
  return series_exp(L);
}

namespace {

struct IdentityRun {
  CheckRecord& rec;
  int checked = 0;

  void compare(const char* name, const Json& key, const LaurentWindow<AlgNum>& lhs,
               const LaurentWindow<AlgNum>& rhs) {
    ++checked;
    int top = std::min(lhs.hi(0), rhs.hi(0));
    for (int n = 0; n <= top; ++n) {
      if (!(lhs.coeff(n) == rhs.coeff(n))) {
        Json w = key;
        w["identity"] = name;
        w["coefficient"] = n;
        w["lhs"] = scalar_json(lhs.coeff(n));
        w["rhs"] = scalar_json(rhs.coeff(n));
        rec.fail(std::string("identity ") + name + " fails", w);
        return;
      }
    }
  }
};

}  // namespace

Report check_f_identities(const GenericCtx& c, int order) {
  const int N = c.N;
  CheckRecord rec;
  rec.suite = "f-identities";
  rec.case_key = {{"N", N}, {"q", c.q_point.get_str()}, {"t", c.t_point.get_str()}};
  rec.truncations = {{"x_order", order}};
  IdentityRun run{rec};
  auto f = [&](int i, int j, int shift) { return f_series(c, i, j, order, shift); };
  for (int eps : {1, -1}) {
    // f^{1,j}(p^{+-(i+1)/2} z) f^{i,j}(z) = f^{i+1,j}(p^{+-1/2} z) x {1 or gamma}
    for (int j = 1; j <= N; ++j) {
      for (int i = 0; i + 1 <= N; ++i) {
        auto lhs = f(1, j, eps * (i + 1)) * f(i, j, 0);
        auto rhs = f(i + 1, j, eps);
        if (i >= j) rhs = rhs * gamma_series(c, eps * (i - j + 1), order);
        run.compare("ff=f", {{"i", i}, {"j", j}, {"sign", eps}}, lhs, rhs);
      }
    }
    // f^{1,i}(p^{+-((j-i)/2+k)} z) f^{1,j}(z) = f^{1,i-k}(p^{+-(j-i+k)/2} z) f^{1,j+k}(p^{+-k/2} z)
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        for (int k = 1; i - k >= 1 && j + k <= N; ++k) {
          auto lhs = f(1, i, eps * (j - i + 2 * k)) * f(1, j, 0);
          auto rhs = f(1, i - k, eps * (j - i + k)) * f(1, j + k, eps * k);
          run.compare("ff=ff", {{"i", i}, {"j", j}, {"k", k}, {"sign", eps}}, lhs, rhs);
        }
    // f^{1,i}(p^{+-(j+i)/2} z) f^{1,j}(z) = f^{1,j+i}(p^{+-i/2} z) gamma(p^{+-j/2} z)
    for (int i = 1; i <= N; ++i)
      for (int j = 1; i + j <= N; ++j) {
        auto lhs = f(1, i, eps * (j + i)) * f(1, j, 0);
        auto rhs = f(1, j + i, eps * i) * gamma_series(c, eps * j, order);
        run.compare("ff=fgamma", {{"i", i}, {"j", j}, {"sign", eps}}, lhs, rhs);
      }
  }
  // Regularity of f^{a,b}(p^{-+(j-i)/2}) W^a W^b on the right of the general
  // relation. Single contraction patterns may be singular there; only the
  // sum over patterns has to be regular, so the two-point function at a
  // generic highest weight is rebuilt as a rational function and its
  // denominator evaluated at the point.
  int regular_checked = 0, singular_patterns = 0;
  const auto hw = sample_highest_weight<AlgNum>(N);
  for (int i = 0; i <= N; ++i)
    for (int j = i; j <= N; ++j)
      for (int k = 1; k <= std::min(i, N - j); ++k)
        for (int eps : {1, -1}) {
          int a = i - k, b = j + k, x0 = -eps * (j - i);
          if (a == 0 || b == N) continue;  // one factor is the identity
          for (const auto& S : subsets_of_size(N, a))
            for (const auto& T : subsets_of_size(N, b))
              if (pair_factor(N, a, b, S, T).has_pole_at(x0)) ++singular_patterns;
          ++regular_checked;
          const int ord = 28;
          auto series = f_series(c, a, b, ord) * w_correlator(c, hw, {{a, 0}, {b, 0}}, ord).renamed({"x"});
          auto rf = rational_reconstruct_search(series, 20);
          Json key = {{"i", i}, {"j", j}, {"k", k}, {"sign", eps}};
          if (!rf) {
            rec.status = rec.status == Status::Fail ? Status::Fail : Status::Inconclusive;
            if (rec.message.empty()) rec.message = "two-point function not reconstructed";
            continue;
          }
          if (rf->den.eval(c.s_pow(x0)).is_zero())
            rec.fail("f-scalar on the right of the general relation is singular", key);
        }
  rec.details = {{"identities_checked", run.checked}, {"regularity_points_checked", regular_checked},
                 {"individually_singular_patterns", singular_patterns}};
  Report r;
  r.add(std::move(rec));
  return r;
}

}  // namespace dwa
