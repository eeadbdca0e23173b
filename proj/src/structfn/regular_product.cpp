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

#include "structfn/regular_product.hpp"

#include <algorithm>
#include <sstream>

namespace dwa {

void LinearFactorProduct::mul_linear(Kind kind, int e, int c) {
  if (c == 0) return;
  auto key = std::make_pair(static_cast<int>(kind), e);
  int& m = mult_[key];
  m += c;
  if (m == 0) mult_.erase(key);
}

void LinearFactorProduct::mul_gamma(int e, int c) {
  mul_linear(kQ, e, c);
  mul_linear(kTinv, e, c);
  mul_linear(kOne, e, -c);
  mul_linear(kOne, e + 2, -c);
}

std::string LinearFactorProduct::to_string() const {
  std::ostringstream out;
  const char* names[] = {"q", "t^-1", "1"};
  bool first = true;
  for (const auto& [key, m] : mult_) {
    if (!first) out << " ";
    first = false;
    out << "(1-" << names[key.first] << "*s^" << key.second << "*x)^" << m;
  }
  return first ? "1" : out.str();
}

namespace {

void add_term(IntLaurent& p, int e, long long c) {
  if (c == 0) return;
  long long& v = p[e];
  v += c;
  if (v == 0) p.erase(e);
}

IntLaurent mul(const IntLaurent& a, const IntLaurent& b) {
  IntLaurent r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_term(r, ea + eb, ca * cb);
  return r;
}

IntLaurent binom1(int e) {  // 1 - sigma^e
  IntLaurent r;
  add_term(r, 0, 1);
  add_term(r, e, -1);
  return r;
}

IntLaurent mono(int e, long long c = 1) {
  IntLaurent r;
  add_term(r, e, c);
  return r;
}

/// Exact division by a polynomial with constant term 1; throws when the
/// quotient is not a Laurent polynomial.
IntLaurent exact_div(IntLaurent a, const IntLaurent& d) {
  IntLaurent q;
  if (a.empty()) return q;
  const int ddeg = d.rbegin()->first;
  const int lo = a.begin()->first, hi = a.rbegin()->first;
  for (int e = lo; e <= hi - ddeg; ++e) {
    auto it = a.find(e);
    if (it == a.end()) continue;
    long long c = it->second;
    add_term(q, e, c);
    for (const auto& [de, dc] : d) add_term(a, e + de, -c * dc);
  }
  if (!a.empty()) throw std::logic_error("pair exponent is not a Laurent polynomial");
  return q;
}

}  // namespace

IntLaurent pair_exponent_polynomial(int N, int a, int b, const std::vector<int>& S, const std::vector<int>& T) {
  if (static_cast<int>(S.size()) != a || static_cast<int>(T.size()) != b)
    throw std::invalid_argument("leg sets do not match the ranks");
  // Everything is multiplied by D = (1 - sigma^2)(1 - sigma^{2N}) first.
  IntLaurent D = mul(binom1(2), binom1(2 * N));
  IntLaurent num;
  const int m = std::min(a, b), M = std::max(a, b), d = std::abs(a - b);
  if (m > 0 && M < N) num = mul(mul(binom1(2 * m), binom1(2 * (N - M))), mono(d));
  for (int alpha = 1; alpha <= a; ++alpha) {
    for (int beta = 1; beta <= b; ++beta) {
      int s = S[alpha - 1], t = T[beta - 1];
      int delta = s == t ? 1 : 0;
      int theta = s < t ? 1 : 0;
      int shift = (b - a) + 2 * alpha - 2 * beta;
      IntLaurent term = mul(mul(binom1(2), binom1(2 * (N * delta - 1))), mono(2 * N * theta + shift));
      for (const auto& [e, c] : term) add_term(num, e, -c);
    }
  }
  return exact_div(num, D);
}

LinearFactorProduct pair_factor(int N, int a, int b, const std::vector<int>& S, const std::vector<int>& T) {
  LinearFactorProduct r;
  for (const auto& [e, c] : pair_exponent_polynomial(N, a, b, S, T)) r.mul_gamma(e, static_cast<int>(c));
  return r;
}

std::vector<std::vector<int>> subsets_of_size(int N, int a) {
  std::vector<std::vector<int>> out;
  if (a < 0 || a > N) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == a) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= N; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace dwa
