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

#include "core/rat.hpp"

#include <stdexcept>

namespace dwa {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
  };
  std::string num = s.substr(0, slash);
  check_int(num);
  if (num[0] == '+') num.erase(0, 1);
  Rat r;
  if (slash == std::string::npos) {
    r = Rat(mpz_class(num));
  } else {
    std::string den = s.substr(slash + 1);
    check_int(den);
    if (den[0] == '+') den.erase(0, 1);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + s + "'");
    r = Rat(mpz_class(num), d);
    r.canonicalize();
  }
  return r;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

Rat rat_pow(const Rat& x, long e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("negative power of zero");
    return rat_pow(Rat(1) / x, -e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rat r(n, d);
  r.canonicalize();
  return r;
}

bool rat_is_square(const Rat& x, Rat* root) {
  if (x < 0) return false;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
    return false;
  if (root) {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    *root = Rat(n, d);
    root->canonicalize();
  }
  return true;
}

Rat factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

Rat binomial(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(b);
}

}  // namespace dwa
