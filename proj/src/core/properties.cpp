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

#include "core/properties.hpp"

#include <map>
#include <random>

#include "core/series.hpp"

namespace dwa {

namespace {

using Exps = std::vector<int>;

struct TrueSeries {
  Exps lo;
  std::map<Exps, Rat> terms;
};

TrueSeries random_true_series(std::mt19937_64& g, int nvars, int span) {
  std::uniform_int_distribution<int> lo_d(-3, 2), num(-6, 6), den(1, 4), keep(0, 2);
  TrueSeries t;
  for (int v = 0; v < nvars; ++v) t.lo.push_back(lo_d(g));
  Exps e = t.lo;
  while (true) {
    if (keep(g) != 0) {
      Rat c(num(g), den(g));
      c.canonicalize();
      if (c != 0) t.terms[e] = c;
    }
    int v = nvars - 1;
    while (v >= 0 && ++e[v] > t.lo[v] + span) e[v] = t.lo[v], --v;
    if (v < 0) break;
  }
  return t;
}

LaurentWindow<Rat> cut(const TrueSeries& t, const std::vector<std::string>& vars, const Exps& hi) {
  LaurentWindow<Rat> w(vars, t.lo, hi);
  for (const auto& [e, c] : t.terms)
    if (w.in_window(e)) w.set(e, c);
  return w;
}

}  // namespace

CheckRecord check_window_products(int samples, unsigned seed) {
  CheckRecord rec;
  rec.suite = "core.window_products";
  rec.case_key = {{"samples", samples}, {"seed", seed}};
  std::mt19937_64 g(seed);
  std::uniform_int_distribution<int> nv(1, 2), width(0, 5);
  const int span = 12;
  long coefficients = 0;
  for (int s = 0; s < samples && rec.passed(); ++s) {
    const int n = nv(g);
    std::vector<std::string> vars = n == 1 ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "y"};
    TrueSeries ta = random_true_series(g, n, span), tb = random_true_series(g, n, span);
    Exps ha, hb;
    for (int v = 0; v < n; ++v) {
      ha.push_back(ta.lo[v] + width(g));
      hb.push_back(tb.lo[v] + width(g));
    }
    auto prod = cut(ta, vars, ha) * cut(tb, vars, hb);
    prod.for_each([&](const Exps& e, const Rat& c) {
      Rat brute(0);
      for (const auto& [ea, va] : ta.terms) {
        Exps eb(n);
        for (int v = 0; v < n; ++v) eb[v] = e[v] - ea[v];
        auto it = tb.terms.find(eb);
        if (it != tb.terms.end()) brute += va * it->second;
      }
      ++coefficients;
      if (c != brute) rec.fail("retained product coefficient differs from the full convolution", {{"sample", s}, {"exponent", e}});
    });
  }
  rec.details = {{"coefficients_checked", coefficients}};
  return rec;
}

}  // namespace dwa
