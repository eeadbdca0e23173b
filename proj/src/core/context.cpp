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

#include "core/context.hpp"

namespace dwa {

const char* to_string(ScalarMode m) {
  switch (m) {
    case ScalarMode::Generic: return "generic";
    case ScalarMode::LimitI: return "limit-I";
    case ScalarMode::LimitII: return "limit-II";
  }
  return "?";
}

namespace {

void check_N(int N) {
  if (N < 2) throw std::invalid_argument("N must be at least 2");
}

bool degenerate(const Rat& x) { return x == 0 || x == 1 || x == -1; }

}  // namespace

GenericCtx make_generic_ctx(int N, const Rat& q, const Rat& t, int check_bound) {
  check_N(N);
  if (degenerate(q) || degenerate(t)) throw std::invalid_argument("q and t must avoid 0 and +-1");
  Rat p = q / t;
  if (degenerate(p)) throw std::invalid_argument("p = q/t must avoid 0 and +-1");
  for (int M = 1; M <= N; ++M)
    for (int n = 1; n <= check_bound; ++n)
      if (rat_pow(p, static_cast<long>(M) * n) == 1)
        throw std::invalid_argument("degenerate point: 1 - p^(Mn) vanishes");
  GenericCtx c;
  c.N = N;
  c.mode = ScalarMode::Generic;
  c.field = NumberField::quadratic(p, "s");
  c.q = AlgNum(q);
  c.qinv = AlgNum(Rat(1) / q);
  c.t = AlgNum(t);
  c.tinv = AlgNum(Rat(1) / t);
  c.p = AlgNum(p);
  c.pinv = AlgNum(Rat(1) / p);
  c.s = AlgNum::generator(c.field);
  c.sinv = c.s.inverse();
  c.q_point = q;
  c.t_point = t;
  c.build_tables(8 * N + 24);
  return c;
}

GenericCtx make_generic_ctx_resampled(int N, const Rat& q, const Rat& t, int check_bound) {
  Rat qq = q, tt = t;
  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      return make_generic_ctx(N, qq, tt, check_bound);
    } catch (const std::invalid_argument&) {
      qq = qq + Rat(1, 7);
      tt = tt + Rat(1, 11);
    }
  }
  throw std::invalid_argument("no non-degenerate generic point found");
}

HbarCtx make_limit_one_ctx(int N, const Rat& beta, int hbar_order) {
  check_N(N);
  if (hbar_order < 1) throw std::invalid_argument("hbar order must be positive");
  HbarCtx c;
  c.N = N;
  c.mode = ScalarMode::LimitI;
  c.hbar_order = hbar_order;
  c.beta = beta;
  const int T = hbar_order;
  c.q = HbarSeries::exp_linear(AlgNum(1), T);
  c.qinv = HbarSeries::exp_linear(AlgNum(-1), T);
  c.t = HbarSeries::exp_linear(AlgNum(beta), T);
  c.tinv = HbarSeries::exp_linear(AlgNum(Rat(-beta)), T);
  c.p = HbarSeries::exp_linear(AlgNum(Rat(1 - beta)), T);
  c.pinv = HbarSeries::exp_linear(AlgNum(Rat(beta - 1)), T);
  c.s = HbarSeries::exp_linear(AlgNum(Rat((1 - beta) / 2)), T);
  c.sinv = HbarSeries::exp_linear(AlgNum(Rat((beta - 1) / 2)), T);
  c.build_tables(4 * N + 16);
  return c;
}

HbarCtx make_limit_two_ctx(int N, int k, int hbar_order) {
  check_N(N);
  if (k < 1) throw std::invalid_argument("level k must be positive");
  if (hbar_order < 1) throw std::invalid_argument("hbar order must be positive");
  HbarCtx c;
  c.N = N;
  c.mode = ScalarMode::LimitII;
  c.hbar_order = hbar_order;
  c.level = k;
  c.field = NumberField::cyclotomic(2 * N);
  const int T = hbar_order;
  AlgNum eta = AlgNum::generator(c.field);
  AlgNum etainv = eta.inverse();
  AlgNum omega = eta * eta, omegainv = etainv * etainv;
  Rat kN(k, N), k2N(k, 2 * N), kNN(k + N, N);
  kN.canonicalize();
  k2N.canonicalize();
  kNN.canonicalize();
  c.q = HbarSeries::exp_linear(AlgNum(1), T);
  c.qinv = HbarSeries::exp_linear(AlgNum(-1), T);
  c.t = HbarSeries(omegainv) * HbarSeries::exp_linear(AlgNum(kNN), T);
  c.tinv = HbarSeries(omega) * HbarSeries::exp_linear(AlgNum(Rat(-kNN)), T);
  c.p = HbarSeries(omega) * HbarSeries::exp_linear(AlgNum(Rat(-kN)), T);
  c.pinv = HbarSeries(omegainv) * HbarSeries::exp_linear(AlgNum(kN), T);
  c.s = HbarSeries(eta) * HbarSeries::exp_linear(AlgNum(Rat(-k2N)), T);
  c.sinv = HbarSeries(etainv) * HbarSeries::exp_linear(AlgNum(k2N), T);
  c.build_tables(4 * N + 16);
  return c;
}

std::vector<std::pair<Rat, Rat>> default_generic_points() {
  return {{Rat(3, 2), Rat(5, 3)}, {Rat(2, 7), Rat(3, 5)}};
}

}  // namespace dwa
