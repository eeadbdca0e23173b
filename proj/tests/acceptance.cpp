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

// Acceptance run: one PASS/FAIL line per criterion, all checks exact.
// Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "characters/characters.hpp"
#include "cli/config.hpp"
#include "cli/runner.hpp"
#include "core/properties.hpp"
#include "limits/limits.hpp"
#include "relations/relations.hpp"
#include "structfn/structfn.hpp"
#include "zalg/zalg.hpp"
#include "zeta/zeta.hpp"

using namespace dwa;

namespace {

// Records from the generic-point criteria, reused by the point-independence check.
Report g_generic;

struct Outcome {
  bool ok = true;
  std::size_t cases = 0;
  std::string note;

  void take(const CheckRecord& r) {
    ++cases;
    if (r.status != Status::Pass && ok) {
      ok = false;
      note = r.suite + " " + r.case_key.dump() + ": " + (r.message.empty() ? to_string(r.status) : r.message);
    }
  }
  void take(const Report& rep) {
    for (const auto& r : rep.records) take(r);
  }
  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      note = why;
    }
  }
};

void keep(Outcome& o, const CheckRecord& r) {
  o.take(r);
  g_generic.add(r);
}

template <class F>
void at_points(int N, F&& f) {
  for (const auto& [q, t] : default_generic_points()) f(make_generic_ctx(N, q, t));
}

Outcome c1() {
  Outcome o;
  for (int N = 2; N <= 4; ++N)
    at_points(N, [&](const GenericCtx& c) {
      for (int j = 1; j <= N; ++j) keep(o, verify_w1wj(c, j, RelationWindow{3, 3}, sample_highest_weight<AlgNum>(N)));
    });
  return o;
}

Outcome c2() {
  Outcome o;
  for (int N = 3; N <= 4; ++N)
    at_points(N, [&](const GenericCtx& c) {
      for (int j = 2; j <= N; ++j) keep(o, verify_w2wj(c, j, RelationWindow{2, 2}, sample_highest_weight<AlgNum>(N)));
    });
  return o;
}

Outcome c3() {
  Outcome o;
  int max_active = 0;
  for (int N = 3; N <= 4; ++N)
    at_points(N, [&](const GenericCtx& c) {
      for (int i = 0; i <= N; ++i)
        for (int j = i; j <= N; ++j) {
          auto r = verify_wiwj(c, i, j, RelationWindow{2, 2}, sample_highest_weight<AlgNum>(N));
          if (N == 4 && i == 2 && j == 2) max_active = std::max(max_active, r.details.value("active_k_terms", 0));
          keep(o, r);
        }
    });
  o.require(max_active >= 2, "N=4, i=j=2 did not exercise two active k-terms");
  return o;
}

Outcome c4() {
  Outcome o;
  at_points(3, [&](const GenericCtx& c) { keep(o, verify_cross_engine(c, 2, RelationWindow{2, 2}, sample_highest_weight<AlgNum>(3))); });
  return o;
}

Outcome c5() {
  Outcome o;
  for (int N = 2; N <= 4; ++N)
    at_points(N, [&](const GenericCtx& c) {
      for (const auto& r : check_f_identities(c, 12).records) keep(o, r);
    });
  return o;
}

Outcome c6() {
  Outcome o;
  for (int N = 2; N <= 3; ++N)
    at_points(N, [&](const GenericCtx& c) {
      auto hw = sample_highest_weight<AlgNum>(N);
      for (int sign : {1, -1}) {
        for (int j = 1; j <= N; ++j) keep(o, verify_fusion(c, FusionKind::W1Wj, 1, j, sign, RelationWindow{2, 2}, hw));
        for (int i = 0; i <= N; ++i)
          for (int j = i; j <= N; ++j) keep(o, verify_fusion(c, FusionKind::WiWj, i, j, sign, RelationWindow{2, 2}, hw));
      }
    });
  return o;
}

Outcome c7() {
  Outcome o;
  for (int N = 2; N <= 3; ++N)
    at_points(N, [&](const GenericCtx& c) {
      for (auto [i, j] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
        if (j > N) continue;
        auto r = verify_poles(c, i, j, 24, sample_highest_weight<AlgNum>(N));
        o.require(r.details.value("grade", "") == "reconstructed", "pole record is not graded reconstructed");
        keep(o, r);
      }
    });
  return o;
}

Outcome c8() {
  Outcome o;
  for (auto [N, k] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 1}, std::pair{3, 2}})
    for (int i = 1; i < N; ++i)
      for (int j = 1; j < N; ++j) o.take(verify_limit_II_relation(N, k, i, j, 12));
  return o;
}

Outcome c9() {
  Outcome o;
  for (auto [N, k] : {std::pair{2, 2}, std::pair{3, 2}})
    for (int n = 1; n <= 4; ++n) o.take(verify_correlator_order(N, k, n, 8));
  return o;
}

Outcome c10() {
  Outcome o;
  for (int N = 2; N <= 5; ++N)
    for (Rat beta : {Rat(N + 1, N), Rat(N, N + 1)}) o.take(verify_limit_I_binomials(beta, N, 2, 7));
  return o;
}

Outcome c11() {
  Outcome o;
  for (int N = 2; N <= 4; ++N) o.take(verify_principal_relations(N, 2 * N + 1));
  return o;
}

Outcome c12() {
  Outcome o;
  for (auto [N, k] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}, std::pair{3, 2}})
    for (int mu = 1; mu < N; ++mu)
      for (int nu = 1; nu < N; ++nu) o.take(verify_splitting_consistency(N, k, mu, nu, 12));
  return o;
}

Outcome c13() {
  Outcome o;
  for (int k = 2; k <= 4; ++k)
    for (int twoj = -k; twoj <= k; twoj += 2) o.take(verify_char_identity(k, Rat(twoj, 2), Rat(20)));
  return o;
}

Outcome c14() {
  Outcome o;
  for (int N = 2; N <= 5; ++N)
    for (int i = 1; i < N; ++i)
      for (Rat beta : {Rat(N + 1, N), Rat(N, N + 1)}) o.take(verify_zeta_identity(N, i, beta, 6));
  o.take(verify_zeta_values(6));
  o.take(verify_log_sinh(6));
  o.require(zeta_negative_odd(1) == Rat(-1, 12), "zeta(-1) is not -1/12");
  return o;
}

Outcome c15() {
  Outcome o;
  for (int N = 2; N <= 5; ++N)
    at_points(N, [&](const GenericCtx& c) {
      for (int i = 0; i <= N; ++i) keep(o, verify_vacuum_eigenvalue(c, i));
    });
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome c16() {
  Outcome o;
  // Tail vanishing: every relation record checked its extended mode sums.
  long tails = 0;
  for (const auto& r : g_generic.records)
    if (r.suite.rfind("relations.", 0) == 0) {
      o.take(r);
      tails += r.details.value("tail_terms_checked", 0L);
    }
  o.require(tails > 0, "no tail terms were checked");
  // Point independence across the two generic points.
  std::size_t pi = 0;
  for (const auto& r : merge_report(g_generic).records)
    if (r.suite.size() > 19 && r.suite.compare(r.suite.size() - 19, 19, ".point_independence") == 0) {
      ++pi;
      o.take(r);
    }
  o.require(pi > 0, "no point-independence records");
  // Jacobi identity and the other bracket properties.
  for (int N = 2; N <= 4; ++N) o.take(check_bracket_properties(N, 150, 11u + N));
  // Window exactness of truncated products.
  o.take(check_window_products(300, 17u));
  // Byte-identical reports across two runs with different thread counts.
  RunConfig cfg = parse_config(read_file(DWA_SOURCE_DIR "/configs/default.yaml"));
  cfg.threads = 1;
  std::string a = run(cfg).to_json().dump(2);
  cfg.threads = 2;
  std::string b = run(cfg).to_json().dump(2);
  o.require(a == b, "reports differ between two identical runs");
  o.require(a.find("\"seconds\"") == std::string::npos, "timing leaked into the default report");
  o.note = o.ok ? std::to_string(tails) + " tail terms, " + std::to_string(pi) + " point-independence records, " +
                      std::to_string(a.size()) + "-byte report reproduced"
                : o.note;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"W^1 W^j relations, N=2..4, window 3, level 3, two points", c1},
      {"W^2 W^j relations, N=3,4, window 2, level 2", c2},
      {"W^i W^j relations, N=3,4, 0<=i<=j<=N, two active k-terms at N=4", c3},
      {"cross-engine route for (i,j)=(2,2), N=3", c4},
      {"structure function identities to order 12, N=2..4", c5},
      {"fusion at both poles, N=2,3", c6},
      {"pole sets from reconstructed rational functions", c7},
      {"root-of-unity limit reduces to the Z-algebra relation", c8},
      {"correlator hbar order for n<=4", c9},
      {"conformal limit: p-binomials = binomials + O(hbar^2)", c10},
      {"principal gradation relations, window 2N+1", c11},
      {"Cartan splitting factor matches g to order 12", c12},
      {"character identity, k=2..4, cutoff y^20", c13},
      {"zeta-regularized identity to hbar^12, zeta(-1), log sinh", c14},
      {"vacuum eigenvalues equal p-binomials, N<=5", c15},
      {"tails, point independence, Jacobi, windows, determinism", c16},
  };
  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.ok;
    std::printf("%s %2zu  %s  [%zu cases, %.1fs]%s%s\n", o.ok ? "PASS" : "FAIL", n + 1, criteria[n].first.c_str(), o.cases,
                secs, o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
