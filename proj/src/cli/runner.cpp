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

#include "cli/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

#include "characters/characters.hpp"
#include "limits/limits.hpp"
#include "relations/relations.hpp"
#include "structfn/structfn.hpp"
#include "zalg/zalg.hpp"
#include "zeta/zeta.hpp"

namespace dwa {

namespace {

Report single(CheckRecord r) {
  Report out;
  out.add(std::move(r));
  return out;
}

Json point_key(int N, const Rat& q, const Rat& t) { return {{"N", N}, {"q", q.get_str()}, {"t", t.get_str()}}; }

void plan_relations(const RunConfig& c, std::vector<Task>& out) {
  for (int N : c.N_for("relations"))
    for (const auto& [q, t] : c.generic_points()) {
      const auto w = c.window;
      auto ctx = [N, q = q, t = t] { return make_generic_ctx(N, q, t); };
      auto hw = [N] { return sample_highest_weight<AlgNum>(N); };
      for (int j = 1; j <= N; ++j)
        out.push_back({"relations", point_key(N, q, t), [=] { return single(verify_w1wj(ctx(), j, w, hw())); }});
      for (int j = 2; j <= N; ++j) {
        out.push_back({"relations", point_key(N, q, t), [=] { return single(verify_w2wj(ctx(), j, w, hw())); }});
        out.push_back({"relations", point_key(N, q, t), [=] { return single(verify_cross_engine(ctx(), j, w, hw())); }});
      }
      for (int i = 0; i <= N; ++i)
        for (int j = i; j <= N; ++j)
          out.push_back({"relations", point_key(N, q, t), [=] { return single(verify_wiwj(ctx(), i, j, w, hw())); }});
    }
}

void plan_f_identities(const RunConfig& c, std::vector<Task>& out) {
  for (int N : c.N_for("f-identities"))
    for (const auto& [q, t] : c.generic_points()) {
      const int order = c.x_order;
      out.push_back({"f-identities", point_key(N, q, t),
                     [=, q = q, t = t] { return check_f_identities(make_generic_ctx(N, q, t), order); }});
    }
}

void plan_poles(const RunConfig& c, std::vector<Task>& out) {
  for (int N : c.N_for("poles"))
    for (const auto& [q, t] : c.generic_points())
      for (int i = 1; i <= N; ++i)
        for (int j = i; j <= N; ++j) {
          const int order = c.pole_order;
          out.push_back({"poles", point_key(N, q, t), [=, q = q, t = t] {
                           return single(verify_poles(make_generic_ctx(N, q, t), i, j, order, sample_highest_weight<AlgNum>(N)));
                         }});
        }
}

void plan_fusion(const RunConfig& c, std::vector<Task>& out) {
  for (int N : c.N_for("fusion"))
    for (const auto& [q, t] : c.generic_points()) {
      const auto w = c.window;
      auto go = [=, q = q, t = t](FusionKind kind, int i, int j, int sign) {
        return single(verify_fusion(make_generic_ctx(N, q, t), kind, i, j, sign, w, sample_highest_weight<AlgNum>(N)));
      };
      for (int sign : {1, -1}) {
        for (int j = 1; j <= N; ++j)
          out.push_back({"fusion", point_key(N, q, t), [=] { return go(FusionKind::W1Wj, 1, j, sign); }});
        for (int i = 0; i <= N; ++i)
          for (int j = i; j <= N; ++j)
            out.push_back({"fusion", point_key(N, q, t), [=] { return go(FusionKind::WiWj, i, j, sign); }});
      }
    }
}

void plan_limit1(const RunConfig& c, std::vector<Task>& out) {
  for (int N : c.N_for("limit1"))
    for (const Rat& beta : c.beta_for("limit1", N)) {
      const int window = c.window.mode, order = c.hbar_order;
      out.push_back({"limit1", {{"N", N}, {"beta", beta.get_str()}},
                     [=] { return single(verify_limit_I_binomials(beta, N, window, order)); }});
    }
}

void plan_limit2(const RunConfig& c, std::vector<Task>& out) {
  for (int N : c.N_for("limit2"))
    for (int k : c.k_for("limit2")) {
      const int ox = c.x_order, cx = c.correlator_x_order;
      for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j)
          out.push_back({"limit2", {{"N", N}, {"k", k}}, [=] { return single(verify_limit_II_relation(N, k, i, j, ox)); }});
      for (int n = 2; n <= c.correlator_points; ++n)
        out.push_back({"limit2", {{"N", N}, {"k", k}}, [=] { return single(verify_correlator_order(N, k, n, cx)); }});
    }
}

void plan_zalgebra(const RunConfig& c, std::vector<Task>& out) {
  for (int N : c.N_for("zalgebra")) {
    const int samples = c.property_samples, order = c.x_order;
    out.push_back({"zalgebra", {{"N", N}}, [=] { return single(verify_principal_relations(N, 2 * N + 1)); }});
    out.push_back({"zalgebra", {{"N", N}}, [=] { return single(check_bracket_properties(N, samples, 11u + N)); }});
    for (int k : c.k_for("zalgebra"))
      for (int mu = 1; mu < N; ++mu)
        for (int nu = 1; nu < N; ++nu)
          out.push_back({"zalgebra", {{"N", N}, {"k", k}},
                         [=] { return single(verify_splitting_consistency(N, k, mu, nu, order)); }});
  }
}

void plan_characters(const RunConfig& c, std::vector<Task>& out) {
  for (int k : c.k_for("characters")) {
    if (k < 2) continue;
    const Rat cutoff(c.q_cutoff);
    for (int twoj = -k; twoj <= k; twoj += 2)
      out.push_back({"characters", {{"k", k}}, [=] { return single(verify_char_identity(k, Rat(twoj, 2), cutoff)); }});
  }
}

void plan_zeta(const RunConfig& c, std::vector<Task>& out) {
  const int M = c.zeta_M;
  out.push_back({"zeta", Json::object(), [=] { return single(verify_zeta_values(M)); }});
  out.push_back({"zeta", Json::object(), [=] { return single(verify_log_sinh(M)); }});
  for (int N : c.N_for("zeta")) {
    for (const Rat& beta : c.beta_for("zeta", N))
      for (int i = 1; i < N; ++i)
        out.push_back({"zeta", {{"N", N}, {"i", i}, {"beta", beta.get_str()}},
                       [=] { return single(verify_zeta_identity(N, i, beta, M)); }});
    for (const auto& [q, t] : c.generic_points())
      for (int i = 0; i <= N; ++i)
        out.push_back({"zeta", point_key(N, q, t),
                       [=, q = q, t = t] { return single(verify_vacuum_eigenvalue(make_generic_ctx(N, q, t), i)); }});
  }
}

std::string sort_key(const CheckRecord& r) { return r.suite + '\x1f' + r.case_key.dump(); }

/// Case key without the evaluation point.
Json point_free(const Json& key) {
  Json k = key;
  k.erase("q");
  k.erase("t");
  return k;
}

/// Details that must not depend on the generic point: counts, flags and string lists.
Json comparable_details(const Json& d) {
  Json out = Json::object();
  for (const auto& [k, v] : d.items()) {
    bool keep = v.is_number_integer() || v.is_boolean();
    if (v.is_array()) keep = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_string() || x.is_number_integer(); });
    if (v.is_object()) keep = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_number_integer(); });
    if (keep) out[k] = v;
  }
  return out;
}

}  // namespace

std::vector<Task> plan_tasks(const RunConfig& c) {
  validate(c);
  std::vector<Task> out;
  for (const auto& s : c.suites) {
    if (s == "relations") plan_relations(c, out);
    else if (s == "f-identities") plan_f_identities(c, out);
    else if (s == "poles") plan_poles(c, out);
    else if (s == "fusion") plan_fusion(c, out);
    else if (s == "limit1") plan_limit1(c, out);
    else if (s == "limit2") plan_limit2(c, out);
    else if (s == "zalgebra") plan_zalgebra(c, out);
    else if (s == "characters") plan_characters(c, out);
    else if (s == "zeta") plan_zeta(c, out);
  }
  return out;
}

Report run_tasks(const std::vector<Task>& tasks, int threads) {
  std::vector<Report> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        slots[i] = tasks[i].run();
      } catch (const std::exception& e) {
        CheckRecord r;
        r.suite = tasks[i].suite;
        r.case_key = tasks[i].key;
        r.case_key["task"] = i;
        r.fail(std::string("exception: ") + e.what());
        slots[i].add(std::move(r));
      }
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      for (auto& r : slots[i].records)
        if (r.seconds == 0.0) r.seconds = secs / slots[i].records.size();
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < n; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  Report out;
  for (auto& s : slots) out.append(s);
  return out;
}

Report merge_report(Report r) {
  std::stable_sort(r.records.begin(), r.records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return sort_key(a) < sort_key(b); });
  std::map<std::string, std::vector<const CheckRecord*>> groups;
  for (const auto& rec : r.records)
    if (rec.case_key.is_object() && rec.case_key.contains("q") && rec.case_key.contains("t"))
      groups[rec.suite + '\x1f' + point_free(rec.case_key).dump()].push_back(&rec);
  Report extra;
  for (const auto& [_, recs] : groups) {
    if (recs.size() < 2) continue;
    CheckRecord pi;
    pi.suite = recs.front()->suite + ".point_independence";
    pi.case_key = point_free(recs.front()->case_key);
    Json pts = Json::array();
    const Json ref = comparable_details(recs.front()->details);
    for (const auto* rec : recs) {
      pts.push_back({{"q", rec->case_key["q"]}, {"t", rec->case_key["t"]}, {"status", to_string(rec->status)}});
      if (rec->status != recs.front()->status)
        pi.fail("status differs between generic points", {{"q", rec->case_key["q"]}, {"t", rec->case_key["t"]}});
      else if (comparable_details(rec->details) != ref)
        pi.fail("point-free details differ between generic points",
                {{"q", rec->case_key["q"]}, {"t", rec->case_key["t"]}, {"details", comparable_details(rec->details)}, {"reference", ref}});
    }
    if (pi.passed() && recs.front()->status != Status::Pass) pi.status = recs.front()->status;
    pi.details = {{"points", pts}};
    extra.add(std::move(pi));
  }
  r.append(extra);
  std::stable_sort(r.records.begin(), r.records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return sort_key(a) < sort_key(b); });
  return r;
}

Json RunResult::to_json(bool include_timing) const {
  Json doc = report.to_json(include_timing);
  Json out;
  out["schema"] = kReportSchema;
  out["config"] = config;
  out["records"] = std::move(doc["records"]);
  out["summary"] = std::move(doc["summary"]);
  if (include_timing) out["threads"] = threads;
  return out;
}

std::string RunResult::summary() const {
  struct Counts {
    std::size_t pass = 0, fail = 0, inconclusive = 0;
  };
  std::map<std::string, Counts> by_suite;
  for (const auto& r : report.records) {
    auto& c = by_suite[r.suite];
    (r.status == Status::Pass ? c.pass : r.status == Status::Fail ? c.fail : c.inconclusive)++;
  }
  std::ostringstream os;
  for (const auto& [s, c] : by_suite) {
    os << s << ": " << c.pass << " pass";
    if (c.fail) os << ", " << c.fail << " fail";
    if (c.inconclusive) os << ", " << c.inconclusive << " inconclusive";
    os << '\n';
  }
  for (const auto& r : report.records)
    if (r.status != Status::Pass) os << "  " << to_string(r.status) << " " << r.suite << " " << r.case_key.dump() << ": " << r.message << '\n';
  os << "total: " << report.count(Status::Pass) << " pass, " << report.count(Status::Fail) << " fail, "
     << report.count(Status::Inconclusive) << " inconclusive\n";
  return os.str();
}

RunResult run(const RunConfig& c) {
  RunResult out;
  out.config = c.to_json();
  out.threads = effective_threads(c);
  out.report = merge_report(run_tasks(plan_tasks(c), out.threads));
  return out;
}

}  // namespace dwa
