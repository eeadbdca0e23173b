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

#include "cli/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "core/context.hpp"

namespace dwa {

namespace {

// Upper limits for a single run. Beyond these the Fock spaces and series
// windows grow past what a desk-scale run finishes in.
constexpr int kMaxMode = 4;
constexpr int kMaxLevel = 4;
constexpr int kMaxN = 6;
constexpr int kMaxXOrder = 40;
constexpr int kMaxHbarOrder = 16;
constexpr int kMaxPoleOrder = 48;
constexpr int kMaxCutoff = 200;
constexpr int kMaxZetaM = 20;
constexpr int kMaxCorrelator = 6;

const std::map<std::string, std::string>& suite_table() {
  static const std::map<std::string, std::string> t = {
      {"relations", "quadratic relations of the currents (W^1 W^j, W^2 W^j, general W^i W^j) and the cross-engine route"},
      {"f-identities", "structure function product identities and regularity of f^{a,b} at the fusion points"},
      {"poles", "pole set of the two-point function from a reconstructed rational function"},
      {"fusion", "fusion of currents at the poles of the structure function"},
      {"limit1", "conformal limit: zero-mode eigenvalues against p-binomials and the two-point order"},
      {"limit2", "root-of-unity limit: reduction of the relations to the Z-algebra, correlator hbar order"},
      {"zalgebra", "principal gradation of the loop algebra and the Cartan splitting factor"},
      {"characters", "character formula against shifted Rocha-Caridi series"},
      {"zeta", "Bernoulli numbers, zeta-regularized identity and vacuum eigenvalues"},
  };
  return t;
}

Rat parse_rat(const YAML::Node& n) {
  try {
    Rat r(n.as<std::string>());
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ConfigError("not a rational number: " + n.as<std::string>());
  }
}

/// Accepts a list, a scalar, or a "lo..hi" range string.
std::vector<int> int_list(const YAML::Node& n, const std::string& key) {
  std::vector<int> out;
  auto one = [&](const YAML::Node& x) {
    auto s = x.as<std::string>();
    auto dots = s.find("..");
    if (dots != std::string::npos) {
      int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
      if (hi < lo) throw ConfigError(key + ": empty range " + s);
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(x.as<int>());
    }
  };
  try {
    if (n.IsSequence())
      for (const auto& x : n) one(x);
    else
      one(n);
  } catch (const YAML::Exception&) {
    throw ConfigError(key + ": expected integers");
  } catch (const std::logic_error&) {
    throw ConfigError(key + ": expected integers");
  }
  return out;
}

std::vector<Rat> rat_list(const YAML::Node& n) {
  std::vector<Rat> out;
  if (n.IsSequence())
    for (const auto& x : n) out.push_back(parse_rat(x));
  else
    out.push_back(parse_rat(n));
  return out;
}

int get_int(const YAML::Node& n, const std::string& key) {
  try {
    return n.as<int>();
  } catch (const YAML::Exception&) {
    throw ConfigError(key + ": expected an integer");
  }
}

void read_params(const YAML::Node& n, SuiteParams& p) {
  if (n["N"]) p.N = int_list(n["N"], "N");
  if (n["k"]) p.k = int_list(n["k"], "k");
  if (n["beta"]) p.beta = rat_list(n["beta"]);
}

const SuiteParams* find_override(const RunConfig& c, const std::string& suite) {
  for (const auto& [name, p] : c.overrides)
    if (name == suite) return &p;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : suite_table()) v.push_back(k);
    return v;
  }();
  return names;
}

std::string suite_description(const std::string& suite) {
  auto it = suite_table().find(suite);
  if (it == suite_table().end()) throw ConfigError("unknown suite: " + suite);
  return it->second;
}

const std::vector<int>& RunConfig::N_for(const std::string& suite) const {
  if (auto* p = find_override(*this, suite); p && !p->N.empty()) return p->N;
  return N;
}

const std::vector<int>& RunConfig::k_for(const std::string& suite) const {
  if (auto* p = find_override(*this, suite); p && !p->k.empty()) return p->k;
  return k;
}

std::vector<Rat> RunConfig::beta_for(const std::string& suite, int n) const {
  if (auto* p = find_override(*this, suite); p && !p->beta.empty()) return p->beta;
  if (!beta.empty()) return beta;
  return {Rat(n + 1, n), Rat(n, n + 1)};
}

std::vector<std::pair<Rat, Rat>> RunConfig::generic_points() const {
  return points.empty() ? default_generic_points() : points;
}

Json RunConfig::to_json() const {
  auto rats = [](const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(r.get_str());
    return a;
  };
  Json pts = Json::array();
  for (const auto& [q, t] : generic_points()) pts.push_back({{"q", q.get_str()}, {"t", t.get_str()}});
  Json ov = Json::object();
  for (const auto& [name, p] : overrides) {
    Json o = Json::object();
    if (!p.N.empty()) o["N"] = p.N;
    if (!p.k.empty()) o["k"] = p.k;
    if (!p.beta.empty()) o["beta"] = rats(p.beta);
    ov[name] = o;
  }
  return {{"suites", suites},
          {"N", N},
          {"k", k},
          {"beta", beta.empty() ? Json("admissible") : rats(beta)},
          {"points", pts},
          {"window", {{"mode", window.mode}, {"level", window.level}}},
          {"orders",
           {{"x", x_order},
            {"hbar", hbar_order},
            {"poles", pole_order},
            {"q_cutoff", q_cutoff},
            {"zeta_M", zeta_M},
            {"correlator_points", correlator_points},
            {"correlator_x", correlator_x_order},
            {"property_samples", property_samples}}},
          {"overrides", ov}};
}

void validate(const RunConfig& c) {
  if (c.suites.empty()) throw ConfigError("no suites selected");
  for (const auto& s : c.suites) suite_description(s);
  auto positive = [](int v, const char* what) {
    if (v < 1) throw ConfigError(std::string(what) + " must be positive");
  };
  auto at_most = [](int v, int cap, const char* what) {
    if (v > cap) throw ResourceError(std::string(what) + " = " + std::to_string(v) + " exceeds the limit " + std::to_string(cap));
  };
  positive(c.window.mode, "window.mode");
  positive(c.window.level, "window.level");
  positive(c.x_order, "orders.x");
  positive(c.hbar_order, "orders.hbar");
  positive(c.pole_order, "orders.poles");
  positive(c.q_cutoff, "orders.q_cutoff");
  positive(c.zeta_M, "orders.zeta_M");
  positive(c.correlator_points, "orders.correlator_points");
  positive(c.correlator_x_order, "orders.correlator_x");
  positive(c.property_samples, "orders.property_samples");
  at_most(c.window.mode, kMaxMode, "window.mode");
  at_most(c.window.level, kMaxLevel, "window.level");
  at_most(c.x_order, kMaxXOrder, "orders.x");
  at_most(c.hbar_order, kMaxHbarOrder, "orders.hbar");
  at_most(c.pole_order, kMaxPoleOrder, "orders.poles");
  at_most(c.q_cutoff, kMaxCutoff, "orders.q_cutoff");
  at_most(c.zeta_M, kMaxZetaM, "orders.zeta_M");
  at_most(c.correlator_points, kMaxCorrelator, "orders.correlator_points");
  at_most(c.correlator_x_order, kMaxXOrder, "orders.correlator_x");
  if (c.threads < 0) throw ConfigError("threads must be >= 0");
  auto check_N = [&](const std::vector<int>& v) {
    for (int n : v) {
      if (n < 2) throw ConfigError("N must be >= 2");
      at_most(n, kMaxN, "N");
    }
  };
  check_N(c.N);
  for (const auto& [name, p] : c.overrides) {
    suite_description(name);
    check_N(p.N);
    for (int k : p.k)
      if (k < 1) throw ConfigError("k must be >= 1");
  }
  for (int k : c.k)
    if (k < 1) throw ConfigError("k must be >= 1");
  for (const auto& [q, t] : c.points)
    if (q <= 0 || t <= 0 || q == 1 || t == 1) throw ConfigError("generic points need positive q, t different from 1");
}

RunConfig parse_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config is not valid YAML: ") + e.what());
  }
  RunConfig c;
  if (!root || root.IsNull()) throw ConfigError("no suites selected");
  if (!root.IsMap()) throw ConfigError("config must be a mapping");
  static const std::vector<std::string> keys = {"suites", "N", "k", "beta", "points", "window", "orders", "output", "threads", "overrides"};
  for (const auto& kv : root) {
    auto key = kv.first.as<std::string>();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ConfigError("unknown key: " + key);
  }
  if (root["suites"]) {
    const auto& s = root["suites"];
    if (s.IsSequence())
      for (const auto& x : s) c.suites.push_back(x.as<std::string>());
    else if (s.IsScalar() && s.as<std::string>() == "all")
      c.suites = known_suites();
    else if (s.IsScalar())
      c.suites.push_back(s.as<std::string>());
  }
  if (root["N"]) c.N = int_list(root["N"], "N");
  if (root["k"]) c.k = int_list(root["k"], "k");
  if (root["beta"]) c.beta = rat_list(root["beta"]);
  if (root["points"]) {
    for (const auto& p : root["points"]) {
      if (!p["q"] || !p["t"]) throw ConfigError("each point needs q and t");
      c.points.emplace_back(parse_rat(p["q"]), parse_rat(p["t"]));
    }
  }
  if (const auto& w = root["window"]) {
    if (w["mode"]) c.window.mode = get_int(w["mode"], "window.mode");
    if (w["level"]) c.window.level = get_int(w["level"], "window.level");
  }
  if (const auto& o = root["orders"]) {
    static const std::vector<std::pair<std::string, int RunConfig::*>> fields = {
        {"x", &RunConfig::x_order},           {"hbar", &RunConfig::hbar_order},
        {"poles", &RunConfig::pole_order},    {"q_cutoff", &RunConfig::q_cutoff},
        {"zeta_M", &RunConfig::zeta_M},       {"correlator_points", &RunConfig::correlator_points},
        {"correlator_x", &RunConfig::correlator_x_order},
        {"property_samples", &RunConfig::property_samples}};
    for (const auto& kv : o) {
      auto key = kv.first.as<std::string>();
      auto it = std::find_if(fields.begin(), fields.end(), [&](const auto& f) { return f.first == key; });
      if (it == fields.end()) throw ConfigError("unknown order: " + key);
      c.*(it->second) = get_int(kv.second, "orders." + key);
    }
  }
  if (root["output"]) c.output = root["output"].as<std::string>();
  if (root["threads"]) c.threads = get_int(root["threads"], "threads");
  if (const auto& ov = root["overrides"]) {
    for (const auto& kv : ov) {
      SuiteParams p;
      read_params(kv.second, p);
      c.overrides.emplace_back(kv.first.as<std::string>(), std::move(p));
    }
  }
  validate(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

int effective_threads(const RunConfig& c) {
  if (const char* env = std::getenv("DWA_THREADS"); env && *env) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::logic_error&) {
    }
    throw ConfigError(std::string("DWA_THREADS must be a positive integer, got ") + env);
  }
  if (c.threads > 0) return c.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace dwa
