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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core/rat.hpp"
#include "relations/relation_engine.hpp"
#include "report/report.hpp"

namespace dwa {

/// Config parse or validation failure.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A declared window or order beyond what a run may take on.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameter lists one suite runs over. Empty means "use the run-wide list".
struct SuiteParams {
  std::vector<int> N;
  std::vector<int> k;
  std::vector<Rat> beta;
};

struct RunConfig {
  std::vector<std::string> suites;
  std::vector<int> N{2, 3};
  std::vector<int> k{2};
  std::vector<Rat> beta;  // empty: (N+1)/N and N/(N+1) for each N
  std::vector<std::pair<Rat, Rat>> points;  // empty: the two built-in generic points
  RelationWindow window{2, 2};
  int x_order = 12;
  int hbar_order = 7;
  int pole_order = 24;
  int q_cutoff = 20;
  int zeta_M = 6;
  int correlator_points = 3;
  int correlator_x_order = 8;
  int property_samples = 150;
  std::string output;
  int threads = 0;  // 0: hardware concurrency
  std::vector<std::pair<std::string, SuiteParams>> overrides;

  const std::vector<int>& N_for(const std::string& suite) const;
  const std::vector<int>& k_for(const std::string& suite) const;
  /// The beta values for one N: the override or run-wide list, else both admissible values.
  std::vector<Rat> beta_for(const std::string& suite, int N) const;
  std::vector<std::pair<Rat, Rat>> generic_points() const;

  /// Echo of every setting, for the report header.
  Json to_json() const;
};

const std::vector<std::string>& known_suites();
std::string suite_description(const std::string& suite);

/// YAML text to a validated config. Throws ConfigError or ResourceError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Rejects empty suite lists, unknown names, non-positive orders and oversized windows.
void validate(const RunConfig& c);

/// DWA_THREADS if set, else the config value, else the hardware concurrency (at least 1).
int effective_threads(const RunConfig& c);

}  // namespace dwa
