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

#include <functional>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "report/report.hpp"

namespace dwa {

inline constexpr const char* kReportSchema = "dwa-report/1";

/// One independent unit of work. Tasks share no mutable state.
struct Task {
  std::string suite;
  Json key;
  std::function<Report()> run;
};

std::vector<Task> plan_tasks(const RunConfig& c);

/// Runs the tasks on `threads` workers pulling from a shared counter. Results
/// land in per-task slots, so the merged report does not depend on scheduling.
/// An exception inside a task becomes a failed record for that task.
Report run_tasks(const std::vector<Task>& tasks, int threads);

/// Sorts records by (suite, case key) and appends point-independence records:
/// for each case computed at several generic points, status and the
/// point-free details must agree.
Report merge_report(Report r);

struct RunResult {
  Json config;
  Report report;
  int threads = 1;

  /// The report document. Timing is off by default so that reports are byte-identical across runs.
  Json to_json(bool include_timing = false) const;
  std::string summary() const;
  /// 0 iff no record failed; inconclusive records do not fail the run.
  int exit_code() const { return report.any_fail() ? 1 : 0; }
};

RunResult run(const RunConfig& c);

}  // namespace dwa
