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

#include <json.hpp>

#include <string>
#include <vector>

#include "core/algnum.hpp"
#include "core/hbar.hpp"

namespace dwa {

using Json = nlohmann::json;

enum class Status { Pass, Fail, Inconclusive };

const char* to_string(Status s);

/// Outcome of one check case.
struct CheckRecord {
  std::string suite;
  Json case_key = Json::object();
  Status status = Status::Pass;
  std::string message;
  Json witness;                      // first failing evidence, null on pass
  Json truncations = Json::object();
  std::vector<std::string> assumptions;
  Json details = Json::object();     // counts and per-case facts
  double seconds = 0.0;

  bool passed() const { return status == Status::Pass; }
  /// Marks the record failed and keeps the first witness only.
  void fail(const std::string& why, Json w = nullptr);
};

/// Ordered collection of check records.
struct Report {
  std::vector<CheckRecord> records;

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void append(const Report& r) { records.insert(records.end(), r.records.begin(), r.records.end()); }
  std::size_t count(Status s) const;
  bool all_pass() const { return count(Status::Fail) == 0 && count(Status::Inconclusive) == 0; }
  bool any_fail() const { return count(Status::Fail) > 0; }

  Json to_json(bool include_timing) const;
};

/// Scalars as JSON: rationals become "num/den" strings, field elements an
/// object listing coefficients in powers of the generator.
Json scalar_json(const Rat& x);
Json scalar_json(const AlgNum& x);
Json scalar_json(const HbarSeries& x);

}  // namespace dwa
