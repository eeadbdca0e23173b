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

#include "report/report.hpp"

namespace dwa {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

void CheckRecord::fail(const std::string& why, Json w) {
  if (status == Status::Fail) return;
  status = Status::Fail;
  message = why;
  witness = std::move(w);
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.status == s;
  return n;
}

Json Report::to_json(bool include_timing) const {
  Json recs = Json::array();
  for (const auto& r : records) {
    Json j;
    j["suite"] = r.suite;
    j["case"] = r.case_key;
    j["status"] = to_string(r.status);
    if (!r.message.empty()) j["message"] = r.message;
    if (!r.witness.is_null()) j["witness"] = r.witness;
    j["truncations"] = r.truncations;
    j["assumptions"] = r.assumptions;
    j["details"] = r.details;
    if (include_timing) j["seconds"] = r.seconds;
    recs.push_back(std::move(j));
  }
  Json out;
  out["records"] = std::move(recs);
  out["summary"] = {{"pass", count(Status::Pass)},
                    {"fail", count(Status::Fail)},
                    {"inconclusive", count(Status::Inconclusive)},
                    {"total", records.size()}};
  return out;
}

Json scalar_json(const Rat& x) { return x.get_str(); }

Json scalar_json(const AlgNum& x) {
  if (x.is_rational()) return x.rational_value().get_str();
  Json c = Json::array();
  for (int i = 0; i < x.field()->degree(); ++i) c.push_back(x.coeff(i).get_str());
  return {{"field", x.field()->describe()}, {"basis", x.field()->generator_name()}, {"coeffs", c}};
}

Json scalar_json(const HbarSeries& x) {
  Json c = Json::array();
  for (const auto& a : x.known()) c.push_back(scalar_json(a));
  Json j = {{"hbar_coeffs", c}};
  j["known_orders"] = x.exact() ? Json("exact") : Json(x.prec());
  return j;
}

}  // namespace dwa
