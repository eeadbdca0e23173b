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
#include "cli/dump.hpp"
#include "cli/runner.hpp"
#include "doctest.h"

using namespace dwa;

TEST_CASE("config parsing") {
  auto c = parse_config("suites: [zeta, characters]\nN: 2..4\nbeta: [3/2]\norders: {q_cutoff: 10}\n");
  CHECK(c.suites == std::vector<std::string>{"zeta", "characters"});
  CHECK(c.N == std::vector<int>{2, 3, 4});
  CHECK(c.beta_for("zeta", 3) == std::vector<Rat>{Rat(3, 2)});
  CHECK(c.q_cutoff == 10);
  CHECK(c.window.mode == 2);

  auto d = parse_config("suites: all\noverrides:\n  zeta: {N: [5]}\n");
  CHECK(d.suites.size() == known_suites().size());
  CHECK(d.N_for("zeta") == std::vector<int>{5});
  CHECK(d.N_for("relations") == std::vector<int>{2, 3});
  CHECK(d.beta_for("limit1", 2) == std::vector<Rat>{Rat(3, 2), Rat(2, 3)});
}

TEST_CASE("config errors") {
  CHECK_THROWS_WITH_AS(parse_config("suites: []\n"), "no suites selected", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(""), "no suites selected", ConfigError);
  CHECK_THROWS_AS(parse_config("suites: [nope]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("suites: [zeta]\nbogus: 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("suites: [zeta]\norders: {x: 0}\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("suites: [zeta]\nN: [1]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("suites: [zeta]\nbeta: [x]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("suites: [zeta]\nwindow: {level: 50}\n"), ResourceError);
  CHECK_THROWS_AS(parse_config("suites: [zeta\n"), ConfigError);
}

TEST_CASE("runs are deterministic and independent of the thread count") {
  auto c = parse_config("suites: [zeta, characters, relations]\nN: [2]\nk: [2]\norders: {q_cutoff: 8, zeta_M: 3}\n");
  auto tasks = plan_tasks(c);
  auto a = merge_report(run_tasks(tasks, 1)).to_json(false).dump();
  auto b = merge_report(run_tasks(tasks, 3)).to_json(false).dump();
  CHECK(a == b);
  RunResult r = run(c);
  CHECK(r.exit_code() == 0);
  CHECK(r.to_json().dump() == run(c).to_json().dump());
  CHECK_FALSE(r.to_json().contains("threads"));
  CHECK(r.to_json()["schema"] == kReportSchema);
}

TEST_CASE("point independence catches a disagreement") {
  Report rep;
  for (const char* q : {"3/2", "2/7"}) {
    CheckRecord r;
    r.suite = "demo";
    r.case_key = {{"N", 2}, {"q", q}, {"t", "5/3"}};
    r.details = {{"count", std::string(q) == "3/2" ? 4 : 5}, {"value", q}};
    rep.add(r);
  }
  auto m = merge_report(rep);
  REQUIRE(m.records.size() == 3);
  CHECK(m.records.back().suite == "demo.point_independence");
  CHECK(m.records.back().status == Status::Fail);

  rep.records[1].details["count"] = 4;  // only the point-dependent value differs now
  CHECK(merge_report(rep).all_pass());
}

TEST_CASE("task exceptions become failed records") {
  std::vector<Task> tasks{{"demo", {{"x", 1}}, [] () -> Report { throw std::runtime_error("boom"); }}};
  auto r = run_tasks(tasks, 2);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].status == Status::Fail);
  CHECK(r.records[0].message == "exception: boom");
}

TEST_CASE("dump ids") {
  auto g = dump_series("g:N=2:k=2:mu=1:nu=1", 4, Rat(3, 2), Rat(5, 3));
  CHECK(g["coeffs"] == Json::array({"1", "-2", "2", "-2", "2"}));
  auto b = dump_series("bernoulli", 3, Rat(3, 2), Rat(5, 3));
  CHECK(b["coeffs"] == Json::array({"1/6", "1/30", "1/42"}));
  auto f = dump_series("f:N=2:i=1:j=1", 2, Rat(3, 2), Rat(5, 3));
  CHECK(f["coeffs"][0] == "1");
  CHECK(f["coeffs"][1] == "-2/19");  // (1-q)(1-1/t)/(1+p), p = q/t
  auto p = dump_series("partitions", 6, Rat(3, 2), Rat(5, 3));
  CHECK(p["coeffs"] == Json::array({"1", "1", "2", "3", "5", "7", "11"}));
  CHECK_THROWS_AS(dump_series("h", 2, Rat(3, 2), Rat(5, 3)), UnknownIdError);
  CHECK_THROWS_AS(dump_series("f:N=2:i=1", 2, Rat(3, 2), Rat(5, 3)), UnknownIdError);
}
