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

#include <cstring>
#include <string>

#include "doctest.h"
#include "dwa/dwa.h"

TEST_CASE("C API round trip") {
  dwa_config* cfg = nullptr;
  REQUIRE(dwa_config_parse("suites: [zeta]\nN: [2, 3]\norders: {zeta_M: 3}\n", &cfg) == DWA_OK);
  CHECK(dwa_config_set_threads(cfg, 2) == DWA_OK);
  dwa_report* rep = nullptr;
  REQUIRE(dwa_run(cfg, &rep) == DWA_OK);
  size_t pass = 0, fail = 1, inc = 1;
  CHECK(dwa_report_counts(rep, &pass, &fail, &inc) == DWA_OK);
  CHECK(pass > 0);
  CHECK(fail == 0);
  CHECK(inc == 0);
  CHECK(dwa_report_exit_code(rep) == 0);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(dwa_report_json(rep, 0, &a) == DWA_OK);
  REQUIRE(dwa_report_json(rep, 0, &b) == DWA_OK);
  CHECK(std::strcmp(a, b) == 0);
  CHECK(std::string(a).find("\"seconds\"") == std::string::npos);
  dwa_string_free(a);
  dwa_string_free(b);
  dwa_report_free(rep);
  dwa_config_free(cfg);
}

TEST_CASE("C API errors") {
  dwa_config* cfg = nullptr;
  CHECK(dwa_config_parse("suites: []\n", &cfg) == DWA_ERR_CONFIG);
  CHECK(std::string(dwa_last_error()) == "no suites selected");
  CHECK(dwa_config_parse("suites: [zeta]\norders: {x: 1000}\n", &cfg) == DWA_ERR_RESOURCE);
  CHECK(dwa_config_load("/nonexistent/config.yaml", &cfg) == DWA_ERR_CONFIG);
  CHECK(dwa_config_parse(nullptr, &cfg) == DWA_ERR_INVALID_ARGUMENT);
  char* out = nullptr;
  CHECK(dwa_dump("nothing", 3, nullptr, nullptr, &out) == DWA_ERR_UNKNOWN_ID);
  CHECK(dwa_dump("f:N=2:i=1:j=1", 2, "x", nullptr, &out) == DWA_ERR_INVALID_ARGUMENT);
  REQUIRE(dwa_dump("zeta", 1, nullptr, nullptr, &out) == DWA_OK);
  CHECK(std::string(out).find("-1/12") != std::string::npos);
  dwa_string_free(out);
  REQUIRE(dwa_list_suites(&out) == DWA_OK);
  CHECK(std::string(out).find("characters") != std::string::npos);
  dwa_string_free(out);
}
