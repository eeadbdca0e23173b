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

// Command-line front end. Talks to the engine only through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "dwa/dwa.h"

namespace {

struct StrFree {
  void operator()(char* s) const { dwa_string_free(s); }
};
using Str = std::unique_ptr<char, StrFree>;

int report_error(dwa_status s) {
  std::cerr << "error: " << dwa_last_error() << '\n';
  return s == DWA_ERR_INTERNAL ? 3 : 2;
}

int cmd_verify(const std::string& config_path, std::string out_path, int threads, bool timing, bool quiet) {
  dwa_config* cfg = nullptr;
  if (auto s = dwa_config_load(config_path.c_str(), &cfg); s != DWA_OK) return report_error(s);
  std::unique_ptr<dwa_config, void (*)(dwa_config*)> cfg_guard(cfg, dwa_config_free);
  if (threads > 0) dwa_config_set_threads(cfg, threads);
  if (out_path.empty()) out_path = dwa_config_output(cfg);

  dwa_report* rep = nullptr;
  if (auto s = dwa_run(cfg, &rep); s != DWA_OK) return report_error(s);
  std::unique_ptr<dwa_report, void (*)(dwa_report*)> rep_guard(rep, dwa_report_free);

  if (!out_path.empty()) {
    if (auto s = dwa_report_write(rep, out_path.c_str(), timing ? 1 : 0); s != DWA_OK) return report_error(s);
  }
  if (!quiet) {
    char* raw = nullptr;
    if (auto s = dwa_report_summary(rep, &raw); s != DWA_OK) return report_error(s);
    Str summary(raw);
    std::cout << summary.get();
    if (!out_path.empty()) std::cout << "report: " << out_path << '\n';
  }
  return dwa_report_exit_code(rep);
}

int cmd_dump(const std::string& id, int order, const std::string& q, const std::string& t) {
  char* raw = nullptr;
  auto s = dwa_dump(id.c_str(), order, q.empty() ? nullptr : q.c_str(), t.empty() ? nullptr : t.c_str(), &raw);
  if (s != DWA_OK) return report_error(s);
  Str out(raw);
  std::cout << out.get();
  return 0;
}

int cmd_list() {
  char* raw = nullptr;
  if (auto s = dwa_list_suites(&raw); s != DWA_OK) return report_error(s);
  Str suites(raw);
  if (auto s = dwa_dump_ids(&raw); s != DWA_OK) return report_error(s);
  Str ids(raw);
  std::cout << "suites:\n" << suites.get() << "dump ids:\n" << ids.get();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of deformed W-algebra identities"};
  app.set_version_flag("--version", std::string(dwa_version()));
  app.require_subcommand(1);

  std::string config_path, out_path;
  int threads = 0;
  bool timing = false, quiet = false;
  auto* verify = app.add_subcommand("verify", "run the suites selected by a config file");
  verify->add_option("config", config_path, "YAML config")->required()->check(CLI::ExistingFile);
  verify->add_option("-o,--output", out_path, "report path (overrides the config)");
  verify->add_option("-j,--threads", threads, "worker threads (DWA_THREADS wins when set)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--timing", timing, "include wall times; the report is then no longer byte-stable");
  verify->add_flag("-q,--quiet", quiet, "no summary on stdout");

  std::string id, q, t;
  int order = 8;
  auto* dump = app.add_subcommand("dump", "print exact coefficients of a named series as JSON");
  dump->add_option("id", id, "object id, e.g. f:N=2:i=1:j=1")->required();
  dump->add_option("--order", order, "truncation order")->check(CLI::NonNegativeNumber);
  dump->add_option("--q", q, "generic q (rational)");
  dump->add_option("--t", t, "generic t (rational)");

  auto* list = app.add_subcommand("list-suites", "list suites and dump ids");

  CLI11_PARSE(app, argc, argv);
  if (*verify) return cmd_verify(config_path, out_path, threads, timing, quiet);
  if (*dump) return cmd_dump(id, order, q, t);
  if (*list) return cmd_list();
  return 0;
}
