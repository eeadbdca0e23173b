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

#include "dwa/dwa.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "cli/config.hpp"
#include "cli/dump.hpp"
#include "cli/runner.hpp"
#include "core/context.hpp"

struct dwa_config {
  dwa::RunConfig config;
};

struct dwa_report {
  dwa::RunResult result;
};

namespace {

thread_local std::string g_last_error;

dwa_status set_error(dwa_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/// Maps engine exceptions onto status codes at the C boundary.
template <class F>
dwa_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return DWA_OK;
  } catch (const dwa::ResourceError& e) {
    return set_error(DWA_ERR_RESOURCE, e.what());
  } catch (const dwa::ConfigError& e) {
    return set_error(DWA_ERR_CONFIG, e.what());
  } catch (const dwa::UnknownIdError& e) {
    return set_error(DWA_ERR_UNKNOWN_ID, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(DWA_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(DWA_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(DWA_ERR_INTERNAL, "unknown error");
  }
}

dwa_status null_arg(const char* what) { return set_error(DWA_ERR_INVALID_ARGUMENT, std::string(what) + " is null"); }

dwa::Rat parse_point(const char* s) {
  dwa::Rat r(s);
  r.canonicalize();
  return r;
}

}  // namespace

extern "C" {

const char* dwa_version(void) { return "0.1.0"; }

const char* dwa_last_error(void) { return g_last_error.c_str(); }

dwa_status dwa_config_parse(const char* yaml_text, dwa_config** out) {
  if (!yaml_text || !out) return null_arg("argument");
  return guarded([&] { *out = new dwa_config{dwa::parse_config(yaml_text)}; });
}

dwa_status dwa_config_load(const char* path, dwa_config** out) {
  if (!path || !out) return null_arg("argument");
  return guarded([&] { *out = new dwa_config{dwa::load_config(path)}; });
}

dwa_status dwa_config_set_threads(dwa_config* config, int threads) {
  if (!config) return null_arg("config");
  if (threads < 0) return set_error(DWA_ERR_INVALID_ARGUMENT, "threads must be >= 0");
  config->config.threads = threads;
  return DWA_OK;
}

const char* dwa_config_output(const dwa_config* config) { return config ? config->config.output.c_str() : ""; }

void dwa_config_free(dwa_config* config) { delete config; }

dwa_status dwa_run(const dwa_config* config, dwa_report** out) {
  if (!config || !out) return null_arg("argument");
  return guarded([&] { *out = new dwa_report{dwa::run(config->config)}; });
}

dwa_status dwa_report_counts(const dwa_report* report, size_t* pass, size_t* fail, size_t* inconclusive) {
  if (!report) return null_arg("report");
  const auto& r = report->result.report;
  if (pass) *pass = r.count(dwa::Status::Pass);
  if (fail) *fail = r.count(dwa::Status::Fail);
  if (inconclusive) *inconclusive = r.count(dwa::Status::Inconclusive);
  return DWA_OK;
}

int dwa_report_exit_code(const dwa_report* report) { return report ? report->result.exit_code() : 2; }

dwa_status dwa_report_json(const dwa_report* report, int include_timing, char** out) {
  if (!report || !out) return null_arg("argument");
  return guarded([&] { *out = copy_string(report->result.to_json(include_timing != 0).dump(2) + "\n"); });
}

dwa_status dwa_report_summary(const dwa_report* report, char** out) {
  if (!report || !out) return null_arg("argument");
  return guarded([&] { *out = copy_string(report->result.summary()); });
}

dwa_status dwa_report_write(const dwa_report* report, const char* path, int include_timing) {
  if (!report || !path) return null_arg("argument");
  std::ofstream f(path, std::ios::binary);
  if (!f) return set_error(DWA_ERR_IO, std::string("cannot open ") + path + " for writing");
  auto st = guarded([&] { f << report->result.to_json(include_timing != 0).dump(2) << '\n'; });
  if (st == DWA_OK && !f) return set_error(DWA_ERR_IO, std::string("write to ") + path + " failed");
  return st;
}

void dwa_report_free(dwa_report* report) { delete report; }

dwa_status dwa_dump(const char* id, int order, const char* q, const char* t, char** out_json) {
  if (!id || !out_json) return null_arg("argument");
  return guarded([&] {
    auto pts = dwa::default_generic_points();
    dwa::Rat qq = q ? parse_point(q) : pts.front().first;
    dwa::Rat tt = t ? parse_point(t) : pts.front().second;
    *out_json = copy_string(dwa::dump_series(id, order, qq, tt).dump(2) + "\n");
  });
}

dwa_status dwa_dump_ids(char** out_json) {
  if (!out_json) return null_arg("out_json");
  return guarded([&] { *out_json = copy_string(dwa::dump_ids().dump(2) + "\n"); });
}

dwa_status dwa_list_suites(char** out_json) {
  if (!out_json) return null_arg("out_json");
  return guarded([&] {
    dwa::Json j = dwa::Json::object();
    for (const auto& s : dwa::known_suites()) j[s] = dwa::suite_description(s);
    *out_json = copy_string(j.dump(2) + "\n");
  });
}

void dwa_string_free(char* s) { std::free(s); }

}  // extern "C"
