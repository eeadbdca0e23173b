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

/* C interface to the verification engine. All strings returned through
 * char** out-parameters are owned by the caller and released with
 * dwa_string_free. Handles are opaque; free them with the matching _free. */
#ifndef DWA_DWA_H_
#define DWA_DWA_H_

#include <stddef.h>

#if defined(DWA_BUILDING_LIBRARY)
#define DWA_API __attribute__((visibility("default")))
#else
#define DWA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dwa_status {
  DWA_OK = 0,
  DWA_ERR_INVALID_ARGUMENT = 1,
  DWA_ERR_CONFIG = 2,
  DWA_ERR_RESOURCE = 3,
  DWA_ERR_UNKNOWN_ID = 4,
  DWA_ERR_IO = 5,
  DWA_ERR_INTERNAL = 6
} dwa_status;

typedef struct dwa_config dwa_config;
typedef struct dwa_report dwa_report;

DWA_API const char* dwa_version(void);

/* Message for the last non-OK status returned on the calling thread. */
DWA_API const char* dwa_last_error(void);

DWA_API dwa_status dwa_config_parse(const char* yaml_text, dwa_config** out);
DWA_API dwa_status dwa_config_load(const char* path, dwa_config** out);
/* 0 restores the default (DWA_THREADS, then hardware concurrency). */
DWA_API dwa_status dwa_config_set_threads(dwa_config* config, int threads);
/* Output path named in the config, "" if none. Borrowed, valid while config lives. */
DWA_API const char* dwa_config_output(const dwa_config* config);
DWA_API void dwa_config_free(dwa_config* config);

DWA_API dwa_status dwa_run(const dwa_config* config, dwa_report** out);
DWA_API dwa_status dwa_report_counts(const dwa_report* report, size_t* pass, size_t* fail, size_t* inconclusive);
/* 0 iff no record failed. */
DWA_API int dwa_report_exit_code(const dwa_report* report);
DWA_API dwa_status dwa_report_json(const dwa_report* report, int include_timing, char** out);
DWA_API dwa_status dwa_report_summary(const dwa_report* report, char** out);
DWA_API dwa_status dwa_report_write(const dwa_report* report, const char* path, int include_timing);
DWA_API void dwa_report_free(dwa_report* report);

/* q and t may be NULL for the first built-in generic point. */
DWA_API dwa_status dwa_dump(const char* id, int order, const char* q, const char* t, char** out_json);
DWA_API dwa_status dwa_dump_ids(char** out_json);
DWA_API dwa_status dwa_list_suites(char** out_json);

DWA_API void dwa_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* DWA_DWA_H_ */
