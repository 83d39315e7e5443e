// Copyright 2026 The cherednik-verify Authors
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

/* C interface to the verification library. Every function returns one of
 * the cv_code values; on codes other than CV_OK and CV_CHECK_FAILED a
 * description is available from cv_last_error() on the calling thread.
 * Handles are opaque and must be released with their matching free
 * function. Functions are safe to call concurrently on distinct handles. */

#ifndef CHEREDNIK_CHEREDNIK_H
#define CHEREDNIK_CHEREDNIK_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CV_API __declspec(dllexport)
#else
#define CV_API __attribute__((visibility("default")))
#endif

typedef enum cv_code {
  CV_OK = 0,
  CV_CHECK_FAILED = 1, /* check ran; status fail or inconclusive */
  CV_USAGE = 2,        /* bad arguments, unknown group key, malformed signature */
  CV_INTERNAL = 3      /* internal inconsistency */
} cv_code;

typedef struct cv_group cv_group;
typedef struct cv_signature cv_signature;
typedef struct cv_report cv_report;

CV_API const char* cv_version(void);

/* Message for the last failing call on this thread; never NULL. */
CV_API const char* cv_last_error(void);

/* Releases strings returned through char** out-parameters. */
CV_API void cv_string_free(char* s);

/* Reflection groups by catalog key: "Z4", "S3", "I2(5)", "B2". */
CV_API int cv_group_open(const char* key, cv_group** out);
CV_API void cv_group_free(cv_group* g);
CV_API int cv_group_order(const cv_group* g, long* out);
CV_API int cv_group_rank(const cv_group* g, long* out);
/* JSON object {name, order, rank, reflections, reflection_classes}. */
CV_API int cv_group_describe(const cv_group* g, char** json_out);

/* Orbifold signatures "g=0;2,3,5". */
CV_API int cv_signature_parse(const char* text, cv_signature** out);
CV_API void cv_signature_free(cv_signature* s);
/* JSON object {signature, chi_orb, chi_orb_exact, geometry}. */
CV_API int cv_signature_describe(const cv_signature* s, char** json_out);

/* JSON array of check names, and the {check, inputs} plan of "verify all". */
CV_API int cv_check_names(char** json_out);
CV_API int cv_suite_plan(int quick, char** json_out);

/* Runs a named check with a JSON object of inputs (NULL or "" for
 * defaults). On CV_OK and CV_CHECK_FAILED *out holds a report; on other
 * codes *out is NULL. */
CV_API int cv_run(const char* check, const char* inputs_json, cv_report** out);
CV_API void cv_report_free(cv_report* r);
/* "pass", "fail" or "inconclusive". */
CV_API const char* cv_report_status(const cv_report* r);
/* One-line JSON {check, id, inputs, status, witness, wall_time_ms}; owned
 * by the report. */
CV_API const char* cv_report_json(const cv_report* r);
CV_API const char* cv_report_id(const cv_report* r);

#ifdef __cplusplus
}
#endif

#endif /* CHEREDNIK_CHEREDNIK_H */
