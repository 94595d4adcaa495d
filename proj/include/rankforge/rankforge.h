// Copyright 2026 The rankforge Authors
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

/* C interface to rankforge. All objects are opaque handles released with the
 * matching *_free function. Functions return RF_OK or an error status; the
 * message of the last failure on the calling thread is rf_last_error(). */
#ifndef RANKFORGE_RANKFORGE_H
#define RANKFORGE_RANKFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RF_API __declspec(dllexport)
#else
#define RF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rf_status {
  RF_OK = 0,
  RF_ERR_PARSE = 1,
  RF_ERR_SCHEMA = 2,
  RF_ERR_RANGE = 3,
  RF_ERR_BUDGET = 4,
  RF_ERR_USAGE = 5,
  RF_ERR_INVALID_BASE_RELATION = 6,
  RF_ERR_INVALID_SYSTEM = 7,
  RF_ERR_UNSUPPORTED = 8,
  RF_ERR_DEPTH_EXCEEDED = 9,
  RF_ERR_INTERNAL = 10
} rf_status;

/* Level argument meaning "the stabilized relation". */
#define RF_LEVEL_STAB 0u

RF_API const char* rf_version(void);
RF_API const char* rf_status_name(rf_status status);
RF_API const char* rf_last_error(void);

typedef struct rf_budget {
  size_t max_group;   /* |G| */
  size_t max_points;  /* |X| */
  size_t max_n;       /* finite logic universe */
  size_t max_support; /* symbolic window s */
  size_t max_k;       /* tuple length */
} rf_budget;

/* |G| <= 16, |X| <= 12, n <= 4, s <= 3, k <= 3. */
RF_API void rf_budget_default(rf_budget* out);
/* Overrides from "g=16,x=12,n=4,s=3,k=3" (any subset of keys). */
RF_API rf_status rf_budget_parse(const char* text, rf_budget* inout);

/* ---- structures ---- */

typedef struct rf_structures rf_structures;

RF_API rf_status rf_structures_parse(const char* text, rf_structures** out);
RF_API void rf_structures_free(rf_structures* file);
RF_API size_t rf_structures_count(const rf_structures* file);
RF_API const char* rf_structures_id(const rf_structures* file, size_t index);
RF_API size_t rf_structures_size(const rf_structures* file, size_t index);

RF_API rf_status rf_scott_rank(const rf_structures* file, size_t index, unsigned* rank,
                               unsigned* stab);
/* Rank from the naive back-and-forth recursion over tuples up to the
 * universe size. */
RF_API rf_status rf_oracle_scott_rank(const rf_structures* file, size_t index,
                                      unsigned* rank);
/* Stabilized equivalence of the empty tuples of two structures. */
RF_API rf_status rf_scott_equivalent(const rf_structures* file, size_t a, size_t b,
                                     int* out);

/* ---- action systems ---- */

typedef struct rf_system rf_system;

/* basis may be NULL to keep the file's basis line. */
RF_API rf_status rf_system_from_action(const char* text, const char* basis,
                                       const rf_budget* budget, rf_system** out);
/* S_n on structures over n elements; points are the orbits of the file's
 * structures. */
RF_API rf_status rf_system_finite_logic(const rf_structures* file, size_t n, size_t k,
                                        const rf_budget* budget, rf_system** out);
RF_API rf_status rf_system_symbolic_logic(const rf_structures* file, size_t s, size_t k,
                                          const rf_budget* budget, rf_system** out);
RF_API void rf_system_free(rf_system* sys);
RF_API size_t rf_system_num_points(const rf_system* sys);
RF_API size_t rf_system_num_basis(const rf_system* sys);
RF_API const char* rf_system_point_label(const rf_system* sys, size_t x);
RF_API const char* rf_system_basis_label(const rf_system* sys, size_t v);
RF_API const char* rf_system_description(const rf_system* sys);
RF_API rf_status rf_oracle_leq(const rf_system* sys, size_t x0, size_t v0, size_t x1,
                               size_t v1, unsigned level, int* out);

/* ---- analysis ---- */

typedef struct rf_analysis rf_analysis;

/* max_level 0 runs to stabilization. */
RF_API rf_status rf_analysis_new(const rf_system* sys, unsigned max_level,
                                 rf_analysis** out);
RF_API void rf_analysis_free(rf_analysis* analysis);
RF_API int rf_analysis_stabilized(const rf_analysis* analysis);
RF_API unsigned rf_analysis_top_level(const rf_analysis* analysis);
RF_API rf_status rf_analysis_stab(const rf_analysis* analysis, unsigned* out);
RF_API rf_status rf_leq(const rf_analysis* analysis, size_t x0, size_t v0, size_t x1,
                        size_t v1, unsigned level, int* out);
RF_API rf_status rf_equiv(const rf_analysis* analysis, size_t x, size_t y, unsigned level,
                          int* out);
RF_API rf_status rf_rank(const rf_analysis* analysis, size_t x, unsigned* out);
/* *found = 0 when no m exists up to stab + 1. */
RF_API rf_status rf_minimal_m(const rf_analysis* analysis, size_t x, int* found,
                              unsigned* m);
RF_API rf_status rf_compare_ranks(const rf_analysis* analysis, size_t x, size_t y,
                                  int* out);
RF_API rf_status rf_partition_count(const rf_analysis* analysis, size_t* out);
/* Writes up to cap member indices; *count receives the part size. */
RF_API rf_status rf_partition_part(const rf_analysis* analysis, size_t part,
                                   unsigned* rank, size_t* members, size_t cap,
                                   size_t* count);

/* ---- verification ---- */

typedef struct rf_verify_config {
  uint64_t seed;
  size_t max_group;
  size_t max_points;
  size_t max_n;
  size_t count;
  const char* mutate; /* NULL or "cc" */
} rf_verify_config;

typedef struct rf_report rf_report;

RF_API void rf_verify_config_default(rf_verify_config* out);
/* "g<=8,x<=6,n<=3,count=200"; keys left out take their defaults. */
RF_API rf_status rf_verify_parse_sizes(const char* text, rf_verify_config* inout);
RF_API rf_status rf_verify_run(const char* suite, const rf_verify_config* config,
                               rf_report** out);
RF_API void rf_report_free(rf_report* report);
RF_API size_t rf_report_count(const rf_report* report);
RF_API rf_status rf_report_check(const rf_report* report, size_t index, const char** name,
                                 int* pass, const char** witness, size_t* instances);

/* ---- comparison scan ---- */

typedef struct rf_scan rf_scan;

typedef struct rf_scan_totals {
  size_t structures;
  size_t orbits;
  size_t cases;
  size_t hypothesis_true;
  size_t counterexamples;
  unsigned scott_stab;
} rf_scan_totals;

RF_API rf_status rf_compare_scan(const char* signature, size_t n, size_t max_len,
                                 const rf_budget* budget, rf_scan** out);
RF_API void rf_scan_free(rf_scan* scan);
RF_API void rf_scan_totals_get(const rf_scan* scan, rf_scan_totals* out);
RF_API size_t rf_scan_level_rows(const rf_scan* scan);
RF_API rf_status rf_scan_level_row(const rf_scan* scan, size_t index, const char** scott,
                                   const char** hjorth, size_t* count);
RF_API size_t rf_scan_witness_count(const rf_scan* scan);
RF_API const char* rf_scan_witness(const rf_scan* scan, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* RANKFORGE_RANKFORGE_H */
