/*
 * Copyright 2026 The motivic-dt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MDT_MDT_H
#define MDT_MDT_H

#include <stddef.h>
#include <stdint.h>

#if defined(MDT_BUILDING_LIBRARY)
#define MDT_API __attribute__((visibility("default")))
#else
#define MDT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status. On failure a message is available from
 * mdt_last_error() on the calling thread until the next failing call. */
typedef enum mdt_status {
    MDT_OK = 0,
    MDT_ERR_INVALID_ARGUMENT = 1,
    MDT_ERR_PARSE = 2,
    MDT_ERR_UNREDUCED_EQUIVARIANT_POWER = 3,
    MDT_ERR_UNSUPPORTED_ADAMS = 4,
    MDT_ERR_NON_INTEGRAL_SIGMA = 5,
    MDT_ERR_NON_INTEGRAL_EXP = 6,
    MDT_ERR_FRACTIONAL_EXPONENT = 7,
    MDT_ERR_TWIST_MISMATCH = 8,
    MDT_ERR_BAD_PRIME = 9,
    MDT_ERR_NOT_LINEAR = 10,
    MDT_ERR_NON_INTEGRAL_FIT = 11,
    MDT_ERR_NON_EXACT_DIVISION = 12,
    MDT_ERR_MISSING_ENTRY = 13,
    MDT_ERR_DECOMPOSITION_FAILURE = 14,
    MDT_ERR_ASSUMPTION_VIOLATED = 15,
    MDT_ERR_MISMATCH = 16,
    MDT_ERR_UNSUPPORTED_COEFFICIENT = 17,
    MDT_ERR_NULL_ARGUMENT = 18,
    MDT_ERR_INTERNAL = 19
} mdt_status;

typedef struct mdt_ratio mdt_ratio;         /* element of the motive ring, possibly a ratio */
typedef struct mdt_series mdt_series;       /* truncated power series in t */
typedef struct mdt_potential mdt_potential; /* cubic superpotential */
typedef struct mdt_table mdt_table;         /* input table for the induction */

MDT_API const char* mdt_version(void);
MDT_API const char* mdt_last_error(void);
MDT_API const char* mdt_status_name(mdt_status status);
/* Strings returned through char** are owned by the caller. */
MDT_API void mdt_string_free(char* text);

MDT_API mdt_status mdt_ratio_parse(const char* text, mdt_ratio** out);
MDT_API void mdt_ratio_free(mdt_ratio* ratio);
MDT_API mdt_status mdt_ratio_to_string(const mdt_ratio* ratio, char** out);
MDT_API mdt_status mdt_ratio_to_json(const mdt_ratio* ratio, char** out);
MDT_API mdt_status mdt_ratio_equal(const mdt_ratio* a, const mdt_ratio* b, int* out);
/* L -> q, M~ -> 1 - mu3_count. The value must be a class; result in decimal. */
MDT_API mdt_status mdt_ratio_eval(const mdt_ratio* ratio, uint64_t q, int mu3_count, char** out);

MDT_API mdt_status mdt_series_parse(const char* text, unsigned order, mdt_series** out);
MDT_API void mdt_series_free(mdt_series* series);
MDT_API mdt_status mdt_series_exp(const mdt_series* bracket, mdt_series** out);
MDT_API mdt_status mdt_series_log(const mdt_series* series, mdt_series** out);
MDT_API mdt_status mdt_series_order(const mdt_series* series, unsigned* out);
MDT_API mdt_status mdt_series_coefficient(const mdt_series* series, unsigned k, mdt_ratio** out);
MDT_API mdt_status mdt_series_to_string(const mdt_series* series, char** out);
MDT_API mdt_status mdt_series_to_json(const mdt_series* series, char** out);

MDT_API mdt_status mdt_potential_parse(const char* text, mdt_potential** out);
MDT_API void mdt_potential_free(mdt_potential* potential);
MDT_API mdt_status mdt_potential_to_string(const mdt_potential* potential, char** out);
/* Tr(W) for generic n x n matrices, as a polynomial string. */
MDT_API mdt_status mdt_potential_trace(const mdt_potential* potential, unsigned n, char** out);
/* The three cell equations of the 2-dimensional Brauer-Severi scheme as JSON. */
MDT_API mdt_status mdt_potential_cells_json(const mdt_potential* potential, unsigned lambda, char** out);

/* Points of the fiber Tr(W) = lambda in n x n matrices over F_q. */
MDT_API mdt_status mdt_count_fiber(const mdt_potential* potential, unsigned n, uint64_t q, uint64_t lambda,
                                   unsigned jobs, char** count, double* elapsed_ms);
/* Points of cell 1, 2 or 3 of the 2-dimensional Brauer-Severi scheme. */
MDT_API mdt_status mdt_count_cell(const mdt_potential* potential, unsigned cell, uint64_t q, uint64_t lambda,
                                  unsigned jobs, char** count, double* elapsed_ms);
/* lambda = 0, then one representative per cubic residue class of F_q^*
 * (one class when q != 1 mod 3). */
MDT_API mdt_status mdt_lambda_class_count(uint64_t q, size_t* out);
MDT_API mdt_status mdt_lambda_class(uint64_t q, size_t index, uint64_t* representative, char** name);

/* case_name is "quantum" or "weyl". */
MDT_API mdt_status mdt_table_builtin(const char* case_name, int with_fibers, mdt_table** out);
MDT_API mdt_status mdt_table_from_json(const char* json, mdt_table** out);
MDT_API void mdt_table_free(mdt_table* table);
MDT_API mdt_status mdt_table_to_json(const mdt_table* table, char** out);
MDT_API mdt_status mdt_induct_fiber(const mdt_table* table, unsigned n, unsigned lambda, mdt_ratio** out);
/* ([M_n(0)] - [M_n(1)]) / [GL_n]. */
MDT_API mdt_status mdt_induct_delta(const mdt_table* table, unsigned n, mdt_ratio** out);

MDT_API mdt_status mdt_catalog_json(const char* case_name, char** out);
/* Runs every check for the case. primes may be NULL for the defaults.
 * Either output pointer may be NULL. *passed is 1 iff no check failed. */
MDT_API mdt_status mdt_verify(const char* case_name, const uint64_t* primes, size_t n_primes, unsigned jobs,
                              char** report_json, char** report_plain, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* MDT_MDT_H */
