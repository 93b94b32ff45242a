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

#include <mdt/mdt.h>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <mdt/catalog.hpp>
#include <mdt/counting.hpp>
#include <mdt/error.hpp>
#include <mdt/expression.hpp>
#include <mdt/pipeline.hpp>
#include <mdt/serialize.hpp>
#include <mdt/series.hpp>
#include <mdt/superpotential.hpp>
#include <mdt/verify.hpp>

struct mdt_ratio {
    mdt::MotiveRatio value;
};
struct mdt_series {
    mdt::Series value;
};
struct mdt_potential {
    mdt::Superpotential value;
};
struct mdt_table {
    mdt::MotiveTable value;
};

namespace {

thread_local std::string last_error;

mdt_status status_of(mdt::ErrorCode code) { return static_cast<mdt_status>(static_cast<int>(code) + 1); }

mdt_status fail(mdt_status status, const std::string& message) {
    last_error = message;
    return status;
}

// Runs `body` and turns any exception into a status code.
template <class Body>
mdt_status guarded(Body&& body) {
    try {
        body();
        return MDT_OK;
    } catch (const mdt::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(MDT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(MDT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(MDT_ERR_INTERNAL, "unknown error");
    }
}

char* duplicate(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

template <class... Ptrs>
bool any_null(const Ptrs*... ptrs) {
    return ((ptrs == nullptr) || ...);
}

mdt_status null_argument() { return fail(MDT_ERR_NULL_ARGUMENT, "null argument"); }

} // namespace

extern "C" {

const char* mdt_version(void) { return MDT_VERSION_STRING; }

const char* mdt_last_error(void) { return last_error.c_str(); }

const char* mdt_status_name(mdt_status status) {
    if (status == MDT_OK) return "ok";
    if (status == MDT_ERR_NULL_ARGUMENT) return "null_argument";
    if (status == MDT_ERR_INTERNAL) return "internal";
    if (status > MDT_OK && status < MDT_ERR_NULL_ARGUMENT)
        return mdt::to_string(static_cast<mdt::ErrorCode>(static_cast<int>(status) - 1));
    return "unknown";
}

void mdt_string_free(char* text) { std::free(text); }

mdt_status mdt_ratio_parse(const char* text, mdt_ratio** out) {
    if (any_null(text, out)) return null_argument();
    return guarded([&] { *out = new mdt_ratio{mdt::parse_motive_ratio(text)}; });
}

void mdt_ratio_free(mdt_ratio* ratio) { delete ratio; }

mdt_status mdt_ratio_to_string(const mdt_ratio* ratio, char** out) {
    if (any_null(ratio, out)) return null_argument();
    return guarded([&] { *out = duplicate(mdt::to_string(ratio->value)); });
}

mdt_status mdt_ratio_to_json(const mdt_ratio* ratio, char** out) {
    if (any_null(ratio, out)) return null_argument();
    return guarded([&] { *out = duplicate(mdt::to_json(ratio->value).dump()); });
}

mdt_status mdt_ratio_equal(const mdt_ratio* a, const mdt_ratio* b, int* out) {
    if (any_null(a, b, out)) return null_argument();
    return guarded([&] { *out = a->value == b->value ? 1 : 0; });
}

mdt_status mdt_ratio_eval(const mdt_ratio* ratio, uint64_t q, int mu3_count, char** out) {
    if (any_null(ratio, out)) return null_argument();
    return guarded([&] {
        const auto value = mdt::as_class(ratio->value);
        if (!value) throw mdt::Error(mdt::ErrorCode::invalid_argument, "evaluation needs a class, not a ratio");
        *out = duplicate(mdt::evaluate(*value, q, mu3_count).get_str());
    });
}

mdt_status mdt_series_parse(const char* text, unsigned order, mdt_series** out) {
    if (any_null(text, out)) return null_argument();
    return guarded([&] { *out = new mdt_series{mdt::parse_series(text, order)}; });
}

void mdt_series_free(mdt_series* series) { delete series; }

mdt_status mdt_series_exp(const mdt_series* bracket, mdt_series** out) {
    if (any_null(bracket, out)) return null_argument();
    return guarded([&] { *out = new mdt_series{mdt::pleth_exp(bracket->value, bracket->value.order())}; });
}

mdt_status mdt_series_log(const mdt_series* series, mdt_series** out) {
    if (any_null(series, out)) return null_argument();
    return guarded([&] { *out = new mdt_series{mdt::pleth_log(series->value, series->value.order())}; });
}

mdt_status mdt_series_order(const mdt_series* series, unsigned* out) {
    if (any_null(series, out)) return null_argument();
    *out = series->value.order();
    return MDT_OK;
}

mdt_status mdt_series_coefficient(const mdt_series* series, unsigned k, mdt_ratio** out) {
    if (any_null(series, out)) return null_argument();
    if (k > series->value.order()) return fail(MDT_ERR_INVALID_ARGUMENT, "coefficient index beyond the series order");
    return guarded([&] { *out = new mdt_ratio{series->value[k]}; });
}

mdt_status mdt_series_to_string(const mdt_series* series, char** out) {
    if (any_null(series, out)) return null_argument();
    return guarded([&] { *out = duplicate(mdt::to_string(series->value)); });
}

mdt_status mdt_series_to_json(const mdt_series* series, char** out) {
    if (any_null(series, out)) return null_argument();
    return guarded([&] { *out = duplicate(mdt::to_json(series->value).dump()); });
}

mdt_status mdt_potential_parse(const char* text, mdt_potential** out) {
    if (any_null(text, out)) return null_argument();
    return guarded([&] { *out = new mdt_potential{mdt::parse_potential(text)}; });
}

void mdt_potential_free(mdt_potential* potential) { delete potential; }

mdt_status mdt_potential_to_string(const mdt_potential* potential, char** out) {
    if (any_null(potential, out)) return null_argument();
    return guarded([&] { *out = duplicate(mdt::to_string(potential->value)); });
}

mdt_status mdt_potential_trace(const mdt_potential* potential, unsigned n, char** out) {
    if (any_null(potential, out)) return null_argument();
    return guarded([&] { *out = duplicate(mdt::to_string(mdt::trace_expand(potential->value, n))); });
}

mdt_status mdt_potential_cells_json(const mdt_potential* potential, unsigned lambda, char** out) {
    if (any_null(potential, out)) return null_argument();
    return guarded([&] {
        mdt::Json cells = mdt::Json::array();
        for (const auto& cell : mdt::cell_equations(potential->value, lambda)) cells.push_back(mdt::to_json(cell));
        *out = duplicate(cells.dump());
    });
}

mdt_status mdt_count_fiber(const mdt_potential* potential, unsigned n, uint64_t q, uint64_t lambda, unsigned jobs,
                           char** count, double* elapsed_ms) {
    if (any_null(potential, count)) return null_argument();
    return guarded([&] {
        const auto r = mdt::count_fiber(potential->value, n, q, lambda, jobs);
        *count = duplicate(r.count.get_str());
        if (elapsed_ms != nullptr) *elapsed_ms = r.elapsed_ms;
    });
}

mdt_status mdt_count_cell(const mdt_potential* potential, unsigned cell, uint64_t q, uint64_t lambda, unsigned jobs,
                          char** count, double* elapsed_ms) {
    if (any_null(potential, count)) return null_argument();
    if (cell < 1 || cell > 3) return fail(MDT_ERR_INVALID_ARGUMENT, "cell must be 1, 2 or 3");
    return guarded([&] {
        const auto cells = mdt::cell_equations(potential->value, lambda == 0 ? 0 : 1);
        const auto r = mdt::count_points(cells[cell - 1], q, lambda, {jobs, {}});
        *count = duplicate(r.count.get_str());
        if (elapsed_ms != nullptr) *elapsed_ms = r.elapsed_ms;
    });
}

mdt_status mdt_lambda_class_count(uint64_t q, size_t* out) {
    if (out == nullptr) return null_argument();
    return guarded([&] { *out = mdt::lambda_classes(q, true).size(); });
}

mdt_status mdt_lambda_class(uint64_t q, size_t index, uint64_t* representative, char** name) {
    if (any_null(representative, name)) return null_argument();
    return guarded([&] {
        const auto classes = mdt::lambda_classes(q, true);
        if (index >= classes.size()) throw mdt::Error(mdt::ErrorCode::invalid_argument, "lambda class index out of range");
        *representative = mdt::lambda_representative(classes[index], q);
        *name = duplicate(mdt::to_string(classes[index]));
    });
}

mdt_status mdt_table_builtin(const char* case_name, int with_fibers, mdt_table** out) {
    if (any_null(case_name, out)) return null_argument();
    return guarded([&] { *out = new mdt_table{mdt::catalog_table(mdt::parse_case(case_name), with_fibers != 0)}; });
}

mdt_status mdt_table_from_json(const char* json, mdt_table** out) {
    if (any_null(json, out)) return null_argument();
    return guarded([&] {
        const auto parsed = mdt::Json::parse(json, nullptr, false);
        if (parsed.is_discarded()) throw mdt::Error(mdt::ErrorCode::parse_error, "motive table is not valid JSON");
        *out = new mdt_table{mdt::table_from_json(parsed)};
    });
}

void mdt_table_free(mdt_table* table) { delete table; }

mdt_status mdt_table_to_json(const mdt_table* table, char** out) {
    if (any_null(table, out)) return null_argument();
    return guarded([&] { *out = duplicate(mdt::to_json(table->value).dump(2)); });
}

mdt_status mdt_induct_fiber(const mdt_table* table, unsigned n, unsigned lambda, mdt_ratio** out) {
    if (any_null(table, out)) return null_argument();
    return guarded([&] { *out = new mdt_ratio{mdt::induct_fiber(n, lambda, table->value)}; });
}

mdt_status mdt_induct_delta(const mdt_table* table, unsigned n, mdt_ratio** out) {
    if (any_null(table, out)) return null_argument();
    return guarded([&] { *out = new mdt_ratio{mdt::induct_delta(n, table->value)}; });
}

mdt_status mdt_catalog_json(const char* case_name, char** out) {
    if (any_null(case_name, out)) return null_argument();
    return guarded([&] {
        const auto c = mdt::parse_case(case_name);
        *out = duplicate(mdt::to_json(c, mdt::catalog(c)).dump(2));
    });
}

mdt_status mdt_verify(const char* case_name, const uint64_t* primes, size_t n_primes, unsigned jobs,
                      char** report_json, char** report_plain, int* passed) {
    if (any_null(case_name, passed)) return null_argument();
    if (primes == nullptr && n_primes != 0) return null_argument();
    return guarded([&] {
        mdt::VerifyOptions options;
        if (primes != nullptr) options.primes.assign(primes, primes + n_primes);
        options.jobs = jobs == 0 ? 1 : jobs;
        const auto report = mdt::run_verification(mdt::parse_case(case_name), options);
        *passed = report.passed() ? 1 : 0;
        if (report_json != nullptr) *report_json = duplicate(mdt::to_json(report).dump(2));
        if (report_plain != nullptr) *report_plain = duplicate(mdt::render_plain(report));
    });
}

} // extern "C"
