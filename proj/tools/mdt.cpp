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

// mdt: command-line front end over the C API in libmdt.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <mdt/mdt.h>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

using Json = nlohmann::ordered_json;

struct Failure {
    mdt_status status;
    std::string message;
};

void check(mdt_status status) {
    if (status != MDT_OK) throw Failure{status, mdt_last_error()};
}

std::string take(char* text) {
    std::string out = text == nullptr ? "" : text;
    mdt_string_free(text);
    return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Ratio = std::unique_ptr<mdt_ratio, Deleter<mdt_ratio, mdt_ratio_free>>;
using Series = std::unique_ptr<mdt_series, Deleter<mdt_series, mdt_series_free>>;
using Potential = std::unique_ptr<mdt_potential, Deleter<mdt_potential, mdt_potential_free>>;
using Table = std::unique_ptr<mdt_table, Deleter<mdt_table, mdt_table_free>>;

std::string ratio_string(const mdt_ratio* r) {
    char* text = nullptr;
    check(mdt_ratio_to_string(r, &text));
    return take(text);
}

Json ratio_json(const mdt_ratio* r) {
    char* text = nullptr;
    check(mdt_ratio_to_json(r, &text));
    return Json::parse(take(text));
}

struct Options {
    std::string kase = "quantum";
    std::string potential;
    unsigned n = 2;
    std::string lambda = "1";
    std::vector<std::uint64_t> q;
    std::vector<std::uint64_t> primes;
    unsigned order = 2;
    unsigned jobs = 1;
    std::string format;
    std::string out;
    std::string bracket;
    std::string series;
    std::string table;
    unsigned cell = 0;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw Failure{MDT_ERR_INVALID_ARGUMENT, "cannot write " + o.out};
    file << text;
    if (!text.empty() && text.back() != '\n') file << '\n';
}

std::vector<std::string> cases_of(const std::string& kase, bool allow_all) {
    if (kase == "all" && allow_all) return {"quantum", "weyl"};
    if (kase == "quantum" || kase == "weyl") return {kase};
    throw Failure{MDT_ERR_INVALID_ARGUMENT, "unknown case '" + kase + "'"};
}

int cmd_catalog(const Options& o) {
    Json all = Json::object();
    std::ostringstream plain;
    for (const auto& kase : cases_of(o.kase, true)) {
        char* text = nullptr;
        check(mdt_catalog_json(kase.c_str(), &text));
        const Json j = Json::parse(take(text));
        all[kase] = j;
        plain << "# " << kase << ": W = " << j["potential"].get<std::string>() << '\n';
        for (const auto& e : j["entries"])
            plain << e["label"].get<std::string>() << "\t" << e["value"].get<std::string>()
                  << (e["derived"].get<bool>() ? "\t(derived)" : "") << '\n';
        plain << "bracket\t" << j["bracket"].get<std::string>() << '\n';
        for (std::size_t k = 0; k < j["cell_equations"].size(); ++k)
            plain << "S" << k + 1 << " equation\t" << j["cell_equations"][k].get<std::string>() << '\n';
    }
    const Json out = all.size() == 1 ? all.begin().value() : all;
    emit(o, o.format == "json" ? out.dump(2) : plain.str());
    return exit_ok;
}

int cmd_verify(const Options& o) {
    bool passed = true;
    Json all = Json::object();
    std::string plain;
    for (const auto& kase : cases_of(o.kase, true)) {
        char* json = nullptr;
        char* text = nullptr;
        int ok = 0;
        check(mdt_verify(kase.c_str(), o.primes.empty() ? nullptr : o.primes.data(), o.primes.size(), o.jobs, &json,
                         &text, &ok));
        all[kase] = Json::parse(take(json));
        plain += "# " + kase + "\n" + take(text);
        if (!ok) {
            passed = false;
            for (const auto& r : all[kase]["records"])
                if (r["status"] == "fail") {
                    std::cerr << "mdt: " << kase << ": " << r["check"].get<std::string>() << " failed at "
                              << r["location"].get<std::string>() << ": " << r["lhs"].get<std::string>()
                              << " != " << r["rhs"].get<std::string>() << '\n';
                    break;
                }
        }
    }
    const Json out = all.size() == 1 ? all.begin().value() : all;
    emit(o, o.format == "plain" ? plain : out.dump(2));
    return passed ? exit_ok : exit_mismatch;
}

struct LambdaChoice {
    std::uint64_t value;
    std::string name;
};

std::vector<LambdaChoice> lambdas_for(std::uint64_t q, const std::string& selection) {
    std::size_t count = 0;
    check(mdt_lambda_class_count(q, &count));
    std::vector<LambdaChoice> all;
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t rep = 0;
        char* name = nullptr;
        check(mdt_lambda_class(q, i, &rep, &name));
        all.push_back({rep, take(name)});
    }
    if (selection == "all") return all;
    if (selection == "0") return {all.front()};
    return {all.at(1)};
}

int cmd_count(const Options& o) {
    std::vector<std::uint64_t> qs = o.q;
    qs.insert(qs.end(), o.primes.begin(), o.primes.end());
    if (qs.empty()) throw Failure{MDT_ERR_INVALID_ARGUMENT, "count needs --q or --primes"};
    std::string text = o.potential;
    if (text.empty()) {
        char* json = nullptr;
        check(mdt_catalog_json(cases_of(o.kase, false).front().c_str(), &json));
        text = Json::parse(take(json))["potential"].get<std::string>();
    }
    mdt_potential* raw = nullptr;
    check(mdt_potential_parse(text.c_str(), &raw));
    const Potential w(raw);

    std::ostringstream csv;
    Json rows = Json::array();
    csv << "q,lambda_class,count,elapsed_ms\n";
    for (const std::uint64_t q : qs) {
        for (const auto& lambda : lambdas_for(q, o.lambda)) {
            char* count = nullptr;
            double ms = 0;
            if (o.cell != 0) check(mdt_count_cell(w.get(), o.cell, q, lambda.value, o.jobs, &count, &ms));
            else check(mdt_count_fiber(w.get(), o.n, q, lambda.value, o.jobs, &count, &ms));
            const std::string value = take(count);
            csv << q << ',' << lambda.name << ',' << value << ',' << static_cast<long long>(ms + 0.5) << '\n';
            rows.push_back({{"q", q}, {"lambda_class", lambda.name}, {"lambda", lambda.value}, {"count", value}});
        }
    }
    emit(o, o.format == "json" ? rows.dump(2) : csv.str());
    return exit_ok;
}

int cmd_series(const Options& o, bool exp) {
    const std::string& input = exp ? o.bracket : o.series;
    mdt_series* raw = nullptr;
    check(mdt_series_parse(input.c_str(), o.order, &raw));
    const Series in(raw);
    mdt_series* result = nullptr;
    check(exp ? mdt_series_exp(in.get(), &result) : mdt_series_log(in.get(), &result));
    const Series out(result);
    if (o.format == "json") {
        char* json = nullptr;
        check(mdt_series_to_json(out.get(), &json));
        emit(o, Json::parse(take(json)).dump(2));
        return exit_ok;
    }
    std::ostringstream plain;
    for (unsigned k = 0; k <= o.order; ++k) {
        mdt_ratio* c = nullptr;
        check(mdt_series_coefficient(out.get(), k, &c));
        const Ratio coeff(c);
        plain << "t^" << k << "\t" << ratio_string(coeff.get()) << '\n';
    }
    emit(o, plain.str());
    return exit_ok;
}

int cmd_induct(const Options& o, const std::optional<std::string>& lambda) {
    mdt_table* raw = nullptr;
    if (!o.table.empty()) {
        std::ifstream file(o.table, std::ios::binary);
        if (!file) throw Failure{MDT_ERR_INVALID_ARGUMENT, "cannot read " + o.table};
        std::stringstream buffer;
        buffer << file.rdbuf();
        check(mdt_table_from_json(buffer.str().c_str(), &raw));
    } else {
        check(mdt_table_builtin(cases_of(o.kase, false).front().c_str(), 0, &raw));
    }
    const Table table(raw);
    Json out = Json::object();
    out["n"] = o.n;
    std::ostringstream plain;
    mdt_ratio* r = nullptr;
    if (lambda) {
        check(mdt_induct_fiber(table.get(), o.n, *lambda == "0" ? 0 : 1, &r));
        const Ratio fiber(r);
        out["lambda"] = *lambda == "0" ? 0 : 1;
        out["fiber"] = ratio_json(fiber.get());
        out["text"] = ratio_string(fiber.get());
        plain << "M" << o.n << "(" << *lambda << ") = " << ratio_string(fiber.get()) << '\n';
    } else {
        check(mdt_induct_delta(table.get(), o.n, &r));
        const Ratio delta(r);
        out["delta_over_gl"] = ratio_json(delta.get());
        out["text"] = ratio_string(delta.get());
        plain << "dM" << o.n << "/GL" << o.n << " = " << ratio_string(delta.get()) << '\n';
    }
    emit(o, o.format == "plain" ? plain.str() : out.dump(2));
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motivic DT data of cubic superpotentials"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mdt_version()));
    Options o;
    std::optional<std::string> induct_lambda;

    const std::vector<std::string> formats{"json", "csv", "plain"};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", o.out, "Write output to this file");
    };

    auto* catalog = app.add_subcommand("catalog", "List the tabulated motives");
    catalog->add_option("--case", o.kase, "quantum, weyl or all");
    add_common(catalog);

    auto* verify = app.add_subcommand("verify", "Run every consistency check");
    verify->add_option("--case", o.kase, "quantum, weyl or all");
    verify->add_option("--primes", o.primes, "Primes for the counting checks")->delimiter(',');
    verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_common(verify);

    auto* count = app.add_subcommand("count", "Count points of fibers or cells over F_q");
    count->add_option("--case", o.kase, "Use the potential of this case");
    count->add_option("--potential", o.potential, "Cubic superpotential, e.g. \"XYZ+XZY\"");
    count->add_option("--n", o.n, "Matrix size")->check(CLI::Range(1u, 4u));
    count->add_option("--cell", o.cell, "Count cell 1, 2 or 3 of BS_2 instead of the fiber")->check(CLI::Range(1u, 3u));
    count->add_option("--lambda", o.lambda, "0, 1 or all")->check(CLI::IsMember({"0", "1", "all"}));
    count->add_option("--q", o.q, "Field size")->delimiter(',');
    count->add_option("--primes", o.primes, "Several field sizes")->delimiter(',');
    count->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_common(count);

    auto* exp = app.add_subcommand("exp", "Plethystic exponential of a bracket");
    exp->add_option("--bracket", o.bracket, "Series without constant term")->required();
    exp->add_option("--order", o.order, "Truncation order");
    add_common(exp);

    auto* log = app.add_subcommand("log", "Plethystic logarithm of a series");
    log->add_option("--series", o.series, "Series with constant term 1")->required();
    log->add_option("--order", o.order, "Truncation order");
    add_common(log);

    auto* induct = app.add_subcommand("induct", "Run the Brauer-Severi induction");
    induct->add_option("--table", o.table, "Motive table JSON");
    induct->add_option("--case", o.kase, "Use the built-in table of this case");
    induct->add_option("--n", o.n, "Matrix size")->check(CLI::Range(1u, 8u));
    induct->add_option("--lambda", induct_lambda, "Print [M_n(lambda)] instead of the difference")
        ->check(CLI::IsMember({"0", "1"}));
    add_common(induct);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*catalog) {
            if (o.format.empty()) o.format = "plain";
            return cmd_catalog(o);
        }
        if (*verify) {
            if (o.format.empty()) o.format = "json";
            return cmd_verify(o);
        }
        if (*count) {
            if (o.format.empty()) o.format = "csv";
            return cmd_count(o);
        }
        if (o.format.empty()) o.format = *induct ? "json" : "plain";
        if (*exp) return cmd_series(o, true);
        if (*log) return cmd_series(o, false);
        if (*induct) return cmd_induct(o, induct_lambda);
    } catch (const Failure& f) {
        std::cerr << "mdt: " << f.message << '\n';
        return f.status == MDT_ERR_MISMATCH ? exit_mismatch : exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "mdt: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
