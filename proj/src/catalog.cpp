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

#include <mdt/catalog.hpp>

#include <mdt/expression.hpp>

namespace mdt {

namespace {

CatalogEntry entry(std::string label, const char* expression, std::string latex, bool derived = false) {
    return {std::move(label), parse_motive_ratio(expression), std::move(latex), derived};
}

std::vector<CatalogEntry> build_quantum() {
    return {
        entry("M1(1)", "(L-1)^2", R"((\mathbb{L}-1)^2)"),
        entry("M1(0)", "3L^2-3L+1", R"(3 \mathbb{L}^2 - 3 \mathbb{L} + 1)"),
        entry("U1", "(2L-1)/(L-1)", R"(\frac{2 \mathbb{L}-1}{\mathbb{L}-1})"),
        entry("U2", "(L^4+3L^3-2L^2-2L+1)/((L^2-1)(L-1))",
              R"(\frac{\mathbb{L}^4+3\mathbb{L}^3-2 \mathbb{L}^2 - 2 \mathbb{L}+1}{(\mathbb{L}^2-1)(\mathbb{L}-1)})"),
        entry("rep2", "L^5+3L^4-2L^3-2L^2+L", R"(\mathbb{L}^5 + 3 \mathbb{L}^4 -  2 \mathbb{L}^3 - 2 \mathbb{L}^2 + \mathbb{L})"),
        entry("Gr(2,4)", "(L^2+1)(L^2+L+1)", R"((\mathbb{L}^2+1)(\mathbb{L}^2+\mathbb{L}+1))"),
        entry("Gr(2,4)-cone", "(L-1)(L^2+1)(L^2+L+1)+1",
              R"((\mathbb{L}-1)(\mathbb{L}^2+1)(\mathbb{L}^2+\mathbb{L}+1) + 1)"),
        entry("vz=puy", "L^4+2L^3-3L^2+L", R"(\mathbb{L}^4+2 \mathbb{L}^3-3 \mathbb{L}^2+\mathbb{L})"),
        entry("S3-bracket", "(L-1)^2", R"([2nsz=1]_{\mathbb{A}^3} = (\mathbb{L}-1)^2)"),
        entry("S1(1)", "L^9-L^6-2L^5+3L^4-L^3", R"(\mathbb{L}^9-\mathbb{L}^6-2\mathbb{L}^5+3\mathbb{L}^4-\mathbb{L}^3)"),
        entry("S2(1)", "L^8-2L^5+L^4", R"(\mathbb{L}^8- 2 \mathbb{L}^5 + \mathbb{L}^4)"),
        entry("S3(1)", "L^7-2L^4+L^3", R"(\mathbb{L}^7 - 2 \mathbb{L}^4 + \mathbb{L}^3)"),
        entry("BS2(1)", "L^9+L^8+L^7-L^6-4L^5+2L^4", R"(\mathbb{L}^9+\mathbb{L}^8+\mathbb{L}^7-\mathbb{L}^6-4\mathbb{L}^5+2\mathbb{L}^4)"),
        entry("BS2(0)", "L^9+L^8+2L^7+3L^6-6L^5+2L^4",
              R"(\mathbb{L}^9+\mathbb{L}^8+2\mathbb{L}^7+3\mathbb{L}^6-6\mathbb{L}^5+2\mathbb{L}^4)", true),
        entry("M2(1)", "L^11-L^8-3L^7+2L^6+2L^5-L^4",
              R"(\mathbb{L}^{11}-\mathbb{L}^8-3\mathbb{L}^7+2\mathbb{L}^6+2\mathbb{L}^5-\mathbb{L}^4)"),
        entry("M2(0)", "L^11+L^9+2L^8-5L^7+3L^5-L^4",
              R"(\mathbb{L}^{11} + \mathbb{L}^9 + 2 \mathbb{L}^8 - 5\mathbb{L}^7 + 3 \mathbb{L}^5 - \mathbb{L}^4)"),
        entry("dM2", "L^4(L^5+3L^4-2L^3-2L^2+L)", R"(\mathbb{L}^4(\mathbb{L}^5+3 \mathbb{L}^4-2\mathbb{L}^3-2\mathbb{L}^2+\mathbb{L}))"),
        entry("dM2-from-Exp", "L^5(L^4+3L^3-2L^2-2L+1)",
              R"(\mathbb{L}^5(\mathbb{L}^4+3 \mathbb{L}^3-2 \mathbb{L}^2- 2\mathbb{L}+1))"),
    };
}

std::vector<CatalogEntry> build_weyl() {
    return {
        entry("M1(1)", "L^2 mu3", R"(\mathbb{L}^2[\mu_3])"),
        entry("M1(0)", "L^2", R"(\mathbb{L}^2)"),
        entry("dM1", "Mt L^2", R"(\tilde{\mathbf{M}} \mathbb{L}^2)"),
        entry("U1", "L Mt/(L-1)", R"(\frac{\mathbb{L}(1-[\mu_3])}{\mathbb{L}-1})"),
        entry("U2", "(L^3(L-1)+Mt L(L^2-1)+Mt2 L^2)/((L^2-1)(L-1))",
              R"(\frac{\mathbb{L}^3(\mathbb{L}-1) + \tilde{\mathbf{M}} \mathbb{L}(\mathbb{L}^2-1) + \tilde{\mathbf{M}}^2 \mathbb{L}^2}{(\mathbb{L}^2-1)(\mathbb{L}-1)})"),
        entry("S3-bracket", "L^2 mu3", R"([-\frac{2}{3}n^3=1]_{\mathbb{A}^3} = \mathbb{L}^2[\mu_3])"),
        entry("S1(1)", "L^9-L^6", R"(\mathbb{L}^9 - \mathbb{L}^6)"),
        entry("S2(1)", "L^8-Mt L^6", R"(\mathbb{L}^8- \tilde{\mathbf{M}} \mathbb{L}^6)"),
        entry("S3(1)", "L^7-Mt L^5", R"(\mathbb{L}^7 - \tilde{\mathbf{M}} \mathbb{L}^5)"),
        entry("S1(0)", "L^9+L^7-L^6", R"(\mathbb{L}^9 + \mathbb{L}^7 - \mathbb{L}^6)"),
        entry("S2(0)", "L^8", R"(\mathbb{L}^8)"),
        entry("S3(0)", "L^7", R"(\mathbb{L}^7)"),
        entry("BS2(1)", "L^9+L^8+L^7+(mu3-2)L^6+(mu3-1)L^5",
              R"(\mathbb{L}^9 + \mathbb{L}^8 + \mathbb{L}^7 + ([\mu_3]-2) \mathbb{L}^6 + ([\mu_3]-1) \mathbb{L}^5)"),
        entry("BS2(0)", "L^9+L^8+2L^7-L^6", R"(\mathbb{L}^9 + \mathbb{L}^8 + 2 \mathbb{L}^7 - \mathbb{L}^6)"),
        entry("dBS2", "L^7+Mt L^6+Mt L^5", R"(\mathbb{L}^7+ \tilde{\mathbf{M}} \mathbb{L}^6 + \tilde{\mathbf{M}} \mathbb{L}^5)"),
        entry("(L^2-1)dM2/GL2", "L^7+Mt L^6+Mt L^5+Mt2 L^6/(L-1)",
              R"(\mathbb{L}^7 + \tilde{\mathbf{M}} \mathbb{L}^6 + \tilde{\mathbf{M}} \mathbb{L}^5 + \tilde{\mathbf{M}}^2 \frac{\mathbb{L}^6}{(\mathbb{L}-1)})"),
    };
}

} // namespace

const char* to_string(Case c) noexcept { return c == Case::quantum ? "quantum" : "weyl"; }

Case parse_case(std::string_view name) {
    if (name == "quantum") return Case::quantum;
    if (name == "weyl") return Case::weyl;
    throw Error(ErrorCode::invalid_argument, "unknown case '" + std::string(name) + "' (expected quantum or weyl)");
}

std::string potential_text(Case c) { return c == Case::quantum ? "XYZ + XZY" : "XYZ - XZY - 1/3 XXX"; }

std::string conjectured_bracket(Case c) {
    return c == Case::quantum ? "(2L-1)/(L-1)*t/(1-t) + (L-1)*t^2/(1-t^2)" : "L*Mt/(L-1)*t/(1-t)";
}

const std::vector<CatalogEntry>& catalog(Case c) {
    static const std::vector<CatalogEntry> quantum = build_quantum();
    static const std::vector<CatalogEntry> weyl = build_weyl();
    return c == Case::quantum ? quantum : weyl;
}

const CatalogEntry& catalog_entry(Case c, std::string_view label) {
    for (const auto& e : catalog(c))
        if (e.label == label) return e;
    throw Error(ErrorCode::missing_entry, "no catalog entry '" + std::string(label) + "' for " + to_string(c));
}

MotiveClass catalog_class(Case c, std::string_view label) {
    const auto value = as_class(catalog_entry(c, label).value);
    if (!value) throw Error(ErrorCode::invalid_argument, "catalog entry '" + std::string(label) + "' is a ratio");
    return *value;
}

std::array<std::string, 3> displayed_cell_equations(Case c) {
    if (c == Case::quantum)
        return {"2rvz+puz+pvy+rty+psy+rux+puw+tz+vx+sx+tw", "2rvz+pvy+rty+nty+pz+rx+nx+pw", "2rvz+pv+rt+nt+ps"};
    return {"-1/3 r^3+((w-z)p+rx)u+((v-s)p-rt)y-rp+(z-w)t+(s-v)x",
            "-1/3 n^3-1/3 r^3+(vp+(n-r)t)y+(w-z)p+(r-n)x", "-1/3 n^3-1/3 r^3+(v-s)p+(n-r)t"};
}

MotiveTable catalog_table(Case c, bool with_fibers) {
    MotiveTable table(3);
    table.set(1, 1, EntryKind::fiber, catalog_class(c, "M1(1)"));
    table.set(1, 0, EntryKind::fiber, catalog_class(c, "M1(0)"));
    table.set(2, 1, EntryKind::bs, catalog_class(c, "BS2(1)"));
    table.set(2, 0, EntryKind::bs, catalog_class(c, "BS2(0)"));
    if (with_fibers && c == Case::quantum) {
        table.set(2, 1, EntryKind::fiber, catalog_class(c, "M2(1)"));
        table.set(2, 0, EntryKind::fiber, catalog_class(c, "M2(0)"));
    }
    return table;
}

} // namespace mdt
