#pragma once

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "topoidx/closed_forms.hpp"
#include "topoidx/factored.hpp"
#include "topoidx/families.hpp"
#include "topoidx/generators.hpp"
#include "topoidx/graph.hpp"
#include "topoidx/index_engine.hpp"

namespace topoidx {

// ---- parameter ranges and grids ----

/// Inclusive integer range, written "LO..HI" (or a single value "K").
struct ParamRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::int64_t size() const { return hi - lo + 1; }
};

inline std::optional<std::int64_t> parse_int(std::string_view text) {
    std::int64_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

inline std::optional<ParamRange> parse_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto single = parse_int(text);
        if (!single) return std::nullopt;
        return ParamRange{*single, *single};
    }
    const auto lo = parse_int(text.substr(0, dots));
    const auto hi = parse_int(text.substr(dots + 2));
    if (!lo || !hi || *lo > *hi) return std::nullopt;
    return ParamRange{*lo, *hi};
}

struct PahGrid {
    ParamRange n;
};
struct BenzenoidGrid {
    ParamRange m;
    ParamRange n;
};
using FamilyGrid = std::variant<PahGrid, BenzenoidGrid>;

inline std::vector<FamilyId> enumerate_grid(const FamilyGrid& grid) {
    std::vector<FamilyId> cells;
    if (const auto* pah = std::get_if<PahGrid>(&grid)) {
        for (std::int64_t n = pah->n.lo; n <= pah->n.hi; ++n) cells.push_back(PahParams{n});
    } else {
        const auto& bz = std::get<BenzenoidGrid>(grid);
        for (std::int64_t m = bz.m.lo; m <= bz.m.hi; ++m)
            for (std::int64_t n = bz.n.lo; n <= bz.n.hi; ++n)
                cells.push_back(BenzenoidParams{m, n});
    }
    for (const auto& cell : cells) validate(cell);
    return cells;
}

// ---- index selections ----

/// One selected index: a spec plus its display label ("nk", "gz(a=2)", ...).
struct IndexChoice {
    std::string label;
    IndexSpec spec;
};

struct IndexSelection {
    std::vector<IndexChoice> choices;
    static IndexSelection all_default();

    static std::string general_label(std::string_view token, std::string_view param,
                                     std::int64_t value) {
        return std::string(token) + "(" + std::string(param) + "=" + std::to_string(value) + ")";
    }
};

/// Builds a selection from CLI tokens. `tokens` holds names from
/// {all, z1, z2, nk, eliasi, hz1, hz2, gz, gzz, wang}; general tokens take
/// their parameter list from a_params (gz, gzz) or s_params (wang), which
/// default to {-1, 1, 2, 3}.
inline IndexSelection make_selection(const std::vector<std::string>& tokens,
                                     const std::vector<std::int64_t>& a_params = {},
                                     const std::vector<std::int64_t>& s_params = {}) {
    const std::vector<std::int64_t> default_params{-1, 1, 2, 3};
    const auto& a_list = a_params.empty() ? default_params : a_params;
    const auto& s_list = s_params.empty() ? default_params : s_params;

    IndexSelection sel;
    auto add_general = [&](std::string_view token) {
        if (token == "wang") {
            for (std::int64_t s : s_list)
                sel.choices.push_back(
                    {IndexSelection::general_label("wang", "s", s), IndexSpec::vertex_power(s)});
            return;
        }
        for (std::int64_t a : a_list)
            sel.choices.push_back({IndexSelection::general_label(token, "a", a),
                                   token == "gz" ? IndexSpec::edge_sum_power(a)
                                                 : IndexSpec::edge_product_power(a)});
    };
    for (const auto& token : tokens) {
        if (token == "all") {
            for (NamedIndex idx : kAllNamedIndices)
                sel.choices.push_back({std::string(named_token(idx)), named_spec(idx)});
            add_general("gz");
            add_general("gzz");
            add_general("wang");
        } else if (auto named = named_from_token(token)) {
            sel.choices.push_back({token, named_spec(*named)});
        } else if (token == "gz" || token == "gzz" || token == "wang") {
            add_general(token);
        } else {
            throw InvalidParameterError("unknown index '" + token +
                                        "' (expected all, z1, z2, nk, eliasi, hz1, hz2, gz, gzz, "
                                        "wang)");
        }
    }
    if (sel.choices.empty()) throw InvalidParameterError("empty index selection");
    return sel;
}

/// The six special-case indices plus the three general families over
/// parameters {-1, 1, 2, 3}.
inline IndexSelection IndexSelection::all_default() { return make_selection({"all"}); }

// ---- oracle-vs-formula verification ----

/// A generated family member with its partitions, computed once and shared by
/// every index evaluated on it.
struct FamilyInstance {
    FamilyId id;
    MolecularGraph graph;
    DegreePartition dp;
    EdgePartition ep;
};

// Connectivity is a premise of every formula, so it is checked here rather
// than at graph construction (arbitrary ingested files may be disconnected).
inline FamilyInstance instantiate(const FamilyId& family) {
    FamilyInstance inst{family, generate(family), {}, {}};
    if (!inst.graph.is_connected())
        throw Error("generated " + family_name(family) + " " + params_label(family) +
                    " is not connected");
    inst.dp = degree_partition(inst.graph);
    inst.ep = edge_partition(inst.graph);
    return inst;
}

struct VerificationReport {
    FamilyId family;
    std::string index_label;
    FactoredNumber oracle;      // computed on the generated graph
    FactoredNumber closed_form; // formula evaluated at the family parameters
    bool match = false;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::chrono::duration<double, std::milli> elapsed{};
};

inline VerificationReport verify_cell(const FamilyInstance& inst, const IndexChoice& choice) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.family = inst.id;
    report.index_label = choice.label;
    report.oracle = compute_via_partitions(inst.dp, inst.ep, choice.spec);
    report.closed_form = closed_form(choice.spec, inst.id);
    report.match = report.oracle == report.closed_form;
    report.vertices = inst.graph.vertex_count();
    report.edges = inst.graph.edge_count();
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

inline std::vector<VerificationReport> verify_family(const FamilyId& family,
                                                     const IndexSelection& selection) {
    const FamilyInstance inst = instantiate(family);
    std::vector<VerificationReport> reports;
    reports.reserve(selection.choices.size());
    for (const auto& choice : selection.choices) reports.push_back(verify_cell(inst, choice));
    return reports;
}

// ---- tabular output (sweep / compute) ----

enum class OutputFormat { csv, json, markdown };

inline std::optional<OutputFormat> format_from_token(std::string_view token) {
    if (token == "csv") return OutputFormat::csv;
    if (token == "json") return OutputFormat::json;
    if (token == "markdown" || token == "md") return OutputFormat::markdown;
    return std::nullopt;
}

/// One output row: a computed value plus its provenance columns.
struct ValueRow {
    std::string family;
    std::string params;                // display label, e.g. "m=3,n=1"
    nlohmann::ordered_json params_json; // structured form, e.g. {"m":3,"n":1}
    std::string index;
    FactoredNumber value;
};

namespace detail {

inline std::string format_log10(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

inline std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

inline std::string markdown_field(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

struct RenderedValue {
    std::string factors;
    std::string log10;
    std::string digits;  // empty for non-integer (negative-exponent) values
    std::string decimal; // empty when capped or non-integer
};

inline RenderedValue render_value(const FactoredNumber& value, std::uint64_t max_digits) {
    RenderedValue r;
    r.factors = to_string(value);
    r.log10 = format_log10(to_log10(value));
    if (!value.has_negative_exponent()) {
        const DecimalRendering d = to_decimal(value, max_digits);
        r.digits = d.digit_count.str();
        if (d.text) r.decimal = *d.text;
    }
    return r;
}

} // namespace detail

inline void write_rows_csv(const std::vector<ValueRow>& rows, std::uint64_t max_digits,
                           std::ostream& out) {
    out << "family,params,index,factors,log10,digits,decimal\n";
    for (const auto& row : rows) {
        const auto r = detail::render_value(row.value, max_digits);
        out << detail::csv_field(row.family) << ',' << detail::csv_field(row.params) << ','
            << detail::csv_field(row.index) << ',' << detail::csv_field(r.factors) << ','
            << r.log10 << ',' << r.digits << ',' << detail::csv_field(r.decimal) << '\n';
    }
}

inline void write_rows_json(const std::vector<ValueRow>& rows, std::uint64_t max_digits,
                            std::ostream& out) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        obj["family"] = row.family;
        obj["params"] = row.params_json;
        obj["index"] = row.index;
        nlohmann::ordered_json value = to_json(row.value, max_digits);
        for (auto& [key, field] : value.items()) obj[key] = std::move(field);
        array.push_back(std::move(obj));
    }
    out << array.dump(2) << "\n";
}

inline void write_rows_markdown(const std::vector<ValueRow>& rows, std::uint64_t max_digits,
                                std::ostream& out) {
    out << "| family | params | index | factors | log10 | digits | decimal |\n";
    out << "| --- | --- | --- | --- | --- | --- | --- |\n";
    for (const auto& row : rows) {
        const auto r = detail::render_value(row.value, max_digits);
        out << "| " << detail::markdown_field(row.family) << " | "
            << detail::markdown_field(row.params) << " | " << detail::markdown_field(row.index)
            << " | " << detail::markdown_field(r.factors) << " | " << r.log10 << " | " << r.digits
            << " | " << detail::markdown_field(r.decimal) << " |\n";
    }
}

inline void write_rows(const std::vector<ValueRow>& rows, OutputFormat format,
                       std::uint64_t max_digits, std::ostream& out) {
    switch (format) {
    case OutputFormat::csv: write_rows_csv(rows, max_digits, out); break;
    case OutputFormat::json: write_rows_json(rows, max_digits, out); break;
    case OutputFormat::markdown: write_rows_markdown(rows, max_digits, out); break;
    }
}

inline nlohmann::ordered_json params_json(const FamilyId& family) {
    nlohmann::ordered_json j;
    if (const auto* p = std::get_if<PahParams>(&family)) {
        j["n"] = p->n;
    } else {
        const auto& b = std::get<BenzenoidParams>(family);
        j["m"] = b.m;
        j["n"] = b.n;
    }
    return j;
}

struct SweepConfig {
    FamilyGrid grid;
    IndexSelection selection;
    OutputFormat format = OutputFormat::csv;
    std::uint64_t max_digits = kDefaultMaxDigits;
};

/// Emits one row per (family parameters, index), in grid-major order;
/// output is deterministic for a fixed config.
inline void run_sweep(const SweepConfig& config, std::ostream& out) {
    std::vector<ValueRow> rows;
    for (const FamilyId& cell : enumerate_grid(config.grid)) {
        const FamilyInstance inst = instantiate(cell);
        for (const auto& choice : config.selection.choices)
            rows.push_back(ValueRow{family_name(cell), params_label(cell), params_json(cell),
                                    choice.label,
                                    compute_via_partitions(inst.dp, inst.ep, choice.spec)});
    }
    write_rows(rows, config.format, config.max_digits, out);
}

} // namespace topoidx
