// topoidx - generate hexagonal molecular-graph families, compute
// multiplicative degree-based topological indices exactly, and verify
// closed-form formulas against values computed on the graphs themselves.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <topoidx/topoidx.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1; // verification mismatch or per-index compute failure
constexpr int kExitUsage = 2;   // bad flags, parameters outside validity domain
constexpr int kExitIo = 3;      // missing/unreadable/malformed files

using namespace topoidx;

std::uint64_t resolve_max_digits(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("TOPOIDX_MAX_DIGITS")) {
        const auto parsed = parse_int(env);
        if (!parsed || *parsed < 0)
            throw InvalidParameterError("TOPOIDX_MAX_DIGITS must be a nonnegative integer, got '" +
                                        std::string(env) + "'");
        return static_cast<std::uint64_t>(*parsed);
    }
    return kDefaultMaxDigits;
}

ParamRange require_range(const std::string& text, const char* name) {
    const auto range = parse_range(text);
    if (!range)
        throw InvalidParameterError(std::string("invalid ") + name + " range '" + text +
                                    "' (expected K or LO..HI with LO <= HI)");
    return *range;
}

OutputFormat require_format(const std::string& token) {
    const auto format = format_from_token(token);
    if (!format)
        throw InvalidParameterError("unknown format '" + token +
                                    "' (expected csv, json, markdown)");
    return *format;
}

// ---- gen ----

struct GenOptions {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::string out_path;
};

int run_gen(const FamilyId& family, const std::string& out_path) {
    const MolecularGraph g = generate(family);
    write_edge_list_file(g, out_path);
    std::cout << family_name(family) << " " << params_label(family) << ": "
              << g.vertex_count() << " vertices, " << g.edge_count() << " edges -> " << out_path
              << "\n";
    return kExitOk;
}

// ---- shared index-selection flags ----

struct SelectionOptions {
    std::vector<std::string> index_tokens{"all"};
    std::vector<std::int64_t> a_params;
    std::vector<std::int64_t> s_params;

    IndexSelection selection() const {
        return make_selection(index_tokens, a_params, s_params);
    }
};

void add_selection_flags(CLI::App* cmd, SelectionOptions& opts) {
    cmd->add_option("--index", opts.index_tokens,
                    "indices: all, z1, z2, nk, eliasi, hz1, hz2, gz, gzz, wang")
        ->delimiter(',');
    cmd->add_option("--a", opts.a_params, "exponents for gz/gzz (default -1,1,2,3)")
        ->delimiter(',');
    cmd->add_option("--s", opts.s_params, "exponents for wang (default -1,1,2,3)")
        ->delimiter(',');
}

// ---- compute ----

struct ComputeOptions {
    std::string graph_path;
    SelectionOptions sel;
    std::vector<std::string> a_raw; // raw strings so real (log-domain) values pass through
    std::vector<std::string> s_raw;
    std::string format = "plain";
    std::optional<std::uint64_t> max_digits;
};

// Real-valued parameters are legal for compute only: the value is then
// reported in the log10 domain, with no factored/decimal rendering.
IndexSelection compute_selection(const ComputeOptions& opts) {
    std::vector<std::int64_t> a_int, s_int;
    std::vector<double> a_real, s_real;
    auto split = [](const std::vector<std::string>& raw, std::vector<std::int64_t>& ints,
                    std::vector<double>& reals) {
        for (const auto& text : raw) {
            if (const auto value = parse_int(text)) {
                ints.push_back(*value);
                continue;
            }
            try {
                std::size_t used = 0;
                const double value = std::stod(text, &used);
                if (used != text.size()) throw std::invalid_argument(text);
                reals.push_back(value);
            } catch (const std::exception&) {
                throw InvalidParameterError("invalid exponent '" + text + "'");
            }
        }
    };
    split(opts.a_raw, a_int, a_real);
    split(opts.s_raw, s_int, s_real);

    const std::vector<std::string>& tokens = opts.sel.index_tokens;
    IndexSelection selection = make_selection(tokens, a_int, s_int);
    if (a_real.empty() && s_real.empty()) return selection;

    // Append log-domain choices for the real parameters.
    IndexSelection with_real;
    for (auto& choice : selection.choices) {
        const bool general_gz = choice.label.rfind("gz(", 0) == 0;
        const bool general_gzz = choice.label.rfind("gzz(", 0) == 0;
        const bool general_wang = choice.label.rfind("wang(", 0) == 0;
        // Drop integer-default general entries that the user replaced with reals.
        if ((general_gz || general_gzz) && a_int.empty() && !a_real.empty()) continue;
        if (general_wang && s_int.empty() && !s_real.empty()) continue;
        with_real.choices.push_back(std::move(choice));
    }
    auto real_label = [](std::string_view token, std::string_view param, double value) {
        std::ostringstream label;
        label << token << "(" << param << "=" << value << ")";
        return label.str();
    };
    for (const auto& token : tokens) {
        const bool wants_gz = token == "gz" || token == "all";
        const bool wants_gzz = token == "gzz" || token == "all";
        const bool wants_wang = token == "wang" || token == "all";
        for (double a : a_real) {
            if (wants_gz)
                with_real.choices.push_back(
                    {real_label("gz", "a", a), IndexSpec::edge_sum_power_real(a)});
            if (wants_gzz)
                with_real.choices.push_back(
                    {real_label("gzz", "a", a), IndexSpec::edge_product_power_real(a)});
        }
        if (wants_wang)
            for (double s : s_real)
                with_real.choices.push_back(
                    {real_label("wang", "s", s), IndexSpec::vertex_power_real(s)});
    }
    if (with_real.choices.empty()) throw InvalidParameterError("empty index selection");
    return with_real;
}

int run_compute(const ComputeOptions& opts) {
    // Validate the request before touching the filesystem.
    const IndexSelection selection = compute_selection(opts);
    const std::uint64_t max_digits = resolve_max_digits(opts.max_digits);
    const MolecularGraph g = read_edge_list_file(opts.graph_path);

    if (opts.format != "plain") {
        const OutputFormat format = require_format(opts.format);
        std::vector<ValueRow> rows;
        for (const auto& choice : selection.choices) {
            if (!choice.spec.exact())
                throw InvalidParameterError(
                    "real exponents are reported in the log domain and need --format plain");
            rows.push_back(ValueRow{"file", opts.graph_path,
                                    nlohmann::ordered_json{{"path", opts.graph_path}},
                                    choice.label, compute_index(g, choice.spec)});
        }
        write_rows(rows, format, max_digits, std::cout);
        return kExitOk;
    }

    bool had_failure = false;
    for (const auto& choice : selection.choices) {
        if (!choice.spec.exact()) {
            const double log_value = compute_index_log(g, choice.spec);
            std::cout << choice.label << ": log10=" << detail::format_log10(log_value)
                      << " (log-domain: real exponent)\n";
            continue;
        }
        try {
            const FactoredNumber value = compute_index(g, choice.spec);
            const auto rendered = detail::render_value(value, max_digits);
            std::cout << choice.label << ": factors=" << rendered.factors
                      << " log10=" << rendered.log10;
            if (!rendered.digits.empty()) std::cout << " digits=" << rendered.digits;
            if (!rendered.decimal.empty()) std::cout << " decimal=" << rendered.decimal;
            std::cout << "\n";
        } catch (const IsolatedVertexError& e) {
            std::cout << choice.label << ": error: " << e.what() << "\n";
            had_failure = true;
        }
    }
    return had_failure ? kExitFailure : kExitOk;
}

// ---- closed-form ----

struct ClosedFormOptions {
    std::int64_t m = 0;
    std::int64_t n = 0;
    SelectionOptions sel;
    std::string format = "plain";
    std::optional<std::uint64_t> max_digits;
};

int run_closed_form(const FamilyId& family, const ClosedFormOptions& opts) {
    validate(family);
    const IndexSelection selection = opts.sel.selection();
    const std::uint64_t max_digits = resolve_max_digits(opts.max_digits);

    if (opts.format != "plain") {
        const OutputFormat format = require_format(opts.format);
        std::vector<ValueRow> rows;
        for (const auto& choice : selection.choices)
            rows.push_back(ValueRow{family_name(family), params_label(family),
                                    params_json(family), choice.label,
                                    closed_form(choice.spec, family)});
        write_rows(rows, format, max_digits, std::cout);
        return kExitOk;
    }

    for (const auto& choice : selection.choices) {
        const auto named = named_from_token(choice.label);
        const std::vector<FormulaTerm> terms = named
                                                   ? named_form_terms(*named, family)
                                                   : closed_form_terms(choice.spec, family);
        const FactoredNumber value = canonicalize(terms);
        const auto rendered = detail::render_value(value, max_digits);
        std::cout << choice.label << " @ " << family_name(family) << " "
                  << params_label(family) << ": form=" << terms_to_string(terms)
                  << " factors=" << rendered.factors << " log10=" << rendered.log10;
        if (!rendered.digits.empty()) std::cout << " digits=" << rendered.digits;
        if (!rendered.decimal.empty()) std::cout << " decimal=" << rendered.decimal;
        std::cout << "\n";
    }
    return kExitOk;
}

// ---- verify ----

struct VerifyOptions {
    std::string m_range;
    std::string n_range;
    SelectionOptions sel;
    bool quiet = false;
};

int run_verify(const FamilyGrid& grid, const VerifyOptions& opts) {
    const IndexSelection selection = opts.sel.selection();
    std::size_t cells = 0;
    std::size_t mismatches = 0;
    for (const FamilyId& cell : enumerate_grid(grid)) {
        const FamilyInstance inst = instantiate(cell);
        std::size_t ok = 0;
        double elapsed_ms = 0.0;
        for (const auto& choice : selection.choices) {
            const VerificationReport report = verify_cell(inst, choice);
            ++cells;
            elapsed_ms += report.elapsed.count();
            if (report.match) {
                ++ok;
                continue;
            }
            ++mismatches;
            std::cout << "MISMATCH " << family_name(cell) << " " << params_label(cell) << " "
                      << choice.label << "\n  oracle      = " << to_string(report.oracle)
                      << "\n  closed form = " << to_string(report.closed_form) << "\n";
        }
        if (!opts.quiet)
            std::cout << family_name(cell) << " " << params_label(cell) << " [v="
                      << inst.graph.vertex_count() << " e=" << inst.graph.edge_count() << "] "
                      << ok << "/" << selection.choices.size() << " match (" << elapsed_ms
                      << " ms)\n";
    }
    std::cout << (mismatches == 0 ? "VERIFIED" : "FAILED") << ": " << cells - mismatches << "/"
              << cells << " cells match\n";
    return mismatches == 0 ? kExitOk : kExitFailure;
}

// ---- sweep ----

struct SweepOptions {
    std::string m_range;
    std::string n_range;
    SelectionOptions sel;
    std::string format = "csv";
    std::optional<std::uint64_t> max_digits;
    std::string out_path;
};

int run_sweep_cmd(const FamilyGrid& grid, const SweepOptions& opts) {
    SweepConfig config{grid, opts.sel.selection(), require_format(opts.format),
                       resolve_max_digits(opts.max_digits)};
    if (opts.out_path.empty()) {
        run_sweep(config, std::cout);
        return kExitOk;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + opts.out_path + "' for writing");
    run_sweep(config, out);
    if (!out) throw IoError("write to '" + opts.out_path + "' failed");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiplicative topological indices on hexagonal molecular graphs"};
    app.require_subcommand(1);

    std::vector<std::pair<CLI::App*, std::function<int()>>> runners;
    auto bind = [&](CLI::App* cmd, std::function<int()> runner) {
        runners.emplace_back(cmd, std::move(runner));
    };

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family member as an edge-list file");
    gen->require_subcommand(1);
    GenOptions gen_pah_opts, gen_bz_opts;
    auto* gen_pah = gen->add_subcommand("pah", "hexagonal flake with pendant vertices");
    gen_pah->add_option("--n", gen_pah_opts.n, "ring-layer count (>= 1)")->required();
    gen_pah->add_option("--out", gen_pah_opts.out_path, "output path")->required();
    bind(gen_pah, [&] { return run_gen(PahParams{gen_pah_opts.n}, gen_pah_opts.out_path); });
    auto* gen_bz = gen->add_subcommand("benzenoid", "jagged-rectangle fused-hexagon system");
    gen_bz->add_option("--m", gen_bz_opts.m, "row width parameter (>= 3)")->required();
    gen_bz->add_option("--n", gen_bz_opts.n, "row pair count (>= 1)")->required();
    gen_bz->add_option("--out", gen_bz_opts.out_path, "output path")->required();
    bind(gen_bz, [&] {
        return run_gen(BenzenoidParams{gen_bz_opts.m, gen_bz_opts.n}, gen_bz_opts.out_path);
    });

    // compute
    ComputeOptions compute_opts;
    auto* compute = app.add_subcommand("compute", "compute indices on an edge-list file");
    compute->add_option("--graph", compute_opts.graph_path, "edge-list file")->required();
    compute->add_option("--index", compute_opts.sel.index_tokens,
                        "indices: all, z1, z2, nk, eliasi, hz1, hz2, gz, gzz, wang")
        ->delimiter(',');
    compute->add_option("--a", compute_opts.a_raw, "exponents for gz/gzz; reals go log-domain")
        ->delimiter(',');
    compute->add_option("--s", compute_opts.s_raw, "exponents for wang; reals go log-domain")
        ->delimiter(',');
    compute->add_option("--format", compute_opts.format, "plain (default), csv, json, markdown");
    compute->add_option("--max-digits", compute_opts.max_digits,
                        "decimal rendering cap (default 10000 or TOPOIDX_MAX_DIGITS)");
    bind(compute, [&] { return run_compute(compute_opts); });

    // closed-form
    auto* cf = app.add_subcommand("closed-form", "evaluate closed-form formulas (no graph built)");
    cf->require_subcommand(1);
    ClosedFormOptions cf_pah_opts, cf_bz_opts;
    auto* cf_pah = cf->add_subcommand("pah", "flake family formulas");
    cf_pah->add_option("--n", cf_pah_opts.n, "ring-layer count (>= 1)")->required();
    add_selection_flags(cf_pah, cf_pah_opts.sel);
    cf_pah->add_option("--format", cf_pah_opts.format, "plain (default), csv, json, markdown");
    cf_pah->add_option("--max-digits", cf_pah_opts.max_digits, "decimal rendering cap");
    bind(cf_pah, [&] { return run_closed_form(PahParams{cf_pah_opts.n}, cf_pah_opts); });
    auto* cf_bz = cf->add_subcommand("benzenoid", "jagged-rectangle formulas");
    cf_bz->add_option("--m", cf_bz_opts.m, "row width parameter (>= 3)")->required();
    cf_bz->add_option("--n", cf_bz_opts.n, "row pair count (>= 1)")->required();
    add_selection_flags(cf_bz, cf_bz_opts.sel);
    cf_bz->add_option("--format", cf_bz_opts.format, "plain (default), csv, json, markdown");
    cf_bz->add_option("--max-digits", cf_bz_opts.max_digits, "decimal rendering cap");
    bind(cf_bz, [&] {
        return run_closed_form(BenzenoidParams{cf_bz_opts.m, cf_bz_opts.n}, cf_bz_opts);
    });

    // verify
    auto* verify = app.add_subcommand(
        "verify", "generate graphs and compare computed indices with closed forms");
    verify->require_subcommand(1);
    VerifyOptions verify_pah_opts, verify_bz_opts;
    auto* verify_pah = verify->add_subcommand("pah", "verify the flake family");
    verify_pah->add_option("--n", verify_pah_opts.n_range, "n range, K or LO..HI")->required();
    add_selection_flags(verify_pah, verify_pah_opts.sel);
    verify_pah->add_flag("--quiet", verify_pah_opts.quiet, "only print mismatches and summary");
    bind(verify_pah, [&] {
        return run_verify(PahGrid{require_range(verify_pah_opts.n_range, "--n")},
                          verify_pah_opts);
    });
    auto* verify_bz = verify->add_subcommand("benzenoid", "verify the jagged rectangle");
    verify_bz->add_option("--m", verify_bz_opts.m_range, "m range, K or LO..HI")->required();
    verify_bz->add_option("--n", verify_bz_opts.n_range, "n range, K or LO..HI")->required();
    add_selection_flags(verify_bz, verify_bz_opts.sel);
    verify_bz->add_flag("--quiet", verify_bz_opts.quiet, "only print mismatches and summary");
    bind(verify_bz, [&] {
        return run_verify(BenzenoidGrid{require_range(verify_bz_opts.m_range, "--m"),
                                        require_range(verify_bz_opts.n_range, "--n")},
                          verify_bz_opts);
    });

    // sweep
    auto* sweep = app.add_subcommand("sweep", "tabulate index values over a parameter grid");
    sweep->require_subcommand(1);
    SweepOptions sweep_pah_opts, sweep_bz_opts;
    auto add_sweep_flags = [&](CLI::App* cmd, SweepOptions& opts) {
        add_selection_flags(cmd, opts.sel);
        cmd->add_option("--format", opts.format, "csv (default), json, markdown");
        cmd->add_option("--max-digits", opts.max_digits, "decimal rendering cap");
        cmd->add_option("--out", opts.out_path, "output file (default stdout)");
    };
    auto* sweep_pah = sweep->add_subcommand("pah", "sweep the flake family");
    sweep_pah->add_option("--n", sweep_pah_opts.n_range, "n range, K or LO..HI")->required();
    add_sweep_flags(sweep_pah, sweep_pah_opts);
    bind(sweep_pah, [&] {
        return run_sweep_cmd(PahGrid{require_range(sweep_pah_opts.n_range, "--n")},
                             sweep_pah_opts);
    });
    auto* sweep_bz = sweep->add_subcommand("benzenoid", "sweep the jagged rectangle");
    sweep_bz->add_option("--m", sweep_bz_opts.m_range, "m range, K or LO..HI")->required();
    sweep_bz->add_option("--n", sweep_bz_opts.n_range, "n range, K or LO..HI")->required();
    add_sweep_flags(sweep_bz, sweep_bz_opts);
    bind(sweep_bz, [&] {
        return run_sweep_cmd(BenzenoidGrid{require_range(sweep_bz_opts.m_range, "--m"),
                                           require_range(sweep_bz_opts.n_range, "--n")},
                             sweep_bz_opts);
    });

    try {
        app.parse(argc, argv);
        for (const auto& [cmd, runner] : runners)
            if (cmd->parsed()) return runner();
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const InvalidParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NonIntegerParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
