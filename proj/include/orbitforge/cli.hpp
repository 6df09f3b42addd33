// cli.hpp
// Command-line front end. run() is the whole program: it parses argv,
// writes results to the data stream (JSON or text) and diagnostics to the
// error stream, and returns the process exit code (0 success, 1 usage,
// 2 input/parse error, 3 equivalence mismatch).

#pragma once

#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "classify.hpp"
#include "equivalence.hpp"
#include "io.hpp"

namespace orbitforge {

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::uint64_t seed = 0;
    GeneratorMode mode = GeneratorMode::reduced;
    bool json = false;
    int trials = 1000;
    bool witness = false;
    int samples = 5;
    std::string output_path;
};

namespace cli_detail {

using nlohmann::json;

inline std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

inline json config_json(const RunConfig& c) {
    return json{{"command", c.command}, {"seed", c.seed},
                {"mode", to_string(c.mode)}, {"output", c.json ? "json" : "text"},
                {"trials", c.trials},       {"witness", c.witness}};
}

inline json mat2_json(const Mat2& u) {
    json rows = json::array();
    for (int i = 0; i < 2; ++i) {
        json row = json::array();
        for (int j = 0; j < 2; ++j) row.push_back({u[i][j].real(), u[i][j].imag()});
        rows.push_back(row);
    }
    return rows;
}

inline std::string mat2_text(const Mat2& u) {
    std::string s;
    for (int i = 0; i < 2; ++i) {
        s += i ? "; " : "[";
        for (int j = 0; j < 2; ++j) {
            if (j) s += ", ";
            s += fmt(u[i][j].real()) + (u[i][j].imag() < 0 ? "-" : "+") +
                 fmt(std::abs(u[i][j].imag())) + "i";
        }
    }
    return s + "]";
}

inline cd parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) return cd{std::stod(text), 0.0};
        return cd{std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParameterError("cannot parse complex value '" + text + "' (expected re[,im])");
    }
}

inline void emit_state(const QubitState& psi, const RunConfig& cfg, std::ostream& out) {
    if (cfg.output_path.empty())
        out << write_state(psi) << "\n";
    else
        write_state_file(psi, cfg.output_path);
}

inline int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    const QubitState psi = read_state_file(cfg.inputs[0]);
    const OrbitReport rep = analyze_orbit(psi, cfg.mode);
    if (cfg.json) {
        json j{{"config", config_json(cfg)},
               {"n", rep.n},
               {"mode", to_string(rep.mode)},
               {"orbit_dim", rep.orbit_dim},
               {"invariant_count", rep.invariant_count},
               {"stabilizer_dim", rep.stabilizer_dim},
               {"tolerance", rep.tolerance},
               {"singular_values", rep.singular_values}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "n: " << rep.n << "\n";
    out << "mode: " << to_string(rep.mode) << "\n";
    out << "orbit_dim: " << rep.orbit_dim << ", invariant_count: " << rep.invariant_count
        << ", stabilizer_dim: " << rep.stabilizer_dim << "\n";
    out << "tolerance: " << fmt(rep.tolerance) << "\n";
    out << "singular_values:";
    for (double s : rep.singular_values) out << " " << fmt(s);
    out << "\n";
    return 0;
}

inline int cmd_invariants(const RunConfig& cfg, const std::string& pattern_path,
                          std::ostream& out) {
    const QubitState psi = read_state_file(cfg.inputs[0]);
    const InvariantFingerprint fp = fingerprint(psi);
    std::optional<std::pair<std::string, cd>> custom;
    if (!pattern_path.empty()) {
        const ContractionPattern pat = read_pattern_file(pattern_path);
        custom = {pat.label, evaluate_invariant(pat, psi)};
    }
    if (cfg.json) {
        json values = json::array();
        for (const auto& [label, value] : fp.values)
            values.push_back({{"label", label}, {"value", value}});
        json j{{"config", config_json(cfg)}, {"n", fp.n},
               {"norm_sq", fp.norm_sq},      {"values", values},
               {"orbit_dim", fp.orbit_dim},  {"stabilizer_dim", fp.stabilizer_dim}};
        if (custom)
            j["custom"] = {{"label", custom->first},
                           {"value", {custom->second.real(), custom->second.imag()}}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "n: " << fp.n << "\n";
    out << "norm_sq: " << fmt(fp.norm_sq) << "\n";
    for (const auto& [label, value] : fp.values) out << label << ": " << fmt(value) << "\n";
    if (custom)
        out << custom->first << ": " << fmt(custom->second.real()) << " + "
            << fmt(custom->second.imag()) << "i (custom, unnormalized state)\n";
    out << "orbit_dim: " << fp.orbit_dim << ", stabilizer_dim: " << fp.stabilizer_dim
        << "\n";
    return 0;
}

inline int cmd_equiv(const RunConfig& cfg, std::ostream& out) {
    const QubitState a = read_state_file(cfg.inputs[0]);
    const QubitState b = read_state_file(cfg.inputs[1]);
    OptimizerConfig opt;
    opt.seed = cfg.seed;
    const EquivVerdict v = lu_equivalent(a, b, cfg.witness, opt);
    if (cfg.json) {
        json j{{"config", config_json(cfg)},
               {"fingerprints_match", v.fingerprints_match},
               {"max_component_gap", v.max_component_gap}};
        if (v.witness) {
            json us = json::array();
            for (const auto& u : v.witness->unitaries) us.push_back(mat2_json(u));
            j["witness"] = {{"residual", v.witness->residual},
                            {"phase", v.witness->phase},
                            {"unitaries", us}};
        }
        out << j.dump(2) << "\n";
    } else {
        out << "fingerprints_match: " << (v.fingerprints_match ? "true" : "false") << "\n";
        out << "max_component_gap: " << fmt(v.max_component_gap) << "\n";
        if (v.witness) {
            out << "witness_residual: " << fmt(v.witness->residual) << "\n";
            out << "witness_phase: " << fmt(v.witness->phase) << "\n";
            for (std::size_t k = 0; k < v.witness->unitaries.size(); ++k)
                out << "U" << (k + 1) << ": " << mat2_text(v.witness->unitaries[k]) << "\n";
        }
    }
    return v.fingerprints_match ? 0 : 3;
}

inline int cmd_schmidt(const RunConfig& cfg, std::ostream& out) {
    const QubitState psi = read_state_file(cfg.inputs[0]);
    const SchmidtForm f = schmidt_2q(psi);
    if (cfg.json) {
        json j{{"config", config_json(cfg)},
               {"N", f.N},
               {"phi", f.phi},
               {"unitaries", json::array({mat2_json(f.u1), mat2_json(f.u2)})}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "N: " << fmt(f.N) << "\n";
    out << "phi: " << fmt(f.phi) << "\n";
    out << "U1: " << mat2_text(f.u1) << "\n";
    out << "U2: " << mat2_text(f.u2) << "\n";
    return 0;
}

inline int cmd_canonical3(const RunConfig& cfg, std::ostream& out) {
    const QubitState psi = read_state_file(cfg.inputs[0]);
    OptimizerConfig opt;
    opt.seed = cfg.seed;
    const CanonicalForm3 c = canonical_3q(psi, opt);
    if (cfg.json) {
        json j{{"config", config_json(cfg)},
               {"N", c.N},
               {"alpha", c.alpha},
               {"beta", c.beta},
               {"gamma", c.gamma},
               {"delta", c.delta},
               {"eta", c.eta},
               {"residual", c.residual},
               {"degenerate", c.degenerate},
               {"unitaries",
                json::array({mat2_json(c.u1), mat2_json(c.u2), mat2_json(c.u3)})}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "N: " << fmt(c.N) << "\n";
    out << "alpha: " << fmt(c.alpha) << ", beta: " << fmt(c.beta)
        << ", gamma: " << fmt(c.gamma) << ", delta: " << fmt(c.delta)
        << ", eta: " << fmt(c.eta) << "\n";
    out << "residual: " << fmt(c.residual) << "\n";
    out << "degenerate: " << (c.degenerate ? "true" : "false") << "\n";
    out << "U1: " << mat2_text(c.u1) << "\n";
    out << "U2: " << mat2_text(c.u2) << "\n";
    out << "U3: " << mat2_text(c.u3) << "\n";
    return 0;
}

inline void print_classification(const StabilizerReport& rep, const RunConfig& cfg,
                                 std::ostream& out) {
    if (cfg.json) {
        json basis = json::array();
        for (const auto& lambda : rep.basis.coefficients) {
            json coeffs = json::array();
            for (Eigen::Index i = 0; i < lambda.size(); ++i) coeffs.push_back(lambda(i));
            basis.push_back(coeffs);
        }
        json j{{"config", config_json(cfg)},
               {"n", rep.n},
               {"mode", to_string(rep.mode)},
               {"dim", rep.dim},
               {"derived_dim", rep.derived_dim},
               {"closure_residual", rep.closure_residual},
               {"label", rep.label},
               {"flip_symmetric", rep.flip_symmetric},
               {"flip_phase", rep.flip_phase},
               {"basis", basis}};
        out << j.dump(2) << "\n";
        return;
    }
    out << "n: " << rep.n << "\n";
    out << "mode: " << to_string(rep.mode) << "\n";
    out << "stabilizer_dim: " << rep.dim << ", derived_dim: " << rep.derived_dim << "\n";
    out << "label: " << rep.label << "\n";
    out << "closure_residual: " << fmt(rep.closure_residual) << "\n";
    out << "flip_symmetric: " << (rep.flip_symmetric ? "true" : "false");
    if (rep.flip_symmetric) out << " (phase " << fmt(rep.flip_phase) << ")";
    out << "\n";
    for (const auto& lambda : rep.basis.coefficients) {
        out << "basis:";
        for (Eigen::Index i = 0; i < lambda.size(); ++i) out << " " << fmt(lambda(i));
        out << "\n";
    }
}

inline int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    const QubitState psi = read_state_file(cfg.inputs[0]);
    print_classification(classify_stabilizer(psi, cfg.mode), cfg, out);
    return 0;
}

inline int cmd_family4(const RunConfig& cfg, const std::array<std::string, 4>& coeffs,
                       std::ostream& out) {
    const QubitState psi =
        family4_state(parse_complex(coeffs[0]), parse_complex(coeffs[1]),
                      parse_complex(coeffs[2]), parse_complex(coeffs[3]));
    if (!cfg.output_path.empty()) write_state_file(psi, cfg.output_path);
    print_classification(classify_stabilizer(psi, cfg.mode), cfg, out);
    return 0;
}

inline int cmd_case_table(const RunConfig& cfg, std::ostream& out) {
    const std::vector<CaseRow> rows = family4_case_table(cfg.samples, cfg.seed);
    if (cfg.json) {
        json jrows = json::array();
        for (const auto& r : rows) {
            json params = json::array();
            for (const auto& p : r.params) params.push_back({p.real(), p.imag()});
            jrows.push_back({{"case", r.name},
                             {"params", params},
                             {"expected_dim", r.expected_dim},
                             {"measured_dim", r.measured_dim},
                             {"derived_dim", r.derived_dim},
                             {"label", r.label},
                             {"flip", r.flip}});
        }
        out << json{{"config", config_json(cfg)}, {"rows", jrows}}.dump(2) << "\n";
        return 0;
    }
    out << std::left << std::setw(26) << "case" << std::right << std::setw(9) << "expected"
        << std::setw(9) << "measured" << std::setw(8) << "derived"
        << "  " << std::left << std::setw(10) << "label"
        << "flip\n";
    for (const auto& r : rows)
        out << std::left << std::setw(26) << r.name << std::right << std::setw(9)
            << r.expected_dim << std::setw(9) << r.measured_dim << std::setw(8)
            << r.derived_dim << "  " << std::left << std::setw(10) << r.label
            << (r.flip ? "yes" : "no") << "\n";
    return 0;
}

inline int cmd_catalog(const RunConfig& cfg, const std::string& name,
                       const std::vector<double>& params, std::ostream& out) {
    emit_state(catalog_state(name, params), cfg, out);
    return 0;
}

inline int cmd_random(const RunConfig& cfg, int n, std::ostream& out) {
    emit_state(random_state(n, cfg.seed), cfg, out);
    return 0;
}

inline int cmd_bounds(const RunConfig& cfg, int n, std::ostream& out) {
    const CountBounds b = count_bounds(n);
    if (cfg.json) {
        json j{{"config", config_json(cfg)},
               {"n", n},
               {"naive", b.naive},
               {"reduced", b.reduced}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "naive: " << b.naive << ", reduced: " << b.reduced << "\n";
    return 0;
}

}  // namespace cli_detail

// argv without the program name
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"local-unitary orbit analysis for n-qubit pure states", "orbit-forge"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string mode_name = "reduced";
    std::array<std::string, 4> family_coeffs{"0", "0", "0", "0"};
    std::string catalog_name;
    std::vector<double> catalog_params;
    int qubits = 0;

    auto add_common = [&](CLI::App* sub, bool with_mode = false) {
        sub->add_option("--seed", cfg.seed, "random seed (default 0)");
        sub->add_flag("--json", cfg.json, "emit one JSON document on stdout");
        sub->add_option("--trials", cfg.trials, "trial count for randomized checks");
        if (with_mode)
            sub->add_option("--mode", mode_name, "generator set: reduced|full")
                ->check(CLI::IsMember({"reduced", "full"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "orbit dimension and stabilizer");
    analyze->add_option("state", cfg.inputs, "state file")->required()->expected(1);
    add_common(analyze, true);

    CLI::App* invars = app.add_subcommand("invariants", "invariant fingerprint");
    invars->add_option("state", cfg.inputs, "state file")->required()->expected(1);
    std::string pattern_path;
    invars->add_option("--pattern", pattern_path,
                       "also evaluate a user-supplied contraction pattern (JSON)");
    add_common(invars);

    CLI::App* equiv = app.add_subcommand("equiv", "local-unitary equivalence of two states");
    equiv->add_option("states", cfg.inputs, "two state files")->required()->expected(2);
    equiv->add_flag("--witness", cfg.witness, "search for an explicit witness");
    add_common(equiv);

    CLI::App* schmidt = app.add_subcommand("schmidt", "two-qubit Schmidt form");
    schmidt->add_option("state", cfg.inputs, "state file")->required()->expected(1);
    add_common(schmidt);

    CLI::App* canonical = app.add_subcommand("canonical3", "three-qubit canonical form");
    canonical->add_option("state", cfg.inputs, "state file")->required()->expected(1);
    add_common(canonical);

    CLI::App* classify = app.add_subcommand("classify", "stabilizer algebra classification");
    classify->add_option("state", cfg.inputs, "state file")->required()->expected(1);
    add_common(classify, true);

    CLI::App* family4 = app.add_subcommand("family4", "classify a e111+b e222+c e112+d e211");
    family4->add_option("--a", family_coeffs[0], "coefficient a as re[,im]")->required();
    family4->add_option("--b", family_coeffs[1], "coefficient b as re[,im]")->required();
    family4->add_option("--c", family_coeffs[2], "coefficient c as re[,im]")->required();
    family4->add_option("--d", family_coeffs[3], "coefficient d as re[,im]")->required();
    family4->add_option("-o,--output", cfg.output_path, "also write the state file");
    add_common(family4, true);

    CLI::App* table = app.add_subcommand("case-table", "stabilizer dims across the family");
    table->add_option("--samples", cfg.samples, "instantiations per case (default 5)");
    add_common(table);

    CLI::App* catalog = app.add_subcommand("catalog", "emit a named catalog state");
    catalog->add_option("name", catalog_name, "singlet|schmidt2|family4|ghz|product|canonical3")
        ->required();
    catalog->add_option("params", catalog_params, "entry parameters");
    catalog->add_option("-o,--output", cfg.output_path, "write to file instead of stdout");
    add_common(catalog);

    CLI::App* random = app.add_subcommand("random", "seeded Haar-random state");
    random->add_option("--n", qubits, "qubit count")->required();
    random->add_option("-o,--output", cfg.output_path, "write to file instead of stdout");
    add_common(random);

    CLI::App* bounds = app.add_subcommand("bounds", "parameter-count lower bounds");
    bounds->add_option("--n", qubits, "qubit count")->required();
    add_common(bounds);

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    cfg.mode = mode_name == "full" ? GeneratorMode::full : GeneratorMode::reduced;

    try {
        CLI::App* sub = app.get_subcommands().front();
        cfg.command = sub->get_name();
        using namespace cli_detail;
        if (sub == analyze) return cmd_analyze(cfg, out);
        if (sub == invars) return cmd_invariants(cfg, pattern_path, out);
        if (sub == equiv) return cmd_equiv(cfg, out);
        if (sub == schmidt) return cmd_schmidt(cfg, out);
        if (sub == canonical) return cmd_canonical3(cfg, out);
        if (sub == classify) return cmd_classify(cfg, out);
        if (sub == family4) return cmd_family4(cfg, family_coeffs, out);
        if (sub == table) return cmd_case_table(cfg, out);
        if (sub == catalog) return cmd_catalog(cfg, catalog_name, catalog_params, out);
        if (sub == random) return cmd_random(cfg, qubits, out);
        if (sub == bounds) return cmd_bounds(cfg, qubits, out);
        err << "error: unknown subcommand\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace orbitforge
