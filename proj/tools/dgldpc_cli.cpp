// dgldpc: command-line front end for component-code and ensemble analysis.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgldpc/codeprops.hpp"
#include "dgldpc/de.hpp"
#include "dgldpc/ensemble.hpp"
#include "dgldpc/errors.hpp"
#include "dgldpc/exit.hpp"
#include "dgldpc/json_format.hpp"
#include "dgldpc/stability.hpp"

namespace {

using nlohmann::ordered_json;
using namespace dgldpc;

enum Status : int {
    kOk = 0,
    kUnstable = 1,
    kInputError = 2,
    kNumericalError = 3,
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool verbose = false;

void note(const std::string& line) {
    if (verbose) std::cerr << line << '\n';
}

std::string read_file(const std::string& path) {
    if (!std::filesystem::is_regular_file(path)) throw InputError("cannot open " + path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

ValidatedEnsemble load_ensemble(const std::string& path) {
    auto ens = validate(parse_ensemble(read_file(path)));
    note("loaded " + path + ": " + std::to_string(ens.variable_profiles().size()) +
         " variable type(s), " + std::to_string(ens.check_profiles().size()) + " check type(s)");
    return ens;
}

void emit(const ordered_json& j) { std::cout << dump_json(j) << '\n'; }

template <typename T>
ordered_json array_of(const std::vector<T>& values) {
    ordered_json out = ordered_json::array();
    for (const auto& v : values) out.push_back(v);
    return out;
}

int code_info(const std::string& path) {
    std::string text = read_file(path);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    const auto code = ComponentCode::parse(text);

    ordered_json j;
    j["n"] = code.n();
    j["k"] = code.k();
    try {
        j["d_min_bruteforce"] = min_distance_bruteforce(code);
    } catch (const CapacityError& e) {
        note(std::string("brute-force distance skipped: ") + e.what());
        j["d_min_bruteforce"] = nullptr;
    }
    j["d_min_independent_set"] = min_independent_set_size(code);
    const auto info = info_functions(code);
    j["info_functions"] = array_of(info.values);
    const auto delta = delta_params(code);
    j["delta_n2"] = delta.delta_n2;
    j["delta_n2_kz"] = array_of(delta.delta_n2_kz);
    note("code (" + std::to_string(code.n()) + "," + std::to_string(code.k()) + ")");
    emit(j);
    return kOk;
}

ordered_json profile_json(const NodeProfile& p, const NodeType& type) {
    ordered_json j;
    j["kind"] = describe(type.kind);
    j["edge_fraction"] = p.edge_fraction;
    j["n"] = p.n;
    j["k"] = p.k;
    j["d_min"] = p.d_min;
    j["generalized"] = p.generalized;
    return j;
}

int analyze(const std::string& path) {
    const auto ens = load_ensemble(path);
    ordered_json validation;
    validation["valid"] = true;
    auto& vars = validation["variable_nodes"] = ordered_json::array();
    for (std::size_t i = 0; i < ens.variable_profiles().size(); ++i)
        vars.push_back(profile_json(ens.variable_profiles()[i], ens.ensemble().variable_nodes[i]));
    auto& checks = validation["check_nodes"] = ordered_json::array();
    for (std::size_t i = 0; i < ens.check_profiles().size(); ++i)
        checks.push_back(profile_json(ens.check_profiles()[i], ens.ensemble().check_nodes[i]));

    ordered_json j;
    j["validation"] = std::move(validation);
    j["design_rate"] = design_rate(ens);
    j["stability"] = to_json(stability_report(ens));
    note("design rate " + format_double(design_rate(ens)));
    emit(j);
    return kOk;
}

int threshold(const std::string& path, bool trace) {
    const auto ens = load_ensemble(path);
    ThresholdOptions opts;
    opts.keep_trace = trace;
    const auto result = find_threshold(ens, opts);
    note("q* = " + format_double(result.q_star) + " after " +
         std::to_string(result.bisection_steps) + " probes");
    emit(to_json(result));
    return kOk;
}

int exit_chart(const std::string& path, double q, std::size_t npoints, const std::string& out) {
    const auto ens = load_ensemble(path);
    const auto csv = to_csv(sample_exit_chart(ens, q, npoints));
    std::ofstream file(out, std::ios::binary);
    if (!file) throw InputError("cannot write " + out);
    file << csv;
    if (!file.flush()) throw InputError("cannot write " + out);
    note("wrote " + std::to_string(npoints) + " points to " + out);

    ordered_json j;
    j["out"] = out;
    j["q"] = q;
    j["npoints"] = npoints;
    emit(j);
    return kOk;
}

int check_stability(const std::string& path, double q) {
    const auto ens = load_ensemble(path);
    const auto check = dgldpc_stability_check(ens, q);
    ordered_json j;
    j["q"] = q;
    const auto fields = to_json(check);
    for (const auto& [key, value] : fields.items()) j[key] = value;
    note(check.holds ? "stability condition holds" : "stability condition violated");
    emit(j);
    return check.holds ? kOk : kUnstable;
}

int fail(int status, const std::string& message) {
    std::string line = message;
    for (auto& c : line)
        if (c == '\n' || c == '\r') c = ' ';
    std::cerr << "error: " << line << '\n';
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analysis of GLDPC and D-GLDPC ensembles on the binary erasure channel", "dgldpc"};
    app.require_subcommand(1);
    app.add_flag("-v,--verbose", verbose, "Human-readable progress on stderr");

    std::string input;
    auto* info_cmd = app.add_subcommand("code-info", "Properties of a component code");
    info_cmd->add_option("matrix-file", input, "Generator matrix, one row per line")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "Validation, design rate and stability report");
    analyze_cmd->add_option("ensemble", input, "Ensemble JSON file")->required();

    bool trace = false;
    auto* threshold_cmd = app.add_subcommand("threshold", "Density-evolution threshold");
    threshold_cmd->add_option("ensemble", input, "Ensemble JSON file")->required();
    threshold_cmd->add_flag("--trace", trace, "Include the residual trace at the threshold");

    double q = 0.0;
    std::size_t npoints = 101;
    std::string out;
    auto* chart_cmd = app.add_subcommand("exit-chart", "Sample the EXIT chart to CSV");
    chart_cmd->add_option("ensemble", input, "Ensemble JSON file")->required();
    chart_cmd->add_option("--q", q, "Channel erasure probability")->required()->check(CLI::Range(0.0, 1.0));
    chart_cmd->add_option("--npoints", npoints, "Grid size")->check(CLI::Range(2, 1'000'000));
    chart_cmd->add_option("--out", out, "Output CSV path")->required();

    auto* stab_cmd = app.add_subcommand("check-stability", "Evaluate the stability inequality at q");
    stab_cmd->add_option("ensemble", input, "Ensemble JSON file")->required();
    stab_cmd->add_option("--q", q, "Channel erasure probability")->required()->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(kInputError, e.what());
    }

    try {
        if (*info_cmd) return code_info(input);
        if (*analyze_cmd) return analyze(input);
        if (*threshold_cmd) return threshold(input, trace);
        if (*chart_cmd) return exit_chart(input, q, npoints, out);
        if (*stab_cmd) return check_stability(input, q);
    } catch (const InputError& e) {
        return fail(kInputError, e.what());
    } catch (const ParseError& e) {
        return fail(kInputError, std::string("parse: ") + e.what());
    } catch (const ValidationError& e) {
        return fail(kInputError, std::string("validation: ") + e.what());
    } catch (const DimensionError& e) {
        return fail(kInputError, std::string("validation: ") + e.what());
    } catch (const CapacityError& e) {
        return fail(kInputError, std::string("capacity: ") + e.what());
    } catch (const InvalidSelection& e) {
        return fail(kInputError, e.what());
    } catch (const Error& e) {
        return fail(kNumericalError, std::string("numerical: ") + e.what());
    } catch (const std::invalid_argument& e) {
        return fail(kInputError, e.what());
    } catch (const std::exception& e) {
        return fail(kNumericalError, e.what());
    }
    return kInputError;
}
