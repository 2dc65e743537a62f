#include "dgldpc/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "dgldpc/errors.hpp"

namespace dgldpc {

namespace {

constexpr double kFractionSumTolerance = 1e-12;
// Above this dimension the distance is found through independent sets instead of 2^k codewords.
constexpr std::size_t kBruteForceDistanceMaxK = 20;

std::string location(std::string_view side, std::size_t index, const NodeKind& kind) {
    return std::string(side) + "[" + std::to_string(index) + "] " + describe(kind);
}

std::size_t minimum_distance(const ComponentCode& code) {
    return code.k() <= kBruteForceDistanceMaxK ? min_distance_bruteforce(code)
                                               : min_independent_set_size(code);
}

NodeProfile profile_repetition(std::size_t length) {
    NodeProfile p;
    p.family = NodeFamily::repetition;
    p.n = length;
    p.k = 1;
    p.d_min = length;
    // Only rep-2 has a rank-deficient (n-2)-column selection: the empty one.
    const Count d = length == 2 ? 1 : 0;
    p.delta.delta_n2 = d;
    p.delta.delta_n2_kz = {0, d};
    return p;
}

NodeProfile profile_spc(std::size_t length) {
    NodeProfile p;
    p.family = NodeFamily::spc;
    p.n = length;
    p.k = length - 1;
    p.d_min = 2;
    // Each pair of removed columns costs exactly one rank: Δ = C(j, 2).
    p.delta.delta_n2 = binomial(length, 2);
    return p;
}

NodeProfile profile_generic(const BinaryMatrix& generator, bool variable_side,
                            const std::string& where) {
    std::optional<ComponentCode> code;
    try {
        code.emplace(generator);
    } catch (const DimensionError& e) {
        throw DimensionError(where + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
    }

    NodeProfile p;
    p.family = NodeFamily::generic;
    p.n = code->n();
    p.k = code->k();
    p.d_min = minimum_distance(*code);
    if (p.d_min < 2) {
        throw ValidationError(where + ": minimum distance " + std::to_string(p.d_min) +
                              " < 2 is not allowed");
    }
    p.generalized = variable_side ? !code->is_repetition() : !code->is_single_parity_check();

    auto info = info_functions(*code);
    std::optional<SplitInfoFunctionTable> split;
    ExitCoefficients coefficients;
    if (variable_side) {
        try {
            split = split_info_functions(*code);
        } catch (const CapacityError& e) {
            throw CapacityError(where + ": " + e.what());
        }
        coefficients = exit_coefficients(info, *split);
        p.delta = delta_params(*code, info, *split);
    } else {
        coefficients = check_exit_coefficients(info, code->k());
        p.delta.delta_n2 = static_cast<Count>(p.k) * binomial(p.n, 2) - info[p.n - 2];
    }
    p.tables = std::make_shared<const GenericTables>(
        GenericTables{std::move(*code), std::move(info), std::move(split), std::move(coefficients)});
    return p;
}

std::vector<NodeProfile> validate_side(const std::vector<NodeType>& types, bool variable_side) {
    const std::string_view side = variable_side ? "variable_nodes" : "check_nodes";
    if (types.empty()) throw ValidationError(std::string(side) + " is empty");

    std::vector<NodeProfile> out;
    double sum = 0.0;
    for (std::size_t i = 0; i < types.size(); ++i) {
        const auto& t = types[i];
        const auto where = location(side, i, t.kind);
        if (!std::isfinite(t.edge_fraction) || t.edge_fraction <= 0.0 || t.edge_fraction > 1.0) {
            throw ValidationError(where + ": edge fraction must lie in (0, 1]");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (types[j].kind == t.kind) {
                throw ValidationError(where + ": duplicate of " + std::string(side) + "[" +
                                      std::to_string(j) + "]");
            }
        }
        sum += t.edge_fraction;

        NodeProfile p = std::visit(
            [&](const auto& kind) -> NodeProfile {
                using K = std::decay_t<decltype(kind)>;
                if constexpr (std::is_same_v<K, Repetition>) {
                    if (!variable_side) {
                        throw ValidationError(where +
                                              ": repetition nodes belong to the variable side; "
                                              "declare the code as generic");
                    }
                    if (kind.length < 2) throw ValidationError(where + ": length must be >= 2");
                    return profile_repetition(kind.length);
                } else if constexpr (std::is_same_v<K, SingleParityCheck>) {
                    if (variable_side) {
                        throw ValidationError(where +
                                              ": spc nodes belong to the check side; "
                                              "declare the code as generic");
                    }
                    if (kind.length < 2) throw ValidationError(where + ": length must be >= 2");
                    return profile_spc(kind.length);
                } else {
                    return profile_generic(kind.generator, variable_side, where);
                }
            },
            t.kind);
        p.edge_fraction = t.edge_fraction;
        out.push_back(std::move(p));
    }
    if (std::abs(sum - 1.0) > kFractionSumTolerance) {
        throw ValidationError(std::string(side) + ": edge fractions sum to " +
                              std::to_string(sum) + ", expected 1");
    }
    return out;
}

// 1-based line/column of a 0-based byte offset.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

std::size_t read_length(const nlohmann::json& node, const std::string& where) {
    if (!node.contains("length")) throw ParseError(where + ": missing \"length\"");
    const auto& v = node.at("length");
    if (!v.is_number_unsigned()) {
        throw ParseError(where + ": \"length\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

NodeType read_node(const nlohmann::json& node, const std::string& where) {
    if (!node.is_object()) throw ParseError(where + ": node type must be an object");
    for (const auto& item : node.items()) {
        const auto& key = item.key();
        if (key != "kind" && key != "length" && key != "generator" && key != "edge_fraction") {
            throw ParseError(where + ": unknown key \"" + key + "\"");
        }
    }
    if (!node.contains("kind") || !node.at("kind").is_string()) {
        throw ParseError(where + ": missing string \"kind\"");
    }
    if (!node.contains("edge_fraction") || !node.at("edge_fraction").is_number()) {
        throw ParseError(where + ": missing numeric \"edge_fraction\"");
    }

    NodeType out;
    out.edge_fraction = node.at("edge_fraction").get<double>();
    const auto kind = node.at("kind").get<std::string>();
    if (kind == "repetition" || kind == "spc") {
        if (node.contains("generator")) {
            throw ParseError(where + ": \"generator\" is only valid for generic nodes");
        }
        const auto length = read_length(node, where);
        if (kind == "repetition") {
            out.kind = Repetition{length};
        } else {
            out.kind = SingleParityCheck{length};
        }
    } else if (kind == "generic") {
        if (node.contains("length")) {
            throw ParseError(where + ": \"length\" is not valid for generic nodes");
        }
        if (!node.contains("generator") || !node.at("generator").is_string()) {
            throw ParseError(where + ": missing string \"generator\"");
        }
        try {
            out.kind = GenericCode{BinaryMatrix::parse(node.at("generator").get<std::string>())};
        } catch (const ParseError& e) {
            throw ParseError(where + ": malformed generator: " + e.what());
        } catch (const DimensionError& e) {
            throw ParseError(where + ": malformed generator: " + e.what());
        }
    } else {
        throw ParseError(where + ": unknown kind \"" + kind + "\"");
    }
    return out;
}

std::vector<NodeType> read_side(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
    const auto& arr = doc.at(key);
    if (!arr.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
    std::vector<NodeType> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out.push_back(read_node(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
    }
    return out;
}

nlohmann::ordered_json write_node(const NodeType& t) {
    nlohmann::ordered_json j;
    std::visit(
        [&](const auto& kind) {
            using K = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<K, Repetition>) {
                j["kind"] = "repetition";
                j["length"] = kind.length;
            } else if constexpr (std::is_same_v<K, SingleParityCheck>) {
                j["kind"] = "spc";
                j["length"] = kind.length;
            } else {
                j["kind"] = "generic";
                j["generator"] = kind.generator.to_string();
            }
        },
        t.kind);
    j["edge_fraction"] = t.edge_fraction;
    return j;
}

}  // namespace

ValidatedEnsemble validate(const Ensemble& ens) {
    ValidatedEnsemble out;
    out.variable_ = validate_side(ens.variable_nodes, true);
    out.check_ = validate_side(ens.check_nodes, false);
    out.ensemble_ = ens;
    return out;
}

double design_rate(const ValidatedEnsemble& ens) {
    double bits_per_edge = 0.0;
    for (const auto& v : ens.variable_profiles()) {
        bits_per_edge += v.edge_fraction * static_cast<double>(v.k) / static_cast<double>(v.n);
    }
    double checks_per_edge = 0.0;
    for (const auto& c : ens.check_profiles()) {
        checks_per_edge +=
            c.edge_fraction * static_cast<double>(c.n - c.k) / static_cast<double>(c.n);
    }
    return 1.0 - checks_per_edge / bits_per_edge;
}

Ensemble parse_ensemble(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto offset = e.byte > 0 ? e.byte - 1 : 0;
        const auto [line, column] = line_column(text, offset);
        throw ParseError(std::string("JSON syntax error: ") + e.what(), line, column);
    }
    if (!doc.is_object()) throw ParseError("ensemble document must be a JSON object", 1, 1);
    for (const auto& item : doc.items()) {
        if (item.key() != "variable_nodes" && item.key() != "check_nodes") {
            throw ParseError("unknown top-level key \"" + item.key() + "\"");
        }
    }
    Ensemble ens;
    ens.variable_nodes = read_side(doc, "variable_nodes");
    ens.check_nodes = read_side(doc, "check_nodes");
    return ens;
}

std::string serialize_ensemble(const Ensemble& ens) {
    nlohmann::ordered_json doc;
    doc["variable_nodes"] = nlohmann::ordered_json::array();
    doc["check_nodes"] = nlohmann::ordered_json::array();
    for (const auto& t : ens.variable_nodes) doc["variable_nodes"].push_back(write_node(t));
    for (const auto& t : ens.check_nodes) doc["check_nodes"].push_back(write_node(t));
    return doc.dump(2) + "\n";
}

std::string describe(const NodeKind& kind) {
    return std::visit(
        [](const auto& k) -> std::string {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Repetition>) {
                return "repetition(" + std::to_string(k.length) + ")";
            } else if constexpr (std::is_same_v<K, SingleParityCheck>) {
                return "spc(" + std::to_string(k.length) + ")";
            } else {
                return "generic(" + std::to_string(k.generator.cols()) + "," +
                       std::to_string(k.generator.rows()) + ")";
            }
        },
        kind);
}

}  // namespace dgldpc
