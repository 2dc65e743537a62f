#pragma once

// Edge-perspective D-GLDPC ensembles: node types with edge fractions (λ_i on
// the variable side, ρ_i on the check side), validation of the d_min >= 2
// hypothesis, design rate and the JSON description format.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dgldpc/binmat.hpp"
#include "dgldpc/codeprops.hpp"
#include "dgldpc/exit.hpp"

namespace dgldpc {

struct Repetition {
    std::size_t length = 0;
    friend bool operator==(const Repetition&, const Repetition&) = default;
};

struct SingleParityCheck {
    std::size_t length = 0;
    friend bool operator==(const SingleParityCheck&, const SingleParityCheck&) = default;
};

struct GenericCode {
    BinaryMatrix generator;
    friend bool operator==(const GenericCode&, const GenericCode&) = default;
};

using NodeKind = std::variant<Repetition, SingleParityCheck, GenericCode>;

struct NodeType {
    NodeKind kind;
    double edge_fraction = 0.0;
    friend bool operator==(const NodeType&, const NodeType&) = default;
};

/// Unvalidated description, exactly as written.
struct Ensemble {
    std::vector<NodeType> variable_nodes;
    std::vector<NodeType> check_nodes;
    friend bool operator==(const Ensemble&, const Ensemble&) = default;
};

enum class NodeFamily { repetition, spc, generic };

/// Tables enumerated once for a generic node type and shared read-only.
struct GenericTables {
    ComponentCode code;
    InfoFunctionTable info;
    std::optional<SplitInfoFunctionTable> split;  // variable side only
    ExitCoefficients coefficients;
};

/// Per-type data computed at validation.
struct NodeProfile {
    NodeFamily family = NodeFamily::generic;
    /// A generic type whose code is neither a repetition code (variable side)
    /// nor an SPC code (check side).
    bool generalized = false;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d_min = 0;
    double edge_fraction = 0.0;
    /// Δ_{n-2}; Δ_{n-2,k-z} is filled for variable-side types only.
    DeltaParams delta;
    std::shared_ptr<const GenericTables> tables;  // generic only
};

class ValidatedEnsemble {
public:
    const Ensemble& ensemble() const noexcept { return ensemble_; }
    std::span<const NodeProfile> variable_profiles() const noexcept { return variable_; }
    std::span<const NodeProfile> check_profiles() const noexcept { return check_; }

private:
    friend ValidatedEnsemble validate(const Ensemble& ens);

    Ensemble ensemble_;
    std::vector<NodeProfile> variable_;
    std::vector<NodeProfile> check_;
};

/// Checks fractions (each in (0,1], sums within 1e-12 of 1), d_min >= 2, generator
/// rank and size caps, rejects duplicate types, and caches the property tables.
/// Throws ValidationError (or DimensionError / CapacityError).
ValidatedEnsemble validate(const Ensemble& ens);

/// R = 1 - [Σ_check ρ_i (n_i - k_i)/n_i] / [Σ_var λ_i k_i/n_i].
double design_rate(const ValidatedEnsemble& ens);

/// Parses the JSON description. Structural checks only; call validate() next.
/// Throws ParseError (with line/column for JSON syntax errors).
Ensemble parse_ensemble(std::string_view text);

/// JSON with keys in schema order, 2-space indentation, trailing LF.
std::string serialize_ensemble(const Ensemble& ens);

/// Short label such as "repetition(3)", "spc(6)" or "generic(7,4)".
std::string describe(const NodeKind& kind);

}  // namespace dgldpc
