#pragma once

// Stability of GLDPC / D-GLDPC ensembles on the BEC. All slopes are taken with
// respect to p = 1 - I_A at p = 0. In that orientation the ensemble is stable
// at channel erasure q when
//     ∂I_E,V/∂p|₀ (q)  >=  dI_E,C^{-1}/dp|₀ = 1 / (dI_E,C/dp|₀),
// i.e.  q λ₂⁽ʳ⁾ + Σ_{d_min=2} Σ_z q^z (1-q)^(k-z) 2λ_i Δ_{n-2,k-z}/n_i
//         <= [ρ'_SPC(1) + Σ_{d_min=2} 2ρ_i Δ_{n-2}/n_i]^{-1}.
// Only component codes with d_min = 2 (rep-2, SPC and generic d_min = 2
// codes) contribute.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgldpc/ensemble.hpp"

namespace dgldpc {

/// Contribution 2ρ_iΔ_{n-2}/n_i of one check type with d_min = 2.
struct CheckStabilityTerm {
    std::size_t type_index = 0;
    std::string kind;
    double term = 0.0;
};

/// Contributions 2λ_iΔ_{n-2,k-z}/n_i, z = 0..k, of one variable type with d_min = 2.
struct VariableStabilityTerm {
    std::size_t type_index = 0;
    std::string kind;
    std::vector<double> terms_by_z;
};

struct Applicability {
    bool is_gldpc = false;          // no generalized variable types
    bool all_var_dmin_ge3 = false;  // every generalized variable type has d_min >= 3
    bool all_chk_dmin_ge3 = false;  // every generalized check type has d_min >= 3
};

struct StabilityReport {
    double cnd_slope_at_zero = 0.0;
    /// Monomial coefficients in q of ∂I_E,V/∂p at p = 0.
    std::vector<double> vnd_slope_fn;
    /// Absent when generalized d_min = 2 variable types prevent solving for q; may be +inf.
    std::optional<double> gldpc_bound;
    std::vector<CheckStabilityTerm> dmin2_check_terms;
    std::vector<VariableStabilityTerm> dmin2_var_terms;
    Applicability applicability;

    // Slopes with respect to I_A (negated) for plotting.
    double cnd_slope_at_zero_ia() const noexcept { return 0.0 - cnd_slope_at_zero; }
    std::vector<double> vnd_slope_fn_ia() const;
};

/// dI_E,C/dp at p = 0: -ρ'_SPC(1) - Σ 2ρ_iΔ_{n-2}/n_i.
double cnd_derivative_at_zero(const ValidatedEnsemble& ens);

/// ∂I_E,V/∂p at p = 0 for channel erasure q.
double vnd_derivative_at_zero(const ValidatedEnsemble& ens, double q);

/// [λ₂⁽ʳ⁾ (ρ'_SPC(1) + Σ 2ρ_iΔ_{n-2}/n_i)]^{-1}, +inf when either factor is 0,
/// nullopt when a generalized variable type has d_min = 2.
std::optional<double> gldpc_stability_bound(const ValidatedEnsemble& ens);

struct StabilityCheck {
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;  // +inf when the CND bracket is 0
    double margin = 0.0;
};

/// Evaluates both sides of the D-GLDPC stability inequality at q.
StabilityCheck dgldpc_stability_check(const ValidatedEnsemble& ens, double q);

struct StabilityBoundary {
    std::vector<double> roots;  // sorted q in [0, 1] with lhs(q) = rhs
    bool vacuous = false;       // rhs infinite: the condition never binds
};

/// All crossings, from a 10^4-point sign scan refined by bisection to 1e-10.
StabilityBoundary dgldpc_stability_boundary(const ValidatedEnsemble& ens);

struct DerivativeMatching {
    bool endpoint_ok = false;
    double slope_gap = 0.0;
    bool tangent_at_zero = false;
};

/// Compares the VND slope with the CND inverse slope at p = 0.
/// Throws UndefinedSlope when the CND slope is zero.
DerivativeMatching derivative_matching_check(const ValidatedEnsemble& ens, double q,
                                             double tangency_tolerance = 1e-9);

StabilityReport stability_report(const ValidatedEnsemble& ens);

/// +inf as "inf", absent bound as null.
nlohmann::ordered_json to_json(const StabilityReport& report);
nlohmann::ordered_json to_json(const StabilityCheck& check);

}  // namespace dgldpc
