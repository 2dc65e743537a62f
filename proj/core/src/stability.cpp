#include "dgldpc/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dgldpc/errors.hpp"

namespace dgldpc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHoldsTolerance = 1e-12;
constexpr double kEndpointTolerance = 1e-12;
constexpr std::size_t kBoundaryGrid = 10000;
constexpr double kBoundaryResolution = 1e-10;

void require_probability(double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in [0, 1]");
}

// 2 λ Δ_{n-2,k-z} / n for z = 0..k.
std::vector<double> variable_terms(const NodeProfile& v) {
    std::vector<double> out(v.k + 1, 0.0);
    for (std::size_t z = 0; z <= v.k; ++z) {
        out[z] = 2.0 * v.edge_fraction * static_cast<double>(v.delta.delta_n2_kz.at(z)) /
                 static_cast<double>(v.n);
    }
    return out;
}

double check_term(const NodeProfile& c) {
    return 2.0 * c.edge_fraction * static_cast<double>(c.delta.delta_n2) / static_cast<double>(c.n);
}

// Σ_z terms[z] q^z (1-q)^(k-z)
double bernstein_sum(const std::vector<double>& terms, double q) {
    const std::size_t k = terms.size() - 1;
    double sum = 0.0;
    for (std::size_t z = 0; z <= k; ++z) {
        if (terms[z] == 0.0) continue;
        double w = 1.0;
        for (std::size_t i = 0; i < z; ++i) w *= q;
        for (std::size_t i = 0; i < k - z; ++i) w *= 1.0 - q;
        sum += terms[z] * w;
    }
    return sum;
}

// ρ'_SPC(1) + Σ 2ρ_iΔ_{n-2}/n_i
double cnd_bracket(const ValidatedEnsemble& ens) {
    double sum = 0.0;
    for (const auto& c : ens.check_profiles()) sum += check_term(c);
    return sum;
}

double stability_lhs(const ValidatedEnsemble& ens, double q) {
    double sum = 0.0;
    for (const auto& v : ens.variable_profiles()) sum += bernstein_sum(variable_terms(v), q);
    return sum;
}

Applicability applicability(const ValidatedEnsemble& ens) {
    Applicability a;
    a.is_gldpc = true;
    a.all_var_dmin_ge3 = true;
    a.all_chk_dmin_ge3 = true;
    for (const auto& v : ens.variable_profiles()) {
        if (!v.generalized) continue;
        a.is_gldpc = false;
        if (v.d_min < 3) a.all_var_dmin_ge3 = false;
    }
    for (const auto& c : ens.check_profiles()) {
        if (c.generalized && c.d_min < 3) a.all_chk_dmin_ge3 = false;
    }
    return a;
}

nlohmann::ordered_json number_or_inf(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

}  // namespace

std::vector<double> StabilityReport::vnd_slope_fn_ia() const {
    std::vector<double> out;
    out.reserve(vnd_slope_fn.size());
    for (double c : vnd_slope_fn) out.push_back(0.0 - c);
    return out;
}

double cnd_derivative_at_zero(const ValidatedEnsemble& ens) { return -cnd_bracket(ens); }

double vnd_derivative_at_zero(const ValidatedEnsemble& ens, double q) {
    require_probability(q);
    return -stability_lhs(ens, q);
}

std::optional<double> gldpc_stability_bound(const ValidatedEnsemble& ens) {
    const auto a = applicability(ens);
    if (!(a.is_gldpc || a.all_var_dmin_ge3)) return std::nullopt;
    // Here the VND slope is -q·L with L = λ₂⁽ʳ⁾ (rep-2 declared generic included).
    const double lambda2 = -vnd_derivative_at_zero(ens, 1.0);
    const double bracket = cnd_bracket(ens);
    if (lambda2 == 0.0 || bracket == 0.0) return kInf;
    return 1.0 / (lambda2 * bracket);
}

StabilityCheck dgldpc_stability_check(const ValidatedEnsemble& ens, double q) {
    require_probability(q);
    StabilityCheck out;
    out.lhs = stability_lhs(ens, q);
    const double bracket = cnd_bracket(ens);
    out.rhs = bracket == 0.0 ? kInf : 1.0 / bracket;
    out.margin = out.rhs - out.lhs;
    out.holds = out.lhs <= out.rhs + kHoldsTolerance;
    return out;
}

StabilityBoundary dgldpc_stability_boundary(const ValidatedEnsemble& ens) {
    StabilityBoundary out;
    const double bracket = cnd_bracket(ens);
    if (bracket == 0.0) {
        out.vacuous = true;
        return out;
    }
    const double rhs = 1.0 / bracket;
    const auto f = [&](double q) { return stability_lhs(ens, q) - rhs; };
    const auto grid = [](std::size_t i) {
        return static_cast<double>(i) / static_cast<double>(kBoundaryGrid);
    };

    double q0 = 0.0;
    double f0 = f(q0);
    if (f0 == 0.0) out.roots.push_back(q0);
    for (std::size_t i = 1; i <= kBoundaryGrid; ++i) {
        const double q1 = grid(i);
        const double f1 = f(q1);
        if (f1 == 0.0) {
            out.roots.push_back(q1);
        } else if (f0 != 0.0 && (f0 < 0.0) != (f1 < 0.0)) {
            double lo = q0;
            double hi = q1;
            double flo = f0;
            while (hi - lo > kBoundaryResolution) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            out.roots.push_back(0.5 * (lo + hi));
        }
        q0 = q1;
        f0 = f1;
    }
    return out;
}

DerivativeMatching derivative_matching_check(const ValidatedEnsemble& ens, double q,
                                             double tangency_tolerance) {
    require_probability(q);
    const double cnd_slope = cnd_derivative_at_zero(ens);
    if (cnd_slope == 0.0) {
        throw UndefinedSlope("CND slope at p = 0 is zero; the inverse slope is undefined");
    }
    DerivativeMatching out;
    out.endpoint_ok = std::abs(exit_vnd(ens, 0.0, q) - 1.0) <= kEndpointTolerance &&
                      std::abs(exit_cnd(ens, 0.0) - 1.0) <= kEndpointTolerance;
    out.slope_gap = vnd_derivative_at_zero(ens, q) - 1.0 / cnd_slope;
    out.tangent_at_zero = std::abs(out.slope_gap) <= tangency_tolerance;
    return out;
}

StabilityReport stability_report(const ValidatedEnsemble& ens) {
    StabilityReport r;
    r.cnd_slope_at_zero = cnd_derivative_at_zero(ens);
    r.gldpc_bound = gldpc_stability_bound(ens);
    r.applicability = applicability(ens);

    const auto& declared_v = ens.ensemble().variable_nodes;
    const auto& declared_c = ens.ensemble().check_nodes;

    std::size_t degree = 0;
    for (const auto& v : ens.variable_profiles()) degree = std::max(degree, v.k);
    r.vnd_slope_fn.assign(degree + 1, 0.0);

    const auto vars = ens.variable_profiles();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto& v = vars[i];
        const auto terms = variable_terms(v);
        // -Σ_z c_z q^z (1-q)^(k-z) expanded into monomials.
        for (std::size_t z = 0; z <= v.k; ++z) {
            if (terms[z] == 0.0) continue;
            double binom = 1.0;  // C(k-z, j)
            for (std::size_t j = 0; j + z <= v.k; ++j) {
                const double sign = (j % 2 == 0) ? -1.0 : 1.0;
                r.vnd_slope_fn[z + j] += sign * terms[z] * binom;
                binom = binom * static_cast<double>(v.k - z - j) / static_cast<double>(j + 1);
            }
        }
        if (v.d_min == 2) r.dmin2_var_terms.push_back({i, describe(declared_v[i].kind), terms});
    }

    const auto checks = ens.check_profiles();
    for (std::size_t i = 0; i < checks.size(); ++i) {
        if (checks[i].d_min == 2) {
            r.dmin2_check_terms.push_back({i, describe(declared_c[i].kind), check_term(checks[i])});
        }
    }
    return r;
}

nlohmann::ordered_json to_json(const StabilityReport& report) {
    nlohmann::ordered_json j;
    j["cnd_slope_at_zero"] = report.cnd_slope_at_zero;
    j["cnd_slope_at_zero_ia"] = report.cnd_slope_at_zero_ia();
    j["vnd_slope_fn"] = report.vnd_slope_fn;
    j["vnd_slope_fn_ia"] = report.vnd_slope_fn_ia();
    j["gldpc_bound"] = report.gldpc_bound ? number_or_inf(*report.gldpc_bound)
                                          : nlohmann::ordered_json(nullptr);
    auto& checks = j["dmin2_check_terms"] = nlohmann::ordered_json::array();
    for (const auto& t : report.dmin2_check_terms) {
        checks.push_back({{"type_index", t.type_index}, {"kind", t.kind}, {"term", t.term}});
    }
    auto& vars = j["dmin2_var_terms"] = nlohmann::ordered_json::array();
    for (const auto& t : report.dmin2_var_terms) {
        vars.push_back(
            {{"type_index", t.type_index}, {"kind", t.kind}, {"terms_by_z", t.terms_by_z}});
    }
    j["applicability"] = {{"is_gldpc", report.applicability.is_gldpc},
                          {"all_var_dmin_ge3", report.applicability.all_var_dmin_ge3},
                          {"all_chk_dmin_ge3", report.applicability.all_chk_dmin_ge3}};
    return j;
}

nlohmann::ordered_json to_json(const StabilityCheck& check) {
    nlohmann::ordered_json j;
    j["holds"] = check.holds;
    j["lhs"] = check.lhs;
    j["rhs"] = number_or_inf(check.rhs);
    j["margin"] = number_or_inf(check.margin);
    return j;
}

}  // namespace dgldpc
