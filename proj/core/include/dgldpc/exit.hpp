#pragma once

// EXIT functions on the BEC. Arguments p and q are erasure probabilities
// (a-priori extrinsic channel and communication channel); I_A = 1 - p.
// Node-level functions return mutual information; the *_erasure variants
// return 1 - I_E evaluated without cancellation.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dgldpc/codeprops.hpp"

namespace dgldpc {

class ValidatedEnsemble;

/// Integer coefficients of the node EXIT polynomials.
///   a_t   = (n-t) ẽ_{n-t}     - (t+1) ẽ_{n-t-1},          t = 0..n-1
///   a_t,z = (n-t) ẽ_{n-t,k-z} - (t+1) ẽ_{n-t-1,k-z},      z = 0..k
/// a_tz is empty for check-only coefficient sets.
struct ExitCoefficients {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Count> a_t;
    std::vector<Count> a_tz;  // row-major, n rows of (k+1)

    bool has_variable_form() const noexcept { return !a_tz.empty(); }
    Count a(std::size_t t) const { return a_t.at(t); }
    Count a(std::size_t t, std::size_t z) const { return a_tz.at(t * (k + 1) + z); }
};

ExitCoefficients check_exit_coefficients(const InfoFunctionTable& info, std::size_t k);
/// Both forms; `split` must have every row present.
ExitCoefficients exit_coefficients(const InfoFunctionTable& info,
                                   const SplitInfoFunctionTable& split);
/// Enumerates the full tables of `code`.
ExitCoefficients exit_coefficients(const ComponentCode& code);

// Closed forms.
double exit_repetition(std::size_t length, double p, double q);
double repetition_erasure(std::size_t length, double p, double q);
double exit_spc(std::size_t length, double p);
double spc_erasure(std::size_t length, double p);

// Generic check node: I_E(p) = 1 - (1/n) Σ_t a_t p^t (1-p)^(n-t-1).
double check_erasure(const ExitCoefficients& c, double p);
double exit_check_generic(const ExitCoefficients& c, double p);
double exit_check_generic(const ComponentCode& code, double p);

// Generic variable node: the same with an extra Σ_z q^z (1-q)^(k-z) over a_t,z.
double variable_erasure(const ExitCoefficients& c, double p, double q);
double exit_variable_generic(const ExitCoefficients& c, double p, double q);
double exit_variable_generic(const ComponentCode& code, double p, double q);

// Ensemble mixtures. The *_split forms regroup repetition / SPC terms into
// λ_r(x) and ρ_SPC(x); they evaluate the same function.
double exit_vnd(const ValidatedEnsemble& ens, double p, double q);
double exit_vnd_split(const ValidatedEnsemble& ens, double p, double q);
double vnd_erasure(const ValidatedEnsemble& ens, double p, double q);

double exit_cnd(const ValidatedEnsemble& ens, double p);
double exit_cnd_split(const ValidatedEnsemble& ens, double p);
double cnd_erasure(const ValidatedEnsemble& ens, double p);

/// Throws MonotonicityError unless exit_cnd is non-increasing on a 1024-point
/// grid and exit_cnd(1) < exit_cnd(0).
void require_monotone_cnd(const ValidatedEnsemble& ens);

/// p in [0,1] with |exit_cnd(p) - target| <= 1e-12, by bisection.
double inverse_exit_cnd(const ValidatedEnsemble& ens, double target);

struct ExitPoint {
    double ia;     // a-priori information on the chart's horizontal axis
    double value;  // mutual information on the vertical axis

    double p() const noexcept { return 1.0 - ia; }
};

/// Points are ordered by increasing p (decreasing I_A).
struct ExitCurve {
    std::vector<ExitPoint> points;
    std::optional<double> channel_q;
};

struct ExitChart {
    ExitCurve vnd;          // I_E,V(I_A; q)
    ExitCurve cnd_inverse;  // I_E,C^{-1}: for each I_A on the grid, the CND input that yields it
};

/// Both curves on a uniform I_A grid of `npoints` >= 2 points.
ExitChart sample_exit_chart(const ValidatedEnsemble& ens, double q, std::size_t npoints);

/// "ia,value" CSV, 17 significant digits, LF endings.
std::string to_csv(const ExitCurve& curve);
/// "ia,vnd,cnd_inv" CSV over the shared grid.
std::string to_csv(const ExitChart& chart);

}  // namespace dgldpc
