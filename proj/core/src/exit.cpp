#include "dgldpc/exit.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dgldpc/ensemble.hpp"
#include "dgldpc/errors.hpp"
#include "dgldpc/json_format.hpp"

namespace dgldpc {

namespace {

constexpr std::size_t kMonotoneGrid = 1024;
constexpr double kMonotoneSlack = 1e-15;

void require_probability(const char* name, double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                    format_double(x));
    }
}

// out[i] = x^i for i = 0..count-1, by repeated multiplication (0^0 = 1).
template <std::size_t N>
void powers(std::array<double, N>& out, double x, std::size_t count) {
    out[0] = 1.0;
    for (std::size_t i = 1; i < count; ++i) out[i] = out[i - 1] * x;
}

// x^e by repeated multiplication.
double ipow(double x, std::size_t e) {
    double r = 1.0;
    for (std::size_t i = 0; i < e; ++i) r *= x;
    return r;
}

double invert_cnd_unchecked(const ValidatedEnsemble& ens, double target) {
    const double top = exit_cnd(ens, 0.0);
    if (target >= top) return 0.0;
    if (target <= exit_cnd(ens, 1.0)) return 1.0;
    double lo = 0.0;
    double hi = 1.0;
    double f_lo = top;
    double f_hi = exit_cnd(ens, 1.0);
    for (int step = 0; step < 200; ++step) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f = exit_cnd(ens, mid);
        if (f >= target) {
            lo = mid;
            f_lo = f;
        } else {
            hi = mid;
            f_hi = f;
        }
    }
    return std::abs(f_lo - target) <= std::abs(f_hi - target) ? lo : hi;
}

}  // namespace

ExitCoefficients check_exit_coefficients(const InfoFunctionTable& info, std::size_t k) {
    ExitCoefficients c;
    c.n = info.n();
    c.k = k;
    c.a_t.resize(c.n);
    for (std::size_t t = 0; t < c.n; ++t) {
        c.a_t[t] = static_cast<Count>(c.n - t) * info[c.n - t] -
                   static_cast<Count>(t + 1) * info[c.n - t - 1];
    }
    return c;
}

ExitCoefficients exit_coefficients(const InfoFunctionTable& info,
                                   const SplitInfoFunctionTable& split) {
    auto c = check_exit_coefficients(info, split.k());
    const auto n = c.n;
    const auto k = c.k;
    c.a_tz.resize(n * (k + 1));
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t z = 0; z <= k; ++z) {
            c.a_tz[t * (k + 1) + z] = static_cast<Count>(n - t) * split.at(n - t, k - z) -
                                      static_cast<Count>(t + 1) * split.at(n - t - 1, k - z);
        }
    }
    return c;
}

ExitCoefficients exit_coefficients(const ComponentCode& code) {
    return exit_coefficients(info_functions(code), split_info_functions(code));
}

double exit_repetition(std::size_t length, double p, double q) {
    return 1.0 - repetition_erasure(length, p, q);
}

double repetition_erasure(std::size_t length, double p, double q) {
    require_probability("p", p);
    require_probability("q", q);
    return q * ipow(p, length - 1);
}

double exit_spc(std::size_t length, double p) {
    require_probability("p", p);
    return ipow(1.0 - p, length - 1);
}

double spc_erasure(std::size_t length, double p) {
    require_probability("p", p);
    // 1 - (1-p)^(j-1) = p * Σ_{i<j-1} (1-p)^i, a sum of nonnegative terms.
    const double r = 1.0 - p;
    double s = 1.0;
    for (std::size_t i = 2; i < length; ++i) s = 1.0 + r * s;
    return p * s;
}

double check_erasure(const ExitCoefficients& c, double p) {
    require_probability("p", p);
    std::array<double, 33> pp;
    std::array<double, 33> rp;
    powers(pp, p, c.n);
    powers(rp, 1.0 - p, c.n);
    double sum = 0.0;
    for (std::size_t t = 0; t < c.n; ++t) {
        if (c.a_t[t] == 0) continue;
        sum += static_cast<double>(c.a_t[t]) * pp[t] * rp[c.n - 1 - t];
    }
    return sum / static_cast<double>(c.n);
}

double exit_check_generic(const ExitCoefficients& c, double p) { return 1.0 - check_erasure(c, p); }

double exit_check_generic(const ComponentCode& code, double p) {
    return exit_check_generic(check_exit_coefficients(info_functions(code), code.k()), p);
}

double variable_erasure(const ExitCoefficients& c, double p, double q) {
    require_probability("p", p);
    require_probability("q", q);
    if (!c.has_variable_form()) {
        throw std::invalid_argument("coefficients lack the variable-node (split) form");
    }
    std::array<double, 33> pp;
    std::array<double, 33> rp;
    std::array<double, 33> qq;
    std::array<double, 33> rq;
    powers(pp, p, c.n);
    powers(rp, 1.0 - p, c.n);
    powers(qq, q, c.k + 1);
    powers(rq, 1.0 - q, c.k + 1);
    double sum = 0.0;
    for (std::size_t t = 0; t < c.n; ++t) {
        const double pt = pp[t] * rp[c.n - 1 - t];
        if (pt == 0.0) continue;
        double inner = 0.0;
        for (std::size_t z = 0; z <= c.k; ++z) {
            const auto a = c.a_tz[t * (c.k + 1) + z];
            if (a == 0) continue;
            inner += static_cast<double>(a) * qq[z] * rq[c.k - z];
        }
        sum += pt * inner;
    }
    return sum / static_cast<double>(c.n);
}

double exit_variable_generic(const ExitCoefficients& c, double p, double q) {
    return 1.0 - variable_erasure(c, p, q);
}

double exit_variable_generic(const ComponentCode& code, double p, double q) {
    return exit_variable_generic(exit_coefficients(code), p, q);
}

double exit_vnd(const ValidatedEnsemble& ens, double p, double q) {
    double sum = 0.0;
    for (const auto& v : ens.variable_profiles()) {
        const double node = v.family == NodeFamily::repetition
                                ? exit_repetition(v.n, p, q)
                                : exit_variable_generic(v.tables->coefficients, p, q);
        sum += v.edge_fraction * node;
    }
    return sum;
}

double exit_vnd_split(const ValidatedEnsemble& ens, double p, double q) {
    require_probability("p", p);
    require_probability("q", q);
    double rep_mass = 0.0;
    double lambda_r = 0.0;  // λ_r(p) = Σ_j λ_j^(r) p^(j-1)
    double generalized = 0.0;
    for (const auto& v : ens.variable_profiles()) {
        if (v.family == NodeFamily::repetition) {
            rep_mass += v.edge_fraction;
            lambda_r += v.edge_fraction * ipow(p, v.n - 1);
        } else {
            generalized += v.edge_fraction * exit_variable_generic(v.tables->coefficients, p, q);
        }
    }
    return rep_mass - q * lambda_r + generalized;
}

double vnd_erasure(const ValidatedEnsemble& ens, double p, double q) {
    double sum = 0.0;
    for (const auto& v : ens.variable_profiles()) {
        const double node = v.family == NodeFamily::repetition
                                ? repetition_erasure(v.n, p, q)
                                : variable_erasure(v.tables->coefficients, p, q);
        sum += v.edge_fraction * node;
    }
    return sum;
}

double exit_cnd(const ValidatedEnsemble& ens, double p) {
    double sum = 0.0;
    for (const auto& c : ens.check_profiles()) {
        const double node = c.family == NodeFamily::spc
                                ? exit_spc(c.n, p)
                                : exit_check_generic(c.tables->coefficients, p);
        sum += c.edge_fraction * node;
    }
    return sum;
}

double exit_cnd_split(const ValidatedEnsemble& ens, double p) {
    require_probability("p", p);
    const double x = 1.0 - p;
    double rho_spc = 0.0;  // ρ_SPC(1-p)
    double generalized = 0.0;
    for (const auto& c : ens.check_profiles()) {
        if (c.family == NodeFamily::spc) {
            rho_spc += c.edge_fraction * ipow(x, c.n - 1);
        } else {
            generalized += c.edge_fraction * exit_check_generic(c.tables->coefficients, p);
        }
    }
    return rho_spc + generalized;
}

double cnd_erasure(const ValidatedEnsemble& ens, double p) {
    double sum = 0.0;
    for (const auto& c : ens.check_profiles()) {
        const double node = c.family == NodeFamily::spc ? spc_erasure(c.n, p)
                                                        : check_erasure(c.tables->coefficients, p);
        sum += c.edge_fraction * node;
    }
    return sum;
}

void require_monotone_cnd(const ValidatedEnsemble& ens) {
    double previous = exit_cnd(ens, 0.0);
    const double first = previous;
    for (std::size_t i = 1; i < kMonotoneGrid; ++i) {
        const double p = static_cast<double>(i) / static_cast<double>(kMonotoneGrid - 1);
        const double v = exit_cnd(ens, p);
        if (v > previous + kMonotoneSlack) {
            throw MonotonicityError("CND EXIT function increases near p = " + format_double(p));
        }
        previous = v;
    }
    if (!(previous < first)) {
        throw MonotonicityError("CND EXIT function is constant on [0, 1]");
    }
}

double inverse_exit_cnd(const ValidatedEnsemble& ens, double target) {
    require_probability("target", target);
    require_monotone_cnd(ens);
    return invert_cnd_unchecked(ens, target);
}

ExitChart sample_exit_chart(const ValidatedEnsemble& ens, double q, std::size_t npoints) {
    require_probability("q", q);
    if (npoints < 2) throw std::invalid_argument("an EXIT chart needs at least 2 points");
    require_monotone_cnd(ens);

    ExitChart chart;
    chart.vnd.channel_q = q;
    chart.vnd.points.reserve(npoints);
    chart.cnd_inverse.points.reserve(npoints);
    for (std::size_t step = 0; step < npoints; ++step) {
        const std::size_t i = npoints - 1 - step;
        const double ia = static_cast<double>(i) / static_cast<double>(npoints - 1);
        chart.vnd.points.push_back({ia, exit_vnd(ens, 1.0 - ia, q)});
        chart.cnd_inverse.points.push_back({ia, 1.0 - invert_cnd_unchecked(ens, ia)});
    }
    return chart;
}

std::string to_csv(const ExitCurve& curve) {
    std::string out = "ia,value\n";
    for (const auto& pt : curve.points) {
        out += format_double(pt.ia) + "," + format_double(pt.value) + "\n";
    }
    return out;
}

std::string to_csv(const ExitChart& chart) {
    if (chart.vnd.points.size() != chart.cnd_inverse.points.size()) {
        throw DimensionError("EXIT chart curves have different grids");
    }
    std::string out = "ia,vnd,cnd_inv\n";
    for (std::size_t i = 0; i < chart.vnd.points.size(); ++i) {
        out += format_double(chart.vnd.points[i].ia) + "," +
               format_double(chart.vnd.points[i].value) + "," +
               format_double(chart.cnd_inverse.points[i].value) + "\n";
    }
    return out;
}

}  // namespace dgldpc
