#include "dgldpc/de.hpp"

#include <bit>
#include <stdexcept>

#include "dgldpc/errors.hpp"
#include "dgldpc/exit.hpp"
#include "dgldpc/json_format.hpp"

namespace dgldpc {

namespace {

// Relative growth beyond rounding noise.
constexpr double kGrowthTolerance = 1e-12;
constexpr std::size_t kTraceHead = 1000;

bool traced(std::size_t iteration) {
    return iteration <= kTraceHead || std::has_single_bit(iteration);
}

}  // namespace

DeRun de_iterate(const ValidatedEnsemble& ens, double q, std::size_t max_iters, double tol,
                 bool keep_trace) {
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in [0, 1]");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (max_iters == 0) throw std::invalid_argument("max_iters must be positive");

    DeRun run;
    double x = vnd_erasure(ens, 1.0, q);
    run.iters = 1;
    if (keep_trace) run.trace.emplace_back(1, x);

    while (!(x < tol) && run.iters < max_iters) {
        const double next = vnd_erasure(ens, cnd_erasure(ens, x), q);
        ++run.iters;
        if (next > x * (1.0 + kGrowthTolerance)) {
            throw NumericalAnomaly("density evolution increased the erasure probability from " +
                                   format_double(x) + " to " + format_double(next) +
                                   " at iteration " + std::to_string(run.iters) +
                                   " (q = " + format_double(q) + ")");
        }
        const bool stalled = next >= x;
        x = next;
        if (keep_trace && traced(run.iters)) run.trace.emplace_back(run.iters, x);
        if (stalled) break;
    }
    if (keep_trace && (run.trace.empty() || run.trace.back().first != run.iters)) {
        run.trace.emplace_back(run.iters, x);
    }
    run.final_x = x;
    run.success = x < tol;
    return run;
}

ThresholdResult find_threshold(const ValidatedEnsemble& ens, const ThresholdOptions& options) {
    ThresholdResult result;
    const auto probe = [&](double q) {
        ++result.bisection_steps;
        return de_iterate(ens, q, options.max_iters, options.tol, options.keep_trace);
    };

    double lo = 0.0;
    double hi = 1.0;
    auto low_run = probe(lo);
    const auto high_run = probe(hi);
    const bool low_ok = low_run.success;
    const bool high_fails = !high_run.success;

    std::optional<DeRun> last_success;
    if (low_ok) last_success = std::move(low_run);

    while (hi - lo > options.bracket_width) {
        const double mid = 0.5 * (lo + hi);
        auto run = probe(mid);
        if (run.success) {
            lo = mid;
            last_success = std::move(run);
        } else {
            hi = mid;
        }
    }

    result.q_star = 0.5 * (lo + hi);
    result.converged = low_ok && high_fails;
    if (last_success) {
        result.iterations_at_threshold = last_success->iters;
        if (options.keep_trace) result.residual_trace = std::move(last_success->trace);
    }
    return result;
}

nlohmann::ordered_json to_json(const ThresholdResult& result) {
    nlohmann::ordered_json j;
    j["q_star"] = result.q_star;
    j["iterations_at_threshold"] = result.iterations_at_threshold;
    j["bisection_steps"] = result.bisection_steps;
    j["converged"] = result.converged;
    if (result.residual_trace) {
        auto& trace = j["residual_trace"] = nlohmann::ordered_json::array();
        for (const auto& [iteration, x] : *result.residual_trace) trace.push_back({iteration, x});
    } else {
        j["residual_trace"] = nullptr;
    }
    return j;
}

}  // namespace dgldpc
