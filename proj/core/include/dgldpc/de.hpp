#pragma once

// Density evolution on the BEC through the exact EXIT functions.
//
// x_t is the erasure probability on VND -> CND messages:
//     x_0     = 1 - I_E,V(p = 1, q)
//     x_{t+1} = 1 - I_E,V(1 - I_E,C(x_t), q)
// computed directly in the erasure domain.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dgldpc/ensemble.hpp"

namespace dgldpc {

/// (iteration, x) samples; iteration 1 is x_0.
using ResidualTrace = std::vector<std::pair<std::size_t, double>>;

struct DeRun {
    bool success = false;
    double final_x = 1.0;
    std::size_t iters = 0;  // VND activations, x_0 included
    ResidualTrace trace;    // filled only when requested
};

/// Runs until x < tol (success), x stops decreasing (failure: a fixed point
/// above tol), or max_iters activations. Throws NumericalAnomaly if x grows.
/// Traces keep the first 1000 iterations, every power of two and the last one.
DeRun de_iterate(const ValidatedEnsemble& ens, double q, std::size_t max_iters, double tol,
                 bool keep_trace = false);

struct ThresholdOptions {
    double tol = 1e-12;
    std::size_t max_iters = 20'000'000;
    double bracket_width = 1e-7;
    bool keep_trace = false;
};

struct ThresholdResult {
    double q_star = 0.0;
    std::size_t iterations_at_threshold = 0;  // iterations of the last successful probe
    std::size_t bisection_steps = 0;          // de_iterate probes, endpoints included
    bool converged = false;                   // q = lower end succeeded and upper end failed
    std::optional<ResidualTrace> residual_trace;
};

/// Bisection on q in [0, 1] until the bracket is at most `bracket_width` wide.
ThresholdResult find_threshold(const ValidatedEnsemble& ens, const ThresholdOptions& options = {});

nlohmann::ordered_json to_json(const ThresholdResult& result);

}  // namespace dgldpc
