#include "dgldpc/codeprops.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "dgldpc/errors.hpp"

namespace dgldpc {

namespace {

using Basis = std::array<std::uint32_t, 32>;

// Returns true when v enlarged the span.
bool absorb(Basis& basis, std::uint32_t v) {
    while (v != 0) {
        const int lead = 31 - std::countl_zero(v);
        if (basis[lead] == 0) {
            basis[lead] = v;
            return true;
        }
        v ^= basis[lead];
    }
    return false;
}

std::size_t rank_of_columns(std::span<const std::uint32_t> cols, std::uint64_t skip_mask) {
    Basis basis{};
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if ((skip_mask >> j) & 1U) continue;
        r += absorb(basis, cols[j]) ? 1 : 0;
    }
    return r;
}

constexpr double kMaxEnumerationLog2 = 34.0;

// Sums rank over every subset of G columns (restricted to sizes in `allowed_g`)
// joined with every subset of the first `identity_count` unit vectors.
// table is (n+1) x (identity_count+1), row-major.
class SubsetRankSummer {
public:
    SubsetRankSummer(std::span<const std::uint32_t> g_columns, std::size_t identity_count,
                     std::vector<bool> allowed_g)
        : g_columns_(g_columns),
          n_(g_columns.size()),
          width_(identity_count + 1),
          identity_count_(identity_count),
          allowed_(std::move(allowed_g)),
          allowed_prefix_(n_ + 2, 0),
          table_((n_ + 1) * width_, 0) {
        for (std::size_t g = 0; g <= n_; ++g) {
            allowed_prefix_[g + 1] = allowed_prefix_[g] + (allowed_[g] ? 1 : 0);
        }
    }

    std::vector<Count> run() {
        Basis basis{};
        walk_g(0, 0, 0, basis);
        return std::move(table_);
    }

private:
    // Any allowed size in [lo, hi]?
    bool reachable(std::size_t lo, std::size_t hi) const {
        if (lo > hi) return false;
        return allowed_prefix_[hi + 1] - allowed_prefix_[lo] > 0;
    }

    void walk_g(std::size_t idx, std::size_t g, std::size_t r, const Basis& basis) {
        if (idx == n_) {
            walk_identity(0, g, 0, r, basis);
            return;
        }
        const std::size_t remaining = n_ - idx;
        if (reachable(g, g + remaining - 1)) walk_g(idx + 1, g, r, basis);
        if (reachable(g + 1, g + remaining)) {
            Basis next = basis;
            const bool grew = absorb(next, g_columns_[idx]);
            walk_g(idx + 1, g + 1, r + (grew ? 1 : 0), next);
        }
    }

    void walk_identity(std::size_t idx, std::size_t g, std::size_t h, std::size_t r,
                       const Basis& basis) {
        if (idx == identity_count_) {
            table_[g * width_ + h] += static_cast<Count>(r);
            return;
        }
        walk_identity(idx + 1, g, h, r, basis);
        Basis next = basis;
        const bool grew = absorb(next, std::uint32_t{1} << idx);
        walk_identity(idx + 1, g, h + 1, r + (grew ? 1 : 0), next);
    }

    std::span<const std::uint32_t> g_columns_;
    std::size_t n_;
    std::size_t width_;
    std::size_t identity_count_;
    std::vector<bool> allowed_;
    std::vector<std::size_t> allowed_prefix_;
    std::vector<Count> table_;
};

std::vector<bool> allowed_mask(std::size_t n, std::span<const std::size_t> only_g) {
    std::vector<bool> allowed(n + 1, false);
    for (auto g : only_g) {
        if (g > n) {
            throw InvalidSelection("information-function index " + std::to_string(g) +
                                   " exceeds code length " + std::to_string(n));
        }
        allowed[g] = true;
    }
    return allowed;
}

void check_enumeration_size(std::size_t n, std::size_t identity_count,
                            const std::vector<bool>& allowed) {
    double subsets = 0.0;
    for (std::size_t g = 0; g <= n; ++g) {
        if (allowed[g]) subsets += static_cast<double>(binomial(n, g));
    }
    subsets *= std::ldexp(1.0, static_cast<int>(identity_count));
    if (subsets > std::ldexp(1.0, static_cast<int>(kMaxEnumerationLog2))) {
        throw CapacityError("subset enumeration of " + std::to_string(subsets) +
                            " submatrices exceeds the 2^34 bound");
    }
}

// Calls fn(indices) for each t-subset of {0..n-1} in lexicographic order; stops when fn returns true.
bool for_each_combination(std::size_t n, std::size_t t,
                          const std::function<bool(std::span<const std::size_t>)>& fn) {
    if (t > n) return false;
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        if (fn(idx)) return true;
        std::size_t i = t;
        while (i > 0 && idx[i - 1] == n - t + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Count binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    // Pascal row up to column r; every entry is bounded by the result.
    std::vector<std::uint64_t> row(r + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = std::min(i, r); j > 0; --j) {
            if (row[j] > std::numeric_limits<std::uint64_t>::max() - row[j - 1]) {
                throw CapacityError("binomial coefficient overflow");
            }
            row[j] += row[j - 1];
        }
    }
    if (row[r] > static_cast<std::uint64_t>(std::numeric_limits<Count>::max())) {
        throw CapacityError("binomial coefficient overflow");
    }
    return static_cast<Count>(row[r]);
}

ComponentCode::ComponentCode(BinaryMatrix generator) : generator_(std::move(generator)) {
    const auto n = generator_.cols();
    const auto k = generator_.rows();
    if (n > kMaxLength) {
        throw DimensionError("code length " + std::to_string(n) + " exceeds " +
                             std::to_string(kMaxLength));
    }
    if (k >= n) {
        throw DimensionError("component code needs k < n (got n=" + std::to_string(n) +
                             ", k=" + std::to_string(k) + ")");
    }
    if (rank(generator_) != k) {
        throw ValidationError("generator matrix is rank deficient (rank " +
                              std::to_string(rank(generator_)) + " < k=" + std::to_string(k) + ")");
    }
    columns_.reserve(n);
    for (std::size_t c = 0; c < n; ++c) columns_.push_back(generator_.column(c));
}

ComponentCode ComponentCode::parse(std::string_view text) {
    return ComponentCode(BinaryMatrix::parse(text));
}

ComponentCode ComponentCode::repetition(std::size_t length) {
    BinaryMatrix g(1, length);
    for (std::size_t c = 0; c < length; ++c) g.set(0, c, true);
    return ComponentCode(std::move(g));
}

ComponentCode ComponentCode::single_parity_check(std::size_t length) {
    if (length < 2) throw DimensionError("SPC length must be at least 2");
    BinaryMatrix g(length - 1, length);
    for (std::size_t r = 0; r + 1 < length; ++r) {
        g.set(r, r, true);
        g.set(r, length - 1, true);
    }
    return ComponentCode(std::move(g));
}

bool ComponentCode::is_repetition() const noexcept {
    return k() == 1 && std::popcount(generator_.row(0)) == static_cast<int>(n());
}

bool ComponentCode::is_single_parity_check() const noexcept {
    if (k() + 1 != n()) return false;
    for (auto row : generator_.row_words()) {
        if (std::popcount(row) % 2 != 0) return false;
    }
    return true;
}

SplitInfoFunctionTable::SplitInfoFunctionTable(std::size_t n, std::size_t k)
    : n_(n), k_(k), values_((n + 1) * (k + 1), 0), present_(n + 1, false) {}

Count SplitInfoFunctionTable::at(std::size_t g, std::size_t h) const {
    if (g > n_ || h > k_) throw std::out_of_range("split information index out of range");
    if (!present_[g]) {
        throw std::out_of_range("split information row g=" + std::to_string(g) + " not computed");
    }
    return values_[g * (k_ + 1) + h];
}

InfoFunctionTable info_functions(const ComponentCode& code) {
    std::vector<std::size_t> all(code.n() + 1);
    for (std::size_t g = 0; g <= code.n(); ++g) all[g] = g;
    return info_functions(code, all);
}

InfoFunctionTable info_functions(const ComponentCode& code, std::span<const std::size_t> only_g) {
    auto allowed = allowed_mask(code.n(), only_g);
    check_enumeration_size(code.n(), 0, allowed);
    SubsetRankSummer summer(code.columns(), 0, std::move(allowed));
    return InfoFunctionTable{summer.run()};
}

SplitInfoFunctionTable split_info_functions(const ComponentCode& code) {
    std::vector<std::size_t> all(code.n() + 1);
    for (std::size_t g = 0; g <= code.n(); ++g) all[g] = g;
    return split_info_functions(code, all);
}

SplitInfoFunctionTable split_info_functions(const ComponentCode& code,
                                            std::span<const std::size_t> only_g) {
    auto allowed = allowed_mask(code.n(), only_g);
    check_enumeration_size(code.n(), code.k(), allowed);
    SubsetRankSummer summer(code.columns(), code.k(), allowed);
    const auto flat = summer.run();

    SplitInfoFunctionTable table(code.n(), code.k());
    for (std::size_t g = 0; g <= code.n(); ++g) {
        if (!allowed[g]) continue;
        table.set_row_present(g);
        for (std::size_t h = 0; h <= code.k(); ++h) table.cell(g, h) = flat[g * (code.k() + 1) + h];
    }
    return table;
}

std::size_t min_distance_bruteforce(const ComponentCode& code) {
    constexpr std::size_t kMaxDimension = 24;
    if (code.k() > kMaxDimension) {
        throw CapacityError("brute-force distance needs k <= 24 (got k=" +
                            std::to_string(code.k()) + ")");
    }
    const auto rows = code.generator().row_words();
    std::uint64_t word = 0;
    int best = std::numeric_limits<int>::max();
    const std::uint64_t messages = std::uint64_t{1} << code.k();
    // Gray-code walk: step i flips the generator row at the lowest set bit of i.
    for (std::uint64_t i = 1; i < messages; ++i) {
        word ^= rows[std::countr_zero(i)];
        best = std::min(best, std::popcount(word));
    }
    return static_cast<std::size_t>(best);
}

std::vector<std::size_t> find_min_independent_set(const ComponentCode& code) {
    const auto cols = code.columns();
    std::vector<std::size_t> found;
    for (std::size_t t = 1; t <= code.n(); ++t) {
        const bool hit = for_each_combination(code.n(), t, [&](std::span<const std::size_t> idx) {
            std::uint64_t mask = 0;
            for (auto j : idx) mask |= std::uint64_t{1} << j;
            if (rank_of_columns(cols, mask) < code.k()) {
                found.assign(idx.begin(), idx.end());
                return true;
            }
            return false;
        });
        if (hit) return found;
    }
    throw std::logic_error("removing every column must drop the rank");
}

std::size_t min_independent_set_size(const ComponentCode& code) {
    return find_min_independent_set(code).size();
}

std::size_t rank_drop_of_removal(const ComponentCode& code, std::span<const std::size_t> removed) {
    std::uint64_t mask = 0;
    for (auto j : removed) {
        if (j >= code.n()) {
            throw InvalidSelection("column index " + std::to_string(j) + " out of range for n=" +
                                   std::to_string(code.n()));
        }
        const auto bit = std::uint64_t{1} << j;
        if (mask & bit) throw InvalidSelection("column index " + std::to_string(j) + " repeated");
        mask |= bit;
    }
    return code.k() - rank_of_columns(code.columns(), mask);
}

Count delta_n2(const ComponentCode& code) {
    if (code.n() < 2) throw DimensionError("Δ_{n-2} needs n >= 2");
    const std::size_t g = code.n() - 2;
    const auto info = info_functions(code, std::span<const std::size_t>(&g, 1));
    return static_cast<Count>(code.k()) * binomial(code.n(), 2) - info[g];
}

DeltaParams delta_params(const ComponentCode& code) {
    if (code.n() < 2) throw DimensionError("Δ parameters need n >= 2");
    const std::size_t g = code.n() - 2;
    const auto info = info_functions(code, std::span<const std::size_t>(&g, 1));
    const auto split = split_info_functions(code, std::span<const std::size_t>(&g, 1));
    return delta_params(code, info, split);
}

DeltaParams delta_params(const ComponentCode& code, const InfoFunctionTable& info,
                         const SplitInfoFunctionTable& split) {
    const auto n = code.n();
    const auto k = code.k();
    if (n < 2) throw DimensionError("Δ parameters need n >= 2");
    const auto pairs = binomial(n, 2);
    DeltaParams out;
    out.delta_n2 = static_cast<Count>(k) * pairs - info[n - 2];
    out.delta_n2_kz.resize(k + 1);
    for (std::size_t z = 0; z <= k; ++z) {
        out.delta_n2_kz[z] =
            static_cast<Count>(k) * pairs * binomial(k, z) - split.at(n - 2, k - z);
    }
    return out;
}

}  // namespace dgldpc
