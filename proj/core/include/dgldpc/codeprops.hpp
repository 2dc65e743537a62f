#pragma once

// Code-level combinatorics over a fixed generator-matrix representation:
// (split) information functions, minimum distance, independent sets and
// the rank-deficiency sums that drive the stability analysis.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dgldpc/binmat.hpp"

namespace dgldpc {

/// Exact counts; large enough for every table that is feasible to enumerate.
using Count = std::int64_t;

/// Binomial coefficient C(n, r), exact for n <= 64. Zero when r > n.
Count binomial(std::size_t n, std::size_t r);

/// An (n, k) binary linear code with a chosen generator matrix.
///
/// Construction enforces 1 <= k < n <= 32 and rank(G) = k. Minimum distance
/// is not restricted here; the d_min >= 2 hypothesis is checked when an
/// ensemble is validated.
class ComponentCode {
public:
    static constexpr std::size_t kMaxLength = 32;

    explicit ComponentCode(BinaryMatrix generator);

    /// Parses a matrix literal and builds the code.
    static ComponentCode parse(std::string_view text);
    static ComponentCode repetition(std::size_t length);
    static ComponentCode single_parity_check(std::size_t length);

    std::size_t n() const noexcept { return generator_.cols(); }
    std::size_t k() const noexcept { return generator_.rows(); }
    const BinaryMatrix& generator() const noexcept { return generator_; }

    /// Generator columns packed as k-bit words (bit r = row r).
    std::span<const std::uint32_t> columns() const noexcept { return columns_; }

    /// k == 1 with an all-ones generator row.
    bool is_repetition() const noexcept;
    /// k == n - 1 and every codeword has even weight.
    bool is_single_parity_check() const noexcept;

private:
    BinaryMatrix generator_;
    std::vector<std::uint32_t> columns_;
};

/// ẽ_g for g = 0..n: sum of ranks over all g-column submatrices of G.
struct InfoFunctionTable {
    std::vector<Count> values;

    Count operator[](std::size_t g) const { return values.at(g); }
    std::size_t n() const noexcept { return values.empty() ? 0 : values.size() - 1; }
    friend bool operator==(const InfoFunctionTable&, const InfoFunctionTable&) = default;
};

/// ẽ_{g,h}: sum of ranks over submatrices made of g columns of G and h
/// columns of I_k. Rows g that were not requested are absent.
class SplitInfoFunctionTable {
public:
    SplitInfoFunctionTable(std::size_t n, std::size_t k);

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }

    bool has_row(std::size_t g) const { return present_.at(g); }
    /// Throws std::out_of_range when row g was not computed.
    Count at(std::size_t g, std::size_t h) const;

    void set_row_present(std::size_t g) { present_.at(g) = true; }
    Count& cell(std::size_t g, std::size_t h) { return values_.at(g * (k_ + 1) + h); }

    friend bool operator==(const SplitInfoFunctionTable&, const SplitInfoFunctionTable&) = default;

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<Count> values_;
    std::vector<bool> present_;
};

/// Δ_{n-2} and Δ_{n-2,k-z} (stored by z = 0..k, z = number of identity columns left out).
struct DeltaParams {
    Count delta_n2 = 0;
    std::vector<Count> delta_n2_kz;

    friend bool operator==(const DeltaParams&, const DeltaParams&) = default;
};

/// Full ẽ_g table. Representation independent.
InfoFunctionTable info_functions(const ComponentCode& code);

/// ẽ_g restricted to the listed g values; other entries are left at 0.
InfoFunctionTable info_functions(const ComponentCode& code, std::span<const std::size_t> only_g);

/// Full ẽ_{g,h} table, 2^(n+k) rank evaluations. Throws CapacityError beyond 2^34.
SplitInfoFunctionTable split_info_functions(const ComponentCode& code);

/// ẽ_{g,h} for the listed g values and every h.
SplitInfoFunctionTable split_info_functions(const ComponentCode& code,
                                            std::span<const std::size_t> only_g);

/// Minimum nonzero codeword weight by enumerating all 2^k - 1 messages.
/// Throws CapacityError for k > 24.
std::size_t min_distance_bruteforce(const ComponentCode& code);

/// Smallest column set whose removal drops the rank, in lexicographic order
/// among sets of that size. Always non-empty (removing every column drops rank).
std::vector<std::size_t> find_min_independent_set(const ComponentCode& code);

/// Size of the smallest independent set; equals d_min.
std::size_t min_independent_set_size(const ComponentCode& code);

/// k minus the rank of G with the given columns removed.
/// Indices must be distinct and < n; throws InvalidSelection otherwise.
std::size_t rank_drop_of_removal(const ComponentCode& code, std::span<const std::size_t> removed);

/// Δ_{n-2} alone; representation independent. Requires n >= 2.
Count delta_n2(const ComponentCode& code);

/// Requires n >= 2.
DeltaParams delta_params(const ComponentCode& code);

/// Same values derived from already computed tables (row n-2 of `split` must be present).
DeltaParams delta_params(const ComponentCode& code, const InfoFunctionTable& info,
                         const SplitInfoFunctionTable& split);

}  // namespace dgldpc
