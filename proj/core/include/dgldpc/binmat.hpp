#pragma once

// Dense GF(2) matrices. Row r is a packed word; column j lives at bit j.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dgldpc {

class BinaryMatrix {
public:
    static constexpr std::size_t kMaxRows = 32;
    // Wide enough for [G | I_k] with n <= 32, k < n.
    static constexpr std::size_t kMaxCols = 64;

    /// All-zero rows x cols matrix. Throws DimensionError outside the caps.
    BinaryMatrix(std::size_t rows, std::size_t cols);

    static BinaryMatrix identity(std::size_t size);

    /// Builds from packed rows; bits at or above `cols` must be clear.
    static BinaryMatrix from_rows(std::span<const std::uint64_t> rows, std::size_t cols);

    /// Parses the text form: one row per line, '0'/'1' only, e.g. "101\n011".
    /// A single trailing newline is accepted. Throws ParseError.
    static BinaryMatrix parse(std::string_view text);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    std::uint64_t row(std::size_t r) const { return rows_.at(r); }
    std::span<const std::uint64_t> row_words() const noexcept { return rows_; }

    /// Column c packed as a word: bit r holds entry (r, c).
    std::uint32_t column(std::size_t c) const;

    /// Text form without a trailing newline.
    std::string to_string() const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    BinaryMatrix() = default;

    std::vector<std::uint64_t> rows_;
    std::size_t cols_ = 0;
};

/// GF(2) rank. The input is not modified.
std::size_t rank(const BinaryMatrix& m);

/// Rank of a set of packed GF(2) vectors (rows or columns, it does not matter).
std::size_t rank_of_vectors(std::span<const std::uint64_t> vectors);

/// rows x |indices| submatrix; indices must be strictly increasing and < cols.
BinaryMatrix select_columns(const BinaryMatrix& m, std::span<const std::size_t> indices);

/// [m | I_rows].
BinaryMatrix augment_identity(const BinaryMatrix& m);

/// True iff a and b generate the same row space. Throws DimensionError on width mismatch.
bool same_row_space(const BinaryMatrix& a, const BinaryMatrix& b);

}  // namespace dgldpc
