#include "dgldpc/binmat.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "dgldpc/errors.hpp"

namespace dgldpc {

namespace {

std::uint64_t width_mask(std::size_t cols) {
    return cols >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols) - 1;
}

// XOR basis keyed by leading bit; returns whether v was independent.
bool insert_into_basis(std::array<std::uint64_t, 64>& basis, std::uint64_t v) {
    while (v != 0) {
        const int lead = 63 - std::countl_zero(v);
        if (basis[lead] == 0) {
            basis[lead] = v;
            return true;
        }
        v ^= basis[lead];
    }
    return false;
}

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows, 0), cols_(cols) {
    if (rows < 1 || rows > kMaxRows) {
        throw DimensionError("matrix row count " + std::to_string(rows) + " outside [1, " +
                             std::to_string(kMaxRows) + "]");
    }
    if (cols > kMaxCols) {
        throw DimensionError("matrix column count " + std::to_string(cols) + " exceeds " +
                             std::to_string(kMaxCols));
    }
}

BinaryMatrix BinaryMatrix::identity(std::size_t size) {
    BinaryMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) m.rows_[i] = std::uint64_t{1} << i;
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::span<const std::uint64_t> rows, std::size_t cols) {
    BinaryMatrix m(rows.size(), cols);
    const auto mask = width_mask(cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if ((rows[r] & ~mask) != 0) {
            throw DimensionError("row " + std::to_string(r) + " has bits beyond column " +
                                 std::to_string(cols));
        }
        m.rows_[r] = rows[r];
    }
    return m;
}

BinaryMatrix BinaryMatrix::parse(std::string_view text) {
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty matrix literal", 1, 1);

    std::vector<std::uint64_t> rows;
    std::size_t width = 0;
    std::size_t line = 1;
    while (true) {
        const auto eol = text.find('\n');
        const auto row_text = text.substr(0, eol);
        if (row_text.size() > kMaxCols) {
            throw ParseError("matrix row wider than " + std::to_string(kMaxCols) + " columns", line,
                             kMaxCols + 1);
        }
        if (line == 1) {
            width = row_text.size();
            if (width == 0) throw ParseError("empty matrix row", line, 1);
        } else if (row_text.size() != width) {
            throw ParseError("ragged matrix row: expected " + std::to_string(width) +
                                 " columns, got " + std::to_string(row_text.size()),
                             line, std::min(row_text.size(), width) + 1);
        }
        std::uint64_t bits = 0;
        for (std::size_t c = 0; c < row_text.size(); ++c) {
            if (row_text[c] == '1') {
                bits |= std::uint64_t{1} << c;
            } else if (row_text[c] != '0') {
                throw ParseError(std::string("unexpected character '") + row_text[c] +
                                     "' in matrix literal",
                                 line, c + 1);
            }
        }
        rows.push_back(bits);
        if (rows.size() > kMaxRows) {
            throw ParseError("matrix has more than " + std::to_string(kMaxRows) + " rows", line, 1);
        }
        if (eol == std::string_view::npos) break;
        text.remove_prefix(eol + 1);
        ++line;
    }
    return from_rows(rows, width);
}

bool BinaryMatrix::get(std::size_t r, std::size_t c) const {
    if (c >= cols_) throw InvalidSelection("column " + std::to_string(c) + " out of range");
    return (rows_.at(r) >> c) & 1U;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
    if (c >= cols_) throw InvalidSelection("column " + std::to_string(c) + " out of range");
    auto& word = rows_.at(r);
    const auto bit = std::uint64_t{1} << c;
    word = value ? (word | bit) : (word & ~bit);
}

std::uint32_t BinaryMatrix::column(std::size_t c) const {
    if (c >= cols_) throw InvalidSelection("column " + std::to_string(c) + " out of range");
    std::uint32_t out = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        out |= static_cast<std::uint32_t>((rows_[r] >> c) & 1U) << r;
    }
    return out;
}

std::string BinaryMatrix::to_string() const {
    std::string out;
    out.reserve(rows_.size() * (cols_ + 1));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r != 0) out.push_back('\n');
        for (std::size_t c = 0; c < cols_; ++c) out.push_back(((rows_[r] >> c) & 1U) ? '1' : '0');
    }
    return out;
}

std::size_t rank_of_vectors(std::span<const std::uint64_t> vectors) {
    std::array<std::uint64_t, 64> basis{};
    std::size_t r = 0;
    for (auto v : vectors) r += insert_into_basis(basis, v) ? 1 : 0;
    return r;
}

std::size_t rank(const BinaryMatrix& m) { return rank_of_vectors(m.row_words()); }

BinaryMatrix select_columns(const BinaryMatrix& m, std::span<const std::size_t> indices) {
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= m.cols()) {
            throw InvalidSelection("column index " + std::to_string(indices[i]) +
                                   " out of range for width " + std::to_string(m.cols()));
        }
        if (i > 0 && indices[i] <= indices[i - 1]) {
            throw InvalidSelection("column indices must be strictly increasing");
        }
    }
    std::vector<std::uint64_t> rows(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t i = 0; i < indices.size(); ++i) {
            rows[r] |= ((m.row(r) >> indices[i]) & 1U) << i;
        }
    }
    return BinaryMatrix::from_rows(rows, indices.size());
}

BinaryMatrix augment_identity(const BinaryMatrix& m) {
    if (m.cols() + m.rows() > BinaryMatrix::kMaxCols) {
        throw DimensionError("augmented matrix would exceed " +
                             std::to_string(BinaryMatrix::kMaxCols) + " columns");
    }
    std::vector<std::uint64_t> rows(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows[r] = m.row(r) | (std::uint64_t{1} << (m.cols() + r));
    }
    return BinaryMatrix::from_rows(rows, m.cols() + m.rows());
}

bool same_row_space(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.cols()) {
        throw DimensionError("row-space comparison needs equal widths (" + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.cols()) + ")");
    }
    const auto ra = rank(a);
    if (ra != rank(b)) return false;
    std::vector<std::uint64_t> joint(a.row_words().begin(), a.row_words().end());
    joint.insert(joint.end(), b.row_words().begin(), b.row_words().end());
    return rank_of_vectors(joint) == ra;
}

}  // namespace dgldpc
