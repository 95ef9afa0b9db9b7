#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "graphcoh/types.hpp"

namespace graphcoh {

struct Triplet {
    std::size_t row = 0;
    std::size_t col = 0;
    Integer value;
};

// Sparse integer matrix stored column-wise. Entries are kept sorted by row
// inside each column and zero entries are never stored.
class SparseExactMatrix {
public:
    SparseExactMatrix() = default;
    SparseExactMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    std::size_t nonzeros() const noexcept;

    // Adds `value` to entry (row, col).
    void add(std::size_t row, std::size_t col, const Integer& value);
    Integer at(std::size_t row, std::size_t col) const;

    const std::vector<std::pair<std::size_t, Integer>>& column(std::size_t c) const { return columns_[c]; }
    std::vector<Triplet> triplets() const;

    bool is_zero() const noexcept { return nonzeros() == 0; }

    friend SparseExactMatrix operator*(const SparseExactMatrix& a, const SparseExactMatrix& b);

    // `rows cols nnz` header followed by one `r c value` line per entry
    // (0-based indices, column-major order).
    void write_triplets(std::ostream& os) const;

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<std::pair<std::size_t, Integer>>> columns_;
};

enum class PivotStrategy {
    // Markowitz-style: among candidate pivots pick the one minimising
    // (row count - 1) * (column count - 1), ties by smallest magnitude.
    sparsest,
    // Leftmost column first, topmost row within it.
    column_order,
    // Rightmost column first, bottom row within it.
    reverse_column_order,
};

struct RankKernel {
    std::size_t rank = 0;
    // integer kernel vectors, primitive (content 1) with a positive leading
    // entry; one per non-pivot column
    std::vector<std::vector<Integer>> kernel;
};

// Exact rank and kernel over the rationals by fraction-free elimination:
// rows stay integral, each row update is followed by division by the row
// content, and the echelon form is fully reduced before reading off the
// kernel.
RankKernel rank_kernel(const SparseExactMatrix& m, PivotStrategy strategy = PivotStrategy::sparsest);

std::size_t rank(const SparseExactMatrix& m, PivotStrategy strategy = PivotStrategy::sparsest);

}  // namespace graphcoh
