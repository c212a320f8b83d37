// Square CSR matrices used to materialize walk operators for entrywise
// comparison and orthogonality checks.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qwalk {

/// Compressed sparse row matrix; column indices sorted within each row.
/// Entries absent from the structure are zero.
class SparseMatrix {
public:
    SparseMatrix() = default;

    static SparseMatrix identity(std::size_t dim);
    static SparseMatrix from_csr(std::size_t dim, std::vector<std::size_t> row_start,
                                 std::vector<std::uint32_t> col, std::vector<double> val);

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t nonzeros() const noexcept { return col_.size(); }
    std::size_t row_nonzeros(std::size_t r) const { return row_start_[r + 1] - row_start_[r]; }
    std::size_t max_row_nonzeros() const;
    std::size_t max_col_nonzeros() const;

    double entry(std::size_t row, std::size_t col) const;

    SparseMatrix transpose() const;
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

    /// Largest entrywise |a - b| and where it occurs.
    struct Diff {
        double value = 0.0;
        std::size_t row = 0;
        std::size_t col = 0;
    };
    static Diff max_abs_diff(const SparseMatrix& a, const SparseMatrix& b);

    /// max |A^T A - I|: zero (to roundoff) exactly when A is orthogonal.
    Diff orthogonality_defect() const;

private:
    std::size_t dim_ = 0;
    std::vector<std::size_t> row_start_;  // dim + 1 entries
    std::vector<std::uint32_t> col_;
    std::vector<double> val_;
};

}  // namespace qwalk
