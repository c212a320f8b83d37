#include "qwalk/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qwalk {

SparseMatrix SparseMatrix::identity(std::size_t dim) {
    SparseMatrix m;
    m.dim_ = dim;
    m.row_start_.resize(dim + 1);
    m.col_.resize(dim);
    m.val_.assign(dim, 1.0);
    for (std::size_t i = 0; i < dim; ++i) {
        m.row_start_[i] = i;
        m.col_[i] = static_cast<std::uint32_t>(i);
    }
    m.row_start_[dim] = dim;
    return m;
}

SparseMatrix SparseMatrix::from_csr(std::size_t dim, std::vector<std::size_t> row_start,
                                    std::vector<std::uint32_t> col, std::vector<double> val) {
    if (row_start.size() != dim + 1 || col.size() != val.size() || row_start.back() != col.size()) {
        throw std::invalid_argument("inconsistent CSR arrays");
    }
    SparseMatrix m;
    m.dim_ = dim;
    m.row_start_ = std::move(row_start);
    m.col_ = std::move(col);
    m.val_ = std::move(val);
    return m;
}

std::size_t SparseMatrix::max_row_nonzeros() const {
    std::size_t best = 0;
    for (std::size_t r = 0; r < dim_; ++r) best = std::max(best, row_nonzeros(r));
    return best;
}

std::size_t SparseMatrix::max_col_nonzeros() const {
    std::vector<std::size_t> count(dim_, 0);
    for (std::uint32_t c : col_) ++count[c];
    std::size_t best = 0;
    for (std::size_t c : count) best = std::max(best, c);
    return best;
}

double SparseMatrix::entry(std::size_t row, std::size_t col) const {
    const auto begin = col_.begin() + static_cast<std::ptrdiff_t>(row_start_[row]);
    const auto end = col_.begin() + static_cast<std::ptrdiff_t>(row_start_[row + 1]);
    const auto it = std::lower_bound(begin, end, static_cast<std::uint32_t>(col));
    if (it != end && *it == col) {
        return val_[static_cast<std::size_t>(it - col_.begin())];
    }
    return 0.0;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t;
    t.dim_ = dim_;
    t.row_start_.assign(dim_ + 1, 0);
    for (std::uint32_t c : col_) ++t.row_start_[c + 1];
    for (std::size_t r = 0; r < dim_; ++r) t.row_start_[r + 1] += t.row_start_[r];
    t.col_.resize(col_.size());
    t.val_.resize(val_.size());
    std::vector<std::size_t> next(t.row_start_.begin(), t.row_start_.end() - 1);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k) {
            const std::size_t pos = next[col_[k]]++;
            t.col_[pos] = static_cast<std::uint32_t>(r);
            t.val_[pos] = val_[k];
        }
    }
    return t;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.dim_ != b.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    const std::size_t dim = a.dim_;
    SparseMatrix p;
    p.dim_ = dim;
    p.row_start_.assign(dim + 1, 0);
    std::vector<double> acc(dim, 0.0);
    std::vector<char> occupied(dim, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t r = 0; r < dim; ++r) {
        touched.clear();
        for (std::size_t ka = a.row_start_[r]; ka < a.row_start_[r + 1]; ++ka) {
            const std::uint32_t k = a.col_[ka];
            const double av = a.val_[ka];
            for (std::size_t kb = b.row_start_[k]; kb < b.row_start_[k + 1]; ++kb) {
                const std::uint32_t c = b.col_[kb];
                if (!occupied[c]) {
                    occupied[c] = 1;
                    touched.push_back(c);
                }
                acc[c] += av * b.val_[kb];
            }
        }
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t c : touched) {
            if (acc[c] != 0.0) {
                p.col_.push_back(c);
                p.val_.push_back(acc[c]);
            }
            acc[c] = 0.0;
            occupied[c] = 0;
        }
        p.row_start_[r + 1] = p.col_.size();
    }
    return p;
}

SparseMatrix::Diff SparseMatrix::max_abs_diff(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.dim_ != b.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    Diff worst;
    auto consider = [&worst](double d, std::size_t r, std::size_t c) {
        const double ad = std::fabs(d);
        if (ad > worst.value) worst = Diff{ad, r, c};
    };
    for (std::size_t r = 0; r < a.dim_; ++r) {
        std::size_t ia = a.row_start_[r], ea = a.row_start_[r + 1];
        std::size_t ib = b.row_start_[r], eb = b.row_start_[r + 1];
        while (ia < ea || ib < eb) {
            if (ib == eb || (ia < ea && a.col_[ia] < b.col_[ib])) {
                consider(a.val_[ia], r, a.col_[ia]);
                ++ia;
            } else if (ia == ea || b.col_[ib] < a.col_[ia]) {
                consider(b.val_[ib], r, b.col_[ib]);
                ++ib;
            } else {
                consider(a.val_[ia] - b.val_[ib], r, a.col_[ia]);
                ++ia;
                ++ib;
            }
        }
    }
    return worst;
}

SparseMatrix::Diff SparseMatrix::orthogonality_defect() const {
    return max_abs_diff(transpose() * (*this), identity(dim_));
}

}  // namespace qwalk
