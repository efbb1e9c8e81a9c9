#pragma once

#include <stdexcept>
#include <vector>

#include "diffposet/numbers.hpp"
#include "diffposet/sparse_matrix.hpp"

namespace diffposet {

struct SingularMatrixError : std::runtime_error {
    SingularMatrixError() : std::runtime_error("matrix is singular over the rationals") {}
};

// Dense row-major matrix of arbitrary-precision integers. Used where
// elimination destroys sparsity (Smith form, determinants, exact inverses).
class DenseIntMatrix {
public:
    DenseIntMatrix() = default;
    DenseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(idx(rows, cols)) {}

    static DenseIntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[idx(i, cols_) + static_cast<std::size_t>(j)]; }
    const Int& at(int i, int j) const { return a_[idx(i, cols_) + static_cast<std::size_t>(j)]; }

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);

    DenseIntMatrix operator*(const DenseIntMatrix& rhs) const;
    bool operator==(const DenseIntMatrix& rhs) const = default;

private:
    static std::size_t idx(int i, int cols) { return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols); }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

DenseIntMatrix to_dense(const SparseIntMatrix& m);

// Determinant by fraction-free (Bareiss) elimination; exact, serial.
Int det_bareiss(DenseIntMatrix a);

// Exact inverse, kept in determinant-scaled integer form: a * num = det * I.
// det is the true (signed) determinant of a.
struct ScaledInverse {
    Int det;
    DenseIntMatrix num;

    Rat entry(int i, int j) const
    {
        Rat q(num.at(i, j), det);
        q.canonicalize();
        return q;
    }
};

// Cofactor adjugate for orders <= 4, fraction-free Gauss-Jordan above; the
// elimination's row updates run under OpenMP.
ScaledInverse inverse_scaled(const DenseIntMatrix& a);

// Serial reference: plain fraction-free Gauss-Jordan at every order.
ScaledInverse inverse_scaled_ref(const DenseIntMatrix& a);

} // namespace diffposet
