#include "diffposet/dense_matrix.hpp"

#include <utility>

namespace diffposet {

DenseIntMatrix DenseIntMatrix::identity(int n)
{
    DenseIntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

void DenseIntMatrix::swap_rows(int i, int j)
{
    if (i == j)
        return;
    for (int c = 0; c < cols_; ++c)
        std::swap(at(i, c), at(j, c));
}

void DenseIntMatrix::swap_cols(int i, int j)
{
    if (i == j)
        return;
    for (int r = 0; r < rows_; ++r)
        std::swap(at(r, i), at(r, j));
}

void DenseIntMatrix::negate_row(int i)
{
    for (int c = 0; c < cols_; ++c)
        at(i, c) = -at(i, c);
}

DenseIntMatrix DenseIntMatrix::operator*(const DenseIntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("DenseIntMatrix: dimension mismatch in product");
    DenseIntMatrix out(rows_, rhs.cols_);
    Int tmp;
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Int& b = rhs.at(k, j);
                if (b == 0)
                    continue;
                tmp = a * b;
                out.at(i, j) += tmp;
            }
        }
    return out;
}

DenseIntMatrix to_dense(const SparseIntMatrix& m)
{
    DenseIntMatrix d(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r))
            d.at(r, c) = v;
    return d;
}

namespace {

// (piv*x - fac*y) / prev, with the division required to be exact.
inline void bareiss_update(Int& x, const Int& piv, const Int& fac, const Int& y, const Int& prev)
{
    mpz_mul(x.get_mpz_t(), x.get_mpz_t(), piv.get_mpz_t());
    if (fac != 0 && y != 0)
        mpz_submul(x.get_mpz_t(), fac.get_mpz_t(), y.get_mpz_t());
    if (prev != 1) {
        static thread_local Int rem;
        mpz_tdiv_qr(x.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0)
            throw std::logic_error("fraction-free elimination: inexact division");
    }
}

int find_pivot_row(const DenseIntMatrix& w, int k)
{
    for (int i = k; i < w.rows(); ++i)
        if (w.at(i, k) != 0)
            return i;
    return -1;
}

// Fraction-free Gauss-Jordan on [a | I]. Leaves det * a^{-1} in the right
// block; the left block telescopes to det * I. Throws on singular input.
ScaledInverse ffgj_inverse(const DenseIntMatrix& a, bool parallel)
{
    const int n = a.rows();
    if (n != a.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    if (n == 0)
        return {Int(1), DenseIntMatrix(0, 0)};

    DenseIntMatrix w(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            w.at(i, j) = a.at(i, j);
        w.at(i, n + i) = 1;
    }

    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        const int p = find_pivot_row(w, k);
        if (p < 0)
            throw SingularMatrixError();
        if (p != k) {
            w.swap_rows(k, p);
            sign = -sign;
        }
        const Int piv = w.at(k, k);

#pragma omp parallel for schedule(static) if (parallel && n >= 64)
        for (int i = 0; i < n; ++i) {
            if (i == k)
                continue;
            const Int fac = w.at(i, k);
            for (int j = 0; j < 2 * n; ++j) {
                if (j == k)
                    continue;
                Int& x = w.at(i, j);
                const Int& y = w.at(k, j);
                if (x == 0 && (y == 0 || fac == 0))
                    continue;
                bareiss_update(x, piv, fac, y, prev);
            }
            w.at(i, k) = 0;
        }
        prev = piv;
    }

    ScaledInverse inv;
    inv.det = sign < 0 ? Int(-prev) : prev;
    inv.num = DenseIntMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.num.at(i, j) = sign < 0 ? Int(-w.at(i, n + j)) : w.at(i, n + j);
    return inv;
}

Int det_recursive(const DenseIntMatrix& a, std::vector<int>& cols, int row)
{
    const int m = static_cast<int>(cols.size());
    if (m == 1)
        return a.at(row, cols[0]);
    Int acc = 0;
    for (int c = 0; c < m; ++c) {
        const Int& lead = a.at(row, cols[c]);
        if (lead == 0)
            continue;
        std::vector<int> rest;
        rest.reserve(static_cast<std::size_t>(m) - 1);
        for (int j = 0; j < m; ++j)
            if (j != c)
                rest.push_back(cols[j]);
        Int minor = det_recursive(a, rest, row + 1);
        if (c % 2 == 0)
            acc += lead * minor;
        else
            acc -= lead * minor;
    }
    return acc;
}

// Adjugate route for tiny matrices.
ScaledInverse adjugate_inverse(const DenseIntMatrix& a)
{
    const int n = a.rows();
    ScaledInverse inv;
    inv.num = DenseIntMatrix(n, n);

    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        all[static_cast<std::size_t>(i)] = i;

    if (n == 1) {
        inv.det = a.at(0, 0);
        inv.num.at(0, 0) = 1;
    } else {
        inv.det = det_recursive(a, all, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                // cofactor C_ji
                DenseIntMatrix sub(n - 1, n - 1);
                for (int r = 0, rr = 0; r < n; ++r) {
                    if (r == j)
                        continue;
                    for (int c = 0, cc = 0; c < n; ++c) {
                        if (c == i)
                            continue;
                        sub.at(rr, cc) = a.at(r, c);
                        ++cc;
                    }
                    ++rr;
                }
                std::vector<int> subcols(static_cast<std::size_t>(n) - 1);
                for (int c = 0; c < n - 1; ++c)
                    subcols[static_cast<std::size_t>(c)] = c;
                Int minor = det_recursive(sub, subcols, 0);
                inv.num.at(i, j) = ((i + j) % 2 == 0) ? minor : Int(-minor);
            }
    }
    if (inv.det == 0)
        throw SingularMatrixError();
    return inv;
}

} // namespace

Int det_bareiss(DenseIntMatrix a)
{
    const int n = a.rows();
    if (n != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0)
        return 1;

    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        const int p = find_pivot_row(a, k);
        if (p < 0)
            return 0;
        if (p != k) {
            a.swap_rows(k, p);
            sign = -sign;
        }
        const Int& piv = a.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            const Int fac = a.at(i, k);
            for (int j = k + 1; j < n; ++j) {
                Int& x = a.at(i, j);
                const Int& y = a.at(k, j);
                if (x == 0 && (fac == 0 || y == 0))
                    continue;
                bareiss_update(x, piv, fac, y, prev);
            }
            a.at(i, k) = 0;
        }
        prev = piv;
    }
    return sign < 0 ? Int(-a.at(n - 1, n - 1)) : a.at(n - 1, n - 1);
}

ScaledInverse inverse_scaled(const DenseIntMatrix& a)
{
    if (a.rows() == a.cols() && a.rows() <= 4 && a.rows() >= 1)
        return adjugate_inverse(a);
    return ffgj_inverse(a, /*parallel=*/true);
}

ScaledInverse inverse_scaled_ref(const DenseIntMatrix& a)
{
    return ffgj_inverse(a, /*parallel=*/false);
}

} // namespace diffposet
