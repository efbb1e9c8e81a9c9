#pragma once

#include <span>
#include <utility>
#include <vector>

#include "diffposet/numbers.hpp"

namespace diffposet {

// Sparse matrix over arbitrary-precision integers. Rows hold (column, value)
// pairs sorted by column; zero entries are never stored.
class SparseIntMatrix {
public:
    using Entry = std::pair<int, Int>;

    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols);

    static SparseIntMatrix scaled_identity(int n, const Int& scale);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // Accumulates v into (r, c); entries that become zero are erased.
    void add(int r, int c, const Int& v);
    void set(int r, int c, const Int& v);
    Int get(int r, int c) const;

    std::span<const Entry> row(int r) const { return data_[static_cast<std::size_t>(r)]; }
    std::size_t nonzero_count() const;

    SparseIntMatrix transpose() const;
    SparseIntMatrix operator*(const SparseIntMatrix& rhs) const;
    SparseIntMatrix operator-(const SparseIntMatrix& rhs) const;
    SparseIntMatrix plus_scaled_identity(const Int& k) const;

    bool operator==(const SparseIntMatrix& rhs) const;
    bool is_zero() const { return nonzero_count() == 0; }

    // Matrix-vector products, exact over the rationals.
    std::vector<Rat> apply(std::span<const Rat> x) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<Entry>> data_;

    void check_index(int r, int c) const;
};

} // namespace diffposet
