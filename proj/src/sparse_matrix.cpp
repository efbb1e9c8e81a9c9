#include "diffposet/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffposet {

SparseIntMatrix::SparseIntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows))
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("SparseIntMatrix: negative dimension");
}

SparseIntMatrix SparseIntMatrix::scaled_identity(int n, const Int& scale)
{
    SparseIntMatrix m(n, n);
    if (scale != 0)
        for (int i = 0; i < n; ++i)
            m.data_[static_cast<std::size_t>(i)].emplace_back(i, scale);
    return m;
}

void SparseIntMatrix::check_index(int r, int c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseIntMatrix: index out of range");
}

void SparseIntMatrix::add(int r, int c, const Int& v)
{
    check_index(r, c);
    if (v == 0)
        return;
    auto& row = data_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second == 0)
            row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

void SparseIntMatrix::set(int r, int c, const Int& v)
{
    check_index(r, c);
    auto& row = data_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v == 0)
            row.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        row.insert(it, {c, v});
    }
}

Int SparseIntMatrix::get(int r, int c) const
{
    check_index(r, c);
    const auto& row = data_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c)
        return it->second;
    return 0;
}

std::size_t SparseIntMatrix::nonzero_count() const
{
    std::size_t n = 0;
    for (const auto& row : data_)
        n += row.size();
    return n;
}

SparseIntMatrix SparseIntMatrix::transpose() const
{
    SparseIntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[static_cast<std::size_t>(r)])
            t.data_[static_cast<std::size_t>(c)].emplace_back(r, v);
    return t;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("SparseIntMatrix: dimension mismatch in product");
    SparseIntMatrix out(rows_, rhs.cols_);
    std::vector<Int> acc(static_cast<std::size_t>(rhs.cols_), Int(0));
    std::vector<int> touched;
    for (int i = 0; i < rows_; ++i) {
        touched.clear();
        for (const auto& [k, a] : data_[static_cast<std::size_t>(i)]) {
            for (const auto& [j, b] : rhs.data_[static_cast<std::size_t>(k)]) {
                Int& cell = acc[static_cast<std::size_t>(j)];
                if (cell == 0)
                    touched.push_back(j);
                cell += a * b;
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& row = out.data_[static_cast<std::size_t>(i)];
        for (int j : touched) {
            Int& cell = acc[static_cast<std::size_t>(j)];
            if (cell != 0)
                row.emplace_back(j, cell);
            cell = 0;
        }
    }
    return out;
}

SparseIntMatrix SparseIntMatrix::operator-(const SparseIntMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("SparseIntMatrix: dimension mismatch in difference");
    SparseIntMatrix out = *this;
    for (int r = 0; r < rhs.rows_; ++r)
        for (const auto& [c, v] : rhs.data_[static_cast<std::size_t>(r)])
            out.add(r, c, -v);
    return out;
}

SparseIntMatrix SparseIntMatrix::plus_scaled_identity(const Int& k) const
{
    if (rows_ != cols_)
        throw std::invalid_argument("SparseIntMatrix: identity shift needs a square matrix");
    SparseIntMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        out.add(i, i, k);
    return out;
}

bool SparseIntMatrix::operator==(const SparseIntMatrix& rhs) const
{
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::vector<Rat> SparseIntMatrix::apply(std::span<const Rat> x) const
{
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("SparseIntMatrix: vector length mismatch");
    std::vector<Rat> y(static_cast<std::size_t>(rows_), Rat(0));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[static_cast<std::size_t>(r)])
            y[static_cast<std::size_t>(r)] += Rat(v) * x[static_cast<std::size_t>(c)];
    return y;
}

} // namespace diffposet
