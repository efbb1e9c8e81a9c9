#include "diffposet/poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace diffposet {

GradedPoset::GradedPoset(std::vector<int> rank_sizes,
                         std::vector<std::vector<Edge>> cover_edges,
                         std::optional<int> declared_r,
                         std::vector<std::vector<std::string>> labels)
    : rank_sizes_(std::move(rank_sizes)),
      edges_(std::move(cover_edges)),
      r_param_(declared_r),
      labels_(std::move(labels))
{
    if (rank_sizes_.empty())
        throw std::invalid_argument("poset needs at least rank 0");
    if (rank_sizes_.front() != 1)
        throw std::invalid_argument("rank 0 must hold exactly the minimum element");
    for (int p : rank_sizes_)
        if (p <= 0)
            throw std::invalid_argument("rank sizes must be positive");

    const auto levels = rank_sizes_.size() - 1;
    if (edges_.size() != levels)
        throw std::invalid_argument("expected one edge set per level 0..top_rank-1");
    if (!labels_.empty() && labels_.size() != rank_sizes_.size())
        throw std::invalid_argument("labels must cover every rank when present");
    if (!labels_.empty())
        for (std::size_t n = 0; n < labels_.size(); ++n)
            if (static_cast<int>(labels_[n].size()) != rank_sizes_[n])
                throw std::invalid_argument("label count mismatch at some rank");

    up_.resize(levels);
    down_.resize(rank_sizes_.size());
    down_[0].resize(1);
    for (std::size_t n = 0; n < levels; ++n) {
        auto& level = edges_[n];
        std::sort(level.begin(), level.end());
        if (std::adjacent_find(level.begin(), level.end()) != level.end())
            throw std::invalid_argument("duplicate cover edge");
        up_[n].resize(static_cast<std::size_t>(rank_sizes_[n]));
        down_[n + 1].resize(static_cast<std::size_t>(rank_sizes_[n + 1]));
        for (const auto& [i, j] : level) {
            if (i < 0 || i >= rank_sizes_[n] || j < 0 || j >= rank_sizes_[n + 1])
                throw std::invalid_argument("cover edge index out of range");
            up_[n][static_cast<std::size_t>(i)].push_back(j);
            down_[n + 1][static_cast<std::size_t>(j)].push_back(i);
        }
    }
}

bool GradedPoset::has_cover(int level, int i, int j) const
{
    const auto& ups = covers_above(level, i);
    return std::binary_search(ups.begin(), ups.end(), j);
}

std::string GradedPoset::describe(int n, int i) const
{
    if (has_labels())
        return label(n, i);
    return std::to_string(n) + ":" + std::to_string(i);
}

RankVector RankVector::basis(int rank, int size, int index)
{
    RankVector v(rank, size);
    v[index] = 1;
    return v;
}

bool RankVector::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& q) { return q == 0; });
}

RankVector& RankVector::operator+=(const RankVector& rhs)
{
    if (rank != rhs.rank || coeffs.size() != rhs.coeffs.size())
        throw std::invalid_argument("RankVector: rank mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] += rhs.coeffs[i];
    return *this;
}

RankVector& RankVector::operator-=(const RankVector& rhs)
{
    if (rank != rhs.rank || coeffs.size() != rhs.coeffs.size())
        throw std::invalid_argument("RankVector: rank mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] -= rhs.coeffs[i];
    return *this;
}

RankVector& RankVector::operator*=(const Rat& s)
{
    for (auto& c : coeffs)
        c *= s;
    return *this;
}

SparseIntMatrix up_matrix(const GradedPoset& poset, int n)
{
    if (n < 0 || n >= poset.top_rank())
        throw std::out_of_range("up_matrix: rank out of range");
    SparseIntMatrix u(poset.rank_size(n + 1), poset.rank_size(n));
    for (const auto& [i, j] : poset.edges(n))
        u.set(j, i, 1);
    return u;
}

SparseIntMatrix down_matrix(const GradedPoset& poset, int n)
{
    if (n < 1 || n > poset.top_rank())
        throw std::out_of_range("down_matrix: rank out of range");
    return up_matrix(poset, n - 1).transpose();
}

SparseIntMatrix du_matrix(const GradedPoset& poset, int n)
{
    if (n < 0 || n >= poset.top_rank())
        throw std::out_of_range("du_matrix: rank out of range");
    return down_matrix(poset, n + 1) * up_matrix(poset, n);
}

SparseIntMatrix ud_matrix(const GradedPoset& poset, int n)
{
    if (n < 1 || n > poset.top_rank())
        throw std::out_of_range("ud_matrix: rank out of range");
    return up_matrix(poset, n - 1) * down_matrix(poset, n);
}

int infer_r(const GradedPoset& poset)
{
    if (poset.top_rank() < 1)
        throw std::invalid_argument("infer_r: poset truncated below rank 1");
    return poset.rank_size(1);
}

Rat pairing(const RankVector& a, const RankVector& b)
{
    if (a.rank != b.rank || a.coeffs.size() != b.coeffs.size())
        throw std::invalid_argument("pairing: rank mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        acc += a.coeffs[i] * b.coeffs[i];
    return acc;
}

namespace {

int sorted_common(const std::vector<int>& a, const std::vector<int>& b)
{
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

AxiomRankResult check_rank(const GradedPoset& poset, int n, int r)
{
    AxiomRankResult res;
    res.rank = n;
    const int p = poset.rank_size(n);

    SparseIntMatrix lhs = du_matrix(poset, n) - ud_matrix(poset, n);
    res.matrix_ok = lhs == SparseIntMatrix::scaled_identity(p, r);

    res.d1_ok = true;
    for (int i = 0; i < p; ++i) {
        const int below = static_cast<int>(poset.covers_below(n, i).size());
        const int above = static_cast<int>(poset.covers_above(n, i).size());
        if (n >= 1 && below == 0) {
            res.d1_ok = false;
            res.counterexamples.push_back("element " + poset.describe(n, i) +
                                          " covers no element (poset not graded over the minimum)");
        } else if (above != below + r) {
            res.d1_ok = false;
            res.counterexamples.push_back("element " + poset.describe(n, i) + " covers " +
                                          std::to_string(below) + " elements but is covered by " +
                                          std::to_string(above) + ", expected " +
                                          std::to_string(below + r));
        }
    }

    res.d2_ok = true;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            const int below = sorted_common(poset.covers_below(n, i), poset.covers_below(n, j));
            const int above = sorted_common(poset.covers_above(n, i), poset.covers_above(n, j));
            if (below != above) {
                res.d2_ok = false;
                res.counterexamples.push_back("pair (" + poset.describe(n, i) + ", " +
                                              poset.describe(n, j) + ") covers " +
                                              std::to_string(below) +
                                              " common elements but is covered by " +
                                              std::to_string(above) + " common elements");
            }
        }
    return res;
}

} // namespace

AxiomReport check_axioms(const GradedPoset& poset, int r)
{
    if (poset.top_rank() < 1)
        throw std::invalid_argument("check_axioms: need top_rank >= 1");
    if (r < 1)
        throw std::invalid_argument("check_axioms: r must be positive");

    AxiomReport report;
    report.r = r;
    const int top = poset.top_rank();
    report.boundary_note = "rank " + std::to_string(top) +
                           " (the truncation boundary) cannot be checked: covers above it are not stored";

    const int checkable = top - 1;
    report.ranks.resize(static_cast<std::size_t>(std::max(checkable, 0)));
#pragma omp parallel for schedule(dynamic)
    for (int n = 1; n <= checkable; ++n)
        report.ranks[static_cast<std::size_t>(n - 1)] = check_rank(poset, n, r);

    report.all_ok = true;
    report.highest_rank_verified = 0;
    for (const auto& res : report.ranks) {
        if (!res.ok()) {
            report.all_ok = false;
            break;
        }
        report.highest_rank_verified = res.rank;
    }
    return report;
}

std::string AxiomReport::summary() const
{
    std::ostringstream out;
    out << "differential axioms with r = " << r << ":\n";
    for (const auto& res : ranks) {
        out << "  rank " << res.rank << ": " << (res.ok() ? "pass" : "FAIL")
            << " (matrix " << (res.matrix_ok ? "ok" : "mismatch")
            << ", covering counts " << (res.d1_ok ? "ok" : "mismatch")
            << ", common covers " << (res.d2_ok ? "ok" : "mismatch") << ")\n";
        for (const auto& c : res.counterexamples)
            out << "    counterexample: " << c << "\n";
    }
    out << "  highest rank verified: " << highest_rank_verified << "\n";
    out << "  note: " << boundary_note << "\n";
    return out.str();
}

} // namespace diffposet
