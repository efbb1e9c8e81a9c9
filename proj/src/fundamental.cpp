#include "diffposet/fundamental.hpp"

#include <stdexcept>

namespace diffposet {

int resolve_r(const GradedPoset& poset)
{
    if (poset.declared_r())
        return *poset.declared_r();
    return infer_r(poset);
}

Int rising_factorial(int r, int k, int len)
{
    if (r < 1 || k < 1 || len < 0)
        throw std::invalid_argument("rising_factorial: need r >= 1, k >= 1, len >= 0");
    Int acc = 1;
    for (int i = 1; i <= len; ++i)
        acc *= Int(r) * i + k;
    return acc;
}

ChainLifts::ChainLifts(const GradedPoset& poset, const std::vector<int>& chain, int max_rank)
{
    if (max_rank < 0 || max_rank > poset.top_rank())
        throw std::out_of_range("ChainLifts: rank out of range");
    if (static_cast<int>(chain.size()) < max_rank + 1)
        throw std::invalid_argument("ChainLifts: chain too short");

    lifts_.resize(static_cast<std::size_t>(max_rank) + 1);
    for (int n = 0; n <= max_rank; ++n) {
        auto& row = lifts_[static_cast<std::size_t>(n)];
        row.reserve(static_cast<std::size_t>(n) + 1);
        row.push_back(RankVector::basis(n, poset.rank_size(n), chain[static_cast<std::size_t>(n)]));
        if (n == 0)
            continue;
        const SparseIntMatrix up = up_matrix(poset, n - 1);
        const auto& prev = lifts_[static_cast<std::size_t>(n) - 1];
        for (int j = 1; j <= n; ++j) {
            RankVector lifted(n, poset.rank_size(n));
            lifted.coeffs = up.apply(prev[static_cast<std::size_t>(j) - 1].coeffs);
            row.push_back(std::move(lifted));
        }
    }
}

RankVector fundamental_vector(const ChainLifts& lead_lifts, int r, int n, int k)
{
    if (k < 1)
        throw std::invalid_argument("fundamental_vector: k must be a positive integer");
    if (n < 0 || n > lead_lifts.max_rank())
        throw std::out_of_range("fundamental_vector: rank out of range");

    RankVector v(n, lead_lifts.lift(n, 0).size());
    for (int j = 0; j <= n; ++j) {
        Rat scale(j % 2 == 0 ? 1 : -1);
        scale /= Rat(rising_factorial(r, k, j + 1));
        RankVector term = lead_lifts.lift(n, j);
        term *= scale;
        v += term;
    }
    return v;
}

RankVector fundamental_vector(const GradedPoset& poset, const ChainPair& pair, int n, int k)
{
    return fundamental_vector(ChainLifts(poset, pair.lead, n), resolve_r(poset), n, k);
}

RankVector fundamental_vector_r1(const GradedPoset& poset, const ChainPair& pair, int n, int k)
{
    if (resolve_r(poset) != 1)
        throw std::invalid_argument("fundamental_vector_r1: poset is not 1-differential");
    if (n < 1)
        throw std::invalid_argument("fundamental_vector_r1: need n >= 1");
    if (k < 1)
        throw std::invalid_argument("fundamental_vector_r1: k must be a positive integer");

    ChainLifts lifts(poset, pair.lead, n);
    RankVector v(n, lifts.lift(n, 0).size());
    for (int j = 0; j <= n - 2; ++j) {
        Rat scale(j % 2 == 0 ? 1 : -1);
        scale /= Rat(rising_factorial(1, k, j + 1));
        RankVector term = lifts.lift(n, j);
        term *= scale;
        v += term;
    }
    Rat scale((n - 1) % 2 == 0 ? 1 : -1);
    scale /= Rat(rising_factorial(1, k, n - 1) * (n + 1 + k));
    RankVector top = lifts.lift(n, n);
    top *= scale;
    v += top;
    return v;
}

IdentityCheck verify_fundamental_identity(const GradedPoset& poset, const ChainPair& pair, int n,
                                          int k)
{
    if (n < 0 || n >= poset.top_rank())
        throw std::out_of_range("verify_fundamental_identity: rank exceeds certified range");

    const RankVector v = fundamental_vector(poset, pair, n, k);
    const SparseIntMatrix op = du_matrix(poset, n).plus_scaled_identity(k);

    IdentityCheck check;
    check.residual = RankVector(n, poset.rank_size(n));
    check.residual.coeffs = op.apply(v.coeffs);
    check.residual -= RankVector::basis(n, poset.rank_size(n), pair.lead[static_cast<std::size_t>(n)]);
    check.ok = check.residual.is_zero();
    return check;
}

Int minimal_integral_multiplier(const RankVector& v)
{
    return denominator_lcm(v.coeffs);
}

} // namespace diffposet
