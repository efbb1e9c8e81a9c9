#pragma once

#include <vector>

#include "diffposet/chains.hpp"
#include "diffposet/poset.hpp"

namespace diffposet {

// The declared differential parameter, falling back to the atom count.
int resolve_r(const GradedPoset& poset);

// The modified factorial (r*len + k)(r*(len-1) + k) ... (r*1 + k), with the
// empty product equal to 1. Requires r >= 1, k >= 1, len >= 0.
Int rising_factorial(int r, int k, int len);

// Cache of the repeated-up-map images of one chain: lift(n, j) is U^j
// applied to the chain element of rank n-j, landing in rank n. Built
// incrementally, lift(n, j) = U_{n-1} * lift(n-1, j-1).
class ChainLifts {
public:
    ChainLifts(const GradedPoset& poset, const std::vector<int>& chain, int max_rank);

    const RankVector& lift(int n, int j) const
    {
        return lifts_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
    }
    int max_rank() const { return static_cast<int>(lifts_.size()) - 1; }

private:
    std::vector<std::vector<RankVector>> lifts_;
};

// The fundamental vector: the alternating sum over j of
// (-1)^j U^j t_{n-j} / (j+1)!_{r,k}, which (DU_n + kI) maps back to the
// chain's basis vector at rank n. Exact rational coefficients.
RankVector fundamental_vector(const GradedPoset& poset, const ChainPair& pair, int n, int k);
RankVector fundamental_vector(const ChainLifts& lead_lifts, int r, int n, int k);

// The collapsed form valid for r = 1, merging the two top terms into
// (-1)^{n-1} U^n t_0 / ((n-1)!_{1,k} (n+1+k)). Requires r = 1 and n >= 1;
// agrees with fundamental_vector exactly.
RankVector fundamental_vector_r1(const GradedPoset& poset, const ChainPair& pair, int n, int k);

struct IdentityCheck {
    bool ok = false;
    RankVector residual; // (DU_n + kI) v - t_n; zero on pass
};

// Verifies (DU_n + kI) v_{n,k} = t_n in exact rational arithmetic.
IdentityCheck verify_fundamental_identity(const GradedPoset& poset, const ChainPair& pair, int n,
                                          int k);

// Least common multiple of the coefficient denominators: the smallest
// positive integer whose multiple of the vector is integral.
Int minimal_integral_multiplier(const RankVector& v);

} // namespace diffposet
