#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "diffposet/poset.hpp"

namespace diffposet {

// The distinguished pair of saturated chains rooted at the minimum, one
// element per rank, each element covering at most one element of the poset.
// For r = 1 the chains agree through rank 1 and split at rank 2; for r > 1
// they split already at rank 1.
struct ChainPair {
    std::vector<int> lead;    // chain whose element is put first in each rank's basis
    std::vector<int> witness; // second chain, used to witness denominator bounds

    int top_rank() const { return static_cast<int>(lead.size()) - 1; }
};

struct ChainExtensionError : std::runtime_error {
    int stuck_rank;
    explicit ChainExtensionError(int rank)
        : std::runtime_error("no cover with at most one lower cover exists above rank " +
                             std::to_string(rank) + "; the poset cannot be differential"),
          stuck_rank(rank)
    {
    }
};

// Extends a saturated chain (given by its element index per rank, starting
// at start_rank) upward to target_rank, keeping the property that every
// chain element covers at most one element. Among the valid covers the one
// with the smallest canonical index is taken. Requires the last two chain
// elements to cover at most one element each.
std::vector<int> extend_chain(const GradedPoset& poset, int start_rank, std::vector<int> chain,
                              int target_rank);

// Finds the canonical (lexicographically least) chain pair for a poset
// certified r-differential. Requires top_rank >= 2.
ChainPair find_chain_pair(const GradedPoset& poset, int r);

struct ChainCheck {
    bool ok = false;
    std::vector<std::string> violations;
};

// Checks the four defining chain-pair properties combinatorially: ranks,
// saturation, the at-most-one-lower-cover property, and the equal/distinct
// pattern required for the given r.
ChainCheck verify_chain_pair(const GradedPoset& poset, const ChainPair& pair, int r);

// Rebuilds the poset with each rank's indices permuted so the lead chain
// element gets index 0 (a stable move-to-front; other elements keep their
// relative order). The permutations old index -> new index are recorded per
// rank, and the returned pair is expressed in the new indexing.
GradedPoset reorder_chain_first(const GradedPoset& poset, const ChainPair& pair,
                                ChainPair* reordered_pair = nullptr,
                                std::vector<std::vector<int>>* permutations = nullptr);

} // namespace diffposet
