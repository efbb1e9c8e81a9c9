#include "diffposet/chains.hpp"

#include <algorithm>
#include <numeric>

namespace diffposet {

namespace {

int lower_cover_count(const GradedPoset& poset, int rank, int index)
{
    if (rank == 0)
        return 0;
    return static_cast<int>(poset.covers_below(rank, index).size());
}

} // namespace

std::vector<int> extend_chain(const GradedPoset& poset, int start_rank, std::vector<int> chain,
                              int target_rank)
{
    if (chain.empty())
        throw std::invalid_argument("extend_chain: empty chain");
    int end_rank = start_rank + static_cast<int>(chain.size()) - 1;
    if (start_rank < 0 || end_rank > poset.top_rank() || target_rank > poset.top_rank())
        throw std::out_of_range("extend_chain: rank out of range");

    for (std::size_t i = 0; i < chain.size(); ++i) {
        const int rank = start_rank + static_cast<int>(i);
        if (chain[i] < 0 || chain[i] >= poset.rank_size(rank))
            throw std::invalid_argument("extend_chain: chain index out of range");
        if (i > 0 && !poset.has_cover(rank - 1, chain[i - 1], chain[i]))
            throw std::invalid_argument("extend_chain: chain is not saturated");
    }
    for (std::size_t i = chain.size() >= 2 ? chain.size() - 2 : 0; i < chain.size(); ++i) {
        const int rank = start_rank + static_cast<int>(i);
        if (lower_cover_count(poset, rank, chain[i]) > 1)
            throw std::invalid_argument(
                "extend_chain: chain end covers more than one element, extension hypothesis fails");
    }

    while (end_rank < target_rank) {
        int chosen = -1;
        for (int j : poset.covers_above(end_rank, chain.back())) {
            if (lower_cover_count(poset, end_rank + 1, j) <= 1) {
                chosen = j;
                break; // covers_above is ascending, so this is the least index
            }
        }
        if (chosen < 0)
            throw ChainExtensionError(end_rank);
        chain.push_back(chosen);
        ++end_rank;
    }
    return chain;
}

ChainPair find_chain_pair(const GradedPoset& poset, int r)
{
    const int top = poset.top_rank();
    if (top < 2)
        throw std::invalid_argument("find_chain_pair: need top_rank >= 2");
    if (r < 1)
        throw std::invalid_argument("find_chain_pair: r must be positive");
    if (poset.rank_size(1) != r)
        throw std::invalid_argument("find_chain_pair: atom count disagrees with r");

    ChainPair pair;
    if (r == 1) {
        if (poset.rank_size(2) != 2)
            throw std::invalid_argument(
                "find_chain_pair: a 1-differential poset has exactly two rank-2 elements");
        for (int i = 0; i < 2; ++i)
            if (lower_cover_count(poset, 2, i) != 1)
                throw std::invalid_argument(
                    "find_chain_pair: rank-2 element covers more than one element");
        // Both chains pass through the unique atom and split at rank 2.
        pair.lead = extend_chain(poset, 0, {0, 0, 0}, top);
        pair.witness = extend_chain(poset, 0, {0, 0, 1}, top);
    } else {
        // Branch at rank 1 using the two least atoms.
        pair.lead = extend_chain(poset, 0, {0, 0}, top);
        pair.witness = extend_chain(poset, 0, {0, 1}, top);
    }
    return pair;
}

ChainCheck verify_chain_pair(const GradedPoset& poset, const ChainPair& pair, int r)
{
    ChainCheck check;
    const int top = poset.top_rank();
    if (static_cast<int>(pair.lead.size()) != top + 1 ||
        static_cast<int>(pair.witness.size()) != top + 1) {
        check.violations.push_back("chains must hold one element per rank 0.." +
                                   std::to_string(top));
        return check;
    }

    for (int n = 0; n <= top; ++n) {
        for (const int idx : {pair.lead[static_cast<std::size_t>(n)],
                              pair.witness[static_cast<std::size_t>(n)]}) {
            if (idx < 0 || idx >= poset.rank_size(n)) {
                check.violations.push_back("rank " + std::to_string(n) + ": index out of range");
                continue;
            }
            if (lower_cover_count(poset, n, idx) > 1)
                check.violations.push_back("rank " + std::to_string(n) + ": element " +
                                           poset.describe(n, idx) +
                                           " covers more than one element");
        }
    }
    for (int n = 1; n <= top; ++n) {
        if (!poset.has_cover(n - 1, pair.lead[static_cast<std::size_t>(n - 1)],
                             pair.lead[static_cast<std::size_t>(n)]))
            check.violations.push_back("lead chain not saturated at rank " + std::to_string(n));
        if (!poset.has_cover(n - 1, pair.witness[static_cast<std::size_t>(n - 1)],
                             pair.witness[static_cast<std::size_t>(n)]))
            check.violations.push_back("witness chain not saturated at rank " + std::to_string(n));
    }

    const int split_rank = r == 1 ? 2 : 1;
    for (int n = 0; n <= top; ++n) {
        const bool equal = pair.lead[static_cast<std::size_t>(n)] ==
                           pair.witness[static_cast<std::size_t>(n)];
        if (n < split_rank && !equal)
            check.violations.push_back("chains must agree at rank " + std::to_string(n) +
                                       " for r = " + std::to_string(r));
        if (n >= split_rank && equal)
            check.violations.push_back("chains must differ at rank " + std::to_string(n) +
                                       " for r = " + std::to_string(r));
    }

    check.ok = check.violations.empty();
    return check;
}

GradedPoset reorder_chain_first(const GradedPoset& poset, const ChainPair& pair,
                                ChainPair* reordered_pair,
                                std::vector<std::vector<int>>* permutations)
{
    const int top = poset.top_rank();
    if (static_cast<int>(pair.lead.size()) != top + 1)
        throw std::invalid_argument("reorder_chain_first: chain length mismatch");

    // perm[n][old] = new index; move-to-front of the lead element.
    std::vector<std::vector<int>> perm(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        const int p = poset.rank_size(n);
        const int front = pair.lead[static_cast<std::size_t>(n)];
        if (front < 0 || front >= p)
            throw std::invalid_argument("reorder_chain_first: chain index out of range");
        auto& pn = perm[static_cast<std::size_t>(n)];
        pn.resize(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i)
            pn[static_cast<std::size_t>(i)] = i < front ? i + 1 : i > front ? i : 0;
    }

    std::vector<std::vector<GradedPoset::Edge>> edges(static_cast<std::size_t>(top));
    for (int n = 0; n < top; ++n)
        for (const auto& [i, j] : poset.edges(n))
            edges[static_cast<std::size_t>(n)].push_back(
                {perm[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)],
                 perm[static_cast<std::size_t>(n) + 1][static_cast<std::size_t>(j)]});

    std::vector<std::vector<std::string>> labels;
    if (poset.has_labels()) {
        labels.resize(static_cast<std::size_t>(top) + 1);
        for (int n = 0; n <= top; ++n) {
            labels[static_cast<std::size_t>(n)].resize(
                static_cast<std::size_t>(poset.rank_size(n)));
            for (int i = 0; i < poset.rank_size(n); ++i)
                labels[static_cast<std::size_t>(n)]
                      [static_cast<std::size_t>(perm[static_cast<std::size_t>(n)]
                                                    [static_cast<std::size_t>(i)])] =
                          poset.label(n, i);
        }
    }

    if (reordered_pair) {
        reordered_pair->lead.assign(static_cast<std::size_t>(top) + 1, 0);
        reordered_pair->witness.resize(static_cast<std::size_t>(top) + 1);
        for (int n = 0; n <= top; ++n)
            reordered_pair->witness[static_cast<std::size_t>(n)] =
                perm[static_cast<std::size_t>(n)]
                    [static_cast<std::size_t>(pair.witness[static_cast<std::size_t>(n)])];
    }
    if (permutations)
        *permutations = perm;

    return GradedPoset(poset.rank_sizes(), std::move(edges), poset.declared_r(),
                       std::move(labels));
}

} // namespace diffposet
