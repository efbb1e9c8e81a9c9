#pragma once

#include <vector>

#include "diffposet/poset.hpp"

namespace diffposet {

// Deterministic builders for the standard differential-poset families used
// as test beds. Two builds from the same spec produce identical orderings
// and edge sets.
struct FamilySpec {
    enum class Family { young, young_fibonacci, product };

    Family family = Family::young;
    int top_rank = 0;
    std::vector<FamilySpec> factors; // product only, >= 2 entries

    static FamilySpec young(int top_rank) { return {Family::young, top_rank, {}}; }
    static FamilySpec young_fibonacci(int top_rank) { return {Family::young_fibonacci, top_rank, {}}; }
    static FamilySpec product(std::vector<FamilySpec> factors, int top_rank)
    {
        return {Family::product, top_rank, std::move(factors)};
    }
};

// Young's lattice through rank N: rank n holds the partitions of n in
// lexicographically decreasing order of their parts; covers add one box.
GradedPoset build_young(int top_rank);

// Young-Fibonacci lattice through rank N: rank n holds the {1,2}-words of
// digit sum n in lexicographic order (1 < 2). A word is covered by the
// words obtained by inserting a 1 anywhere left of its leftmost 1, or by
// turning its leftmost 1 into a 2.
GradedPoset build_young_fibonacci(int top_rank);

// Cartesian product truncated at rank N: rank n holds tuples whose factor
// ranks sum to n, ordered by rank composition (first factor's rank
// descending) and then by factor indices. Covers raise one coordinate by
// one cover. Each factor must be stored through rank >= N.
GradedPoset build_product(const std::vector<GradedPoset>& factors, int top_rank);

GradedPoset build_family(const FamilySpec& spec);

} // namespace diffposet
