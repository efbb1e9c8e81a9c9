#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diffposet/chains.hpp"
#include "diffposet/constructions.hpp"
#include "diffposet/fundamental.hpp"
#include "diffposet/poset.hpp"

using namespace diffposet;

TEST_CASE("chain extension follows the single-row and single-column chains")
{
    const GradedPoset young = build_young(5);

    const auto rows = extend_chain(young, 0, {0, 0}, 5);
    REQUIRE(rows.size() == 6);
    for (int n = 0; n <= 5; ++n)
        CHECK(rows[static_cast<std::size_t>(n)] == 0); // (n) is first in each rank

    // (1) < (1,1): the column chain continues through (1,1,1), (1,1,1,1)
    const int col2 = young.rank_size(2) - 1;
    const auto cols = extend_chain(young, 1, {0, col2}, 4);
    REQUIRE(cols.size() == 4);
    CHECK(young.label(3, cols[2]) == "(1,1,1)");
    CHECK(young.label(4, cols[3]) == "(1,1,1,1)");

    SUBCASE("target equal to the current rank returns the chain unchanged")
    {
        CHECK(extend_chain(young, 0, {0, 0, 0}, 2) == std::vector<int>{0, 0, 0});
    }

    SUBCASE("a chain ending at an element with two lower covers is rejected")
    {
        // (2,1) covers (2) and (1,1)
        CHECK_THROWS_AS(extend_chain(young, 2, {0, 1}, 5), std::invalid_argument);
    }
}

TEST_CASE("chain extension reports the stuck rank on non-differential input")
{
    // Remove the edge (3) -> (4): the only remaining cover of (3) is (2,1)-shaped,
    // which has two lower covers, so extension from (3) cannot continue.
    const GradedPoset young = build_young(5);
    std::vector<std::vector<GradedPoset::Edge>> edges;
    for (int n = 0; n < 5; ++n)
        edges.push_back(young.edges(n));
    edges[3].erase(edges[3].begin()); // (3)->(4) is the first level-3 edge
    const GradedPoset broken(young.rank_sizes(), std::move(edges));

    try {
        extend_chain(broken, 0, {0, 0}, 5);
        FAIL("expected ChainExtensionError");
    } catch (const ChainExtensionError& e) {
        CHECK(e.stuck_rank == 3);
    }
}

TEST_CASE("the canonical chain pair of Young's lattice")
{
    const GradedPoset young = build_young(6);
    const ChainPair pair = find_chain_pair(young, 1);
    for (int n = 1; n <= 6; ++n) {
        // lead runs through the single-row partitions "(n)"
        CHECK(young.label(n, pair.lead[static_cast<std::size_t>(n)]) ==
              "(" + std::to_string(n) + ")");
        if (n >= 2) {
            // witness through the single-column partitions "(1,...,1)"
            std::string column = "(1";
            for (int i = 1; i < n; ++i)
                column += ",1";
            column += ")";
            CHECK(young.label(n, pair.witness[static_cast<std::size_t>(n)]) == column);
        }
    }
    CHECK(pair.lead[1] == pair.witness[1]);
    CHECK(pair.lead[2] != pair.witness[2]);
    CHECK(verify_chain_pair(young, pair, 1).ok);
}

TEST_CASE("the chain pair of a product stays in separate factors")
{
    const GradedPoset yy = build_product({build_young(4), build_young(4)}, 4);
    const ChainPair pair = find_chain_pair(yy, 2);
    CHECK(yy.label(4, pair.lead[4]) == "((4),())");
    CHECK(yy.label(4, pair.witness[4]) == "((),(4))");
    CHECK(pair.lead[0] == pair.witness[0]);
    CHECK(pair.lead[1] != pair.witness[1]);
    CHECK(verify_chain_pair(yy, pair, 2).ok);
}

TEST_CASE("r = 1 chains agree through rank 1 and split at rank 2")
{
    for (const GradedPoset& poset : {build_young(7), build_young_fibonacci(7)}) {
        const ChainPair pair = find_chain_pair(poset, 1);
        CHECK(pair.lead[0] == pair.witness[0]);
        CHECK(pair.lead[1] == pair.witness[1]);
        for (int n = 2; n <= 7; ++n)
            CHECK(pair.lead[static_cast<std::size_t>(n)] !=
                  pair.witness[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("verify_chain_pair rejects constructed violations")
{
    const GradedPoset yy = build_product({build_young(3), build_young(3)}, 3);
    const ChainPair good = find_chain_pair(yy, 2);

    SUBCASE("equal chains violate the distinctness required for r = 2")
    {
        ChainPair bad = good;
        bad.witness = bad.lead;
        const ChainCheck check = verify_chain_pair(yy, bad, 2);
        CHECK_FALSE(check.ok);
    }

    SUBCASE("a chain through an element with two lower covers fails")
    {
        const GradedPoset young = build_young(4);
        ChainPair bad = find_chain_pair(young, 1);
        bad.lead[3] = 1; // (2,1) covers two elements; also breaks saturation above
        const ChainCheck check = verify_chain_pair(young, bad, 1);
        CHECK_FALSE(check.ok);
        bool mentions_covers = false;
        for (const auto& v : check.violations)
            mentions_covers |= v.find("more than one") != std::string::npos;
        CHECK(mentions_covers);
    }
}

TEST_CASE("pairing of lifted chain elements against the witness chain")
{
    // r = 1: <U^j t_{n-j}, s_n> is 1 for j in {n, n-1} and 0 below;
    // r >= 2: 1 for j = n and 0 below.
    auto check_formula = [](const GradedPoset& poset, int r) {
        const ChainPair pair = find_chain_pair(poset, r);
        for (int n = 0; n <= poset.top_rank(); ++n) {
            const ChainLifts lifts(poset, pair.lead, n);
            const RankVector witness =
                RankVector::basis(n, poset.rank_size(n), pair.witness[static_cast<std::size_t>(n)]);
            for (int j = 0; j <= n; ++j) {
                const Rat value = pairing(lifts.lift(n, j), witness);
                const bool one = r == 1 ? j >= n - 1 : j == n;
                CHECK(value == (one ? 1 : 0));
            }
        }
    };
    check_formula(build_young(8), 1);
    check_formula(build_young_fibonacci(8), 1);
    check_formula(build_product({build_young(6), build_young(6)}, 6), 2);
    check_formula(build_product({build_young(5), build_young(5), build_young(5)}, 5), 3);
}

TEST_CASE("the down map sends each chain element to its predecessor")
{
    const GradedPoset young = build_young(6);
    const ChainPair pair = find_chain_pair(young, 1);
    for (int n = 1; n <= 6; ++n) {
        const RankVector from =
            RankVector::basis(n, young.rank_size(n), pair.lead[static_cast<std::size_t>(n)]);
        RankVector image(n - 1, young.rank_size(n - 1));
        image.coeffs = down_matrix(young, n).apply(from.coeffs);
        RankVector expect = RankVector::basis(n - 1, young.rank_size(n - 1),
                                              pair.lead[static_cast<std::size_t>(n) - 1]);
        CHECK(image.coeffs == expect.coeffs);
    }
}

TEST_CASE("reordering the basis puts the lead chain first and is invertible")
{
    const GradedPoset young = build_young(5);
    const ChainPair pair = find_chain_pair(young, 1);
    ChainPair reordered;
    std::vector<std::vector<int>> perms;
    const GradedPoset lead_first = reorder_chain_first(young, pair, &reordered, &perms);

    for (int n = 0; n <= 5; ++n) {
        CHECK(reordered.lead[static_cast<std::size_t>(n)] == 0);
        // permutation is a bijection
        std::vector<bool> hit(static_cast<std::size_t>(young.rank_size(n)), false);
        for (int i = 0; i < young.rank_size(n); ++i) {
            const int image = perms[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
            CHECK_FALSE(hit[static_cast<std::size_t>(image)]);
            hit[static_cast<std::size_t>(image)] = true;
            CHECK(lead_first.label(n, image) == young.label(n, i));
        }
    }
    // edges carried over under the relabeling
    for (int n = 0; n < 5; ++n) {
        CHECK(lead_first.edges(n).size() == young.edges(n).size());
        for (const auto& [i, j] : young.edges(n))
            CHECK(lead_first.has_cover(
                n, perms[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)],
                perms[static_cast<std::size_t>(n) + 1][static_cast<std::size_t>(j)]));
    }
    CHECK(check_axioms(lead_first, 1).all_ok);
}
