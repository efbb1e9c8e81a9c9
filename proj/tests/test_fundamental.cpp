#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diffposet/chains.hpp"
#include "diffposet/constructions.hpp"
#include "diffposet/fundamental.hpp"
#include "diffposet/poset.hpp"

using namespace diffposet;

TEST_CASE("modified factorial values and recurrence")
{
    CHECK(rising_factorial(1, 1, 3) == 24); // 4*3*2
    CHECK(rising_factorial(2, 1, 2) == 15); // 5*3
    CHECK(rising_factorial(1, 7, 0) == 1);
    CHECK(rising_factorial(3, 2, 0) == 1);

    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 4; ++k) {
            Int prev = 1;
            for (int len = 1; len <= 8; ++len) {
                const Int cur = rising_factorial(r, k, len);
                CHECK(cur == (Int(r) * len + k) * prev);
                CHECK(cur > prev); // strictly increasing
                prev = cur;
            }
        }

    CHECK_THROWS_AS(rising_factorial(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(rising_factorial(1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(rising_factorial(1, 1, -1), std::invalid_argument);
}

TEST_CASE("fundamental vector at rank 0 is the bottom scaled by 1/(r+k)")
{
    const GradedPoset young = build_young(3);
    const ChainPair pair = find_chain_pair(young, 1);
    for (int k = 1; k <= 4; ++k) {
        const RankVector v = fundamental_vector(young, pair, 0, k);
        CHECK(v[0] == Rat(1, 1 + k));
    }

    const GradedPoset yy = build_product({build_young(3), build_young(3)}, 3);
    const ChainPair yy_pair = find_chain_pair(yy, 2);
    const RankVector v = fundamental_vector(yy, yy_pair, 0, 1);
    CHECK(v[0] == Rat(1, 3));
}

TEST_CASE("fundamental vector at rank 1 of Young's lattice collapses to 1/(2+k)")
{
    const GradedPoset young = build_young(3);
    const ChainPair pair = find_chain_pair(young, 1);
    for (int k = 1; k <= 5; ++k) {
        const RankVector v = fundamental_vector(young, pair, 1, k);
        CHECK(v[0] == Rat(1, 2 + k));
    }
}

TEST_CASE("hand-expanded coefficients at rank 2 of Young's lattice")
{
    const GradedPoset young = build_young(3);
    const ChainPair pair = find_chain_pair(young, 1);
    const RankVector v = fundamental_vector(young, pair, 2, 1);
    CHECK(v[pair.lead[2]] == Rat(3, 8));
    CHECK(v[pair.witness[2]] == Rat(-1, 8));
    CHECK(minimal_integral_multiplier(v) == 8); // 1!_{1,1} * (2+1+1)
}

TEST_CASE("hand-expanded coefficients at rank 1 of the doubled lattice")
{
    const GradedPoset yy = build_product({build_young(3), build_young(3)}, 3);
    const ChainPair pair = find_chain_pair(yy, 2);
    const RankVector v = fundamental_vector(yy, pair, 1, 1);
    CHECK(v[pair.lead[1]] == Rat(4, 15));
    CHECK(v[pair.witness[1]] == Rat(-1, 15));
    CHECK(minimal_integral_multiplier(v) == 15); // 2!_{2,1}
}

TEST_CASE("the identity (DU + kI) v = t holds on the families")
{
    const GradedPoset young = build_young(10);
    const ChainPair young_pair = find_chain_pair(young, 1);
    for (int n = 0; n < 10; ++n)
        for (int k : {1, 2, 3, 5})
            CHECK(verify_fundamental_identity(young, young_pair, n, k).ok);

    const GradedPoset yy = build_product({build_young(7), build_young(7)}, 7);
    const ChainPair yy_pair = find_chain_pair(yy, 2);
    for (int n = 0; n < 7; ++n)
        for (int k : {1, 2, 3})
            CHECK(verify_fundamental_identity(yy, yy_pair, n, k).ok);
}

TEST_CASE("the identity fails with a nonzero residual on perturbed input")
{
    const GradedPoset young = build_young(6);
    std::vector<std::vector<GradedPoset::Edge>> edges;
    for (int n = 0; n < 6; ++n)
        edges.push_back(young.edges(n));
    // drop (2,1) -> (2,2); the chains survive, DU_3 loses a cover count
    const GradedPoset::Edge victim{1, 2};
    auto& level3 = edges[3];
    level3.erase(std::find(level3.begin(), level3.end(), victim));
    const GradedPoset broken(young.rank_sizes(), std::move(edges));

    const ChainPair pair = find_chain_pair(broken, 1);
    const IdentityCheck check = verify_fundamental_identity(broken, pair, 3, 1);
    CHECK_FALSE(check.ok);
    CHECK_FALSE(check.residual.is_zero());
}

TEST_CASE("the collapsed r = 1 form agrees with the full sum")
{
    for (const GradedPoset& poset : {build_young(9), build_young_fibonacci(9)}) {
        const ChainPair pair = find_chain_pair(poset, 1);
        for (int n = 1; n <= 9; ++n)
            for (int k : {1, 2, 3, 5, 11}) {
                const RankVector full = fundamental_vector(poset, pair, n, k);
                const RankVector collapsed = fundamental_vector_r1(poset, pair, n, k);
                CHECK(full.coeffs == collapsed.coeffs);
            }
    }
}

TEST_CASE("the collapsed form rejects r != 1")
{
    const GradedPoset yy = build_product({build_young(3), build_young(3)}, 3);
    const ChainPair pair = find_chain_pair(yy, 2);
    CHECK_THROWS_AS(fundamental_vector_r1(yy, pair, 2, 1), std::invalid_argument);
}

TEST_CASE("k must be positive")
{
    const GradedPoset young = build_young(3);
    const ChainPair pair = find_chain_pair(young, 1);
    CHECK_THROWS_AS(fundamental_vector(young, pair, 2, 0), std::invalid_argument);
}

TEST_CASE("denominator bound: the multiplier equals the closed form")
{
    // (n+1)!_{r,k} for r >= 2 and (n-1)!_{1,k} (n+1+k) for r = 1.
    const GradedPoset young = build_young(9);
    const ChainPair young_pair = find_chain_pair(young, 1);
    for (int n = 1; n < 9; ++n)
        for (int k : {1, 2, 3}) {
            const RankVector v = fundamental_vector(young, young_pair, n, k);
            CHECK(minimal_integral_multiplier(v) ==
                  rising_factorial(1, k, n - 1) * (n + 1 + k));
        }

    const GradedPoset yy = build_product({build_young(6), build_young(6)}, 6);
    const ChainPair yy_pair = find_chain_pair(yy, 2);
    for (int n = 0; n < 6; ++n)
        for (int k : {1, 2, 3}) {
            const RankVector v = fundamental_vector(yy, yy_pair, n, k);
            CHECK(minimal_integral_multiplier(v) == rising_factorial(2, k, n + 1));
        }
}

TEST_CASE("incremental chain lifts match direct repeated application")
{
    const GradedPoset young = build_young(7);
    const ChainPair pair = find_chain_pair(young, 1);
    const ChainLifts lifts(young, pair.lead, 7);
    for (int n = 0; n <= 7; ++n)
        for (int j = 0; j <= n; ++j) {
            RankVector direct = RankVector::basis(
                n - j, young.rank_size(n - j), pair.lead[static_cast<std::size_t>(n - j)]);
            for (int level = n - j; level < n; ++level) {
                RankVector next(level + 1, young.rank_size(level + 1));
                next.coeffs = up_matrix(young, level).apply(direct.coeffs);
                direct = std::move(next);
            }
            CHECK(lifts.lift(n, j).coeffs == direct.coeffs);
        }
}

TEST_CASE("integral vectors have multiplier 1")
{
    RankVector v(2, 3);
    v[0] = 4;
    v[2] = -7;
    CHECK(minimal_integral_multiplier(v) == 1);
}
