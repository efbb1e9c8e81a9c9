#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diffposet/constructions.hpp"
#include "diffposet/poset.hpp"
#include "oracles.hpp"

using namespace diffposet;

TEST_CASE("Young rank sizes are the partition numbers")
{
    const GradedPoset young = build_young(14);
    for (int n = 0; n <= 14; ++n)
        CHECK(young.rank_size(n) == oracles::partition_count(n));
    CHECK(young.rank_size(14) == 135);
    CHECK(young.rank_sizes() ==
          std::vector<int>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135});
}

TEST_CASE("Young-Fibonacci rank sizes are the Fibonacci numbers")
{
    const GradedPoset yf = build_young_fibonacci(14);
    for (int n = 0; n <= 14; ++n)
        CHECK(yf.rank_size(n) == oracles::fibonacci(n));
    CHECK(yf.rank_size(6) == 13);
}

TEST_CASE("product rank sizes are the convolution of the factors'")
{
    const GradedPoset yy = build_product({build_young(8), build_young(8)}, 8);
    std::vector<long> partition_sizes;
    for (int n = 0; n <= 8; ++n)
        partition_sizes.push_back(oracles::partition_count(n));
    const auto expected = oracles::convolve(partition_sizes, partition_sizes, 8);
    for (int n = 0; n <= 8; ++n)
        CHECK(yy.rank_size(n) == expected[static_cast<std::size_t>(n)]);
    CHECK(yy.rank_sizes() == std::vector<int>{1, 2, 5, 10, 20, 36, 65, 110, 185});
}

TEST_CASE("partition ordering is lexicographically decreasing")
{
    const GradedPoset young = build_young(4);
    CHECK(young.label(4, 0) == "(4)");
    CHECK(young.label(4, 1) == "(3,1)");
    CHECK(young.label(4, 2) == "(2,2)");
    CHECK(young.label(4, 3) == "(2,1,1)");
    CHECK(young.label(4, 4) == "(1,1,1,1)");
}

TEST_CASE("word ordering puts 1 before 2")
{
    const GradedPoset yf = build_young_fibonacci(3);
    CHECK(yf.label(3, 0) == "111");
    CHECK(yf.label(3, 1) == "12");
    CHECK(yf.label(3, 2) == "21");
}

TEST_CASE("both rank-2 elements of Young's lattice cover exactly one element")
{
    const GradedPoset young = build_young(2);
    CHECK(young.rank_size(2) == 2);
    CHECK(young.covers_below(2, 0).size() == 1);
    CHECK(young.covers_below(2, 1).size() == 1);
}

TEST_CASE("Young-Fibonacci agrees with Young's lattice through rank 2")
{
    const GradedPoset young = build_young(2);
    const GradedPoset yf = build_young_fibonacci(2);
    CHECK(young.rank_sizes() == yf.rank_sizes());
    for (int n = 0; n < 2; ++n)
        CHECK(young.edges(n) == yf.edges(n));
}

TEST_CASE("the standard families satisfy the axioms at every truncation")
{
    for (int top = 2; top <= 15; ++top) {
        CHECK(check_axioms(build_young(top), 1).all_ok);
        CHECK(check_axioms(build_young_fibonacci(top), 1).all_ok);
    }
}

TEST_CASE("products of differential posets add their parameters")
{
    const GradedPoset young = build_young(5);
    const GradedPoset yf = build_young_fibonacci(5);
    const GradedPoset mixed = build_product({young, yf}, 5);
    CHECK(mixed.declared_r() == 2);
    CHECK(check_axioms(mixed, 2).all_ok);

    const GradedPoset triple = build_product({young, young, young}, 4);
    CHECK(triple.declared_r() == 3);
    CHECK(check_axioms(triple, 3).all_ok);
}

TEST_CASE("construction is deterministic")
{
    const GradedPoset a = build_product({build_young(6), build_young_fibonacci(6)}, 6);
    const GradedPoset b = build_family(FamilySpec::product(
        {FamilySpec::young(6), FamilySpec::young_fibonacci(6)}, 6));
    CHECK(a.rank_sizes() == b.rank_sizes());
    for (int n = 0; n < 6; ++n)
        CHECK(a.edges(n) == b.edges(n));
    for (int n = 0; n <= 6; ++n)
        for (int i = 0; i < a.rank_size(n); ++i)
            CHECK(a.label(n, i) == b.label(n, i));
}

TEST_CASE("degenerate and invalid construction arguments")
{
    CHECK(build_young(0).top_rank() == 0);
    CHECK_THROWS_AS(build_young(-1), std::invalid_argument);
    CHECK_THROWS_AS(build_product({build_young(3)}, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_product({build_young(2), build_young(3)}, 3), std::invalid_argument);
}
