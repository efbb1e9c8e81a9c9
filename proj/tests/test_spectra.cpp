#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diffposet/constructions.hpp"
#include "diffposet/smith.hpp"
#include "diffposet/spectra.hpp"
#include "oracles.hpp"

using namespace diffposet;

TEST_CASE("characteristic polynomial of small shifted operators")
{
    const GradedPoset young = build_young(4);

    // DU_1 = [2]: det(DU_1 + tI) = t + 2
    CHECK(char_poly(to_dense(du_matrix(young, 1))) == std::vector<Int>{2, 1});

    // DU_2 = [[2,1],[1,2]]: det = t^2 + 4t + 3
    CHECK(char_poly(to_dense(du_matrix(young, 2))) == std::vector<Int>{3, 4, 1});

    const GradedPoset yy = build_product({build_young(3), build_young(3)}, 3);
    // DU_1 = [[3,1],[1,3]]: det = (t+2)(t+4)
    CHECK(char_poly(to_dense(du_matrix(yy, 1))) == std::vector<Int>{8, 6, 1});
}

TEST_CASE("parallel evaluation, serial reference and the trace oracle agree")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const DenseIntMatrix a = oracles::random_matrix(rng, n, -6, 6);
        const auto parallel = char_poly(a);
        CHECK(parallel == char_poly_ref(a));
        CHECK(parallel == oracles::faddeev_char_poly(a));
    }
}

TEST_CASE("factorization multiplicities are the rank-size differences")
{
    const GradedPoset young = build_young(6);
    const SpectrumFactorization f = spectrum_factorization(young, 2, 1);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<Int, int>{1, 1}); // (t+1)^{dp_2}
    CHECK(f.factors[1] == std::pair<Int, int>{2, 0}); // (t+2)^{dp_1}
    CHECK(f.factors[2] == std::pair<Int, int>{3, 1}); // (t+3)^{p_0}
    CHECK(f.multiplicity_sum() == young.rank_size(2));
    CHECK(f.multiplicities_nonnegative());
    CHECK(f.expand() == std::vector<Int>{3, 4, 1});
    CHECK(f.evaluate(4) == 35);
}

TEST_CASE("the determinant identity holds across the families")
{
    const GradedPoset young = build_young(8);
    for (int n = 0; n < 8; ++n)
        CHECK(char_poly_factor_check(young, n, 1).ok);

    const GradedPoset yf = build_young_fibonacci(8);
    for (int n = 0; n < 8; ++n)
        CHECK(char_poly_factor_check(yf, n, 1).ok);

    const GradedPoset yy = build_product({build_young(6), build_young(6)}, 6);
    for (int n = 0; n < 6; ++n)
        CHECK(char_poly_factor_check(yy, n, 2).ok);
}

TEST_CASE("multiplicities of passing factorizations are nonnegative and sum to p_n")
{
    const GradedPoset young = build_young(8);
    const GradedPoset yf = build_young_fibonacci(8);
    const GradedPoset yy = build_product({build_young(6), build_young(6)}, 6);
    auto inspect = [](const GradedPoset& poset, int r) {
        for (int n = 0; n <= poset.top_rank(); ++n) {
            const SpectrumFactorization f = spectrum_factorization(poset, n, r);
            CHECK(f.multiplicities_nonnegative());
            CHECK(f.multiplicity_sum() == poset.rank_size(n));
        }
    };
    inspect(young, 1);
    inspect(yf, 1);
    inspect(yy, 2);
}

TEST_CASE("the determinant identity detects a wrong parameter")
{
    CHECK_FALSE(char_poly_factor_check(build_young(4), 2, 2).ok);
}

TEST_CASE("direct determinants match the factorization at every shift used")
{
    const GradedPoset young = build_young(7);
    for (int n = 1; n < 7; ++n) {
        const SpectrumFactorization f = spectrum_factorization(young, n, 1);
        for (int k : {1, 2, 3, 5, 11}) {
            const Int direct = det_bareiss(to_dense(du_matrix(young, n).plus_scaled_identity(k)));
            CHECK(direct == f.evaluate(k));
        }
    }
}

TEST_CASE("weak growth holds on certified families and fails when constructed")
{
    CHECK(weak_growth_check(build_young(10)).ok);
    CHECK(weak_growth_check(build_young_fibonacci(10)).ok);

    // 1,2,1 rank sizes: not weakly increasing (and clearly not differential)
    const GradedPoset shrinking({1, 2, 1}, {{{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}});
    const WeakGrowthCheck check = weak_growth_check(shrinking);
    CHECK_FALSE(check.ok);
    CHECK(check.first_violation_rank == 2);
    CHECK_FALSE(check_axioms(shrinking, 1).all_ok);
}

TEST_CASE("prime selection takes the least prime above (n+1) r")
{
    CHECK(choose_prime_k(1, 2).prime == 5);
    CHECK(choose_prime_k(1, 2).k == 4);
    CHECK(choose_prime_k(2, 2).prime == 7);
    CHECK(choose_prime_k(2, 2).k == 5);
    CHECK(choose_prime_k(1, 4).prime == 7);
    CHECK(choose_prime_k(1, 4).k == 6);
    CHECK_THROWS_AS(choose_prime_k(1, 1), std::invalid_argument);
}

TEST_CASE("growth certificates on hand-checked instances")
{
    const GradedPoset young = build_young(4);
    const GrowthCertificate cert = certify_strict_growth(young, 1, 2);
    CHECK(cert.prime == 5);
    CHECK(cert.k == 4);
    CHECK(cert.last_entry == 35);
    CHECK(cert.det_direct == 35);
    CHECK(cert.delta_direct == 1);
    CHECK(cert.ok());

    const GradedPoset yy = build_product({build_young(4), build_young(4)}, 4);
    const GrowthCertificate yy_cert = certify_strict_growth(yy, 2, 2);
    CHECK(yy_cert.prime == 7);
    CHECK(yy_cert.k == 5);
    CHECK(yy_cert.delta_direct == 3);
    CHECK(yy_cert.ok());

    const GradedPoset yf = build_young_fibonacci(5);
    const GrowthCertificate yf_cert = certify_strict_growth(yf, 1, 3);
    CHECK(yf_cert.delta_direct == 1);
    CHECK(yf_cert.ok());
}

TEST_CASE("certificates fail on non-differential input")
{
    // Break Young's lattice at level 2 and ask for a certificate at rank 2:
    // the determinant no longer matches the factorization.
    const GradedPoset young = build_young(4);
    std::vector<std::vector<GradedPoset::Edge>> edges;
    for (int n = 0; n < 4; ++n)
        edges.push_back(young.edges(n));
    edges[2].erase(edges[2].begin()); // (2) -> (3)
    const GradedPoset broken(young.rank_sizes(), std::move(edges));

    const GrowthCertificate cert = certify_strict_growth(broken, 1, 2);
    CHECK_FALSE(cert.ok());
    CHECK_FALSE(cert.det_matches_factorization);
}
