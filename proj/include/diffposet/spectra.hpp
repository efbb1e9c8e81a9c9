#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diffposet/dense_matrix.hpp"
#include "diffposet/poset.hpp"

namespace diffposet {

// det(DU_n + tI) as the product over i = 0..n of (t + r(i+1))^{dp_{n-i}}
// where dp_m = p_m - p_{m-1} (and p_{-1} = 0, so the top factor carries
// exponent p_0).
struct SpectrumFactorization {
    int n = 0;
    int r = 0;
    // (root r(i+1), multiplicity dp_{n-i}) for i = 0..n.
    std::vector<std::pair<Int, int>> factors;

    std::vector<Int> expand() const;     // polynomial coefficients, coeffs[i] on t^i
    Int evaluate(const Int& t) const;
    int multiplicity_sum() const;
    bool multiplicities_nonnegative() const;
};

SpectrumFactorization spectrum_factorization(const GradedPoset& poset, int n, int r);

// Coefficients of det(a + tI), exact. Evaluates the determinant at the
// integer points t = 0..size and interpolates; evaluation points run in
// parallel under OpenMP.
std::vector<Int> char_poly(const DenseIntMatrix& a);
// Serial reference of the same evaluation-interpolation scheme.
std::vector<Int> char_poly_ref(const DenseIntMatrix& a);

struct CharPolyCheck {
    bool ok = false;
    std::vector<Int> direct;             // interpolated det(DU_n + tI)
    std::vector<Int> from_factorization; // expanded product formula
};

// The determinant factorization identity at rank n, checked exactly.
CharPolyCheck char_poly_factor_check(const GradedPoset& poset, int n, int r);

struct WeakGrowthCheck {
    bool ok = false;
    int first_violation_rank = -1; // n with p_{n-1} > p_n, when not ok
};

WeakGrowthCheck weak_growth_check(const GradedPoset& poset);

struct PrimeShift {
    int prime = 0;
    int k = 0; // prime - r
};

// The smallest prime p > (n+1) r together with k = p - r; p is verified to
// divide none of 2r+k, ..., (n+1)r+k.
PrimeShift choose_prime_k(int r, int n);

// Computational trace of the strict-growth argument at rank n: a prime
// p = r + k divides the last Smith entry of DU_n + kI, hence the
// determinant, and can divide no factor of the determinant product other
// than (r+k)^{dp_n} -- forcing dp_n > 0.
struct GrowthCertificate {
    int n = 0;
    int r = 0;
    int prime = 0;
    int k = 0;
    Int last_entry;
    SpectrumFactorization factorization;
    Int det_direct;          // det(DU_n + kI) by elimination
    Int det_from_factors;    // factorization evaluated at t = k
    bool prime_is_prime = false;
    bool prime_divides_last_entry = false;
    bool last_entry_divides_det = false;
    bool det_matches_factorization = false;
    bool prime_only_in_first_factor = false;
    int delta_direct = 0;    // p_n - p_{n-1} by direct count
    bool conclusion_positive = false; // dp_n > 0 forced by the argument
    bool matches_direct_count = false;

    bool ok() const
    {
        return prime_is_prime && prime_divides_last_entry && last_entry_divides_det &&
               det_matches_factorization && prime_only_in_first_factor && conclusion_positive &&
               matches_direct_count;
    }
    std::string summary() const;
};

// Requires 2 <= n <= top_rank - 1 and an r-differential input; a failed
// step marks the certificate rather than throwing.
GrowthCertificate certify_strict_growth(const GradedPoset& poset, int r, int n);

} // namespace diffposet
