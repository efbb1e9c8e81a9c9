#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

namespace diffposet {

// Arbitrary-precision integers and rationals. All arithmetic in this
// library is exact; there is no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// g = a*x + b*y
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y)
{
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool divides(const Int& d, const Int& a)
{
    return d != 0 && mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_prime(const Int& p)
{
    // 50 Miller-Rabin rounds; deterministic at the sizes this library meets.
    return mpz_probab_prime_p(p.get_mpz_t(), 50) != 0;
}

inline Int next_prime_above(const Int& x)
{
    Int p;
    mpz_nextprime(p.get_mpz_t(), x.get_mpz_t());
    return p;
}

// Least common multiple of the (canonical, positive) denominators.
inline Int denominator_lcm(std::span<const Rat> values)
{
    Int l = 1;
    for (const Rat& q : values)
        l = int_lcm(l, q.get_den());
    return l;
}

} // namespace diffposet
