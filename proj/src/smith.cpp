#include "diffposet/smith.hpp"

#include <sstream>

#include "diffposet/fundamental.hpp"

namespace diffposet {

namespace {

// row_i -= q * row_t, mirrored into the left transform.
void row_reduce(DenseIntMatrix& d, DenseIntMatrix& left, int i, int t, const Int& q)
{
    if (q == 0)
        return;
    for (int c = 0; c < d.cols(); ++c)
        if (d.at(t, c) != 0)
            mpz_submul(d.at(i, c).get_mpz_t(), q.get_mpz_t(), d.at(t, c).get_mpz_t());
    for (int c = 0; c < left.cols(); ++c)
        if (left.at(t, c) != 0)
            mpz_submul(left.at(i, c).get_mpz_t(), q.get_mpz_t(), left.at(t, c).get_mpz_t());
}

// col_j -= q * col_t, mirrored into the right transform.
void col_reduce(DenseIntMatrix& d, DenseIntMatrix& right, int j, int t, const Int& q)
{
    if (q == 0)
        return;
    for (int r = 0; r < d.rows(); ++r)
        if (d.at(r, t) != 0)
            mpz_submul(d.at(r, j).get_mpz_t(), q.get_mpz_t(), d.at(r, t).get_mpz_t());
    for (int r = 0; r < right.rows(); ++r)
        if (right.at(r, t) != 0)
            mpz_submul(right.at(r, j).get_mpz_t(), q.get_mpz_t(), right.at(r, t).get_mpz_t());
}

// Least-absolute-value nonzero entry of the trailing submatrix, row-major
// tie-break. Returns false when the submatrix is zero.
bool find_min_pivot(const DenseIntMatrix& d, int t, int& pi, int& pj)
{
    bool found = false;
    for (int i = t; i < d.rows(); ++i)
        for (int j = t; j < d.cols(); ++j) {
            const Int& x = d.at(i, j);
            if (x == 0)
                continue;
            if (!found || mpz_cmpabs(x.get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0) {
                found = true;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithDecomposition smith_form(const DenseIntMatrix& a)
{
    const int m = a.rows();
    const int n = a.cols();
    const int rank_bound = std::min(m, n);

    DenseIntMatrix d = a;
    DenseIntMatrix left = DenseIntMatrix::identity(m);
    DenseIntMatrix right = DenseIntMatrix::identity(n);

    for (int t = 0; t < rank_bound; ++t) {
        for (;;) {
            int pi = 0, pj = 0;
            if (!find_min_pivot(d, t, pi, pj))
                break; // trailing submatrix is zero
            if (pi != t) {
                d.swap_rows(t, pi);
                left.swap_rows(t, pi);
            }
            if (pj != t) {
                d.swap_cols(t, pj);
                right.swap_cols(t, pj);
            }

            const Int piv = d.at(t, t);
            bool clean = true;
#pragma omp parallel for schedule(static) reduction(&& : clean) if (m - t > 96)
            for (int i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0)
                    continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), piv.get_mpz_t());
                row_reduce(d, left, i, t, q);
                if (d.at(i, t) != 0)
                    clean = false;
            }
#pragma omp parallel for schedule(static) reduction(&& : clean) if (n - t > 96)
            for (int j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0)
                    continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), piv.get_mpz_t());
                col_reduce(d, right, j, t, q);
                if (d.at(t, j) != 0)
                    clean = false;
            }
            if (clean)
                break; // pivot's row and column are zeroed; next diagonal slot
        }
    }

    // Nonnegative diagonal.
    for (int t = 0; t < rank_bound; ++t)
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            left.negate_row(t);
        }

    // Zeros sort to the end; then the gcd/lcm repair enforces the chain.
    for (bool dirty = true; dirty;) {
        dirty = false;
        for (int t = 0; t + 1 < rank_bound; ++t) {
            const Int a_t = d.at(t, t);
            const Int b_t = d.at(t + 1, t + 1);
            if (a_t == 0 && b_t != 0) {
                d.swap_rows(t, t + 1);
                left.swap_rows(t, t + 1);
                d.swap_cols(t, t + 1);
                right.swap_cols(t, t + 1);
                dirty = true;
                continue;
            }
            if (a_t == 0 || divides(a_t, b_t))
                continue;

            // Block [[a,0],[0,b]] -> [[a,0],[b,b]] -> [[g, yb],[0, ab/g]]
            // -> diag(g, ab/g) with g = xa + yb.
            for (int r = 0; r < d.rows(); ++r)
                d.at(r, t) += d.at(r, t + 1);
            for (int r = 0; r < right.rows(); ++r)
                right.at(r, t) += right.at(r, t + 1);

            Int x, y;
            const Int g = ext_gcd(a_t, b_t, x, y);
            const Int a_g = a_t / g;
            const Int b_g = b_t / g;
            for (int c = 0; c < d.cols(); ++c) {
                const Int top = d.at(t, c);
                const Int bot = d.at(t + 1, c);
                d.at(t, c) = x * top + y * bot;
                d.at(t + 1, c) = a_g * bot - b_g * top;
            }
            for (int c = 0; c < left.cols(); ++c) {
                const Int top = left.at(t, c);
                const Int bot = left.at(t + 1, c);
                left.at(t, c) = x * top + y * bot;
                left.at(t + 1, c) = a_g * bot - b_g * top;
            }

            const Int spill = d.at(t, t + 1) / g; // = y*b/g, exact
            col_reduce(d, right, t + 1, t, spill);
            dirty = true;
        }
    }

    SmithDecomposition out;
    out.diagonal.reserve(static_cast<std::size_t>(rank_bound));
    for (int t = 0; t < rank_bound; ++t)
        out.diagonal.push_back(d.at(t, t));
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
}

SmithDecomposition smith_form(const SparseIntMatrix& a)
{
    return smith_form(to_dense(a));
}

Int last_entry_via_inverse(const ScaledInverse& inv)
{
    Int l = 1;
    for (int i = 0; i < inv.num.rows(); ++i)
        for (int j = 0; j < inv.num.cols(); ++j)
            l = int_lcm(l, inv.entry(i, j).get_den());
    return l;
}

Int last_entry_via_inverse(const DenseIntMatrix& a)
{
    return last_entry_via_inverse(inverse_scaled(a));
}

Int last_entry_bound(int r, int k, int n)
{
    if (n < 1 || k < 1 || r < 1)
        throw std::invalid_argument("last_entry_bound: need r, k, n >= 1");
    if (r >= 2)
        return rising_factorial(r, k, n + 1);
    return rising_factorial(1, k, n - 1) * (n + 1 + k);
}

DivisibilityReport check_divisibility_bound(int r, int n, int k, const Int& last_entry,
                                            const ScaledInverse& inv, const RankVector& v)
{
    DivisibilityReport rep;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    rep.last_entry = last_entry;
    rep.bound = last_entry_bound(rep.r, k, n);
    rep.divides = divides(rep.bound, rep.last_entry);
    rep.inverse_oracle = last_entry_via_inverse(inv);
    rep.oracle_match = rep.inverse_oracle == rep.last_entry;
    rep.multiplier = minimal_integral_multiplier(v);
    rep.multiplier_equals_bound = rep.multiplier == rep.bound;
    rep.last_entry_equals_bound = rep.last_entry == rep.bound;
    return rep;
}

DivisibilityReport check_divisibility_bound(const GradedPoset& poset, const ChainPair& pair,
                                            int n, int k)
{
    if (n < 1 || n >= poset.top_rank())
        throw std::out_of_range("check_divisibility_bound: need 1 <= n < top_rank");
    const DenseIntMatrix a = to_dense(du_matrix(poset, n).plus_scaled_identity(k));
    const Int last = smith_form(a).last_entry();
    const ScaledInverse inv = inverse_scaled(a);
    const RankVector v = fundamental_vector(poset, pair, n, k);
    return check_divisibility_bound(resolve_r(poset), n, k, last, inv, v);
}

FirstColumnReport first_column_check(const ScaledInverse& inv, const RankVector& v)
{
    FirstColumnReport rep;
    rep.ok = true;
    for (int i = 0; i < inv.num.rows(); ++i)
        if (inv.entry(i, 0) != v[i]) {
            rep.ok = false;
            rep.first_mismatch = i;
            break;
        }
    return rep;
}

FirstColumnReport first_column_check(const GradedPoset& poset, const ChainPair& pair, int n,
                                     int k)
{
    if (n < 0 || n >= poset.top_rank())
        throw std::out_of_range("first_column_check: need 0 <= n < top_rank");
    ChainPair reordered;
    const GradedPoset lead_first = reorder_chain_first(poset, pair, &reordered);
    const DenseIntMatrix a = to_dense(du_matrix(lead_first, n).plus_scaled_identity(k));
    const ScaledInverse inv = inverse_scaled(a);
    const RankVector v = fundamental_vector(lead_first, reordered, n, k);
    return first_column_check(inv, v);
}

std::string DivisibilityReport::summary() const
{
    std::ostringstream out;
    out << "n = " << n << ", k = " << k << ": last Smith entry " << last_entry << ", bound "
        << bound << (divides ? " divides it" : " DOES NOT divide it") << "; inverse oracle "
        << inverse_oracle << (oracle_match ? " agrees" : " DISAGREES")
        << "; fundamental-vector multiplier " << multiplier
        << (multiplier_equals_bound ? " equals the bound" : " DIFFERS from the bound")
        << (last_entry_equals_bound ? "; bound attained exactly" : "");
    return out.str();
}

} // namespace diffposet
