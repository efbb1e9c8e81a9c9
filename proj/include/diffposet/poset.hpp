#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffposet/numbers.hpp"
#include "diffposet/sparse_matrix.hpp"

namespace diffposet {

// A graded poset with a minimum element, stored through ranks 0..top_rank as
// a ranked Hasse diagram. Elements of each rank carry canonical 0-based
// indices; cover edges at level n join rank n to rank n+1.
//
// Construction enforces the hard shape invariants (p_0 = 1, indices in
// range, no duplicate edges). Gradedness itself -- every element of positive
// rank covering at least one element -- is deliberately *not* a construction
// error: perturbed posets must be loadable so the axiom certifier can report
// on them.
class GradedPoset {
public:
    using Edge = std::pair<int, int>; // (index at rank n, index at rank n+1)

    GradedPoset(std::vector<int> rank_sizes,
                std::vector<std::vector<Edge>> cover_edges,
                std::optional<int> declared_r = std::nullopt,
                std::vector<std::vector<std::string>> labels = {});

    int top_rank() const { return static_cast<int>(rank_sizes_.size()) - 1; }
    int rank_size(int n) const { return rank_sizes_[static_cast<std::size_t>(n)]; }
    const std::vector<int>& rank_sizes() const { return rank_sizes_; }

    const std::vector<Edge>& edges(int level) const { return edges_[static_cast<std::size_t>(level)]; }

    // Elements of rank n+1 covering element i of rank n, ascending.
    const std::vector<int>& covers_above(int n, int i) const
    {
        return up_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    }
    // Elements of rank n-1 covered by element i of rank n, ascending.
    const std::vector<int>& covers_below(int n, int i) const
    {
        return down_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    }

    bool has_cover(int level, int i, int j) const;

    std::optional<int> declared_r() const { return r_param_; }
    void set_declared_r(int r) { r_param_ = r; }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int n, int i) const
    {
        return labels_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    }
    // Label if present, otherwise "n:i".
    std::string describe(int n, int i) const;

private:
    std::vector<int> rank_sizes_;
    std::vector<std::vector<Edge>> edges_;
    std::optional<int> r_param_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::vector<std::vector<int>>> up_;   // [level][i] -> covers above
    std::vector<std::vector<std::vector<int>>> down_; // [rank][j] -> covered below
};

// Formal rational linear combination of the elements of one rank.
struct RankVector {
    int rank = 0;
    std::vector<Rat> coeffs;

    RankVector() = default;
    RankVector(int rank, int size) : rank(rank), coeffs(static_cast<std::size_t>(size)) {}

    static RankVector basis(int rank, int size, int index);

    Rat& operator[](int i) { return coeffs[static_cast<std::size_t>(i)]; }
    const Rat& operator[](int i) const { return coeffs[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;

    RankVector& operator+=(const RankVector& rhs);
    RankVector& operator-=(const RankVector& rhs);
    RankVector& operator*=(const Rat& s);
};

// The matrix of U_n : ZP_n -> ZP_{n+1} in the standard basis; a basis
// element maps to the sum of the elements covering it. Requires
// 0 <= n < top_rank.
SparseIntMatrix up_matrix(const GradedPoset& poset, int n);

// D_n = U_{n-1}^t, the transpose duality. Requires 1 <= n <= top_rank.
SparseIntMatrix down_matrix(const GradedPoset& poset, int n);

// DU_n = D_{n+1} U_n and UD_n = U_{n-1} D_n on rank n.
SparseIntMatrix du_matrix(const GradedPoset& poset, int n);
SparseIntMatrix ud_matrix(const GradedPoset& poset, int n);

// Number of atoms p_1; the candidate differential parameter.
int infer_r(const GradedPoset& poset);

// The bilinear form with <x,y> = delta_{x,y} on basis elements.
Rat pairing(const RankVector& a, const RankVector& b);

struct AxiomRankResult {
    int rank = 0;
    bool matrix_ok = false; // DU_n - UD_n == r I, via sparse matrix arithmetic
    bool d1_ok = false;     // covered-by counts exceed covers counts by r
    bool d2_ok = false;     // common upper covers match common lower covers
    std::vector<std::string> counterexamples;

    bool ok() const { return matrix_ok && d1_ok && d2_ok; }
};

struct AxiomReport {
    int r = 0;
    int highest_rank_verified = -1; // largest n with every check <= n passing
    bool all_ok = false;
    std::vector<AxiomRankResult> ranks; // n = 1 .. top_rank-1
    // Truncation boundary: the top rank itself can never be checked, since
    // its covers upward are not stored.
    std::string boundary_note;

    std::string summary() const;
};

// Certifies DU_n - UD_n = r I for 1 <= n <= top_rank-1, both by exact
// matrix arithmetic and by direct combinatorial counting, naming a
// counterexample for every failure. Failures are report content, never
// exceptions.
AxiomReport check_axioms(const GradedPoset& poset, int r);

} // namespace diffposet
