#pragma once

// Young-symmetrizer construction of generalized higher Specht polynomials,
// the augmented variants driven by multi-sets, the r-index combinatorics,
// and the straightening procedure.

#include <vector>

#include "specht/combinat.hpp"
#include "specht/poly.hpp"
#include "specht/tableaux.hpp"

namespace specht {

// Row and column groups of a tableau with content 1..n, as explicit
// permutation lists (0-based label maps). epsilon_T is only ever applied.
class SymmetrizerContext {
public:
    explicit SymmetrizerContext(Tableau t);

    const Tableau& tableau() const { return t_; }
    int n() const { return t_.size(); }
    const std::vector<std::vector<int>>& row_group() const { return row_group_; }
    const std::vector<std::vector<int>>& col_group() const { return col_group_; }

private:
    Tableau t_;
    std::vector<std::vector<int>> row_group_;
    std::vector<std::vector<int>> col_group_;
};

struct RowSymmetrized {
    MultiPoly poly;        // sum of the distinct monomials in the R(T)-orbit
    long long stabilizer;  // s_{M,T}
};

long long stabilizer_size(const Tableau& h, const SymmetrizerContext& ctx);
RowSymmetrized row_symmetrized(const SemiStandardTableau& m, const SymmetrizerContext& ctx);

// F_{M,T} = eps_T p_{M,T} / s_{M,T}; integer coefficients by construction
MultiPoly specht_polynomial(const SemiStandardTableau& m, const SymmetrizerContext& ctx);
MultiPoly specht_polynomial(const SemiStandardTableau& m, const Tableau& t);
// eps_T p_{H,T} for an arbitrary filling H (no stabilizer division)
MultiPoly epsilon_image(const Tableau& h, const SymmetrizerContext& ctx);
// Q_{M,T} = F_{M,T} / F_{C^0,T}
MultiPoly specht_quotient(const SemiStandardTableau& m, const SymmetrizerContext& ctx);

// r_i of Definition-style index bookkeeping: for i in the hat set, the count
// of non-members below i; for a remainder copy, n - k_hat + #(larger members).
int r_index(int i, const BoundedMultiset& iset, bool hat_copy);

enum class AugmentedVariant { plain, homogeneous };

MultiPoly augmented(const CochargeTableau& c, const SymmetrizerContext& ctx,
                    const BoundedMultiset& iset, AugmentedVariant variant);

struct HVectors {
    std::vector<int> h_plain;  // h_r = #(complement copies with r_i = r), r = 1..n
    std::vector<int> h_hom;    // multiplicity of i in the complement, i = 1..n
};
// 0-indexed entries: h[r-1] corresponds to e_r
HVectors h_vectors(const CochargeTableau& c, const BoundedMultiset& iset);
HVectors h_vectors_from_dset(const std::vector<int>& dsp, const BoundedMultiset& iset);

struct StraightenMove {
    int row = 0;   // upper of the two swapped rows (0-based)
    int col = 0;   // leftmost affected column
    int span = 0;  // number of columns swapped
    long long inversions_after = 0;
};

struct StraightenResult {
    SemiStandardTableau m;
    Rat c;
    std::vector<StraightenMove> trace;
    bool vanished = false;  // repeated column entry: c = 0, m is a placeholder
};

long long column_inversions(const Tableau& h);
// H with non-decreasing rows -> (M, c) with eps_T p_H - c eps_T p_M supported
// strictly below p_{H,T} in the column-degree order
StraightenResult straighten(const Tableau& h, const SymmetrizerContext& ctx);

}  // namespace specht
