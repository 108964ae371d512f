#include "specht/spechtpoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace specht {

namespace {

// all permutations of {0..n-1} fixing everything outside each label block
std::vector<std::vector<int>> block_group(const std::vector<std::vector<int>>& blocks, int n) {
    std::vector<std::vector<int>> group;
    group.push_back(std::vector<int>(n));
    std::iota(group[0].begin(), group[0].end(), 0);
    for (const std::vector<int>& block : blocks) {
        if (block.size() < 2) continue;
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::vector<int>> images;
        std::vector<int> arrangement = sorted;
        do {
            images.push_back(arrangement);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        std::vector<std::vector<int>> next;
        next.reserve(group.size() * images.size());
        for (const std::vector<int>& g : group)
            for (const std::vector<int>& img : images) {
                std::vector<int> q = g;
                for (size_t i = 0; i < sorted.size(); ++i) q[sorted[i]] = img[i];
                next.push_back(std::move(q));
            }
        group = std::move(next);
    }
    return group;
}

}  // namespace

SymmetrizerContext::SymmetrizerContext(Tableau t) : t_(std::move(t)) {
    if (!t_.has_full_content())
        throw std::domain_error("symmetrizer: tableau needs content 1..n");
    int n = t_.size();
    std::vector<std::vector<int>> rows, cols(t_.shape().first_part());
    for (int r = 0; r < t_.row_count(); ++r) {
        std::vector<int> labels;
        for (int c = 0; c < t_.row_length(r); ++c) {
            labels.push_back(t_.at(r, c) - 1);
            cols[c].push_back(t_.at(r, c) - 1);
        }
        rows.push_back(std::move(labels));
    }
    row_group_ = block_group(rows, n);
    col_group_ = block_group(cols, n);
}

long long stabilizer_size(const Tableau& h, const SymmetrizerContext& ctx) {
    Monomial p = monomial_from_pair(h, ctx.tableau());
    long long s = 0;
    for (const std::vector<int>& tau : ctx.row_group())
        if (p.permuted(tau) == p) ++s;
    return s;
}

namespace {

RowSymmetrized row_symmetrized_raw(const Tableau& h, const SymmetrizerContext& ctx) {
    Monomial p = monomial_from_pair(h, ctx.tableau());
    std::set<Monomial> orbit;
    long long stab = 0;
    for (const std::vector<int>& tau : ctx.row_group()) {
        Monomial q = p.permuted(tau);
        if (q == p) ++stab;
        orbit.insert(std::move(q));
    }
    std::vector<MultiPoly::Term> terms;
    terms.reserve(orbit.size());
    for (const Monomial& m : orbit) terms.push_back({m, Rat(1)});
    return {MultiPoly::from_terms(ctx.n(), std::move(terms)), stab};
}

MultiPoly signed_column_sum(const MultiPoly& f, const SymmetrizerContext& ctx) {
    MultiPoly out(ctx.n());
    for (const std::vector<int>& sigma : ctx.col_group()) {
        MultiPoly img = permute(f, sigma);
        out += sign_of_permutation(sigma) > 0 ? img : -img;
    }
    return out;
}

}  // namespace

RowSymmetrized row_symmetrized(const SemiStandardTableau& m, const SymmetrizerContext& ctx) {
    return row_symmetrized_raw(m.tab(), ctx);
}

MultiPoly specht_polynomial(const SemiStandardTableau& m, const SymmetrizerContext& ctx) {
    RowSymmetrized rs = row_symmetrized(m, ctx);
    MultiPoly f = signed_column_sum(rs.poly, ctx);
    if (!f.has_integer_coefficients())
        throw std::logic_error("specht polynomial with non-integer coefficients");
    return f;
}

MultiPoly specht_polynomial(const SemiStandardTableau& m, const Tableau& t) {
    return specht_polynomial(m, SymmetrizerContext(t));
}

MultiPoly epsilon_image(const Tableau& h, const SymmetrizerContext& ctx) {
    RowSymmetrized rs = row_symmetrized_raw(h, ctx);
    return signed_column_sum(rs.poly.scaled(Rat(static_cast<long>(rs.stabilizer))), ctx);
}

MultiPoly specht_quotient(const SemiStandardTableau& m, const SymmetrizerContext& ctx) {
    MultiPoly f = specht_polynomial(m, ctx);
    MultiPoly f0 = specht_polynomial(minimal_cocharge(m.shape()), ctx);
    MultiPoly q;
    try {
        q = divide_exact(f, f0);
    } catch (const std::domain_error&) {
        // divisibility is guaranteed; a failure here is a library defect
        throw std::logic_error("specht quotient: division unexpectedly inexact");
    }
    if (!q.has_integer_coefficients())
        throw std::logic_error("specht quotient with non-integer coefficients");
    return q;
}

int r_index(int i, const BoundedMultiset& iset, bool hat_copy) {
    int n = iset.bound();
    HatDecomposition hd = hat_decompose(iset);
    if (hat_copy) {
        if (!std::binary_search(hd.hat_set.begin(), hd.hat_set.end(), i))
            throw std::domain_error("r_index: i not in the hat set");
        int r = 0;
        for (int j = 1; j < i; ++j)
            if (!std::binary_search(hd.hat_set.begin(), hd.hat_set.end(), j)) ++r;
        return r;
    }
    if (hd.remainder.multiplicity(i) == 0)
        throw std::domain_error("r_index: i not in the remainder");
    int r = n - hd.k_hat;
    for (int j : hd.hat_set)
        if (j > i) ++r;
    if (n > i) ++r;  // n itself
    return r;
}

namespace {

// complement copies of I against the Dsp^c set, split into hat and remainder
struct ComplementCopies {
    std::vector<int> hat;        // elements of hat(I) \ D, each once
    std::vector<int> remainder;  // the multi-set I \ hat(I)
};

ComplementCopies complement_copies(const std::vector<int>& dsp, const BoundedMultiset& iset) {
    if (!multiset_contains_set(iset, dsp))
        throw std::domain_error("augmented: Dsp^c not contained in I");
    HatDecomposition hd = hat_decompose(iset);
    ComplementCopies out;
    for (int j : hd.hat_set)
        if (!std::binary_search(dsp.begin(), dsp.end(), j)) out.hat.push_back(j);
    out.remainder = hd.remainder.elements();
    return out;
}

}  // namespace

MultiPoly augmented(const CochargeTableau& c, const SymmetrizerContext& ctx,
                    const BoundedMultiset& iset, AugmentedVariant variant) {
    int n = ctx.n();
    if (iset.bound() != n) throw std::domain_error("augmented: multi-set bound must be n");
    ComplementCopies cc = complement_copies(dsp_c(c).elements(), iset);
    MultiPoly f = specht_polynomial(c, ctx);
    if (variant == AugmentedVariant::plain) {
        for (int i : cc.hat) f = f * elementary_symmetric(r_index(i, iset, true), n);
        for (int i : cc.remainder) f = f * elementary_symmetric(r_index(i, iset, false), n);
    } else {
        for (int i : cc.hat) f = f * elementary_symmetric(i, n);
        for (int i : cc.remainder) f = f * elementary_symmetric(i, n);
    }
    return f;
}

HVectors h_vectors_from_dset(const std::vector<int>& dsp, const BoundedMultiset& iset) {
    int n = iset.bound();
    ComplementCopies cc = complement_copies(dsp, iset);
    HVectors out;
    out.h_plain.assign(n, 0);
    out.h_hom.assign(n, 0);
    for (int i : cc.hat) {
        int r = r_index(i, iset, true);
        if (r >= 1) ++out.h_plain[r - 1];
        if (i >= 1) ++out.h_hom[i - 1];
    }
    for (int i : cc.remainder) {
        int r = r_index(i, iset, false);
        if (r >= 1) ++out.h_plain[r - 1];
        if (i >= 1) ++out.h_hom[i - 1];
    }
    return out;
}

HVectors h_vectors(const CochargeTableau& c, const BoundedMultiset& iset) {
    return h_vectors_from_dset(dsp_c(c).elements(), iset);
}

long long column_inversions(const Tableau& h) {
    long long inv = 0;
    std::vector<int> conj = h.shape().conjugate();
    for (int c = 0; c < h.shape().first_part(); ++c)
        for (int r1 = 0; r1 < conj[c]; ++r1)
            for (int r2 = r1 + 1; r2 < conj[c]; ++r2)
                if (h.at(r1, c) > h.at(r2, c)) ++inv;
    return inv;
}

StraightenResult straighten(const Tableau& h, const SymmetrizerContext& ctx) {
    if (!(h.shape() == ctx.tableau().shape()))
        throw std::domain_error("straighten: shape mismatch");
    if (!h.rows_non_decreasing())
        throw std::domain_error("straighten: rows must be non-decreasing");

    StraightenResult out;
    // repeated entry in a column: eps_T p_H vanishes at the leading level
    std::vector<int> conj = h.shape().conjugate();
    for (int c = 0; c < h.shape().first_part(); ++c)
        for (int r1 = 0; r1 < conj[c]; ++r1)
            for (int r2 = r1 + 1; r2 < conj[c]; ++r2)
                if (h.at(r1, c) == h.at(r2, c)) {
                    out.m = minimal_cocharge(h.shape());
                    out.c = 0;
                    out.vanished = true;
                    return out;
                }

    Tableau work = h;
    int sign = 1;
    while (true) {
        long long inv = column_inversions(work);
        if (inv == 0) break;
        // leftmost column with an inversion, then the topmost adjacent drop
        int col = -1, row = -1;
        for (int c = 0; c < work.shape().first_part() && col < 0; ++c)
            for (int r = 0; r + 1 < conj[c]; ++r)
                if (work.at(r + 1, c) < work.at(r, c)) {
                    col = c;
                    row = r;
                    break;
                }
        // maximal run of columns where row+1 sits strictly below row
        int span = 0;
        while (col + span < work.row_length(row + 1) &&
               work.at(row + 1, col + span) < work.at(row, col + span))
            ++span;
        std::vector<std::vector<int>> rows = work.rows();
        for (int j = 0; j < span; ++j) std::swap(rows[row][col + j], rows[row + 1][col + j]);
        work = Tableau(std::move(rows));
        sign = (span % 2 == 0) ? sign : -sign;
        long long inv_after = column_inversions(work);
        if (inv_after >= inv) throw std::logic_error("straighten: inversion count did not drop");
        out.trace.push_back({row, col, span, inv_after});
    }
    out.m = SemiStandardTableau(work);
    long long s_h = stabilizer_size(h, ctx);
    long long s_m = stabilizer_size(work, ctx);
    out.c = Rat(static_cast<long>(sign * s_h), static_cast<long>(s_m));
    out.c.canonicalize();
    return out;
}

}  // namespace specht
