#pragma once

// Spanned sub-representations of Q[x_n]: the V_M / V_C^h spans, the
// h-vector <-> multi-set bijections, lifted bases of the R_{n,k,s} quotients
// and of R_{n,I} / R_{n,I}^hom, multiplicity counts, and exact-rank
// verification of the direct-sum statements.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specht/combinat.hpp"
#include "specht/poly.hpp"
#include "specht/rank.hpp"
#include "specht/spechtpoly.hpp"
#include "specht/tableaux.hpp"

namespace specht {

struct SummandLabel {
    PartitionShape lambda;
    Tableau tab;            // the indexing M or C
    std::vector<int> hvec;  // e-multiplier exponents, h[r-1] <-> e_r; empty = none
    std::optional<BoundedMultiset> iset;

    std::string to_string() const;
    bool operator==(const SummandLabel& o) const;
    bool operator<(const SummandLabel& o) const;
};

struct SpannedRep {
    SummandLabel label;
    std::vector<MultiPoly> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

struct GroupCheck {
    std::string key;
    long long expected = 0;
    long long got = 0;
    bool pass() const { return expected == got; }
};

struct DecompReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<SummandLabel> summands;
    long long expected_dim = 0;
    long long rank = 0;
    std::vector<GroupCheck> checks;                    // named sub-checks
    std::map<std::string, long long> multiplicities;   // partition -> summand count
    bool pass = false;
};

MultiPoly e_product(const std::vector<int>& hvec, int n);

SpannedRep v_basis(const SemiStandardTableau& m);
SpannedRep v_basis_h(const CochargeTableau& c, const std::vector<int>& hvec);

// H_C^{k,s}: h_r = 0 for r > n-s and sum_{r<=n-s} h_r < k - |Dsp^c(C)|
std::vector<std::vector<int>> h_set(const CochargeTableau& c, int k, int s, int n);
std::vector<std::vector<int>> h_set_from_dset(int dsize, int k, int s, int n);
bool in_h_set(const std::vector<int>& h, int dsize, int k, int s, int n);

// forward maps (h_C^I, h(C,I)) live in spechtpoly.hpp as h_vectors;
// these are the inverse reconstructions
BoundedMultiset hvec_to_multiset_plain(const std::vector<int>& dsp, const std::vector<int>& h,
                                       int k, int n);
BoundedMultiset hvec_to_multiset_hom(const std::vector<int>& dsp, const std::vector<int>& h,
                                     int k, int n);
BoundedMultiset hvec_to_multiset(const CochargeTableau& c, const std::vector<int>& h, int k,
                                 AugmentedVariant variant);

// multi-sets I of size k-1 over [0,n] admissible at level s (padded sequence
// strictly increasing through index s)
bool multiset_admissible(const BoundedMultiset& iset, int n, int s);
std::vector<BoundedMultiset> admissible_multisets(int n, int k, int s);

std::vector<SpannedRep> r_nks_lift(int n, int k, int s);
std::vector<SpannedRep> r_nI(const BoundedMultiset& iset);
std::vector<SpannedRep> r_nI_hom(const BoundedMultiset& iset);
// direct sum of R_{n,I}^hom over admissible I of size k-1
std::vector<SpannedRep> r_nks_hom(int n, int k, int s);

long long op_count_I(int n, const BoundedMultiset& iset);
long long op_count(int n, int k, int s);

long long kostka(const PartitionShape& lambda, const WeakComposition& alpha);
std::vector<std::pair<CochargeTableau, BoundedMultiset>> adlambda_pairs(
    const PartitionShape& lambda, int d, int n);

enum class QxndGrouping { by_sum, by_content };
DecompReport qxnd_full(int n, int d, QxndGrouping grouping = QxndGrouping::by_sum);
DecompReport qxnd_cocharge(int n, int d);
DecompReport verify_splexseq(int n, int k, int s);
DecompReport verify_direct_sum(const std::vector<SpannedRep>& parts, long long expected_dim);
// rank(r_nks_lift(n,k,s)) == op_count(n,k,s)
DecompReport verify_rnks_dim(int n, int k, int s);

std::vector<MultiPoly> collect_basis(const std::vector<SpannedRep>& reps);
std::map<std::string, long long> count_multiplicities(const std::vector<SummandLabel>& labels);

}  // namespace specht
