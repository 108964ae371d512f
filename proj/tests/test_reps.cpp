#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "specht/reps.hpp"

using namespace specht;

namespace {

Tableau tab(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }
BoundedMultiset ms(std::vector<int> v, int b) { return BoundedMultiset(std::move(v), b); }

std::vector<std::string> labels(const std::vector<SpannedRep>& reps) {
    std::vector<std::string> out;
    for (const SpannedRep& r : reps) out.push_back(r.label.to_string());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// brute-force ordered-partition count: maps [n] -> [k] with the first s
// blocks non-empty
long long brute_op_count(int n, int k, int s) {
    long long total = 0;
    std::vector<int> assign(n, 0);
    while (true) {
        std::vector<int> sizes(k, 0);
        for (int x : assign) ++sizes[x];
        bool ok = true;
        for (int b = 0; b < s; ++b) ok = ok && sizes[b] > 0;
        if (ok) ++total;
        int i = 0;
        while (i < n && assign[i] == k - 1) assign[i++] = 0;
        if (i == n) break;
        ++assign[i];
    }
    return total;
}

}  // namespace

TEST_CASE("v_basis dimensions and homogeneity") {
    SpannedRep rep = v_basis(SemiStandardTableau(tab({{0, 0, 1}, {1}})));
    CHECK(rep.dim() == 3);  // f^{(3,1)} = 3
    for (const MultiPoly& f : rep.basis) {
        CHECK(f.is_homogeneous());
        CHECK(f.degree() == 2);
    }
    SpannedRep triv = v_basis(SemiStandardTableau(tab({{0, 0}})));
    CHECK(triv.dim() == 1);
    CHECK(triv.basis[0] == MultiPoly::one(2));

    // V_C^h with h = e_1 is the elementwise e_1-multiple
    CochargeTableau c(tab({{0, 0, 1}, {1}}));
    SpannedRep scaled = v_basis_h(c, {1, 0, 0, 0});
    SpannedRep plainv = v_basis(c);
    REQUIRE(scaled.dim() == plainv.dim());
    MultiPoly e1 = elementary_symmetric(1, 4);
    for (int i = 0; i < scaled.dim(); ++i) CHECK(scaled.basis[i] == plainv.basis[i] * e1);
}

TEST_CASE("H-vector sets") {
    // k = 1 admits only the zero vector, and only for an empty Dsp^c
    CHECK(h_set_from_dset(0, 1, 0, 4) == std::vector<std::vector<int>>{{0, 0, 0, 0}});
    CHECK(h_set_from_dset(1, 1, 0, 4).empty());
    // s pins the top entries to zero
    for (const std::vector<int>& h : h_set_from_dset(0, 3, 2, 4)) {
        CHECK(h[3] == 0);
        CHECK(h[2] == 0);
        CHECK(in_h_set(h, 0, 3, 2, 4));
    }
    CHECK_FALSE(in_h_set({0, 0, 1, 0}, 0, 3, 2, 4));
    CHECK_FALSE(in_h_set({3, 0, 0, 0}, 0, 3, 0, 4));  // sum too large
}

TEST_CASE("h-vector bijections, exhaustive") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 5; ++k)
            for (int dsize = 0; dsize < std::min(k, n); ++dsize) {
                // subsets of [1, n-1] of the given size
                std::vector<std::vector<int>> dsets;
                std::vector<int> cur;
                std::function<void(int)> rec = [&](int start) {
                    if (static_cast<int>(cur.size()) == dsize) {
                        dsets.push_back(cur);
                        return;
                    }
                    for (int v = start; v <= n - 1; ++v) {
                        cur.push_back(v);
                        rec(v + 1);
                        cur.pop_back();
                    }
                };
                rec(1);
                for (const std::vector<int>& dsp : dsets) {
                    std::set<std::vector<int>> plain_seen, hom_seen;
                    std::vector<std::vector<int>> hset = h_set_from_dset(dsize, k, 0, n);
                    std::set<std::vector<int>> hset_set(hset.begin(), hset.end());
                    for (const BoundedMultiset& iset : multisets_of_size(k - 1, 0, n, n)) {
                        if (!multiset_contains_set(iset, dsp)) continue;
                        HVectors hv = h_vectors_from_dset(dsp, iset);
                        // both maps land in H^{k,0} and invert
                        CHECK(hset_set.count(hv.h_plain) == 1);
                        CHECK(hset_set.count(hv.h_hom) == 1);
                        CHECK(hvec_to_multiset_plain(dsp, hv.h_plain, k, n) == iset);
                        CHECK(hvec_to_multiset_hom(dsp, hv.h_hom, k, n) == iset);
                        plain_seen.insert(hv.h_plain);
                        hom_seen.insert(hv.h_hom);
                        // membership characterizations
                        CHECK(in_h_set(hv.h_hom, dsize, k - 1, 0, n) ==
                              (iset.multiplicity(0) > 0));
                        for (int s = 0; s <= std::min(n, k); ++s)
                            CHECK(in_h_set(hv.h_plain, dsize, k, s, n) ==
                                  multiset_admissible(iset, n, s));
                    }
                    // surjectivity onto H^{k,0}
                    CHECK(plain_seen.size() == hset.size());
                    CHECK(hom_seen.size() == hset.size());
                }
            }
}

TEST_CASE("h-vector reconstruction worked values") {
    std::vector<int> dsp{2, 5, 6};
    CHECK(hvec_to_multiset_plain(dsp, {1, 1, 1, 0, 1, 0, 0, 0}, 8, 8) ==
          ms({2, 3, 5, 5, 6, 7, 7}, 8));
    CHECK(hvec_to_multiset_plain(dsp, {0, 0, 0, 1, 0, 2, 0, 1}, 8, 8) ==
          ms({0, 2, 5, 5, 5, 6, 8}, 8));
    CHECK(hvec_to_multiset_plain(dsp, std::vector<int>(8, 0), 8, 8) ==
          ms({1, 2, 3, 4, 5, 6, 7}, 8));
    CHECK(hvec_to_multiset_hom(dsp, {0, 0, 1, 0, 1, 0, 2, 0}, 8, 8) ==
          ms({2, 3, 5, 5, 6, 7, 7}, 8));
    CHECK_THROWS_AS(hvec_to_multiset_plain(dsp, {9, 0, 0, 0, 0, 0, 0, 0}, 8, 8),
                    std::domain_error);
}

TEST_CASE("ordered partition counts") {
    CHECK(op_count(4, 2, 0) == 16);
    CHECK(op_count(4, 2, 2) == 14);
    CHECK(op_count(4, 4, 4) == 24);
    CHECK(op_count_I(4, ms({2}, 4)) == 6);
    CHECK(op_count_I(4, ms({0, 3, 3}, 4)) == 4);  // sizes 0,3,0,1
    CHECK(op_count(3, 5, 4) == 0);                // s > n empty
    CHECK_THROWS_AS(op_count(3, 2, 3), std::domain_error);
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int s = 0; s <= k; ++s) CHECK(op_count(n, k, s) == brute_op_count(n, k, s));
}

TEST_CASE("Kostka numbers") {
    CHECK(kostka(PartitionShape({3, 1}), WeakComposition({2, 2})) == 1);
    CHECK(kostka(PartitionShape({2, 2}), WeakComposition({2, 2})) == 1);
    CHECK(kostka(PartitionShape({2, 1}), WeakComposition({1, 1, 1})) == 2);
    CHECK(kostka(PartitionShape({3, 1}), WeakComposition({3, 1})) == 1);
    // agreement with the standardization-driven enumeration
    for (int n = 1; n <= 5; ++n)
        for (const PartitionShape& lambda : partitions_of(n))
            for (int d = 0; d <= 4; ++d)
                for (const Content& mu : contents_of_sum(d, n)) {
                    WeakComposition alpha = comp_of_content(mu, mu.max_value() + 1);
                    CHECK(kostka(lambda, alpha) ==
                          static_cast<long long>(enumerate_ssyt_by_content(lambda, mu).size()));
                }
}

TEST_CASE("pair counting") {
    auto pairs31 = adlambda_pairs(PartitionShape({3, 1}), 2, 4);
    REQUIRE(pairs31.size() == 2);
    CHECK(pairs31[0].first == CochargeTableau(tab({{0, 0, 0}, {1}})));
    CHECK(pairs31[0].second == ms({1, 1}, 4));
    CHECK(pairs31[1].first == CochargeTableau(tab({{0, 0, 1}, {1}})));
    CHECK(pairs31[1].second == ms({2}, 4));
    CHECK(adlambda_pairs(PartitionShape({4}), 2, 4).size() == 2);

    long long total = 0;
    for (const PartitionShape& lambda : partitions_of(2))
        total += static_cast<long long>(adlambda_pairs(lambda, 4, 2).size());
    CHECK(total == 5);

    // pair count = sum of Kostka numbers over contents of the degree
    for (int n = 1; n <= 5; ++n)
        for (const PartitionShape& lambda : partitions_of(n))
            for (int d = 0; d <= 4; ++d) {
                long long ks = 0;
                for (const Content& mu : contents_of_sum(d, n))
                    ks += kostka(lambda, comp_of_content(mu, mu.max_value() + 1));
                CHECK(static_cast<long long>(adlambda_pairs(lambda, d, n).size()) == ks);
                CHECK(ks == static_cast<long long>(enumerate_ssyt_by_sum(lambda, d).size()));
            }
}

TEST_CASE("qxnd decompositions") {
    DecompReport full = qxnd_full(4, 2, QxndGrouping::by_content);
    CHECK(full.pass);
    CHECK(full.rank == 10);
    CHECK(full.expected_dim == 10);
    CHECK(full.multiplicities.at("[3,1]") == 2);
    CHECK(full.multiplicities.at("[4]") == 2);
    CHECK(full.multiplicities.at("[2,2]") == 1);
    // per-content group checks are present and pass
    bool found_content = false;
    for (const GroupCheck& g : full.checks)
        if (g.key.rfind("content", 0) == 0) {
            found_content = true;
            CHECK(g.pass());
        }
    CHECK(found_content);

    DecompReport coch = qxnd_cocharge(4, 2);
    CHECK(coch.pass);
    CHECK(coch.rank == 10);
    CHECK(count_multiplicities(coch.summands) == full.multiplicities);

    DecompReport tiny = qxnd_full(1, 3);
    CHECK(tiny.pass);
    CHECK(tiny.rank == 1);
}

TEST_CASE("lifted quotient bases") {
    CHECK_THROWS_AS(r_nks_lift(3, 2, 3), std::domain_error);
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int s = 0; s <= std::min(n, k); ++s) {
                DecompReport rep = verify_rnks_dim(n, k, s);
                CHECK(rep.pass);
                CHECK(rep.rank == op_count(n, k, s));
            }
    // dimension spot checks
    CHECK(verify_rnks_dim(4, 2, 0).rank == 16);
    CHECK(verify_rnks_dim(4, 2, 2).rank == 14);
}

TEST_CASE("R_{n,I} labels for the k = 2 singletons") {
    CHECK(labels(r_nI(ms({2}, 4))) ==
          sorted({"V[[0,0,0,0]]*e1|I=[2]", "V[[0,0,1],[1]]|I=[2]", "V[[0,0],[1,1]]|I=[2]"}));
    CHECK(labels(r_nI_hom(ms({3}, 4))) ==
          sorted({"V[[0,0,0,0]]*e3|I=[3]", "V[[0,1,1],[1]]|I=[3]"}));
    CHECK(labels(r_nI(ms({0, 3, 3}, 4))) ==
          sorted({"V[[0,0,0,0]]*e2*e3*e4|I=[0,3,3]", "V[[0,1,1],[1]]*e3*e4|I=[0,3,3]"}));
    // dimensions match the orbit sizes
    for (const BoundedMultiset& iset :
         {ms({2}, 4), ms({0, 3, 3}, 4), ms({1, 1}, 4), BoundedMultiset::empty(4)}) {
        std::vector<SpannedRep> reps = r_nI(iset);
        DecompReport rep = verify_direct_sum(reps, op_count_I(4, iset));
        CHECK(rep.pass);
        std::vector<SpannedRep> hom = r_nI_hom(iset);
        // homogeneous variant: every vector is homogeneous of degree sum(I)
        for (const SpannedRep& r : hom)
            for (const MultiPoly& f : r.basis) {
                CHECK(f.is_homogeneous());
                CHECK(f.degree() == iset.element_sum());
            }
        DecompReport hrep = verify_direct_sum(hom, op_count_I(4, iset));
        CHECK(hrep.pass);
    }
}

TEST_CASE("splitting of the exact sequence, small cases") {
    CHECK(verify_splexseq(3, 1, 0).pass);  // kernel is the zero space
    CHECK(verify_splexseq(3, 2, 0).pass);
    CHECK(verify_splexseq(3, 2, 1).pass);
    CHECK(verify_splexseq(3, 4, 1).pass);  // k > n territory
    CHECK(verify_splexseq(2, 3, 1).pass);
    CHECK_THROWS_AS(verify_splexseq(3, 2, 2), std::domain_error);
}

TEST_CASE("direct sum verdicts") {
    std::vector<SpannedRep> parts;
    for (const PartitionShape& lambda : partitions_of(4))
        for (const SemiStandardTableau& m : enumerate_ssyt_by_sum(lambda, 2))
            parts.push_back(v_basis(m));
    CHECK(verify_direct_sum(parts, 10).pass);
    parts.push_back(parts.front());  // duplicated summand
    CHECK_FALSE(verify_direct_sum(parts, 10 + parts.front().dim()).pass);
}

TEST_CASE("lift at s=0 equals the homogeneous union, label-level") {
    // the two bijections enumerate the same (C, h) summands
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            std::vector<std::string> via_h;
            for (const SpannedRep& r : r_nks_lift(n, k, 0)) {
                SummandLabel l = r.label;
                via_h.push_back(l.to_string());
            }
            std::vector<std::string> via_i;
            for (const SpannedRep& r : r_nks_hom(n, k, 0)) {
                SummandLabel l = r.label;
                l.iset.reset();
                via_i.push_back(l.to_string());
            }
            CHECK(sorted(via_h) == sorted(via_i));
        }
}

TEST_CASE("splitting off k-1 at s=0") {
    // lift(n,k,0) = lift(n,k-1,0) + hom summands of the 0-free multi-sets
    for (int n = 2; n <= 4; ++n)
        for (int k = 2; k <= 4; ++k) {
            std::vector<MultiPoly> small = collect_basis(r_nks_lift(n, k - 1, 0));
            std::vector<MultiPoly> fresh;
            for (const BoundedMultiset& iset : multisets_of_size(k - 1, 0, n, n)) {
                if (iset.multiplicity(0) > 0) continue;
                for (const SpannedRep& r : r_nI_hom(iset))
                    fresh.insert(fresh.end(), r.basis.begin(), r.basis.end());
            }
            std::vector<MultiPoly> whole = collect_basis(r_nks_lift(n, k, 0));
            long long rs = rank_over_rationals(small);
            long long rf = rank_over_rationals(fresh);
            std::vector<MultiPoly> both = small;
            both.insert(both.end(), fresh.begin(), fresh.end());
            CHECK(rank_over_rationals(both) == rs + rf);
            std::vector<MultiPoly> all = both;
            all.insert(all.end(), whole.begin(), whole.end());
            long long rw = rank_over_rationals(whole);
            CHECK(rs + rf == rw);
            CHECK(rank_over_rationals(all) == rw);
        }
}

TEST_CASE("both decompositions fill the full degree component, n = 5") {
    for (int d = 0; d <= 4; ++d) {
        DecompReport full = qxnd_full(5, d);
        DecompReport coch = qxnd_cocharge(5, d);
        CHECK(full.pass);
        CHECK(coch.pass);
        CHECK(full.rank == binomial(5 + d - 1, d));
        CHECK(coch.rank == full.rank);
    }
}
