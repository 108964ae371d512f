#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "specht/tableaux.hpp"

using namespace specht;

namespace {

Tableau tab(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }
BoundedMultiset ms(std::vector<int> v, int b) { return BoundedMultiset(std::move(v), b); }

// brute-force SSYT of a given shape and content, no standardization involved
void brute_ssyt_rec(const PartitionShape& shape, std::vector<int>& avail,
                    std::vector<std::vector<int>>& rows, int r, int c,
                    std::vector<Tableau>& out) {
    if (r == shape.length()) {
        out.push_back(Tableau(rows));
        return;
    }
    int nr = r, nc = c + 1;
    if (nc == shape.part(r)) {
        nr = r + 1;
        nc = 0;
    }
    int lo = c > 0 ? rows[r][c - 1] : 0;
    for (int v = lo; v < static_cast<int>(avail.size()); ++v) {
        if (avail[v] == 0) continue;
        if (r > 0 && rows[r - 1][c] >= v) continue;
        rows[r][c] = v;
        --avail[v];
        brute_ssyt_rec(shape, avail, rows, nr, nc, out);
        ++avail[v];
    }
}

std::vector<Tableau> brute_ssyt(const PartitionShape& shape, const Content& mu) {
    std::vector<int> avail(mu.max_value() + 1, 0);
    for (int v : mu.values()) ++avail[v];
    std::vector<std::vector<int>> rows(shape.length());
    for (int r = 0; r < shape.length(); ++r) rows[r].assign(shape.part(r), 0);
    std::vector<Tableau> out;
    if (shape.n() > 0) brute_ssyt_rec(shape, avail, rows, 0, 0, out);
    return out;
}

}  // namespace

TEST_CASE("validated constructors") {
    CHECK_NOTHROW(SemiStandardTableau(tab({{0, 0, 1}, {1, 2}})));
    CHECK_THROWS_AS(SemiStandardTableau(tab({{0, 0}, {0, 1}})), std::domain_error);
    CHECK_THROWS_AS(SemiStandardTableau(tab({{1, 0}})), std::domain_error);
    CHECK_THROWS_AS(SemiStandardTableau(tab({{-1, 0}})), std::domain_error);
    CHECK_NOTHROW(StandardTableau(tab({{1, 3}, {2, 4}})));
    CHECK_THROWS_AS(StandardTableau(tab({{1, 1}, {2, 3}})), std::domain_error);
    CHECK_THROWS_AS(StandardTableau(tab({{2, 3}, {4, 5}})), std::domain_error);
    CHECK_NOTHROW(CochargeTableau(tab({{0, 1, 1}, {1}})));
    CHECK_THROWS_AS(CochargeTableau(tab({{0, 2, 2}, {2}})), std::domain_error);
    CHECK_THROWS_AS(Tableau(std::vector<std::vector<int>>{{1}, {2, 3}}), std::domain_error);
}

TEST_CASE("descent sets") {
    StandardTableau s{tab({{1, 3, 4}, {2}})};
    CHECK(descent_set(s) == std::vector<int>{1});
    CHECK(dsi_c(s) == std::vector<int>{3});
    CHECK(asi_c(s) == std::vector<int>{1, 2});
    StandardTableau row{tab({{1, 2, 3, 4, 5}})};
    CHECK(descent_set(row).empty());
    StandardTableau big{tab({{1, 3, 4, 8}, {2, 5, 6}, {7}})};
    CHECK(descent_set(big) == std::vector<int>{1, 4, 6});
    CHECK(dsi_c(big) == std::vector<int>{2, 4, 7});
}

TEST_CASE("destandardize worked values") {
    StandardTableau s{tab({{1, 3, 4}, {2}})};
    CHECK(destandardize(s, ms({1, 1, 4}, 4)) == SemiStandardTableau(tab({{0, 2, 2}, {2}})));
    CHECK(destandardize(s, ms({0, 0, 1, 1, 3}, 4)) ==
          SemiStandardTableau(tab({{2, 4, 5}, {4}})));
    // ct along the descent set itself is the cocharge tableau
    CHECK(destandardize(s, ms({1}, 4)) == SemiStandardTableau(tab({{0, 1, 1}, {1}})));
    CHECK_THROWS_AS(destandardize(s, ms({2}, 4)), std::domain_error);
}

TEST_CASE("standardization bijection, exhaustive") {
    for (int n = 1; n <= 5; ++n)
        for (const PartitionShape& lambda : partitions_of(n)) {
            std::vector<StandardTableau> syts = enumerate_syt(lambda);
            for (int size = 0; size <= 4; ++size)
                for (const BoundedMultiset& j : multisets_of_size(size, 0, n, n)) {
                    std::set<Tableau> images;
                    int sources = 0;
                    for (const StandardTableau& s : syts) {
                        if (!multiset_contains_set(j, descent_set(s))) continue;
                        ++sources;
                        SemiStandardTableau m = destandardize(s, j);
                        images.insert(m.tab());
                        Standardization st = standardize(m);
                        CHECK(st.s == s);
                        CHECK(destandardize(st.s, st.j) == m);
                    }
                    CHECK(static_cast<int>(images.size()) == sources);
                    // image = all SSYT of the represented content (brute force)
                    Content mu = content_of_comp(comp_from_multiset(j, n));
                    std::vector<Tableau> brute = brute_ssyt(lambda, mu);
                    CHECK(static_cast<int>(brute.size()) == sources);
                    for (const Tableau& b : brute) CHECK(images.count(b) == 1);
                }
        }
}

TEST_CASE("enumerate_ssyt counts") {
    CHECK(enumerate_ssyt_by_sum(PartitionShape({3, 1}), 2).size() == 2);
    std::vector<SemiStandardTableau> row4 = enumerate_ssyt_by_sum(PartitionShape({4}), 2);
    REQUIRE(row4.size() == 2);
    CHECK(row4[0] == SemiStandardTableau(tab({{0, 0, 0, 2}})));
    CHECK(row4[1] == SemiStandardTableau(tab({{0, 0, 1, 1}})));
    CHECK(enumerate_syt(PartitionShape({2, 2})).size() == 2);
    CHECK(syt_count(PartitionShape({2, 2})) == 2);
    for (const PartitionShape& lambda : partitions_of(6))
        CHECK(static_cast<long long>(enumerate_syt(lambda).size()) == syt_count(lambda));
}

TEST_CASE("dsp_c and the count law") {
    CHECK(dsp_c(SemiStandardTableau(tab({{0, 2, 2}, {2}}))) == ms({3, 3}, 4));
    CHECK(dsp_c(SemiStandardTableau(tab({{2, 4, 5}, {4}}))) == ms({1, 3, 3, 4, 4}, 4));
    CHECK(dsp_c(SemiStandardTableau(tab({{0, 0, 0}}))).is_empty());

    for (int n = 1; n <= 6; ++n)
        for (const PartitionShape& lambda : partitions_of(n))
            for (int d = 0; d <= 6; ++d)
                for (const SemiStandardTableau& m : enumerate_ssyt_by_sum(lambda, d)) {
                    BoundedMultiset dc = dsp_c(m);
                    CHECK(dc.element_sum() == entry_sum(m));  // sum law
                    // count law: i_g entries of M are at least k - g
                    std::vector<int> padded;
                    padded.push_back(0);
                    padded.insert(padded.end(), dc.elements().begin(), dc.elements().end());
                    padded.push_back(n);
                    int k = dc.size() + 1;
                    for (int g = 0; g <= k; ++g) {
                        int threshold = k - g;
                        int count = 0;
                        for (const auto& row : m.tab().rows())
                            for (int e : row)
                                if (e >= threshold) ++count;
                        CHECK(count == padded[g]);
                    }
                }
}

TEST_CASE("cocharge characterizations agree") {
    CHECK(is_cocharge(SemiStandardTableau(tab({{0, 1, 1}, {1}}))));
    CHECK_FALSE(is_cocharge(SemiStandardTableau(tab({{0, 2, 2}, {2}}))));
    for (int n = 1; n <= 5; ++n)
        for (const PartitionShape& lambda : partitions_of(n)) {
            CHECK(enumerate_cct(lambda).size() == enumerate_syt(lambda).size());
            CHECK(is_cocharge(minimal_cocharge(lambda)));
            for (int d = 0; d <= 5; ++d)
                for (const SemiStandardTableau& m : enumerate_ssyt_by_sum(lambda, d))
                    CHECK(is_cocharge(m) == is_cocharge_leftmost(m));
            for (const StandardTableau& s : enumerate_syt(lambda)) {
                CochargeTableau c = cocharge_of(s);
                CHECK(ct_inverse(c) == s);
                CHECK(dsp_c(c).elements() == dsi_c(s));
            }
        }
}

TEST_CASE("evacuation") {
    StandardTableau s{tab({{1, 3, 4, 8}, {2, 5, 6}, {7}})};
    CHECK(evacuation(s) == StandardTableau(tab({{1, 2, 4, 7}, {3, 6, 8}, {5}})));
    StandardTableau row{tab({{1, 2, 3}})};
    CHECK(evacuation(row) == row);
    for (int n = 1; n <= 6; ++n)
        for (const PartitionShape& lambda : partitions_of(n))
            for (const StandardTableau& t : enumerate_syt(lambda)) {
                StandardTableau ev = evacuation(t);
                CHECK(evacuation(ev) == t);  // involution
                CHECK(descent_set(ev) == dsi_c(t));
            }
}

TEST_CASE("corners") {
    CHECK(external_corners(PartitionShape({4, 3, 1})).size() == 4);
    std::vector<Box> ec = external_corners(PartitionShape({3}));
    REQUIRE(ec.size() == 2);
    CHECK(ec[0] == Box{0, 3});
    CHECK(ec[1] == Box{1, 0});
    CHECK_THROWS_AS(add_box(PartitionShape({2, 2}), Box{0, 1}), std::domain_error);
    CHECK_THROWS_AS(remove_box(PartitionShape({2, 2}), Box{0, 1}), std::domain_error);
    for (int n = 0; n <= 7; ++n)
        for (const PartitionShape& lambda : partitions_of(n)) {
            for (Box v : external_corners(lambda)) {
                PartitionShape grown = add_box(lambda, v);
                CHECK(grown.n() == n + 1);
                std::vector<Box> ic = internal_corners(grown);
                CHECK(std::find(ic.begin(), ic.end(), v) != ic.end());
                CHECK(remove_box(grown, v) == lambda);
            }
            for (Box v : internal_corners(lambda)) {
                PartitionShape shrunk = remove_box(lambda, v);
                CHECK(add_box(shrunk, v) == lambda);
            }
        }
}

TEST_CASE("growth operators, worked values") {
    SemiStandardTableau m(tab({{0, 1, 2, 7}, {1, 4, 4}, {6}}));
    StandardTableau s{tab({{1, 3, 4, 8}, {2, 5, 6}, {7}})};
    CHECK(standardize(m).s == s);

    CHECK(tilde_add(s, Box{0, 4}) == StandardTableau(tab({{1, 2, 4, 5, 9}, {3, 6, 7}, {8}})));
    CHECK(tilde_add(s, Box{1, 3}) == StandardTableau(tab({{1, 2, 4, 5}, {3, 6, 7, 9}, {8}})));
    CHECK(tilde_add(s, Box{2, 1}) == StandardTableau(tab({{1, 4, 5, 9}, {2, 6, 7}, {3, 8}})));
    CHECK(tilde_add(s, Box{3, 0}) ==
          StandardTableau(tab({{1, 4, 5, 9}, {2, 6, 7}, {3}, {8}})));

    Tableau t = tab({{1, 2, 4, 7}, {3, 6, 8}, {5}});
    CHECK(grow(t, Box{0, 4}) == tab({{1, 2, 4, 7, 9}, {3, 6, 8}, {5}}));
    CHECK(grow(t, Box{2, 1}) == tab({{1, 2, 4, 7}, {3, 6, 8}, {5, 9}}));

    CHECK(delta(m, Box{0, 4}) == 1);
    CHECK(delta(m, Box{1, 3}) == 1);
    CHECK(delta(m, Box{2, 1}) == 0);
    CHECK(delta(m, Box{3, 0}) == 0);
    CHECK_THROWS_AS(delta(m, Box{0, 0}), std::domain_error);

    CHECK(hat_add(m, Box{0, 4}) == SemiStandardTableau(tab({{0, 0, 1, 2, 7}, {1, 4, 4}, {6}})));
    CHECK(hat_add(m, Box{2, 1}) == SemiStandardTableau(tab({{0, 2, 3, 8}, {1, 5, 5}, {2, 7}})));
    CHECK(hat_iota(SemiStandardTableau(tab({{2, 4, 5}, {4}}))) ==
          SemiStandardTableau(tab({{0, 2, 4, 5}, {4}})));
    CHECK(plus_one(m) == SemiStandardTableau(tab({{1, 2, 3, 8}, {2, 5, 5}, {7}})));
}

TEST_CASE("growth bookkeeping laws, exhaustive") {
    for (int n = 2; n <= 5; ++n)
        for (const PartitionShape& lambda : partitions_of(n))
            for (int d = 0; d <= 5; ++d)
                for (const SemiStandardTableau& m : enumerate_ssyt_by_sum(lambda, d)) {
                    BoundedMultiset dc = dsp_c(m);
                    // hat-iota is the first-row push described directly
                    std::vector<std::vector<int>> pushed = m.tab().rows();
                    pushed[0].insert(pushed[0].begin(), 0);
                    CHECK(hat_iota(m) == SemiStandardTableau(Tableau(pushed)));
                    CHECK(entry_sum(hat_iota(m)) == d);
                    CHECK(entry_sum(plus_one(m)) == d + n);
                    CHECK(dsp_c(plus_one(m)) == dc.with_bound(n).plus(n));
                    for (Box v : external_corners(lambda)) {
                        SemiStandardTableau grown = hat_add(m, v);
                        int dv = delta(m, v);
                        if (dv == 1) {
                            CHECK(dsp_c(grown) == dc.with_bound(n + 1));
                            CHECK(entry_sum(grown) == d);
                        } else {
                            CHECK(dsp_c(grown) == dc.with_bound(n + 1).plus(n));
                            CHECK(entry_sum(grown) == d + n);
                        }
                    }
                }
}

TEST_CASE("ssyt_decompose trichotomy, exhaustive") {
    for (int m = 2; m <= 6; ++m)
        for (const PartitionShape& nu : partitions_of(m))
            for (int d = 0; d <= 6; ++d) {
                std::vector<SemiStandardTableau> all = enumerate_ssyt_by_sum(nu, d);
                std::set<Tableau> seen;
                // forward families partition SSYT_d(nu)
                std::vector<Tableau> forward;
                if (d - m >= 0)
                    for (const SemiStandardTableau& k : enumerate_ssyt_by_sum(nu, d - m))
                        forward.push_back(plus_one(k).tab());
                for (Box v : internal_corners(nu)) {
                    PartitionShape lambda = remove_box(nu, v);
                    for (int dd : {d, d - (m - 1)}) {
                        if (dd < 0) continue;
                        for (const SemiStandardTableau& inner :
                             enumerate_ssyt_by_sum(lambda, dd)) {
                            int dv = delta(inner, v);
                            if (dv == 1 && dd != d) continue;
                            if (dv == 0 && dd != d - (m - 1)) continue;
                            forward.push_back(hat_add(inner, v).tab());
                        }
                    }
                }
                std::set<Tableau> forward_set(forward.begin(), forward.end());
                CHECK(forward.size() == forward_set.size());  // disjoint families
                CHECK(forward.size() == all.size());
                for (const SemiStandardTableau& n_tab : all) {
                    CHECK(forward_set.count(n_tab.tab()) == 1);
                    SsytDecomposition dec = ssyt_decompose(n_tab);
                    int zeros = 0;
                    for (const auto& row : n_tab.tab().rows())
                        for (int e : row)
                            if (e == 0) ++zeros;
                    if (dec.plus_case) {
                        CHECK(zeros == 0);
                        CHECK(plus_one(dec.inner) == n_tab);
                    } else {
                        CHECK(hat_add(dec.inner, dec.v) == n_tab);
                        CHECK(delta(dec.inner, dec.v) == dec.delta_value);
                        if (zeros >= 2) CHECK(dec.delta_value == 1);
                    }
                    if (d < m) CHECK_FALSE(dec.plus_case);
                    if (d < m - 1) CHECK((!dec.plus_case && dec.delta_value == 1));
                }
            }
}

TEST_CASE("small-degree decompositions are first-row hat images") {
    // n > 2 * max(Dsp^c(N)) forces the hat-iota case
    for (int n = 2; n <= 8; ++n)
        for (const PartitionShape& nu : partitions_of(n + 1))
            for (int d = 0; d <= 3; ++d)
                for (const SemiStandardTableau& big : enumerate_ssyt_by_sum(nu, d)) {
                    int imax = dsp_c(big).max_element();
                    if (n <= 2 * imax) continue;
                    SsytDecomposition dec = ssyt_decompose(big);
                    CHECK_FALSE(dec.plus_case);
                    CHECK(dec.v.row == 0);
                    CHECK(hat_iota(dec.inner) == big);
                }
}

TEST_CASE("decompose rejects tiny tableaux") {
    CHECK_THROWS_AS(ssyt_decompose(SemiStandardTableau(tab({{3}}))), std::domain_error);
}

TEST_CASE("the first-row corner never drops below the top entry") {
    for (int n = 1; n <= 5; ++n)
        for (const PartitionShape& lambda : partitions_of(n))
            for (int d = 0; d <= 4; ++d)
                for (const SemiStandardTableau& m : enumerate_ssyt_by_sum(lambda, d))
                    CHECK(delta(m, Box{0, lambda.first_part()}) == 1);
}
