#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "specht/combinat.hpp"

using namespace specht;

namespace {
BoundedMultiset ms(std::vector<int> v, int b) { return BoundedMultiset(std::move(v), b); }
}

TEST_CASE("comp_from_multiset worked values") {
    CHECK(comp_from_multiset(ms({1, 1, 4}, 4), 4) == WeakComposition({1, 0, 3, 0}));
    CHECK(comp_from_multiset(ms({0, 0, 1, 1, 3}, 4), 4) == WeakComposition({0, 0, 1, 0, 2, 1}));
    CHECK(comp_from_multiset(BoundedMultiset::empty(5), 5) == WeakComposition({5}));
    CHECK_THROWS_AS(comp_from_multiset(ms({3}, 5), 2), std::domain_error);
}

TEST_CASE("multiset_from_comp worked values") {
    CHECK(multiset_from_comp(WeakComposition({1, 0, 3, 0})) == ms({1, 1, 4}, 4));
    CHECK(multiset_from_comp(WeakComposition({0, 0, 1, 0, 2, 1})) == ms({0, 0, 1, 1, 3}, 4));
    CHECK(multiset_from_comp(WeakComposition({6})) == BoundedMultiset::empty(6));
}

TEST_CASE("content_of_comp worked values") {
    CHECK(content_of_comp(WeakComposition({1, 0, 3, 0})) == Content({0, 2, 2, 2}));
    CHECK(content_of_comp(WeakComposition({0, 0, 1, 0, 2, 1})) == Content({2, 4, 4, 5}));
    CHECK(content_of_comp(WeakComposition({4})) == Content({0, 0, 0, 0}));
}

TEST_CASE("round trip multiset <-> composition, exhaustive") {
    for (int n = 1; n <= 8; ++n)
        for (int size = 0; size <= 6; ++size)
            for (const BoundedMultiset& j : multisets_of_size(size, 0, n, n)) {
                WeakComposition alpha = comp_from_multiset(j, n);
                CHECK(alpha.n() == n);
                CHECK(alpha.length() == j.size() + 1);
                CHECK(multiset_from_comp(alpha) == j);
                Content mu = content_of_comp(alpha);
                CHECK(mu.length() == n);
                CHECK(comp_of_content(mu, alpha.length()) == alpha);
            }
}

TEST_CASE("hat decomposition") {
    HatDecomposition h = hat_decompose(ms({0, 3, 3}, 4));
    CHECK(h.hat_set == std::vector<int>{3});
    CHECK(h.k_hat == 2);
    CHECK(h.remainder == ms({0, 3}, 4));

    h = hat_decompose(ms({2, 3, 5, 5, 6, 7, 7}, 8));
    CHECK(h.hat_set == std::vector<int>{2, 3, 5, 6, 7});
    CHECK(h.k_hat == 6);
    CHECK(h.remainder == ms({5, 7}, 8));

    // a subset of [1, n-1] is its own hat set
    h = hat_decompose(ms({1, 3}, 5));
    CHECK(h.hat_set == std::vector<int>{1, 3});
    CHECK(h.k_hat == 3);
    CHECK(h.remainder.is_empty());

    for (int n = 1; n <= 6; ++n)
        for (int size = 0; size <= 4; ++size)
            for (const BoundedMultiset& j : multisets_of_size(size, 0, n, n)) {
                HatDecomposition hd = hat_decompose(j);
                CHECK(j.size() == (hd.k_hat - 1) + hd.remainder.size());
                BoundedMultiset back = hd.remainder.plus(BoundedMultiset(hd.hat_set, n));
                CHECK(back == j);
            }
}

TEST_CASE("set containment and subtraction") {
    CHECK(multiset_contains_set(ms({1, 1, 4}, 4), {1}));
    CHECK(multiset_subtract_set(ms({1, 1, 4}, 4), {1}) == ms({1, 4}, 4));
    CHECK(multiset_subtract_set(ms({2, 3, 5, 5, 6, 7, 7}, 8), {2, 5, 6}) == ms({3, 5, 7, 7}, 8));
    CHECK_FALSE(multiset_contains_set(ms({2}, 4), {1}));
    CHECK_THROWS_AS(multiset_subtract_set(ms({2}, 4), {1}), std::domain_error);
    // 0 and the bound never count as hat members
    CHECK_FALSE(multiset_contains_set(ms({0, 4}, 4), {4}));
}

TEST_CASE("multiset algebra") {
    BoundedMultiset a = ms({1, 2, 2}, 4);
    CHECK(a.multiplicity(2) == 2);
    CHECK(a.plus(0) == ms({0, 1, 2, 2}, 4));
    CHECK(a.contains_multiset(ms({1, 2}, 4)));
    CHECK_FALSE(a.contains_multiset(ms({1, 1}, 4)));
    CHECK(a.minus_multiset(ms({2}, 4)) == ms({1, 2}, 4));
    CHECK(a.shift_up() == ms({2, 3, 3}, 5));
    CHECK(a.element_sum() == 5);
}

TEST_CASE("enumerators") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(7).size() == 15);

    // stars and bars: multi-sets of size 3 over [0,3]
    CHECK(multisets_of_size(3, 0, 3, 3).size() == 20);
    // positive-element multi-sets with a fixed sum
    std::vector<BoundedMultiset> sums = multisets_with_sum(2, 3);
    REQUIRE(sums.size() == 2);
    CHECK(sums[0] == ms({1, 1}, 3));
    CHECK(sums[1] == ms({2}, 3));
    CHECK(multisets_with_sum(4, 2).size() == 3);  // {1,1,1,1}, {1,1,2}, {2,2}

    std::vector<Content> c = contents_of_sum(2, 4);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == Content({0, 0, 0, 2}));
    CHECK(c[1] == Content({0, 0, 1, 1}));

    // duplicate-free and deterministic
    for (int n = 0; n <= 6; ++n) {
        std::vector<PartitionShape> ps = partitions_of(n);
        std::set<std::string> seen;
        for (const PartitionShape& p : ps) {
            CHECK(p.n() == n);
            CHECK(seen.insert(p.to_string()).second);
        }
    }
}

TEST_CASE("type invariants are enforced") {
    CHECK_THROWS_AS(PartitionShape({2, 3}), std::domain_error);
    CHECK_THROWS_AS(PartitionShape({3, 0}), std::domain_error);
    CHECK_THROWS_AS(WeakComposition({1, -1}), std::domain_error);
    CHECK_THROWS_AS(BoundedMultiset({5}, 4), std::domain_error);
    CHECK_THROWS_AS(BoundedMultiset({-1}, 4), std::domain_error);
    CHECK_THROWS_AS(Content({-2}), std::domain_error);
    // trailing zeros distinguish weak compositions
    CHECK_FALSE(WeakComposition({1, 0, 3}) == WeakComposition({1, 0, 3, 0}));
}

TEST_CASE("partition helpers") {
    PartitionShape p({4, 3, 1});
    CHECK(p.n() == 8);
    CHECK(p.length() == 3);
    CHECK(p.part(0) == 4);
    CHECK(p.part(5) == 0);
    CHECK(p.conjugate() == std::vector<int>{3, 2, 2, 1});
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(5) == 120);
}
