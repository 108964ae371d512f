#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "specht/poly.hpp"

using namespace specht;

namespace {

MultiPoly mono(const std::vector<int>& e) { return MultiPoly::from_monomial(Monomial(e)); }

MultiPoly random_poly(std::mt19937& rng, int nvars, int max_terms, int max_exp) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<MultiPoly::Term> out;
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<int> e(nvars);
        for (int& x : e) x = exp(rng);
        Rat c(num(rng), den(rng));
        c.canonicalize();
        out.push_back({Monomial(e), c});
    }
    return MultiPoly::from_terms(nvars, std::move(out));
}

long long count_monomials(int nvars, int degree) {
    // all exponent vectors of the given total degree
    std::vector<int> e(nvars, 0);
    long long count = 0;
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i + 1 == nvars) {
            ++count;
            return;
        }
        for (int v = 0; v <= left; ++v) rec(i + 1, left - v);
    };
    if (nvars > 0) rec(0, degree);
    return count;
}

}  // namespace

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + trial % 4;
        MultiPoly f = random_poly(rng, n, 5, 3);
        MultiPoly g = random_poly(rng, n, 5, 3);
        MultiPoly h = random_poly(rng, n, 4, 3);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) * h == f * h + g * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f - f == MultiPoly::zero(n));
        CHECK(f * MultiPoly::one(n) == f);
        if (!g.is_zero()) CHECK(divide_exact(f * g, g) == f);
    }
}

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary_symmetric(1, 2) == mono({1, 0}) + mono({0, 1}));
    MultiPoly e23 = elementary_symmetric(2, 3);
    CHECK(e23.term_count() == 3);
    CHECK(e23 == mono({1, 1, 0}) + mono({1, 0, 1}) + mono({0, 1, 1}));
    CHECK(elementary_symmetric(4, 4) == mono({1, 1, 1, 1}));
    CHECK(elementary_symmetric(0, 3) == MultiPoly::one(3));
    for (int n = 1; n <= 6; ++n)
        for (int r = 0; r <= n; ++r)
            CHECK(elementary_symmetric(r, n).term_count() == binomial(n, r));
    CHECK_THROWS_AS(elementary_symmetric(4, 3), std::domain_error);
}

TEST_CASE("monomial from a tableau pair") {
    Tableau t({{1, 3, 4}, {2}});
    CHECK(monomial_from_pair(SemiStandardTableau(Tableau({{2, 4, 5}, {4}})), t) ==
          Monomial({2, 4, 4, 5}));
    CHECK(monomial_from_pair(SemiStandardTableau(Tableau({{0, 0, 0}})), Tableau({{1, 2, 3}})) ==
          Monomial({0, 0, 0}));
    CHECK_THROWS_AS(monomial_from_pair(SemiStandardTableau(Tableau({{0, 0}})), t),
                    std::domain_error);
    Tableau bad({{1, 1, 2}, {3}});
    CHECK_THROWS_AS(monomial_from_pair(SemiStandardTableau(Tableau({{0, 0, 0}, {1}})), bad),
                    std::domain_error);
}

TEST_CASE("column degrees and the tableau order") {
    Tableau t({{1, 3, 4}, {2}});
    CHECK(column_degree(Monomial({1, 0, 1, 3}), t) == std::vector<int>{1, 1, 3});
    CHECK(column_degree(Monomial({0, 3, 1, 1}), t) == std::vector<int>{3, 1, 1});
    CHECK(column_degree(Monomial({0, 0, 0, 0}), t) == std::vector<int>{0, 0, 0});
    CHECK(cmp_t(Monomial({1, 0, 1, 3}), Monomial({0, 3, 1, 1}), t) == 1);
    CHECK(cmp_t(Monomial({0, 3, 1, 1}), Monomial({1, 0, 1, 3}), t) == -1);
    // x1 and x2 share a column, so swapping them is invisible to the order
    CHECK(cmp_t(Monomial({2, 1, 0, 0}), Monomial({1, 2, 0, 0}), t) == 0);

    // invariance under the column group: exchanging 1 <-> 2 fixes deg_T
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            Monomial y({a, b, 1, 2});
            Monomial swapped({b, a, 1, 2});
            CHECK(column_degree(y, t) == column_degree(swapped, t));
        }
}

TEST_CASE("permute, substitute, pad") {
    MultiPoly f = mono({2, 0, 1}) + mono({0, 1, 0}).scaled(Rat(3));
    std::vector<int> identity{0, 1, 2};
    CHECK(permute(f, identity) == f);
    std::vector<int> rot{1, 2, 0};  // x1->x2, x2->x3, x3->x1
    CHECK(permute(f, rot) == mono({1, 2, 0}) + mono({0, 0, 1}).scaled(Rat(3)));
    std::vector<int> rot2{2, 0, 1};
    CHECK(permute(permute(f, rot), rot) == permute(f, rot2));

    MultiPoly g = mono({1, 0}) + mono({0, 2});
    CHECK(substitute_last_zero(g) == MultiPoly::from_monomial(Monomial({1})));
    CHECK(pad_vars(g, 4).vars() == 4);
    CHECK(substitute_last_zero(pad_vars(g, 3)) == g);

    CHECK(sign_of_permutation(identity) == 1);
    CHECK(sign_of_permutation({1, 0, 2}) == -1);
    CHECK(sign_of_permutation(rot) == 1);
}

TEST_CASE("exact division") {
    MultiPoly f = (mono({0, 2, 0, 0}) - mono({2, 0, 0, 0})) * mono({0, 0, 2, 2});
    MultiPoly g = mono({0, 1, 0, 0}) - mono({1, 0, 0, 0});
    MultiPoly q = (mono({1, 0, 0, 0}) + mono({0, 1, 0, 0})) * mono({0, 0, 2, 2});
    CHECK(divide_exact(f, g) == q);
    CHECK_THROWS_AS(divide_exact(mono({1, 0, 0, 0}), g), std::domain_error);
    CHECK_THROWS_AS(divide_exact(f, MultiPoly::zero(4)), std::domain_error);
}

TEST_CASE("homogeneity and degree bookkeeping") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly f = random_poly(rng, 3, 4, 2);
        MultiPoly g = random_poly(rng, 3, 4, 2);
        if (!f.is_zero() && !g.is_zero()) CHECK((f * g).degree() <= f.degree() + g.degree());
    }
    MultiPoly e = elementary_symmetric(2, 4);
    CHECK(e.is_homogeneous());
    CHECK((e * e).is_homogeneous());
    CHECK((e * e).degree() == 4);
    std::vector<int> sigma{3, 2, 1, 0};
    CHECK(permute(e, sigma) == e);  // symmetric
}

TEST_CASE("monomial count matches the dimension formula") {
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 5; ++d) CHECK(count_monomials(n, d) == binomial(n + d - 1, d));
}

TEST_CASE("printing") {
    CHECK(MultiPoly::zero(2).to_string() == "0");
    CHECK(MultiPoly::one(2).to_string() == "1");
    MultiPoly f = mono({0, 2, 2, 2}) - mono({2, 0, 2, 2});
    CHECK(f.to_string() == "-x1^2*x3^2*x4^2 + x2^2*x3^2*x4^2");
    CHECK(mono({1, 0}).scaled(Rat(-3, 2)).to_string() == "-3/2*x1");
    CHECK(mono({0, 0}).scaled(Rat(5)).to_string() == "5");
}

TEST_CASE("integer coefficient detection") {
    MultiPoly f = mono({1, 0}).scaled(Rat(1, 2));
    CHECK_FALSE(f.has_integer_coefficients());
    CHECK((f + f).has_integer_coefficients());
    CHECK((f - f).has_integer_coefficients());
}
