#pragma once

// Sparse multivariate polynomials over Q with exact rational coefficients,
// elementary symmetric polynomials, the per-tableau column-degree order,
// and variable substitution.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "specht/combinat.hpp"
#include "specht/tableaux.hpp"

namespace specht {

using Rat = mpq_class;
using Int = mpz_class;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial unit(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int vars() const { return static_cast<int>(e_.size()); }
    int exp(int i) const { return e_[i]; }
    const std::vector<int>& exps() const { return e_; }
    int degree() const;
    Content content() const { return Content(e_); }

    Monomial times(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;
    Monomial divide(const Monomial& o) const;
    // exponent at position i moves to position sigma[i]
    Monomial permuted(const std::vector<int>& sigma) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator<(const Monomial& o) const { return e_ < o.e_; }  // plain lex

    std::string to_string() const;

private:
    std::vector<int> e_;
};

class MultiPoly {
public:
    using Term = std::pair<Monomial, Rat>;

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : n_(nvars) {}
    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly one(int nvars);
    static MultiPoly from_monomial(const Monomial& m, const Rat& c = 1);
    // terms need not be sorted or combined
    static MultiPoly from_terms(int nvars, std::vector<Term> terms);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }  // ascending lex
    int degree() const;  // max total degree, -1 for zero
    // true when every term has the same total degree (zero counts as homogeneous)
    bool is_homogeneous() const;
    bool has_integer_coefficients() const;
    Rat coefficient(const Monomial& m) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Rat& c) const;
    MultiPoly& operator+=(const MultiPoly& o);

    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<Term> terms_;
};

// e_r in n variables; e_0 = 1
MultiPoly elementary_symmetric(int r, int n);

// p_{H,T}: exponent of x_i is the entry of H in the box holding i in T
Monomial monomial_from_pair(const Tableau& h, const Tableau& t);
Monomial monomial_from_pair(const SemiStandardTableau& m, const Tableau& t);

// deg_T y: entry j sums the exponents of the variables in column j of T
std::vector<int> column_degree(const Monomial& y, const Tableau& t);
// reverse-lexicographic comparison of the column-degree vectors: -1, 0, +1
int cmp_column_degree(const std::vector<int>& a, const std::vector<int>& b);
int cmp_t(const Monomial& y, const Monomial& z, const Tableau& t);

MultiPoly permute(const MultiPoly& f, const std::vector<int>& sigma);
MultiPoly substitute_last_zero(const MultiPoly& f);
// f / g, exact; remainder must vanish
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);
// widen to new_n variables (zero exponents appended)
MultiPoly pad_vars(const MultiPoly& f, int new_n);

int sign_of_permutation(const std::vector<int>& sigma);

}  // namespace specht
