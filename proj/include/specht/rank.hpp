#pragma once

// Exact rank of a family of polynomials over Q, viewed as a sparse matrix
// whose columns are monomials.
//
// Pipeline: clear denominators per row, split the matrix into connected
// components over shared columns (rows here are homogeneous of assorted
// degrees, so this shatters the problem), then per component either certify
// full row rank modulo a word-sized prime (a nonzero minor mod p is nonzero
// over Z, so rank_p = #rows pins the rational rank) or fall back to
// fraction-free Bareiss elimination over arbitrary-precision integers.

#include <vector>

#include "specht/poly.hpp"

namespace specht {

long long rank_over_rationals(const std::vector<MultiPoly>& rows);
long long rank_over_rationals(const std::vector<const MultiPoly*>& rows);

// rank(A) == rank(B) == rank(A u B); the three ranks are returned
struct SpanComparison {
    long long rank_a = 0;
    long long rank_b = 0;
    long long rank_union = 0;
    bool equal() const { return rank_a == rank_b && rank_b == rank_union; }
};
SpanComparison compare_spans(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b);

}  // namespace specht
