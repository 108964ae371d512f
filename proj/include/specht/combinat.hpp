#pragma once

// Partitions, weak compositions, bounded multi-sets and the bijections
// between them that index everything else in this library.

#include <initializer_list>
#include <string>
#include <vector>

namespace specht {

// lambda |- n: non-increasing positive parts.
class PartitionShape {
public:
    PartitionShape() = default;
    explicit PartitionShape(std::vector<int> parts);

    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    // 0 beyond the last part, so row/column bookkeeping needs no bounds checks
    int part(int i) const;
    int first_part() const { return parts_.empty() ? 0 : parts_[0]; }
    const std::vector<int>& parts() const { return parts_; }
    std::vector<int> conjugate() const;

    bool operator==(const PartitionShape& o) const { return parts_ == o.parts_; }
    bool operator<(const PartitionShape& o) const { return parts_ < o.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// alpha |=_w n: ordered non-negative entries; trailing zeros are significant.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> entries);

    int n() const { return n_; }
    int length() const { return static_cast<int>(entries_.size()); }
    int entry(int h) const { return entries_[h]; }
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const WeakComposition& o) const { return entries_ == o.entries_; }

    std::string to_string() const;

private:
    std::vector<int> entries_;
    int n_ = 0;
};

// Multi-set over [0, bound], stored as a non-decreasing sequence.
class BoundedMultiset {
public:
    BoundedMultiset() = default;
    BoundedMultiset(std::vector<int> elements, int bound);
    static BoundedMultiset empty(int bound) { return BoundedMultiset({}, bound); }

    int bound() const { return bound_; }
    int size() const { return static_cast<int>(elems_.size()); }
    bool is_empty() const { return elems_.empty(); }
    const std::vector<int>& elements() const { return elems_; }
    int multiplicity(int v) const;
    int max_element() const;  // 0 for the empty multi-set
    long long element_sum() const;

    BoundedMultiset with_bound(int new_bound) const;
    BoundedMultiset plus(int v) const;
    BoundedMultiset plus(const BoundedMultiset& other) const;
    // extended containment / difference on multi-sets (multiplicity-wise)
    bool contains_multiset(const BoundedMultiset& other) const;
    BoundedMultiset minus_multiset(const BoundedMultiset& other) const;
    // {j+1 | j in J}
    BoundedMultiset shift_up() const;

    bool operator==(const BoundedMultiset& o) const {
        return bound_ == o.bound_ && elems_ == o.elems_;
    }
    bool operator<(const BoundedMultiset& o) const { return elems_ < o.elems_; }

    std::string to_string() const;

private:
    std::vector<int> elems_;
    int bound_ = 0;
};

// Multi-set of entry values of a tableau (zeros included), non-decreasing.
class Content {
public:
    Content() = default;
    explicit Content(std::vector<int> values);

    int sum() const { return sum_; }
    int length() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }
    int multiplicity(int v) const;
    int max_value() const { return values_.empty() ? 0 : values_.back(); }

    bool operator==(const Content& o) const { return values_ == o.values_; }
    bool operator<(const Content& o) const { return values_ < o.values_; }

    std::string to_string() const;

private:
    std::vector<int> values_;
    int sum_ = 0;
};

struct HatDecomposition {
    std::vector<int> hat_set;  // distinct elements of J strictly between 0 and bound
    int k_hat = 1;             // |hat_set| + 1
    BoundedMultiset remainder;
};

// comp_n J: differences of J padded with 0 and n; length |J|+1.
WeakComposition comp_from_multiset(const BoundedMultiset& j, int n);
// inverse of the above (partial sums, then drop the 0 and n endpoints)
BoundedMultiset multiset_from_comp(const WeakComposition& alpha);
// value h appears alpha_h times
Content content_of_comp(const WeakComposition& alpha);
// inverse given the length (contents forget trailing zeros of alpha)
WeakComposition comp_of_content(const Content& mu, int length);

HatDecomposition hat_decompose(const BoundedMultiset& j);
bool multiset_contains_set(const BoundedMultiset& j, const std::vector<int>& d);
BoundedMultiset multiset_subtract_set(const BoundedMultiset& j, const std::vector<int>& d);

// Exhaustive, duplicate-free enumerations in deterministic (lexicographic) order.
std::vector<PartitionShape> partitions_of(int n);
// contents with exactly `length` entries (zeros included) summing to d
std::vector<Content> contents_of_sum(int d, int length);
// multi-sets of the given size with elements in [lo, hi], carried bound `bound`
std::vector<BoundedMultiset> multisets_of_size(int size, int lo, int hi, int bound);
// multi-sets of positive integers <= n with element sum d (any size)
std::vector<BoundedMultiset> multisets_with_sum(int d, int n);

long long binomial(int n, int k);
long long factorial(int n);

std::string int_vector_to_string(const std::vector<int>& v);

}  // namespace specht
