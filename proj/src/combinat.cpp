#include "specht/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specht {

std::string int_vector_to_string(const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

PartitionShape::PartitionShape(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::domain_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("partition parts must be non-increasing");
        n_ += parts_[i];
    }
}

int PartitionShape::part(int i) const {
    if (i < 0) throw std::domain_error("negative part index");
    return i < length() ? parts_[i] : 0;
}

std::vector<int> PartitionShape::conjugate() const {
    std::vector<int> conj(first_part(), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return conj;
}

std::string PartitionShape::to_string() const { return int_vector_to_string(parts_); }

WeakComposition::WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 0) throw std::domain_error("weak composition entries must be non-negative");
        n_ += e;
    }
}

std::string WeakComposition::to_string() const { return int_vector_to_string(entries_); }

BoundedMultiset::BoundedMultiset(std::vector<int> elements, int bound)
    : elems_(std::move(elements)), bound_(bound) {
    if (bound_ < 0) throw std::domain_error("multi-set bound must be non-negative");
    std::sort(elems_.begin(), elems_.end());
    for (int e : elems_)
        if (e < 0 || e > bound_) throw std::domain_error("multi-set element out of [0, bound]");
}

int BoundedMultiset::multiplicity(int v) const {
    auto [lo, hi] = std::equal_range(elems_.begin(), elems_.end(), v);
    return static_cast<int>(hi - lo);
}

int BoundedMultiset::max_element() const { return elems_.empty() ? 0 : elems_.back(); }

long long BoundedMultiset::element_sum() const {
    return std::accumulate(elems_.begin(), elems_.end(), 0LL);
}

BoundedMultiset BoundedMultiset::with_bound(int new_bound) const {
    return BoundedMultiset(elems_, new_bound);
}

BoundedMultiset BoundedMultiset::plus(int v) const {
    std::vector<int> e = elems_;
    e.push_back(v);
    return BoundedMultiset(std::move(e), bound_);
}

BoundedMultiset BoundedMultiset::plus(const BoundedMultiset& other) const {
    std::vector<int> e = elems_;
    e.insert(e.end(), other.elems_.begin(), other.elems_.end());
    return BoundedMultiset(std::move(e), std::max(bound_, other.bound_));
}

bool BoundedMultiset::contains_multiset(const BoundedMultiset& other) const {
    return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end());
}

BoundedMultiset BoundedMultiset::minus_multiset(const BoundedMultiset& other) const {
    if (!contains_multiset(other)) throw std::domain_error("multi-set difference: not contained");
    std::vector<int> out;
    std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out));
    return BoundedMultiset(std::move(out), bound_);
}

BoundedMultiset BoundedMultiset::shift_up() const {
    std::vector<int> e = elems_;
    for (int& x : e) ++x;
    return BoundedMultiset(std::move(e), bound_ + 1);
}

std::string BoundedMultiset::to_string() const { return int_vector_to_string(elems_); }

Content::Content(std::vector<int> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    for (int v : values_) {
        if (v < 0) throw std::domain_error("content values must be non-negative");
        sum_ += v;
    }
}

int Content::multiplicity(int v) const {
    auto [lo, hi] = std::equal_range(values_.begin(), values_.end(), v);
    return static_cast<int>(hi - lo);
}

std::string Content::to_string() const { return int_vector_to_string(values_); }

WeakComposition comp_from_multiset(const BoundedMultiset& j, int n) {
    if (!j.elements().empty() && j.elements().back() > n)
        throw std::domain_error("comp_from_multiset: element exceeds n");
    std::vector<int> padded;
    padded.reserve(j.size() + 2);
    padded.push_back(0);
    padded.insert(padded.end(), j.elements().begin(), j.elements().end());
    padded.push_back(n);
    std::vector<int> diffs(padded.size() - 1);
    for (size_t h = 0; h + 1 < padded.size(); ++h) diffs[h] = padded[h + 1] - padded[h];
    return WeakComposition(std::move(diffs));
}

BoundedMultiset multiset_from_comp(const WeakComposition& alpha) {
    std::vector<int> cuts;
    cuts.reserve(alpha.length());
    int acc = 0;
    for (int h = 0; h + 1 < alpha.length(); ++h) {
        acc += alpha.entry(h);
        cuts.push_back(acc);
    }
    return BoundedMultiset(std::move(cuts), alpha.n());
}

Content content_of_comp(const WeakComposition& alpha) {
    std::vector<int> vals;
    vals.reserve(alpha.n());
    for (int h = 0; h < alpha.length(); ++h)
        for (int c = 0; c < alpha.entry(h); ++c) vals.push_back(h);
    return Content(std::move(vals));
}

WeakComposition comp_of_content(const Content& mu, int length) {
    if (length <= mu.max_value())
        throw std::domain_error("comp_of_content: length too small for content");
    std::vector<int> entries(length, 0);
    for (int v : mu.values()) ++entries[v];
    return WeakComposition(std::move(entries));
}

HatDecomposition hat_decompose(const BoundedMultiset& j) {
    HatDecomposition out;
    std::vector<int> rem;
    int prev = -1;
    for (int e : j.elements()) {
        if (e > 0 && e < j.bound() && e != prev) {
            out.hat_set.push_back(e);
            prev = e;
        } else {
            rem.push_back(e);
        }
    }
    out.k_hat = static_cast<int>(out.hat_set.size()) + 1;
    out.remainder = BoundedMultiset(std::move(rem), j.bound());
    return out;
}

bool multiset_contains_set(const BoundedMultiset& j, const std::vector<int>& d) {
    HatDecomposition hd = hat_decompose(j);
    for (int e : d)
        if (!std::binary_search(hd.hat_set.begin(), hd.hat_set.end(), e)) return false;
    return true;
}

BoundedMultiset multiset_subtract_set(const BoundedMultiset& j, const std::vector<int>& d) {
    if (!multiset_contains_set(j, d))
        throw std::domain_error("multiset_subtract_set: set not contained");
    return j.minus_multiset(BoundedMultiset(d, j.bound()));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<PartitionShape>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<PartitionShape> partitions_of(int n) {
    if (n < 0) throw std::domain_error("partitions_of: negative n");
    std::vector<PartitionShape> out;
    std::vector<int> acc;
    partitions_rec(n, n == 0 ? 1 : n, acc, out);
    return out;
}

std::vector<Content> contents_of_sum(int d, int length) {
    // partitions of d into at most `length` parts, zero-padded
    std::vector<Content> out;
    std::vector<PartitionShape> parts = partitions_of(d);
    for (const PartitionShape& p : parts) {
        if (p.length() > length) continue;
        std::vector<int> vals(length - p.length(), 0);
        for (int i = p.length() - 1; i >= 0; --i) vals.push_back(p.parts()[i]);
        out.emplace_back(std::move(vals));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void multisets_rec(int size, int lo, int hi, int bound, std::vector<int>& acc,
                   std::vector<BoundedMultiset>& out) {
    if (static_cast<int>(acc.size()) == size) {
        out.emplace_back(acc, bound);
        return;
    }
    int start = acc.empty() ? lo : acc.back();
    for (int v = start; v <= hi; ++v) {
        acc.push_back(v);
        multisets_rec(size, lo, hi, bound, acc, out);
        acc.pop_back();
    }
}

void multisets_sum_rec(int remaining, int min_next, int n, std::vector<int>& acc,
                       std::vector<BoundedMultiset>& out) {
    if (remaining == 0) {
        out.emplace_back(acc, n);
        return;
    }
    for (int v = min_next; v <= std::min(remaining, n); ++v) {
        acc.push_back(v);
        multisets_sum_rec(remaining - v, v, n, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<BoundedMultiset> multisets_of_size(int size, int lo, int hi, int bound) {
    if (size < 0) throw std::domain_error("multisets_of_size: negative size");
    std::vector<BoundedMultiset> out;
    std::vector<int> acc;
    if (lo > hi && size > 0) return out;
    multisets_rec(size, lo, hi, bound, acc, out);
    return out;
}

std::vector<BoundedMultiset> multisets_with_sum(int d, int n) {
    std::vector<BoundedMultiset> out;
    std::vector<int> acc;
    multisets_sum_rec(d, 1, n, acc, out);
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace specht
