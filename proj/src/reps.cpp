#include "specht/reps.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specht {

std::string SummandLabel::to_string() const {
    std::ostringstream os;
    os << 'V' << tab.to_string();
    for (size_t r = 0; r < hvec.size(); ++r) {
        if (hvec[r] == 0) continue;
        os << "*e" << (r + 1);
        if (hvec[r] > 1) os << '^' << hvec[r];
    }
    if (iset) os << "|I=" << iset->to_string();
    return os.str();
}

namespace {

std::vector<int> trimmed_hvec(const std::vector<int>& h) {
    std::vector<int> t = h;
    while (!t.empty() && t.back() == 0) t.pop_back();
    return t;
}

}  // namespace

bool SummandLabel::operator==(const SummandLabel& o) const {
    return lambda == o.lambda && tab == o.tab && trimmed_hvec(hvec) == trimmed_hvec(o.hvec) &&
           iset == o.iset;
}

bool SummandLabel::operator<(const SummandLabel& o) const {
    if (!(lambda == o.lambda)) return lambda < o.lambda;
    if (!(tab == o.tab)) return tab < o.tab;
    std::vector<int> a = trimmed_hvec(hvec), b = trimmed_hvec(o.hvec);
    if (a != b) return a < b;
    if (iset.has_value() != o.iset.has_value()) return !iset.has_value();
    if (iset && !(*iset == *o.iset)) return *iset < *o.iset;
    return false;
}

MultiPoly e_product(const std::vector<int>& hvec, int n) {
    MultiPoly out = MultiPoly::one(n);
    for (size_t r = 0; r < hvec.size(); ++r)
        for (int c = 0; c < hvec[r]; ++c) out = out * elementary_symmetric(static_cast<int>(r) + 1, n);
    return out;
}

SpannedRep v_basis(const SemiStandardTableau& m) {
    SpannedRep rep;
    rep.label = {m.shape(), m.tab(), {}, std::nullopt};
    for (const StandardTableau& t : enumerate_syt(m.shape()))
        rep.basis.push_back(specht_polynomial(m, SymmetrizerContext(t.tab())));
    return rep;
}

SpannedRep v_basis_h(const CochargeTableau& c, const std::vector<int>& hvec) {
    int n = c.size();
    SpannedRep rep;
    rep.label = {c.shape(), c.tab(), hvec, std::nullopt};
    MultiPoly mult = e_product(hvec, n);
    for (const StandardTableau& t : enumerate_syt(c.shape()))
        rep.basis.push_back(specht_polynomial(c, SymmetrizerContext(t.tab())) * mult);
    return rep;
}

namespace {

void h_set_rec(int r, int budget, int max_r, int n, std::vector<int>& acc,
               std::vector<std::vector<int>>& out) {
    if (r > max_r) {
        out.push_back(acc);
        out.back().resize(n, 0);
        return;
    }
    for (int v = 0; v <= budget; ++v) {
        acc[r - 1] = v;
        h_set_rec(r + 1, budget - v, max_r, n, acc, out);
    }
    acc[r - 1] = 0;
}

}  // namespace

std::vector<std::vector<int>> h_set_from_dset(int dsize, int k, int s, int n) {
    std::vector<std::vector<int>> out;
    int budget = k - dsize - 1;  // sum < k - dsize
    if (budget < 0) return out;
    int max_r = n - s;
    std::vector<int> acc(std::max(max_r, 0), 0);
    if (max_r <= 0) {
        if (budget >= 0) out.push_back(std::vector<int>(n, 0));
        return out;
    }
    h_set_rec(1, budget, max_r, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> h_set(const CochargeTableau& c, int k, int s, int n) {
    return h_set_from_dset(dsp_c(c).size(), k, s, n);
}

bool in_h_set(const std::vector<int>& h, int dsize, int k, int s, int n) {
    long long sum = 0;
    for (size_t r = 0; r < h.size(); ++r) {
        if (h[r] < 0) return false;
        if (static_cast<int>(r) + 1 > n - s && h[r] != 0) return false;
        sum += h[r];
    }
    return sum < k - dsize;
}

BoundedMultiset hvec_to_multiset_hom(const std::vector<int>& dsp, const std::vector<int>& h,
                                     int k, int n) {
    long long sum = std::accumulate(h.begin(), h.end(), 0LL);
    if (sum >= k - static_cast<long long>(dsp.size()))
        throw std::domain_error("hvec_to_multiset: vector outside H^{k,0}");
    std::vector<int> elems = dsp;
    for (size_t i = 0; i < h.size(); ++i)
        for (int c = 0; c < h[i]; ++c) elems.push_back(static_cast<int>(i) + 1);
    int zeros = k - 1 - static_cast<int>(elems.size());
    for (int z = 0; z < zeros; ++z) elems.push_back(0);
    return BoundedMultiset(std::move(elems), n);
}

BoundedMultiset hvec_to_multiset_plain(const std::vector<int>& dsp, const std::vector<int>& h,
                                       int k, int n) {
    int d = static_cast<int>(dsp.size()) + 1;
    long long sum = std::accumulate(h.begin(), h.end(), 0LL);
    if (sum > k - d) throw std::domain_error("hvec_to_multiset: vector outside H^{k,0}");
    int h0 = k - d - static_cast<int>(sum);

    // the completed vector as a non-decreasing sequence of length k-d
    std::vector<int> seq;
    for (int c = 0; c < h0; ++c) seq.push_back(0);
    for (size_t r = 0; r < h.size(); ++r)
        for (int c = 0; c < h[r]; ++c) seq.push_back(static_cast<int>(r) + 1);

    if (seq.empty()) return BoundedMultiset(dsp, n);

    // the unique k_hat with the sandwich property
    int k_hat = -1;
    for (int cand = d; cand <= std::min(k, n); ++cand) {
        bool ok_low = (cand == d) || seq[cand - d - 1] <= n - cand;
        bool ok_high = (cand == k) || seq[cand - d] >= n - cand;
        if (ok_low && ok_high) {
            k_hat = cand;
            break;
        }
    }
    if (k_hat < 0) throw std::domain_error("hvec_to_multiset: no consistent hat size");

    // rebuild hat(I) \ D: walk the complement of D, taking h_r elements then
    // skipping one, for r < n - k_hat; the tail entries equal n - k_hat and
    // come from the maximal remaining elements
    std::vector<int> pool;
    for (int j = 1; j < n; ++j)
        if (!std::binary_search(dsp.begin(), dsp.end(), j)) pool.push_back(j);
    std::vector<int> a_set;
    size_t pos = 0;
    long long taken = 0;
    for (int r = 0; r < n - k_hat; ++r) {
        int count = (r == 0) ? h0 : (r <= static_cast<int>(h.size()) ? h[r - 1] : 0);
        for (int c = 0; c < count; ++c) {
            if (pos >= pool.size()) throw std::domain_error("hvec_to_multiset: pool exhausted");
            a_set.push_back(pool[pos++]);
            ++taken;
        }
        ++pos;  // skip one
    }
    long long tail = (k_hat - d) - taken;
    if (tail < 0 || pos + tail != pool.size())
        throw std::domain_error("hvec_to_multiset: inconsistent tail");
    for (long long c = 0; c < tail; ++c) a_set.push_back(pool[pool.size() - tail + c]);

    std::vector<int> hat_sorted = dsp;
    hat_sorted.insert(hat_sorted.end(), a_set.begin(), a_set.end());
    std::sort(hat_sorted.begin(), hat_sorted.end());
    if (static_cast<int>(hat_sorted.size()) != k_hat - 1)
        throw std::domain_error("hvec_to_multiset: hat size mismatch");

    // remainder copies from the tail values v >= n - k_hat
    std::vector<int> elems = hat_sorted;
    for (int idx = k_hat - d; idx < static_cast<int>(seq.size()); ++idx) {
        int c = seq[idx] - (n - k_hat);
        if (c < 0 || c > k_hat) throw std::domain_error("hvec_to_multiset: bad remainder value");
        int elem;
        if (c == 0)
            elem = n;
        else if (c == k_hat)
            elem = 0;
        else
            elem = hat_sorted[k_hat - 1 - c];
        elems.push_back(elem);
    }
    return BoundedMultiset(std::move(elems), n);
}

BoundedMultiset hvec_to_multiset(const CochargeTableau& c, const std::vector<int>& h, int k,
                                 AugmentedVariant variant) {
    std::vector<int> dsp = dsp_c(c).elements();
    int n = c.size();
    return variant == AugmentedVariant::plain ? hvec_to_multiset_plain(dsp, h, k, n)
                                              : hvec_to_multiset_hom(dsp, h, k, n);
}

bool multiset_admissible(const BoundedMultiset& iset, int n, int s) {
    if (s < 0 || s > iset.size() + 1) throw std::domain_error("multiset_admissible: bad s");
    std::vector<int> padded;
    padded.push_back(0);
    padded.insert(padded.end(), iset.elements().begin(), iset.elements().end());
    padded.push_back(n);
    for (int h = 0; h < s; ++h)
        if (padded[h] >= padded[h + 1]) return false;
    return true;
}

std::vector<BoundedMultiset> admissible_multisets(int n, int k, int s) {
    std::vector<BoundedMultiset> out;
    if (k <= 0) return out;
    for (const BoundedMultiset& iset : multisets_of_size(k - 1, 0, n, n))
        if (multiset_admissible(iset, n, s)) out.push_back(iset);
    return out;
}

std::vector<SpannedRep> r_nks_lift(int n, int k, int s) {
    if (n < 1 || k < 0) throw std::domain_error("r_nks_lift: need n >= 1, k >= 0");
    if (s < 0 || s > std::min(n, k))
        throw std::domain_error("r_nks_lift: need 0 <= s <= min(n,k)");
    std::vector<SpannedRep> out;
    for (const PartitionShape& lambda : partitions_of(n)) {
        std::vector<StandardTableau> syts = enumerate_syt(lambda);
        for (const StandardTableau& src : syts) {
            CochargeTableau c = cocharge_of(src);
            std::vector<std::vector<int>> hs = h_set(c, k, s, n);
            if (hs.empty()) continue;
            std::vector<MultiPoly> base;
            for (const StandardTableau& t : syts)
                base.push_back(specht_polynomial(c, SymmetrizerContext(t.tab())));
            for (const std::vector<int>& h : hs) {
                SpannedRep rep;
                rep.label = {lambda, c.tab(), h, std::nullopt};
                MultiPoly mult = e_product(h, n);
                for (const MultiPoly& f : base) rep.basis.push_back(f * mult);
                out.push_back(std::move(rep));
            }
        }
    }
    return out;
}

namespace {

std::vector<SpannedRep> r_nI_impl(const BoundedMultiset& iset, AugmentedVariant variant) {
    int n = iset.bound();
    if (n < 1) throw std::domain_error("r_nI: multi-set bound must be >= 1");
    std::vector<SpannedRep> out;
    for (const PartitionShape& lambda : partitions_of(n)) {
        for (const CochargeTableau& c : enumerate_cct(lambda)) {
            if (!multiset_contains_set(iset, dsp_c(c).elements())) continue;
            HVectors hv = h_vectors(c, iset);
            SpannedRep rep =
                v_basis_h(c, variant == AugmentedVariant::plain ? hv.h_plain : hv.h_hom);
            rep.label.iset = iset;
            out.push_back(std::move(rep));
        }
    }
    return out;
}

}  // namespace

std::vector<SpannedRep> r_nI(const BoundedMultiset& iset) {
    return r_nI_impl(iset, AugmentedVariant::plain);
}

std::vector<SpannedRep> r_nI_hom(const BoundedMultiset& iset) {
    return r_nI_impl(iset, AugmentedVariant::homogeneous);
}

std::vector<SpannedRep> r_nks_hom(int n, int k, int s) {
    if (s > std::min(n, k)) throw std::domain_error("r_nks_hom: need s <= min(n,k)");
    std::vector<SpannedRep> out;
    for (const BoundedMultiset& iset : admissible_multisets(n, k, s)) {
        std::vector<SpannedRep> part = r_nI_hom(iset);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

long long op_count_I(int n, const BoundedMultiset& iset) {
    WeakComposition m = comp_from_multiset(iset, n);
    long long count = factorial(n);
    for (int h = 0; h < m.length(); ++h) count /= factorial(m.entry(h));
    return count;
}

long long op_count(int n, int k, int s) {
    if (s < 0 || s > k) throw std::domain_error("op_count: need 0 <= s <= k");
    if (s > n) return 0;
    long long total = 0;
    for (const BoundedMultiset& iset : admissible_multisets(n, k, s))
        total += op_count_I(n, iset);
    return total;
}

namespace {

// direct backtracking count of semi-standard fillings with given value counts
long long kostka_rec(const PartitionShape& lambda, std::vector<int>& avail,
                     std::vector<std::vector<int>>& rows, int r, int c) {
    if (r == lambda.length()) return 1;
    int nr = r, nc = c + 1;
    if (nc == lambda.part(r)) {
        nr = r + 1;
        nc = 0;
    }
    long long total = 0;
    int lo = c > 0 ? rows[r][c - 1] : 0;
    for (int v = lo; v < static_cast<int>(avail.size()); ++v) {
        if (avail[v] == 0) continue;
        if (r > 0 && rows[r - 1][c] >= v) continue;
        rows[r][c] = v;
        --avail[v];
        total += kostka_rec(lambda, avail, rows, nr, nc);
        ++avail[v];
    }
    return total;
}

}  // namespace

long long kostka(const PartitionShape& lambda, const WeakComposition& alpha) {
    if (alpha.n() != lambda.n()) throw std::domain_error("kostka: |alpha| != |lambda|");
    if (lambda.n() == 0) return 1;
    std::vector<int> avail = alpha.entries();
    std::vector<std::vector<int>> rows(lambda.length());
    for (int r = 0; r < lambda.length(); ++r) rows[r].assign(lambda.part(r), 0);
    return kostka_rec(lambda, avail, rows, 0, 0);
}

std::vector<std::pair<CochargeTableau, BoundedMultiset>> adlambda_pairs(
    const PartitionShape& lambda, int d, int n) {
    if (lambda.n() != n) throw std::domain_error("adlambda_pairs: |lambda| != n");
    std::vector<std::pair<CochargeTableau, BoundedMultiset>> out;
    std::vector<BoundedMultiset> isets = multisets_with_sum(d, n);
    for (const CochargeTableau& c : enumerate_cct(lambda)) {
        std::vector<int> dsp = dsp_c(c).elements();
        for (const BoundedMultiset& iset : isets)
            if (multiset_contains_set(iset, dsp)) out.push_back({c, iset});
    }
    return out;
}

std::vector<MultiPoly> collect_basis(const std::vector<SpannedRep>& reps) {
    std::vector<MultiPoly> rows;
    for (const SpannedRep& rep : reps)
        rows.insert(rows.end(), rep.basis.begin(), rep.basis.end());
    return rows;
}

std::map<std::string, long long> count_multiplicities(const std::vector<SummandLabel>& labels) {
    std::map<std::string, long long> out;
    for (const SummandLabel& l : labels) ++out[l.lambda.to_string()];
    return out;
}

namespace {

void finalize_report(DecompReport& rep, const std::vector<SpannedRep>& summands) {
    for (const SpannedRep& s : summands) rep.summands.push_back(s.label);
    rep.multiplicities = count_multiplicities(rep.summands);
    bool ok = rep.rank == rep.expected_dim;
    for (const GroupCheck& g : rep.checks) ok = ok && g.pass();
    rep.pass = ok;
}

long long orbit_size(const Content& mu) {
    long long size = factorial(mu.length());
    int i = 0;
    const std::vector<int>& v = mu.values();
    while (i < static_cast<int>(v.size())) {
        int j = i;
        while (j < static_cast<int>(v.size()) && v[j] == v[i]) ++j;
        size /= factorial(j - i);
        i = j;
    }
    return size;
}

}  // namespace

DecompReport qxnd_full(int n, int d, QxndGrouping grouping) {
    if (n < 1 || d < 0) throw std::domain_error("qxnd_full: need n >= 1, d >= 0");
    DecompReport rep;
    rep.name = "qxnd_full";
    rep.params = {{"n", std::to_string(n)}, {"d", std::to_string(d)}};
    std::vector<SpannedRep> summands;
    for (const PartitionShape& lambda : partitions_of(n))
        for (const SemiStandardTableau& m : enumerate_ssyt_by_sum(lambda, d))
            summands.push_back(v_basis(m));
    rep.expected_dim = binomial(n + d - 1, d);
    rep.rank = rank_over_rationals(collect_basis(summands));
    long long dims = 0;
    for (const SpannedRep& s : summands) dims += s.dim();
    rep.checks.push_back({"sum_of_dims", rep.expected_dim, dims});
    if (grouping == QxndGrouping::by_content) {
        for (const Content& mu : contents_of_sum(d, n)) {
            std::vector<MultiPoly> rows;
            for (const SpannedRep& s : summands)
                if (s.label.tab.content() == mu)
                    rows.insert(rows.end(), s.basis.begin(), s.basis.end());
            rep.checks.push_back(
                {"content" + mu.to_string(), orbit_size(mu), rank_over_rationals(rows)});
        }
    }
    finalize_report(rep, summands);
    return rep;
}

DecompReport qxnd_cocharge(int n, int d) {
    if (n < 1 || d < 0) throw std::domain_error("qxnd_cocharge: need n >= 1, d >= 0");
    DecompReport rep;
    rep.name = "qxnd_cocharge";
    rep.params = {{"n", std::to_string(n)}, {"d", std::to_string(d)}};
    std::vector<SpannedRep> summands;
    for (const PartitionShape& lambda : partitions_of(n))
        for (const auto& [c, iset] : adlambda_pairs(lambda, d, n)) {
            SpannedRep s = v_basis_h(c, h_vectors(c, iset).h_hom);
            s.label.iset = iset;
            summands.push_back(std::move(s));
        }
    rep.expected_dim = binomial(n + d - 1, d);
    rep.rank = rank_over_rationals(collect_basis(summands));
    long long dims = 0;
    for (const SpannedRep& s : summands) dims += s.dim();
    rep.checks.push_back({"sum_of_dims", rep.expected_dim, dims});
    finalize_report(rep, summands);
    return rep;
}

DecompReport verify_rnks_dim(int n, int k, int s) {
    DecompReport rep;
    rep.name = "rnks_dim";
    rep.params = {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"s", std::to_string(s)}};
    std::vector<SpannedRep> summands = r_nks_lift(n, k, s);
    rep.expected_dim = op_count(n, k, s);
    rep.rank = rank_over_rationals(collect_basis(summands));
    long long dims = 0;
    for (const SpannedRep& sm : summands) dims += sm.dim();
    rep.checks.push_back({"sum_of_dims", rep.expected_dim, dims});
    finalize_report(rep, summands);
    return rep;
}

DecompReport verify_splexseq(int n, int k, int s) {
    if (s < 0 || s >= k || s > n) throw std::domain_error("verify_splexseq: need 0 <= s < k, s <= n");
    DecompReport rep;
    rep.name = "splexseq";
    rep.params = {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"s", std::to_string(s)}};

    std::vector<SpannedRep> whole = r_nks_lift(n, k, s);
    std::vector<SpannedRep> kernel;  // e_{n-s} * lift(n, k-1, s)
    if (k - 1 >= 1 && s <= std::min(n, k - 1)) {
        MultiPoly mult = elementary_symmetric(n - s, n);
        for (SpannedRep part : r_nks_lift(n, k - 1, s)) {
            for (MultiPoly& f : part.basis) f = f * mult;
            for (size_t r = part.label.hvec.size(); r < static_cast<size_t>(n); ++r)
                part.label.hvec.push_back(0);
            if (n - s >= 1) ++part.label.hvec[n - s - 1];
            kernel.push_back(std::move(part));
        }
    }
    std::vector<SpannedRep> quotient;  // lift(n, k, s+1), zero when s+1 > min(n,k)
    if (s + 1 <= std::min(n, k)) quotient = r_nks_lift(n, k, s + 1);

    std::vector<MultiPoly> rows_w = collect_basis(whole);
    std::vector<MultiPoly> rows_k = collect_basis(kernel);
    std::vector<MultiPoly> rows_q = collect_basis(quotient);
    long long rk = rank_over_rationals(rows_k);
    long long rq = rank_over_rationals(rows_q);
    std::vector<MultiPoly> rows_kq = rows_k;
    rows_kq.insert(rows_kq.end(), rows_q.begin(), rows_q.end());
    long long rkq = rank_over_rationals(rows_kq);
    long long rw = rank_over_rationals(rows_w);
    std::vector<MultiPoly> rows_all = rows_w;
    rows_all.insert(rows_all.end(), rows_kq.begin(), rows_kq.end());
    long long rall = rank_over_rationals(rows_all);

    rep.expected_dim = op_count(n, k, s);
    rep.rank = rw;
    rep.checks.push_back({"parts_independent", rk + rq, rkq});
    rep.checks.push_back({"parts_span", rw, rkq});
    rep.checks.push_back({"union_spans_whole", rw, rall});
    finalize_report(rep, whole);
    return rep;
}

DecompReport verify_direct_sum(const std::vector<SpannedRep>& parts, long long expected_dim) {
    DecompReport rep;
    rep.name = "direct_sum";
    long long dims = 0;
    for (const SpannedRep& p : parts) dims += syt_count(p.label.lambda);
    rep.expected_dim = expected_dim;
    rep.rank = rank_over_rationals(collect_basis(parts));
    rep.checks.push_back({"sum_of_dims", expected_dim, dims});
    finalize_report(rep, parts);
    return rep;
}

}  // namespace specht
