#include "specht/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specht {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    shape_ = PartitionShape(std::move(parts));  // validates non-increasing, positive
}

bool Tableau::rows_weakly_increase() const {
    for (const auto& r : rows_)
        for (size_t c = 1; c < r.size(); ++c)
            if (r[c - 1] > r[c]) return false;
    return true;
}

bool Tableau::cols_strictly_increase() const {
    for (size_t r = 1; r < rows_.size(); ++r)
        for (size_t c = 0; c < rows_[r].size(); ++c)
            if (rows_[r - 1][c] >= rows_[r][c]) return false;
    return true;
}

bool Tableau::entries_non_negative() const {
    for (const auto& r : rows_)
        for (int e : r)
            if (e < 0) return false;
    return true;
}

bool Tableau::has_full_content() const {
    std::vector<bool> seen(size() + 1, false);
    for (const auto& r : rows_)
        for (int e : r) {
            if (e < 1 || e > size() || seen[e]) return false;
            seen[e] = true;
        }
    return true;
}

Box Tableau::box_of(int value) const {
    for (int r = 0; r < row_count(); ++r)
        for (int c = 0; c < row_length(r); ++c)
            if (rows_[r][c] == value) return {r, c};
    throw std::domain_error("box_of: value not present");
}

Tableau Tableau::with_entry(Box b, int value) const {
    std::vector<std::vector<int>> rows = rows_;
    rows[b.row][b.col] = value;
    return Tableau(std::move(rows));
}

int Tableau::entry_sum() const {
    int s = 0;
    for (const auto& r : rows_) s = std::accumulate(r.begin(), r.end(), s);
    return s;
}

Content Tableau::content() const {
    std::vector<int> vals;
    vals.reserve(size());
    for (const auto& r : rows_) vals.insert(vals.end(), r.begin(), r.end());
    return Content(std::move(vals));
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << ',';
        os << int_vector_to_string(rows_[r]);
    }
    os << ']';
    return os.str();
}

SemiStandardTableau::SemiStandardTableau(Tableau t) : t_(std::move(t)) {
    if (!t_.entries_non_negative() || !t_.rows_weakly_increase() || !t_.cols_strictly_increase())
        throw std::domain_error("not a semi-standard tableau: " + t_.to_string());
}

StandardTableau::StandardTableau(Tableau t) : t_(std::move(t)) {
    if (!t_.has_full_content() || !t_.cols_strictly_increase())
        throw std::domain_error("not a standard tableau: " + t_.to_string());
    for (const auto& r : t_.rows())
        for (size_t c = 1; c < r.size(); ++c)
            if (r[c - 1] >= r[c]) throw std::domain_error("not a standard tableau");
}

CochargeTableau::CochargeTableau(Tableau t) : SemiStandardTableau(std::move(t)) {
    if (!is_cocharge(*this))
        throw std::domain_error("not a cocharge tableau: " + to_string());
}

CochargeTableau::CochargeTableau(const SemiStandardTableau& m) : SemiStandardTableau(m) {
    if (!is_cocharge(*this))
        throw std::domain_error("not a cocharge tableau: " + to_string());
}

namespace {

void syt_rec(const PartitionShape& shape, int next, std::vector<std::vector<int>>& rows,
             std::vector<int>& filled, std::vector<StandardTableau>& out) {
    int n = shape.n();
    if (next > n) {
        std::vector<std::vector<int>> trimmed(shape.length());
        for (int r = 0; r < shape.length(); ++r)
            trimmed[r].assign(rows[r].begin(), rows[r].begin() + shape.part(r));
        out.emplace_back(Tableau(std::move(trimmed)));
        return;
    }
    for (int r = 0; r < shape.length(); ++r) {
        int c = filled[r];
        if (c >= shape.part(r)) continue;
        if (r > 0 && filled[r - 1] <= c) continue;  // box above must be filled
        rows[r][c] = next;
        ++filled[r];
        syt_rec(shape, next + 1, rows, filled, out);
        --filled[r];
    }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const PartitionShape& shape) {
    std::vector<StandardTableau> out;
    if (shape.n() == 0) {
        out.emplace_back(Tableau(std::vector<std::vector<int>>{}));
        return out;
    }
    std::vector<std::vector<int>> rows(shape.length());
    for (int r = 0; r < shape.length(); ++r) rows[r].assign(shape.part(r), 0);
    std::vector<int> filled(shape.length(), 0);
    syt_rec(shape, 1, rows, filled, out);
    return out;
}

long long syt_count(const PartitionShape& shape) {
    // hook length formula
    std::vector<int> conj = shape.conjugate();
    long long num = factorial(shape.n());
    long long den = 1;
    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape.part(r); ++c)
            den *= (shape.part(r) - c) + (conj[c] - r) - 1;
    return num / den;
}

std::vector<int> descent_set(const StandardTableau& s) {
    std::vector<int> out;
    int n = s.size();
    std::vector<int> row_of(n + 1, 0);
    for (int r = 0; r < s.tab().row_count(); ++r)
        for (int c = 0; c < s.tab().row_length(r); ++c) row_of[s.at(r, c)] = r;
    for (int i = 1; i < n; ++i)
        if (row_of[i + 1] > row_of[i]) out.push_back(i);
    return out;
}

std::vector<int> dsi_c(const StandardTableau& s) {
    std::vector<int> d = descent_set(s);
    int n = s.size();
    for (int& x : d) x = n - x;
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<int> asi_c(const StandardTableau& s) {
    std::vector<int> dc = dsi_c(s);
    std::vector<int> out;
    for (int i = 1; i < s.size(); ++i)
        if (!std::binary_search(dc.begin(), dc.end(), i)) out.push_back(i);
    return out;
}

SemiStandardTableau destandardize(const StandardTableau& s, const BoundedMultiset& j) {
    int n = s.size();
    if (j.max_element() > n)
        throw std::domain_error("destandardize: multi-set element exceeds n");
    if (!multiset_contains_set(j.with_bound(n), descent_set(s)))
        throw std::domain_error("destandardize: Dsi(S) not contained in J");
    std::vector<int> padded;
    padded.push_back(0);
    padded.insert(padded.end(), j.elements().begin(), j.elements().end());
    padded.push_back(n);
    // value(p) = the h with j_h < p <= j_{h+1}
    std::vector<int> value(n + 1, 0);
    for (int p = 1; p <= n; ++p) {
        for (size_t h = 0; h + 1 < padded.size(); ++h)
            if (padded[h] < p && p <= padded[h + 1]) {
                value[p] = static_cast<int>(h);
                break;
            }
    }
    std::vector<std::vector<int>> rows = s.tab().rows();
    for (auto& r : rows)
        for (int& e : r) e = value[e];
    return SemiStandardTableau(Tableau(std::move(rows)));
}

Standardization standardize(const SemiStandardTableau& m) {
    int n = m.size();
    // equal entries are numbered left to right (they form a horizontal strip)
    std::vector<std::pair<int, Box>> boxes;  // (entry, box), sorted by (entry, col)
    for (int r = 0; r < m.tab().row_count(); ++r)
        for (int c = 0; c < m.tab().row_length(r); ++c) boxes.push_back({m.at(r, c), {r, c}});
    std::stable_sort(boxes.begin(), boxes.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second.col < b.second.col;
    });
    std::vector<std::vector<int>> rows = m.tab().rows();
    for (int idx = 0; idx < n; ++idx) rows[boxes[idx].second.row][boxes[idx].second.col] = idx + 1;
    StandardTableau s{Tableau(std::move(rows))};

    WeakComposition alpha = comp_of_content(m.tab().content(), m.tab().content().max_value() + 1);
    BoundedMultiset j = multiset_from_comp(alpha).with_bound(n);
    return {std::move(s), std::move(j)};
}

BoundedMultiset dsp_c(const SemiStandardTableau& m) {
    int n = m.size();
    BoundedMultiset j = standardize(m).j;  // canonical: no n entries
    std::vector<int> out;
    for (int e : j.elements())
        if (e < n) out.push_back(n - e);
    return BoundedMultiset(std::move(out), n);
}

int entry_sum(const SemiStandardTableau& m) { return m.tab().entry_sum(); }

bool is_cocharge(const SemiStandardTableau& m) {
    Standardization st = standardize(m);
    std::vector<int> dsi = descent_set(st.s);
    return st.j.elements() == dsi;
}

bool is_cocharge_leftmost(const SemiStandardTableau& m) {
    // every positive h: the leftmost box holding h needs an h-1 strictly above it
    int maxv = m.tab().content().max_value();
    for (int h = 1; h <= maxv; ++h) {
        Box leftmost{-1, -1};
        bool found = false;
        for (int r = 0; r < m.tab().row_count(); ++r)
            for (int c = 0; c < m.tab().row_length(r); ++c)
                if (m.at(r, c) == h && (!found || c < leftmost.col)) {
                    leftmost = {r, c};
                    found = true;
                }
        if (!found) continue;
        bool ok = false;
        for (int r = 0; r < leftmost.row && !ok; ++r)
            for (int c = 0; c < m.tab().row_length(r); ++c)
                if (m.at(r, c) == h - 1) {
                    ok = true;
                    break;
                }
        if (!ok) return false;
    }
    return true;
}

CochargeTableau cocharge_of(const StandardTableau& s) {
    BoundedMultiset j(descent_set(s), s.size());
    return CochargeTableau(destandardize(s, j));
}

StandardTableau ct_inverse(const CochargeTableau& c) { return standardize(c).s; }

CochargeTableau minimal_cocharge(const PartitionShape& shape) {
    std::vector<std::vector<int>> rows(shape.length());
    for (int r = 0; r < shape.length(); ++r) rows[r].assign(shape.part(r), r);
    return CochargeTableau(Tableau(std::move(rows)));
}

std::vector<SemiStandardTableau> enumerate_ssyt_by_content(const PartitionShape& shape,
                                                           const Content& mu) {
    if (mu.length() != shape.n())
        throw std::domain_error("enumerate_ssyt_by_content: content length != shape size");
    WeakComposition alpha = comp_of_content(mu, mu.max_value() + 1);
    BoundedMultiset j = multiset_from_comp(alpha).with_bound(shape.n());
    std::vector<SemiStandardTableau> out;
    for (const StandardTableau& s : enumerate_syt(shape)) {
        if (!multiset_contains_set(j, descent_set(s))) continue;
        out.push_back(destandardize(s, j));
    }
    return out;
}

std::vector<SemiStandardTableau> enumerate_ssyt_by_sum(const PartitionShape& shape, int d) {
    std::vector<SemiStandardTableau> out;
    for (const Content& mu : contents_of_sum(d, shape.n())) {
        std::vector<SemiStandardTableau> part = enumerate_ssyt_by_content(shape, mu);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<CochargeTableau> enumerate_cct(const PartitionShape& shape) {
    std::vector<CochargeTableau> out;
    for (const StandardTableau& s : enumerate_syt(shape)) out.push_back(cocharge_of(s));
    return out;
}

StandardTableau evacuation(const StandardTableau& s) {
    int n = s.size();
    if (n == 0) return s;
    const PartitionShape& shape = s.shape();
    std::vector<std::vector<int>> work = s.tab().rows();
    std::vector<std::vector<int>> out(shape.length());
    for (int r = 0; r < shape.length(); ++r) out[r].assign(shape.part(r), 0);
    std::vector<int> len(shape.length());
    for (int r = 0; r < shape.length(); ++r) len[r] = shape.part(r);

    for (int step = 1; step <= n; ++step) {
        // delete the minimum at (0,0), slide the hole to a corner
        int r = 0, c = 0;
        while (true) {
            bool has_right = c + 1 < len[r];
            bool has_down = r + 1 < static_cast<int>(len.size()) && len[r + 1] > c;
            if (!has_right && !has_down) break;
            if (!has_down || (has_right && work[r][c + 1] < work[r + 1][c])) {
                work[r][c] = work[r][c + 1];
                ++c;
            } else {
                work[r][c] = work[r + 1][c];
                ++r;
            }
        }
        out[r][c] = n + 1 - step;
        --len[r];
        if (len[r] == 0) len.resize(r);
    }
    return StandardTableau(Tableau(std::move(out)));
}

std::vector<Box> external_corners(const PartitionShape& shape) {
    std::vector<Box> out;
    for (int r = 0; r < shape.length(); ++r)
        if (r == 0 || shape.part(r - 1) > shape.part(r)) out.push_back({r, shape.part(r)});
    out.push_back({shape.length(), 0});
    return out;
}

std::vector<Box> internal_corners(const PartitionShape& shape) {
    std::vector<Box> out;
    for (int r = 0; r < shape.length(); ++r)
        if (r + 1 == shape.length() || shape.part(r + 1) < shape.part(r))
            out.push_back({r, shape.part(r) - 1});
    return out;
}

PartitionShape add_box(const PartitionShape& shape, Box v) {
    std::vector<Box> ec = external_corners(shape);
    if (std::find(ec.begin(), ec.end(), v) == ec.end())
        throw std::domain_error("add_box: not an external corner");
    std::vector<int> parts = shape.parts();
    if (v.row == shape.length())
        parts.push_back(1);
    else
        ++parts[v.row];
    return PartitionShape(std::move(parts));
}

PartitionShape remove_box(const PartitionShape& shape, Box v) {
    std::vector<Box> ic = internal_corners(shape);
    if (std::find(ic.begin(), ic.end(), v) == ic.end())
        throw std::domain_error("remove_box: not an internal corner");
    std::vector<int> parts = shape.parts();
    --parts[v.row];
    if (parts[v.row] == 0) parts.pop_back();
    return PartitionShape(std::move(parts));
}

Tableau grow(const Tableau& t, Box v) {
    add_box(t.shape(), v);  // corner validation
    std::vector<std::vector<int>> rows = t.rows();
    if (v.row == t.row_count())
        rows.push_back({t.size() + 1});
    else
        rows[v.row].push_back(t.size() + 1);
    return Tableau(std::move(rows));
}

Tableau iota(const Tableau& t) { return grow(t, {0, t.shape().first_part()}); }

StandardTableau tilde_add(const StandardTableau& s, Box v) {
    StandardTableau ev = evacuation(s);
    StandardTableau grown{grow(ev.tab(), v)};
    return evacuation(grown);
}

StandardTableau tilde_iota(const StandardTableau& s) {
    return tilde_add(s, {0, s.shape().first_part()});
}

int delta(const SemiStandardTableau& m, Box v) {
    std::vector<Box> ec = external_corners(m.shape());
    if (std::find(ec.begin(), ec.end(), v) == ec.end())
        throw std::domain_error("delta: not an external corner");
    StandardTableau s = standardize(m).s;
    StandardTableau ev = evacuation(s);
    Box top = ev.box_of(m.size());
    return v.row > top.row ? 0 : 1;
}

SemiStandardTableau plus_one(const SemiStandardTableau& m) {
    std::vector<std::vector<int>> rows = m.tab().rows();
    for (auto& r : rows)
        for (int& e : r) ++e;
    return SemiStandardTableau(Tableau(std::move(rows)));
}

SemiStandardTableau hat_add(const SemiStandardTableau& m, Box v) {
    Standardization st = standardize(m);
    int dv = delta(m, v);
    StandardTableau grown = tilde_add(st.s, v);
    BoundedMultiset j = st.j.shift_up();  // bound n+1
    if (dv == 0) j = j.plus(1);
    return destandardize(grown, j);
}

SemiStandardTableau hat_iota(const SemiStandardTableau& m) {
    return hat_add(m, {0, m.shape().first_part()});
}

SsytDecomposition ssyt_decompose(const SemiStandardTableau& n_tab) {
    int n1 = n_tab.size();
    if (n1 < 2) throw std::domain_error("ssyt_decompose: need at least two boxes");
    SsytDecomposition out;

    bool has_zero = false;
    for (const auto& r : n_tab.tab().rows())
        for (int e : r)
            if (e == 0) has_zero = true;
    if (!has_zero) {
        std::vector<std::vector<int>> rows = n_tab.tab().rows();
        for (auto& r : rows)
            for (int& e : r) --e;
        out.plus_case = true;
        out.inner = SemiStandardTableau(Tableau(std::move(rows)));
        return out;
    }

    Standardization st = standardize(n_tab);
    StandardTableau ev = evacuation(st.s);
    Box v = ev.box_of(n1);
    // strip v and its entry n+1 from ev T, evacuate back
    std::vector<std::vector<int>> rows = ev.tab().rows();
    rows[v.row].pop_back();
    if (rows[v.row].empty()) rows.pop_back();
    StandardTableau s = evacuation(StandardTableau(Tableau(std::move(rows))));
    Box top = evacuation(s).box_of(n1 - 1);
    int dv = v.row > top.row ? 0 : 1;

    BoundedMultiset j_new = st.j;
    if (dv == 0) j_new = j_new.minus_multiset(BoundedMultiset({1}, j_new.bound()));
    std::vector<int> shifted = j_new.elements();
    for (int& e : shifted) --e;
    BoundedMultiset j(std::move(shifted), n1 - 1);

    out.plus_case = false;
    out.inner = destandardize(s, j);
    out.v = v;
    out.delta_value = dv;
    return out;
}

}  // namespace specht
