#include "specht/rank.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace specht {

namespace {

using SparseIntRow = std::vector<std::pair<int, Int>>;  // (column, value), sorted

struct ComponentSplit {
    std::vector<std::vector<SparseIntRow>> components;
};

int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

ComponentSplit split_components(const std::vector<const MultiPoly*>& rows) {
    std::map<Monomial, int> column_of;
    std::vector<SparseIntRow> int_rows;
    for (const MultiPoly* p : rows) {
        if (p->is_zero()) continue;
        Int lcm = 1;
        for (const auto& [m, c] : p->terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                                     c.get_den().get_mpz_t());
        SparseIntRow row;
        row.reserve(p->terms().size());
        for (const auto& [m, c] : p->terms()) {
            auto [it, fresh] = column_of.try_emplace(m, static_cast<int>(column_of.size()));
            Rat scaled = c * lcm;
            row.push_back({it->second, Int(scaled.get_num())});
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        int_rows.push_back(std::move(row));
    }

    int ncols = static_cast<int>(column_of.size());
    std::vector<int> parent(ncols);
    std::iota(parent.begin(), parent.end(), 0);
    for (const SparseIntRow& row : int_rows) {
        int root = uf_find(parent, row[0].first);
        for (const auto& [col, val] : row) parent[uf_find(parent, col)] = root;
    }
    std::map<int, int> comp_index;
    ComponentSplit out;
    for (SparseIntRow& row : int_rows) {
        int root = uf_find(parent, row[0].first);
        auto [it, fresh] = comp_index.try_emplace(root, static_cast<int>(out.components.size()));
        if (fresh) out.components.emplace_back();
        out.components[it->second].push_back(std::move(row));
    }
    return out;
}

// ---- rank mod a word-sized prime (lower bound on the rational rank) ----

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((__uint128_t)a * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1) r = mulmod(r, a, p);
    return r;
}

long long rank_mod_p(const std::vector<SparseIntRow>& rows, uint64_t p) {
    using ModRow = std::vector<std::pair<int, uint64_t>>;
    std::map<int, ModRow> pivots;  // leading column -> normalized row
    long long rank = 0;
    for (const SparseIntRow& src : rows) {
        ModRow row;
        row.reserve(src.size());
        for (const auto& [col, val] : src) {
            Int m = val % static_cast<long>(p);
            long r = m.get_si();
            uint64_t v = r < 0 ? r + static_cast<long>(p) : r;
            if (v) row.push_back({col, v});
        }
        while (!row.empty()) {
            auto it = pivots.find(row[0].first);
            if (it == pivots.end()) break;
            // row -= row[0].val * pivot
            uint64_t f = row[0].second;
            const ModRow& piv = it->second;
            ModRow next;
            next.reserve(row.size() + piv.size());
            size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    next.push_back(row[i++]);
                } else if (i == row.size() || piv[j].first < row[i].first) {
                    uint64_t v = p - mulmod(f, piv[j].second, p);
                    if (v != p) next.push_back({piv[j].first, v});
                    ++j;
                } else {
                    uint64_t v = (row[i].second + p - mulmod(f, piv[j].second, p)) % p;
                    if (v) next.push_back({row[i].first, v});
                    ++i;
                    ++j;
                }
            }
            row = std::move(next);
        }
        if (row.empty()) continue;
        uint64_t inv = powmod(row[0].second, p - 2, p);
        for (auto& [col, val] : row) val = mulmod(val, inv, p);
        pivots.emplace(row[0].first, std::move(row));
        ++rank;
    }
    return rank;
}

// ---- fraction-free Baress elimination over Z (exact) ----

long long rank_bareiss(std::vector<SparseIntRow> rows) {
    long long rank = 0;
    Int prev = 1;
    std::vector<bool> done(rows.size(), false);
    while (true) {
        // pivot row: fewest nonzeros; pivot column: least populated, then smallest id
        int best_row = -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (done[i] || rows[i].empty()) continue;
            if (best_row < 0 || rows[i].size() < rows[best_row].size())
                best_row = static_cast<int>(i);
        }
        if (best_row < 0) break;
        std::map<int, int> col_count;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (done[i]) continue;
            for (const auto& [col, val] : rows[i]) ++col_count[col];
        }
        int piv_col = -1, piv_pop = 0;
        for (const auto& [col, val] : rows[best_row]) {
            int pop = col_count[col];
            if (piv_col < 0 || pop < piv_pop) {
                piv_col = col;
                piv_pop = pop;
            }
        }
        SparseIntRow piv_row = rows[best_row];
        done[best_row] = true;
        Int piv_val;
        for (const auto& [col, val] : piv_row)
            if (col == piv_col) piv_val = val;

        for (size_t i = 0; i < rows.size(); ++i) {
            if (done[i] || rows[i].empty()) continue;
            Int coeff = 0;
            for (const auto& [col, val] : rows[i])
                if (col == piv_col) {
                    coeff = val;
                    break;
                }
            // rows without the pivot column still scale by piv/prev: every
            // entry must stay the bordered minor for the next exact division
            SparseIntRow next;
            next.reserve(rows[i].size() + piv_row.size());
            size_t a = 0, b = 0;
            while (a < rows[i].size() || b < piv_row.size()) {
                int ca = a < rows[i].size() ? rows[i][a].first : INT32_MAX;
                int cb = b < piv_row.size() ? piv_row[b].first : INT32_MAX;
                int col = std::min(ca, cb);
                Int v = 0;
                if (ca == col) v += rows[i][a++].second * piv_val;
                if (cb == col) v -= piv_row[b++].second * coeff;
                if (col == piv_col) continue;  // eliminated exactly
                if (v != 0) {
                    Int q;
                    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                    next.push_back({col, std::move(q)});
                }
            }
            rows[i] = std::move(next);
        }
        prev = piv_val;
        ++rank;
    }
    return rank;
}

long long component_rank(std::vector<SparseIntRow>& rows) {
    static const uint64_t primes[] = {2147483629ULL, 2147483587ULL, 998244353ULL};
    long long nrows = static_cast<long long>(rows.size());
    for (uint64_t p : primes) {
        long long r = rank_mod_p(rows, p);
        if (r == nrows) return r;  // full row rank certified
    }
    return rank_bareiss(std::move(rows));
}

}  // namespace

long long rank_over_rationals(const std::vector<const MultiPoly*>& rows) {
    if (rows.empty()) return 0;
    for (const MultiPoly* p : rows)
        if (p->vars() != rows[0]->vars())
            throw std::domain_error("rank: variable count mismatch across rows");
    ComponentSplit split = split_components(rows);
    long long rank = 0;
    for (auto& comp : split.components) rank += component_rank(comp);
    return rank;
}

long long rank_over_rationals(const std::vector<MultiPoly>& rows) {
    std::vector<const MultiPoly*> ptrs;
    ptrs.reserve(rows.size());
    for (const MultiPoly& p : rows) ptrs.push_back(&p);
    return rank_over_rationals(ptrs);
}

SpanComparison compare_spans(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
    SpanComparison out;
    out.rank_a = rank_over_rationals(a);
    out.rank_b = rank_over_rationals(b);
    std::vector<const MultiPoly*> all;
    for (const MultiPoly& p : a) all.push_back(&p);
    for (const MultiPoly& p : b) all.push_back(&p);
    out.rank_union = rank_over_rationals(all);
    return out;
}

}  // namespace specht
