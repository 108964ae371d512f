#include "specht/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specht {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_)
        if (x < 0) throw std::domain_error("monomial exponents must be non-negative");
}

int Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

Monomial Monomial::times(const Monomial& o) const {
    if (vars() != o.vars()) throw std::domain_error("monomial variable count mismatch");
    std::vector<int> e = e_;
    for (int i = 0; i < vars(); ++i) e[i] += o.e_[i];
    return Monomial(std::move(e));
}

bool Monomial::divisible_by(const Monomial& o) const {
    if (vars() != o.vars()) return false;
    for (int i = 0; i < vars(); ++i)
        if (e_[i] < o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    if (!divisible_by(o)) throw std::domain_error("monomial division not exact");
    std::vector<int> e = e_;
    for (int i = 0; i < vars(); ++i) e[i] -= o.e_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::permuted(const std::vector<int>& sigma) const {
    std::vector<int> e(e_.size());
    for (int i = 0; i < vars(); ++i) e[sigma[i]] = e_[i];
    return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < vars(); ++i) {
        if (e_[i] == 0) continue;
        if (!first) os << '*';
        os << 'x' << (i + 1);
        if (e_[i] > 1) os << '^' << e_[i];
        first = false;
    }
    if (first) os << '1';
    return os.str();
}

MultiPoly MultiPoly::one(int nvars) { return from_monomial(Monomial::unit(nvars)); }

MultiPoly MultiPoly::from_monomial(const Monomial& m, const Rat& c) {
    MultiPoly p(m.vars());
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
    for (const Term& t : terms)
        if (t.first.vars() != nvars) throw std::domain_error("term variable count mismatch");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    MultiPoly p(nvars);
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.first.degree());
    return d;
}

bool MultiPoly::is_homogeneous() const {
    for (const Term& t : terms_)
        if (t.first.degree() != terms_[0].first.degree()) return false;
    return true;
}

bool MultiPoly::has_integer_coefficients() const {
    for (const Term& t : terms_)
        if (t.second.get_den() != 1) return false;
    return true;
}

Rat MultiPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (n_ != o.n_) throw std::domain_error("polynomial variable count mismatch");
    MultiPoly out(n_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Rat c = terms_[i].second + o.terms_[j].second;
            if (c != 0) out.terms_.push_back({terms_[i].first, c});
            ++i;
            ++j;
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(n_);
    out.terms_ = terms_;
    for (Term& t : out.terms_) t.second = -t.second;
    return out;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
    if (c == 0) return MultiPoly(n_);
    MultiPoly out(n_);
    out.terms_ = terms_;
    for (Term& t : out.terms_) t.second *= c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    *this = *this + o;
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (n_ != o.n_) throw std::domain_error("polynomial variable count mismatch");
    std::map<Monomial, Rat> acc;
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) acc[a.first.times(b.first)] += a.second * b.second;
    MultiPoly out(n_);
    for (auto& [m, c] : acc)
        if (c != 0) out.terms_.push_back({m, c});
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    // leading (lex-largest) term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (it == terms_.rbegin()) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool constant = m.degree() == 0;
        if (a != 1 || constant) {
            os << a.get_str();
            if (!constant) os << '*';
        }
        if (!constant) os << m.to_string();
    }
    return os.str();
}

MultiPoly elementary_symmetric(int r, int n) {
    if (r < 0 || r > n) throw std::domain_error("elementary_symmetric: need 0 <= r <= n");
    std::vector<MultiPoly::Term> terms;
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    if (r == 0) return MultiPoly::one(n);
    while (true) {
        std::vector<int> e(n, 0);
        for (int i : idx) e[i] = 1;
        terms.push_back({Monomial(std::move(e)), Rat(1)});
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return MultiPoly::from_terms(n, std::move(terms));
}

Monomial monomial_from_pair(const Tableau& h, const Tableau& t) {
    if (!(h.shape() == t.shape())) throw std::domain_error("monomial_from_pair: shape mismatch");
    if (!t.has_full_content()) throw std::domain_error("monomial_from_pair: T needs content 1..n");
    int n = t.size();
    std::vector<int> e(n, 0);
    for (int r = 0; r < t.row_count(); ++r)
        for (int c = 0; c < t.row_length(r); ++c) e[t.at(r, c) - 1] = h.at(r, c);
    return Monomial(std::move(e));
}

Monomial monomial_from_pair(const SemiStandardTableau& m, const Tableau& t) {
    return monomial_from_pair(m.tab(), t);
}

std::vector<int> column_degree(const Monomial& y, const Tableau& t) {
    if (!t.has_full_content()) throw std::domain_error("column_degree: T needs content 1..n");
    if (y.vars() != t.size()) throw std::domain_error("column_degree: variable count mismatch");
    std::vector<int> deg(t.shape().first_part(), 0);
    for (int r = 0; r < t.row_count(); ++r)
        for (int c = 0; c < t.row_length(r); ++c) deg[c] += y.exp(t.at(r, c) - 1);
    return deg;
}

int cmp_column_degree(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::domain_error("cmp_column_degree: length mismatch");
    // larger at the last differing slot wins
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

int cmp_t(const Monomial& y, const Monomial& z, const Tableau& t) {
    return cmp_column_degree(column_degree(y, t), column_degree(z, t));
}

MultiPoly permute(const MultiPoly& f, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != f.vars())
        throw std::domain_error("permute: permutation size mismatch");
    std::vector<MultiPoly::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& [m, c] : f.terms()) terms.push_back({m.permuted(sigma), c});
    return MultiPoly::from_terms(f.vars(), std::move(terms));
}

MultiPoly substitute_last_zero(const MultiPoly& f) {
    if (f.vars() == 0) throw std::domain_error("substitute_last_zero: no variables");
    std::vector<MultiPoly::Term> terms;
    for (const auto& [m, c] : f.terms()) {
        if (m.exp(f.vars() - 1) > 0) continue;
        std::vector<int> e(m.exps().begin(), m.exps().end() - 1);
        terms.push_back({Monomial(std::move(e)), c});
    }
    return MultiPoly::from_terms(f.vars() - 1, std::move(terms));
}

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g) {
    if (f.vars() != g.vars()) throw std::domain_error("divide_exact: variable count mismatch");
    if (g.is_zero()) throw std::domain_error("divide_exact: division by zero");
    MultiPoly rem = f;
    MultiPoly quot(f.vars());
    const auto& glead = g.terms().back();
    while (!rem.is_zero()) {
        const auto& rlead = rem.terms().back();
        if (!rlead.first.divisible_by(glead.first))
            throw std::domain_error("divide_exact: inexact division");
        Monomial qm = rlead.first.divide(glead.first);
        Rat qc = rlead.second / glead.second;
        MultiPoly piece = MultiPoly::from_monomial(qm, qc);
        quot += piece;
        rem = rem - piece * g;
    }
    return quot;
}

MultiPoly pad_vars(const MultiPoly& f, int new_n) {
    if (new_n < f.vars()) throw std::domain_error("pad_vars: cannot shrink");
    std::vector<MultiPoly::Term> terms;
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e = m.exps();
        e.resize(new_n, 0);
        terms.push_back({Monomial(std::move(e)), c});
    }
    return MultiPoly::from_terms(new_n, std::move(terms));
}

int sign_of_permutation(const std::vector<int>& sigma) {
    int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(n, false);
    int sign = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = sigma[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace specht
