#pragma once

// Tableaux of all flavors: generic fillings, standard and semi-standard
// refinements, cocharge tableaux, the (de)standardization bijection,
// Schutzenberger evacuation, corner boxes and the n -> n+1 growth operators.

#include <string>
#include <vector>

#include "specht/combinat.hpp"

namespace specht {

struct Box {
    int row = 0;
    int col = 0;
    bool operator==(const Box& o) const { return row == o.row && col == o.col; }
    bool operator<(const Box& o) const { return row != o.row ? row < o.row : col < o.col; }
};

// A filling of a Ferrers diagram; only the shape is validated here.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    const PartitionShape& shape() const { return shape_; }
    int size() const { return shape_.n(); }
    int row_count() const { return shape_.length(); }
    int row_length(int r) const { return shape_.part(r); }
    int at(int r, int c) const { return rows_[r][c]; }
    int at(Box b) const { return rows_[b.row][b.col]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool rows_weakly_increase() const;
    bool rows_non_decreasing() const { return rows_weakly_increase(); }
    bool cols_strictly_increase() const;
    bool entries_non_negative() const;
    // entries are exactly 1..n, each once
    bool has_full_content() const;
    Box box_of(int value) const;

    Tableau with_entry(Box b, int value) const;
    int entry_sum() const;
    Content content() const;

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
    bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

    std::string to_string() const;

private:
    std::vector<std::vector<int>> rows_;
    PartitionShape shape_;
};

class SemiStandardTableau {
public:
    SemiStandardTableau() = default;
    explicit SemiStandardTableau(Tableau t);
    explicit SemiStandardTableau(std::vector<std::vector<int>> rows)
        : SemiStandardTableau(Tableau(std::move(rows))) {}

    const Tableau& tab() const { return t_; }
    const PartitionShape& shape() const { return t_.shape(); }
    int size() const { return t_.size(); }
    int at(int r, int c) const { return t_.at(r, c); }

    bool operator==(const SemiStandardTableau& o) const { return t_ == o.t_; }
    bool operator<(const SemiStandardTableau& o) const { return t_ < o.t_; }

    std::string to_string() const { return t_.to_string(); }

private:
    Tableau t_;
};

class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(Tableau t);
    explicit StandardTableau(std::vector<std::vector<int>> rows)
        : StandardTableau(Tableau(std::move(rows))) {}

    const Tableau& tab() const { return t_; }
    const PartitionShape& shape() const { return t_.shape(); }
    int size() const { return t_.size(); }
    int at(int r, int c) const { return t_.at(r, c); }
    Box box_of(int value) const { return t_.box_of(value); }

    bool operator==(const StandardTableau& o) const { return t_ == o.t_; }
    bool operator<(const StandardTableau& o) const { return t_ < o.t_; }

    std::string to_string() const { return t_.to_string(); }

private:
    Tableau t_;
};

// Semi-standard tableau satisfying the cocharge condition; checked eagerly.
class CochargeTableau : public SemiStandardTableau {
public:
    CochargeTableau() = default;
    explicit CochargeTableau(Tableau t);
    explicit CochargeTableau(const SemiStandardTableau& m);
};

std::vector<StandardTableau> enumerate_syt(const PartitionShape& shape);
std::vector<SemiStandardTableau> enumerate_ssyt_by_content(const PartitionShape& shape,
                                                           const Content& mu);
std::vector<SemiStandardTableau> enumerate_ssyt_by_sum(const PartitionShape& shape, int d);
std::vector<CochargeTableau> enumerate_cct(const PartitionShape& shape);
long long syt_count(const PartitionShape& shape);

// Dsi(S) = { i : i+1 sits in a strictly lower row than i }
std::vector<int> descent_set(const StandardTableau& s);
std::vector<int> dsi_c(const StandardTableau& s);
std::vector<int> asi_c(const StandardTableau& s);

// ct_J: entries j_h < p <= j_{h+1} of S become h; requires Dsi(S) contained in J
SemiStandardTableau destandardize(const StandardTableau& s, const BoundedMultiset& j);

struct Standardization {
    StandardTableau s;
    BoundedMultiset j;  // canonical: no copies of the bound value n
};
Standardization standardize(const SemiStandardTableau& m);

// {n-i | n > i in J} for the canonical J of M; element sum equals entry sum of M
BoundedMultiset dsp_c(const SemiStandardTableau& m);
int entry_sum(const SemiStandardTableau& m);

bool is_cocharge(const SemiStandardTableau& m);
// the leftmost-box characterization, kept as an independent route
bool is_cocharge_leftmost(const SemiStandardTableau& m);
CochargeTableau cocharge_of(const StandardTableau& s);
StandardTableau ct_inverse(const CochargeTableau& c);
// C^0: row i filled with i-1 throughout
CochargeTableau minimal_cocharge(const PartitionShape& shape);

StandardTableau evacuation(const StandardTableau& s);

std::vector<Box> external_corners(const PartitionShape& shape);
std::vector<Box> internal_corners(const PartitionShape& shape);
PartitionShape add_box(const PartitionShape& shape, Box v);
PartitionShape remove_box(const PartitionShape& shape, Box v);

// T + v: append the box v holding n+1 (T has content 1..n)
Tableau grow(const Tableau& t, Box v);
Tableau iota(const Tableau& t);
// S +~ v = ev(ev S + v); tilde_iota uses the first-row corner
StandardTableau tilde_add(const StandardTableau& s, Box v);
StandardTableau tilde_iota(const StandardTableau& s);
// 0 when v lies strictly below the row of n in ev S, else 1
int delta(const SemiStandardTableau& m, Box v);
SemiStandardTableau plus_one(const SemiStandardTableau& m);
SemiStandardTableau hat_add(const SemiStandardTableau& m, Box v);
SemiStandardTableau hat_iota(const SemiStandardTableau& m);

struct SsytDecomposition {
    bool plus_case = false;        // N = K_+ with K = inner
    SemiStandardTableau inner;     // K, or M
    Box v;                         // internal corner (hat case only)
    int delta_value = 1;           // delta_{M,v} (hat case only)
};
SsytDecomposition ssyt_decompose(const SemiStandardTableau& n_tab);

}  // namespace specht
