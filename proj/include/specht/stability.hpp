#pragma once

// The n -> n+1 operators Ext, LE and Ind on spanned representations, plus
// the span-equality verifications of the induction/stability statements.

#include <optional>
#include <string>
#include <vector>

#include "specht/reps.hpp"

namespace specht {

struct Correspondence {
    std::string source;
    std::vector<std::string> targets;
};

struct StabilityReport {
    std::string op_name;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<GroupCheck> checks;
    std::vector<Correspondence> correspondence;
    bool pass = false;

    void finish() {
        pass = true;
        for (const GroupCheck& g : checks) pass = pass && g.pass();
    }
};

// Ext: the delta = 1 corners; LE: the delta = 0 corners; Ind_t = e_t Ext + LE.
// On V_C^h the symmetric multiplier is stripped, the operator applied to V_C,
// and the multiplier re-applied over n+1 variables.
std::vector<SpannedRep> ext_of(const SpannedRep& rep);
std::vector<SpannedRep> le_of(const SpannedRep& rep);
std::vector<SpannedRep> ind_of(int t, const SpannedRep& rep);

std::vector<SpannedRep> ext_of(const std::vector<SpannedRep>& reps);
std::vector<SpannedRep> le_of(const std::vector<SpannedRep>& reps);
std::vector<SpannedRep> ind_of(int t, const std::vector<SpannedRep>& reps);

// F_{hat-iota M, iota T} = eps_{iota T} p_{M,T} / s and its x_{n+1} = 0 slice
bool verify_forstab(const SemiStandardTableau& m, const Tableau& t);

// the V_M summand list of Q[x_n]_d (empty for d < 0)
std::vector<SpannedRep> qxnd_summands(int n, int d);
std::vector<SpannedRep> qxnd_summands_by_content(int n, const Content& mu);

StabilityReport verify_mapsmulti(int n, const BoundedMultiset& iset);
// non-homogeneous analogue: remainder-copy multipliers shift e_{r_i} to
// e_{r_i+1} across the induction; the n-in-I branch is not limit-compatible
// and is only checked through the bar insertion (part i)
StabilityReport verify_mapsmulti_nonhom(int n, const BoundedMultiset& iset);
StabilityReport verify_homdecom(int n, int k, int s);
StabilityReport verify_opersvm(int n, int d,
                               const std::optional<Content>& eta = std::nullopt);
StabilityReport verify_extvmlim(int n, int d);
StabilityReport verify_inci(int n, const BoundedMultiset& iset, int ell);

}  // namespace specht
