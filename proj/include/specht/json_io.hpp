#pragma once

// JSON envelopes for the CLI: deterministic (sorted keys, fixed term order)
// so identical invocations are byte-identical.

#include <json.hpp>

#include "specht/reps.hpp"
#include "specht/stability.hpp"

namespace specht {

nlohmann::ordered_json poly_to_json(const MultiPoly& f);
nlohmann::ordered_json label_to_json(const SummandLabel& label);
nlohmann::ordered_json report_to_json(const DecompReport& rep);
nlohmann::ordered_json report_to_json(const StabilityReport& rep);

// JSON literals from the command line
PartitionShape parse_partition(const std::string& text);
WeakComposition parse_composition(const std::string& text);
Tableau parse_tableau(const std::string& text);
BoundedMultiset parse_multiset(const std::string& text, int bound);

}  // namespace specht
