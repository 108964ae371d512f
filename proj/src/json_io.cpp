#include "specht/json_io.hpp"

#include <stdexcept>

namespace specht {

using nlohmann::ordered_json;

ordered_json poly_to_json(const MultiPoly& f) {
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : f.terms()) {
        ordered_json t;
        t["coeff"] = c.get_str();
        t["exps"] = m.exps();
        terms.push_back(std::move(t));
    }
    ordered_json out;
    out["vars"] = f.vars();
    out["terms"] = std::move(terms);
    return out;
}

ordered_json label_to_json(const SummandLabel& label) {
    ordered_json out;
    out["lambda"] = label.lambda.parts();
    out["tableau"] = label.tab.rows();
    bool any_h = false;
    for (int h : label.hvec) any_h = any_h || h != 0;
    if (any_h) out["hvec"] = label.hvec;
    if (label.iset) out["I"] = label.iset->elements();
    return out;
}

namespace {

ordered_json checks_to_json(const std::vector<GroupCheck>& checks) {
    ordered_json out = ordered_json::array();
    for (const GroupCheck& g : checks) {
        ordered_json j;
        j["key"] = g.key;
        j["expected"] = g.expected;
        j["got"] = g.got;
        j["pass"] = g.pass();
        out.push_back(std::move(j));
    }
    return out;
}

ordered_json params_to_json(const std::vector<std::pair<std::string, std::string>>& params) {
    ordered_json out;
    for (const auto& [k, v] : params) out[k] = v;
    return out;
}

}  // namespace

ordered_json report_to_json(const DecompReport& rep) {
    ordered_json out;
    out["name"] = rep.name;
    out["params"] = params_to_json(rep.params);
    ordered_json summands = ordered_json::array();
    for (const SummandLabel& l : rep.summands) summands.push_back(label_to_json(l));
    out["summands"] = std::move(summands);
    out["expected_dim"] = rep.expected_dim;
    out["rank"] = rep.rank;
    if (!rep.checks.empty()) out["checks"] = checks_to_json(rep.checks);
    ordered_json mult;
    for (const auto& [k, v] : rep.multiplicities) mult[k] = v;
    out["multiplicities"] = std::move(mult);
    out["verdict"] = rep.pass ? "pass" : "fail";
    return out;
}

ordered_json report_to_json(const StabilityReport& rep) {
    ordered_json out;
    out["name"] = rep.op_name;
    out["params"] = params_to_json(rep.params);
    out["checks"] = checks_to_json(rep.checks);
    ordered_json corr = ordered_json::array();
    for (const Correspondence& c : rep.correspondence) {
        ordered_json j;
        j["source"] = c.source;
        j["targets"] = c.targets;
        corr.push_back(std::move(j));
    }
    out["correspondence"] = std::move(corr);
    out["verdict"] = rep.pass ? "pass" : "fail";
    return out;
}

namespace {

std::vector<int> parse_int_array(const nlohmann::json& j) {
    if (!j.is_array()) throw std::domain_error("expected a JSON integer array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::domain_error("expected integers");
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace

PartitionShape parse_partition(const std::string& text) {
    return PartitionShape(parse_int_array(nlohmann::json::parse(text)));
}

WeakComposition parse_composition(const std::string& text) {
    return WeakComposition(parse_int_array(nlohmann::json::parse(text)));
}

Tableau parse_tableau(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_array()) throw std::domain_error("expected a JSON array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j) rows.push_back(parse_int_array(r));
    return Tableau(std::move(rows));
}

BoundedMultiset parse_multiset(const std::string& text, int bound) {
    return BoundedMultiset(parse_int_array(nlohmann::json::parse(text)), bound);
}

}  // namespace specht
