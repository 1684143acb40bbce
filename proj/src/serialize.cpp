#include "indyn/serialize.hpp"

namespace indyn {

Json json_of(const FiniteSubset& s) { return Json(s.elems); }

Json json_of(const VietorisBasisElement& v) { return Json(v.opens); }

Json json_of(const AtomicMeasure& mu) {
    Json atoms = Json::array();
    for (const auto& [i, w] : mu.atoms()) atoms.push_back(Json::array({i, w.str()}));
    return Json{{"atoms", atoms}};
}

Json json_of(const TimeSet& s) {
    return Json{{"window", s.window}, {"members", s.members}};
}

Json json_of(const ResidueTimeSet& s) {
    return Json{{"modulus", s.modulus},
                {"residues", s.residues},
                {"prefix_len", s.prefix_len},
                {"prefix_exceptions", s.prefix_members}};
}

Json json_of(const Joining& j) { return Json(j.cells); }

Json json_of(const ClassificationReport& r) {
    Json out;
    out["transitive"] = r.transitive;
    if (r.transitive_point) out["transitive_point"] = *r.transitive_point;
    if (!r.proper_invariant_set.empty()) out["proper_invariant_set"] = r.proper_invariant_set;
    out["totally_transitive"] = r.totally_transitive;
    out["totally_checked_up_to"] = r.totally_checked_up_to;
    if (r.first_failing_power) out["first_failing_power"] = *r.first_failing_power;
    out["pointwise_periodic"] = r.pointwise_periodic;
    out["periodic"] = r.periodic;
    out["period"] = r.period;
    out["p_system"] = r.p_system;
    out["m_system"] = r.m_system;
    out["e_system"] = r.e_system;
    if (r.full_support_invariant) out["full_support_invariant"] = json_of(*r.full_support_invariant);
    out["qualifier"] = "exact";  // finite systems admit no at-resolution hedging
    return out;
}

std::string csv_of(const TimeSet& s) {
    std::string out;
    for (std::uint64_t m : s.members) {
        out += std::to_string(m);
        out += '\n';
    }
    return out;
}

}  // namespace indyn
