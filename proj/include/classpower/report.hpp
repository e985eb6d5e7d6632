#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "classpower/scan.hpp"

namespace classpower {

namespace detail {

inline nlohmann::ordered_json verdict_to_json(const CharVerdict& v) {
  nlohmann::ordered_json j;
  j["holds"] = v.holds;
  if (v.witness_row) j["witness_row"] = *v.witness_row;
  j["max_residual"] = v.max_residual;
  if (v.m1) j["m1"] = *v.m1;
  if (v.m2) j["m2"] = *v.m2;
  if (!v.mass_ok) j["mass_ok"] = false;
  if (v.summed_witness_row) j["summed_witness_row"] = *v.summed_witness_row;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const CriterionReport& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["class_id"] = r.class_id;
  j["class_size"] = r.class_size;
  j["element_order"] = r.element_order;
  j["n"] = r.n;
  j["oracle_available"] = r.oracle_available;
  if (r.oracle_available) {
    j["shape"] = shape_name(r.shape);
    j["support"] = r.support;
    j["companion"] = r.companion;
    nlohmann::ordered_json ms = nlohmann::ordered_json::object();
    for (const auto& [cls, mult] : r.multiset) ms[std::to_string(cls)] = mult;
    j["power_multiset"] = std::move(ms);
  }
  nlohmann::ordered_json crit;
  crit["single_class"] = detail::verdict_to_json(r.single_class);
  nlohmann::ordered_json tpc = nlohmann::ordered_json::array();
  for (const auto& [d, v] : r.trivial_plus) {
    nlohmann::ordered_json e = detail::verdict_to_json(v);
    e["companion"] = d;
    tpc.push_back(std::move(e));
  }
  crit["trivial_plus_class"] = std::move(tpc);
  crit["class_plus_inverse"] = detail::verdict_to_json(r.class_plus_inverse);
  j["char_criteria"] = std::move(crit);
  if (r.three_route) {
    j["three_route"] = {{"support", r.three_route->support_route},
                        {"normal_set", r.three_route->normal_set_route},
                        {"character", r.three_route->character_route},
                        {"all_equal", r.three_route->all_equal}};
  }
  nlohmann::ordered_json cons = nlohmann::ordered_json::array();
  for (const Conclusion& c : r.conclusions) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["holds"] = c.holds;
    if (!c.details.empty()) e["details"] = c.details;
    cons.push_back(std::move(e));
  }
  j["conclusions"] = std::move(cons);
  j["agreement"] = r.agreement;
  return j;
}

inline nlohmann::ordered_json reports_to_json(const std::vector<CriterionReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CriterionReport& r : reports) arr.push_back(report_to_json(r));
  return arr;
}

inline std::string reports_to_csv(const std::vector<CriterionReport>& reports) {
  std::ostringstream out;
  out << "group,class,n,shape,agreement,conclusions_passed,conclusions_total\n";
  for (const CriterionReport& r : reports) {
    std::size_t passed = 0;
    for (const Conclusion& c : r.conclusions) passed += c.holds ? 1 : 0;
    out << r.group << ',' << r.class_id << ',' << r.n << ','
        << (r.oracle_available ? shape_name(r.shape) : "Unavailable") << ','
        << (r.agreement ? "true" : "false") << ',' << passed << ',' << r.conclusions.size()
        << "\n";
  }
  return out.str();
}

/// Human summary: one line per hit plus every disagreement or violated
/// conclusion, with a closing tally.
inline std::string reports_to_text(const std::vector<CriterionReport>& reports) {
  std::ostringstream out;
  std::size_t hits = 0, findings = 0;
  for (const CriterionReport& r : reports) {
    const bool hit = r.oracle_available ? r.is_hit() : table_scan_hit(r);
    const bool finding = r.is_finding();
    if (!hit && !finding) continue;
    if (hit) ++hits;
    if (finding) ++findings;
    std::size_t passed = 0;
    for (const Conclusion& c : r.conclusions) passed += c.holds ? 1 : 0;
    out << r.group << " class " << r.class_id << " (|K|=" << r.class_size
        << ", o=" << r.element_order << ") n=" << r.n << ": "
        << (r.oracle_available ? shape_name(r.shape) : "table-only hit");
    if (!r.conclusions.empty()) out << "  conclusions " << passed << "/" << r.conclusions.size();
    if (!r.agreement) out << "  DISAGREEMENT";
    for (const Conclusion& c : r.conclusions)
      if (!c.holds) out << "  FAILED:" << c.name;
    out << "\n";
  }
  out << reports.size() << " (class, n) pairs scanned, " << hits << " hits, " << findings
      << " findings\n";
  return out.str();
}

}  // namespace classpower
