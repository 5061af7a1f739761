#include "kdiff/audit.hpp"

#include <iomanip>
#include <sstream>

#include "kdiff/classes.hpp"

namespace kdiff {

const AuditEntry* AuditReport::find(Family f, int i, int s) const {
  for (const auto& e : entries)
    if (e.spec.family == f && e.spec.i == i && e.spec.s == s) return &e;
  return nullptr;
}

AuditReport audit(int g) {
  AuditReport report;
  report.g = g;
  const DivisorClass q = qg_class(g);
  for (const auto& spec : valid_specs(g)) {
    AuditEntry entry{spec, pair(curve(spec), q), oracle_dot_Qg(spec), false};
    entry.match = entry.pairing == Rational(entry.oracle);
    (entry.match ? report.matches : report.mismatches) += 1;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

nlohmann::ordered_json to_json(const AuditReport& report) {
  nlohmann::ordered_json j;
  j["g"] = report.g;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json row;
    row["family"] = std::string(1, family_letter(e.spec.family));
    row["i"] = e.spec.i;
    row["s"] = e.spec.s;
    row["pairing"] = to_string(e.pairing);
    row["oracle"] = to_string(e.oracle);
    row["match"] = e.match;
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  j["matches"] = report.matches;
  j["mismatches"] = report.mismatches;
  return j;
}

std::string format_table(const AuditReport& report) {
  std::ostringstream os;
  os << "audit g=" << report.g << "\n";
  os << std::left << std::setw(10) << "curve" << std::right << std::setw(14) << "pairing" << std::setw(14) << "oracle"
     << "  status\n";
  for (const auto& e : report.entries)
    os << std::left << std::setw(10) << to_string(e.spec) << std::right << std::setw(14) << to_string(e.pairing)
       << std::setw(14) << to_string(e.oracle) << "  " << (e.match ? "ok" : "MISMATCH") << "\n";
  os << report.matches << " match, " << report.mismatches << " mismatch\n";
  return os.str();
}

}  // namespace kdiff
