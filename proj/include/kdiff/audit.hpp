#pragma once

#include <string>
#include <vector>

#include "kdiff/curves.hpp"

namespace kdiff {

struct AuditEntry {
  TestCurveSpec spec;
  Rational pairing;
  BigInt oracle;
  bool match = false;
};

struct AuditReport {
  int g = 0;
  std::vector<AuditEntry> entries;  // valid_specs(g) order
  int matches = 0;
  int mismatches = 0;

  bool all_match() const { return mismatches == 0; }
  const AuditEntry* find(Family f, int i, int s) const;
};

/// Pairs every valid test curve at genus g with qg_class(g) and compares with
/// the enumerative value. Mismatches are recorded, never thrown.
AuditReport audit(int g);

nlohmann::ordered_json to_json(const AuditReport& report);
std::string format_table(const AuditReport& report);

}  // namespace kdiff
