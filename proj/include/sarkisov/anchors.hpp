#pragma once

#include <string>
#include <vector>

#include "sarkisov/cases.hpp"

namespace sarkisov {

/// Runtime comparison of a computed result with its published value. A
/// failed check makes the CLI exit with status 1.
struct AnchorCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

using AnchorChecks = std::vector<AnchorCheck>;

bool all_passed(const AnchorChecks& checks);

AnchorChecks check_discriminants(const std::set<int>& discriminants);
AnchorChecks check_diamond(const std::vector<DiamondTriple>& diamond);
AnchorChecks check_conic_point(const CaseReport& report);
AnchorChecks check_conic_curve(const CaseReport& report);
AnchorChecks check_conic_conic(const CaseReport& report);
AnchorChecks check_birational(const CaseReport& report);
AnchorChecks check_lattice();
AnchorChecks check_classification(const std::vector<LinkRow>& rows);

}  // namespace sarkisov
