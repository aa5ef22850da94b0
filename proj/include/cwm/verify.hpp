#pragma once

#include <string>
#include <vector>

#include "cwm/complex.hpp"

namespace cwm {

enum class VerifyLevel { fast, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first violation when failed
};

/// Runs the invariant suites on a built complex in a fixed order and stops
/// at the first failing check.
///  fast: boundary-squared, diamond, facet-count, euler-betti, vertex-figures,
///        witness-round-trip.
///  full: fast plus incidence-by-refinement, face-figures, meet, realization,
///        surgery, json-round-trip.
std::vector<CheckResult> run_checks(const CellComplex& k, VerifyLevel level);

}  // namespace cwm
