#pragma once

// Whole-library verification driver: runs every check battery — parameter
// admissibility, delta-sequence agreements, symmetric-function identities,
// dimension counts, rational-step recursion, weights, the two-strand
// representation, the labelled Brauer algebra, and the semisimplicity
// criterion — and aggregates the results into named sections.

#include <cstdint>
#include <string>
#include <vector>

#include "cybmw/ground.hpp"

namespace cybmw {

struct VerifyConfig {
  int r = 2;
  int n = 3;
  bool randomized = false;  // false: symbolic (r <= 3); true: seeded rational samples
  int trials = 20;          // randomized mode only
  uint64_t seed = 42;
};

struct VerifySection {
  std::string name;
  std::vector<Check> checks;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<VerifySection> sections;
  bool pass = false;
};

// Deterministic for a fixed config (including seed).  Symbolic mode proves
// each identity over the fraction field in q, u1..ur; randomized mode tests
// them at `trials` nondegenerate rational sample points.
VerifyReport verify_all(const VerifyConfig& cfg);

// Admissibility report with the symbolic negative delta window clamped to
// indices >= -2 when r >= 3: below that the downward recursion's gcd-free
// expansion grows out of reach.  Specialized parameters use the full window.
AdmissibilityReport bounded_admissibility_report(const Params<RatFunc>& p, long window);
template <class K>
AdmissibilityReport bounded_admissibility_report(const Params<K>& p, long window) {
  return admissibility_report(p, window);
}

}  // namespace cybmw
