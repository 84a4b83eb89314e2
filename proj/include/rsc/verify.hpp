#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rsc {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool allPassed() const;
};

/// Exhaustive small-case checks (n <= 7) of the cohomology, detector and
/// process code, plus the non-monotone three-step fixture.
VerifyReport runVerifySuite(uint64_t seed = 1);

}  // namespace rsc
