#pragma once

#include <udisc/analysis.hpp>
#include <udisc/disc.hpp>

#include <string>
#include <vector>

namespace udisc {

struct CheckResult {
  std::string name;
  bool pass = true;
  double max_deviation = 0.0;  // 0 for exact integer identities
  std::string detail;          // context for the first failure
};

struct VerifyReport {
  Params params;
  int radius = 0;
  std::string regime;
  std::vector<CheckResult> checks;
  bool all_pass = true;
};

/// Generates the disc and runs every identity the structure must satisfy:
/// the per-sphere count couplings, the growth and s-vertex relations, the
/// Y-set count, Gauss-Bonnet and Pick at every complete layer, link
/// alternation, Euler characteristic, and the three-way agreement between
/// enumerated counts, the integer recurrence, and the closed form. The
/// flat pair (6,6) runs the structural checks plus its known exact
/// lengths/areas and skips the sequence machinery.
VerifyReport run_verification(const Params& params, int radius,
                              int radius_cap = kDefaultRadiusCap);

}  // namespace udisc
