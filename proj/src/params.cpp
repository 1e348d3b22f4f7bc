#include <udisc/params.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace udisc {

const char* to_string(CenterKind center) {
  return center == CenterKind::SVertex ? "s" : "t";
}

const char* to_string(RootRegime regime) {
  switch (regime) {
    case RootRegime::DistinctRealR_gt_2: return "distinct real roots";
    case RootRegime::DuplicateR_eq_2: return "duplicate root";
    case RootRegime::ComplexR_lt_2: return "complex roots";
  }
  return "?";
}

Params validate_params(int s, int t, CenterKind center) {
  if (s < 6 || t < 6) {
    throw RejectTooSmall("s and t must both be at least 6, got (" +
                         std::to_string(s) + ", " + std::to_string(t) + ")");
  }
  if (t % 2 != 0 && s != t) {
    throw RejectOddT();
  }
  return Params{s, t, s - 4, t - 4, center};
}

namespace {
constexpr double kRegimeTol = 1e-12;
}

PRPair derive_pr(const Params& p) {
  if (p.flat()) {
    throw FlatCase("s = t = 6 is the flat tiling: P = 2 and sqrt(P^2 - 4) = 0");
  }

  PRPair out;
  // R = 2 exactly iff S*T = 2T + 8; resolve it in integers so the duplicate
  // root never suffers cancellation in sqrt(R^2 - 4).
  if (std::int64_t{p.S} * p.T == 2 * std::int64_t{p.T} + 8) {
    out.R = 2.0;
    out.P = 2.0 + 0.5 * p.T;
    out.regime = RootRegime::DuplicateR_eq_2;
    return out;
  }

  if (p.equal_st()) {
    out.P = static_cast<double>(p.t - 4);
  } else {
    const double disc = static_cast<double>(p.T) * p.T + 8.0 * p.S * p.T;
    out.P = (p.T + std::sqrt(disc)) / 4.0;
  }
  out.R = out.P - 0.5 * p.T;

  if (out.R > 2.0 + kRegimeTol) {
    out.regime = RootRegime::DistinctRealR_gt_2;
  } else if (out.R < 2.0 - kRegimeTol) {
    out.regime = RootRegime::ComplexR_lt_2;
  } else {
    out.R = 2.0;
    out.regime = RootRegime::DuplicateR_eq_2;
  }
  return out;
}

}  // namespace udisc
