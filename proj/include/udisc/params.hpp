#pragma once

#include <udisc/errors.hpp>

namespace udisc {

/// Which vertex the disc is grown around.
enum class CenterKind { SVertex, TVertex };

/// Classification of the quadratic factor x^2 + R x + 1 of the
/// characteristic equation, by R against 2.
enum class RootRegime { DistinctRealR_gt_2, DuplicateR_eq_2, ComplexR_lt_2 };

const char* to_string(CenterKind center);
const char* to_string(RootRegime regime);

/// Validated (s,t) pair with the derived shorthands S = s-4, T = t-4.
///
/// Valid means s >= 6, t >= 6 and (t even or s = t) -- the two regimes with
/// a unique tiling. The flat pair s = t = 6 validates here; rejecting it is
/// the job of the limit machinery (derive_pr).
struct Params {
  int s = 0;
  int t = 0;
  int S = 0;
  int T = 0;
  CenterKind center = CenterKind::SVertex;

  bool flat() const { return s == 6 && t == 6; }
  bool equal_st() const { return s == t; }
};

/// Throws RejectTooSmall or RejectOddT.
Params validate_params(int s, int t, CenterKind center);

/// Solution of P - R = T/2, P * R = S * T / 2 with P > 2.
///
/// The duplicate-root case R = 2 happens exactly when S * T = 2 * T + 8,
/// which is detected in integer arithmetic before any floating comparison.
/// For s = t the pair is P = t - 4, R = P - T/2, exactly.
struct PRPair {
  double P = 0.0;
  double R = 0.0;
  RootRegime regime = RootRegime::DistinctRealR_gt_2;
};

/// Throws FlatCase for s = t = 6.
PRPair derive_pr(const Params& params);

}  // namespace udisc
