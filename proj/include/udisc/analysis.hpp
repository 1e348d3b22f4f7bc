#pragma once

#include <udisc/sequence.hpp>

#include <optional>
#include <utility>

namespace udisc {

/// Sphere areas A_0..A_{n_max}: A_n = 2 * sum_{k<=n} |S_k| - |S_n|, in
/// exact integers on top of the sphere-length sequence.
std::vector<BigInt> area_series(const Params& params, CenterKind center,
                                int n_max);

/// Area-over-length values and the limit they approach. The sequence
/// oscillates around the limit rather than increasing monotonically.
struct RatioSeries {
  Params params;
  CenterKind center = CenterKind::SVertex;
  std::vector<double> values;  // values[i] = A_{i+1} / |S_{i+1}|
  double limit = 0.0;

  double at(int n) const { return values.at(static_cast<std::size_t>(n) - 1); }
};

/// A_n / |S_n| for n = 1..n_max from exact integers, with the limit
/// sqrt((P+2)/(P-2)) attached. When a tolerance is given the final value
/// must already be that close to the limit (ContradictionError otherwise).
RatioSeries ratio_series(const Params& params, CenterKind center, int n_max,
                         std::optional<double> tolerance = std::nullopt);

/// sqrt((P+2)/(P-2)); the equivalent (S,T) expression
/// sqrt((T+8+sqrt(T^2+8ST)) / (T-8+sqrt(T^2+8ST))) is computed alongside
/// and must agree to 1e-12.
double ratio_limit(const Params& params);

/// Average Gaussian curvature per interior vertex of the radius-n sphere,
/// n = 1..n_max, for spheres centered at an s-vertex:
///   [(6-s)(1 + sum V_k) + (6-t) sum W_k] / (1 + sum |S_k|),  k < n.
/// Sums are exact; only the final division is floating point.
std::vector<double> avg_curvature_series(const Params& params, int n_max);

/// 2 - P, cross-checked against 2 - (T + sqrt(T^2+8ST))/4 to 1e-12.
double avg_curvature_limit(const Params& params);

enum class HyperbolaFamily { FixedP, FixedR };

/// Sampled (S, T) pairs of one parameter curve: T (S + P) = 2 P^2 for
/// fixed P, and T = 2 R^2 / (S - R) for fixed R.
struct HyperbolaCurve {
  HyperbolaFamily fixed = HyperbolaFamily::FixedP;
  double value = 0.0;
  std::vector<std::pair<double, double>> samples;
};

/// Requires value > 2 for FixedP, value > 1 for FixedR (InvalidArgument),
/// and a nonempty range with positive step (EmptyRange).
HyperbolaCurve hyperbola_curve(HyperbolaFamily fixed, double value,
                               double S_min, double S_max,
                               double step = 0.25);

}  // namespace udisc
