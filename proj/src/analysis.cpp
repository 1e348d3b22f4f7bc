#include <udisc/analysis.hpp>

#include <cmath>
#include <string>

namespace udisc {

namespace {

double to_double(const BigInt& x) { return x.convert_to<double>(); }

void check_agreement(double lhs, double rhs, const char* what) {
  if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(lhs))) {
    throw ContradictionError(std::string(what) +
                             " formulas disagree: " + std::to_string(lhs) +
                             " vs " + std::to_string(rhs));
  }
}

double discriminant_root(const Params& p) {
  return std::sqrt(static_cast<double>(p.T) * p.T + 8.0 * p.S * p.T);
}

}  // namespace

std::vector<BigInt> area_series(const Params& p, CenterKind center,
                                int n_max) {
  const std::vector<BigInt> lens = terms(p, Quantity::LenS, center, n_max);
  std::vector<BigInt> areas;
  areas.reserve(lens.size());
  BigInt prefix = 0;
  for (const BigInt& len : lens) {
    prefix += len;
    areas.push_back(2 * prefix - len);
  }
  return areas;
}

double ratio_limit(const Params& p) {
  const PRPair pr = derive_pr(p);
  const double via_p = std::sqrt((pr.P + 2.0) / (pr.P - 2.0));
  const double root = discriminant_root(p);
  const double via_st = std::sqrt((p.T + 8.0 + root) / (p.T - 8.0 + root));
  check_agreement(via_p, via_st, "area/length limit");
  return via_p;
}

RatioSeries ratio_series(const Params& p, CenterKind center, int n_max,
                         std::optional<double> tolerance) {
  if (n_max < 1) throw InvalidArgument("ratio series needs n_max >= 1");

  RatioSeries rs;
  rs.params = p;
  rs.center = center;
  rs.limit = ratio_limit(p);

  const std::vector<BigInt> lens = terms(p, Quantity::LenS, center, n_max);
  rs.values.reserve(n_max);
  BigInt prefix = lens[0];
  for (int n = 1; n <= n_max; ++n) {
    prefix += lens[n];
    const BigInt area = 2 * prefix - lens[n];
    rs.values.push_back(to_double(area) / to_double(lens[n]));
  }

  if (tolerance && std::abs(rs.values.back() - rs.limit) > *tolerance) {
    throw ContradictionError(
        "ratio at n = " + std::to_string(n_max) + " is " +
        std::to_string(rs.values.back()) + ", not within " +
        std::to_string(*tolerance) + " of " + std::to_string(rs.limit));
  }
  return rs;
}

std::vector<double> avg_curvature_series(const Params& p, int n_max) {
  if (n_max < 1) throw InvalidArgument("curvature series needs n_max >= 1");

  const CenterKind center = CenterKind::SVertex;
  const std::vector<BigInt> vs = terms(p, Quantity::CountV, center, n_max - 1);
  const std::vector<BigInt> ws = terms(p, Quantity::CountW, center, n_max - 1);
  const std::vector<BigInt> ls = terms(p, Quantity::LenS, center, n_max - 1);

  std::vector<double> out;
  out.reserve(n_max);
  BigInt sum_v = 0, sum_w = 0, sum_len = 0;
  for (int n = 1; n <= n_max; ++n) {
    sum_v += vs[n - 1];
    sum_w += ws[n - 1];
    sum_len += ls[n - 1];
    const BigInt curvature =
        BigInt(6 - p.s) * (1 + sum_v) + BigInt(6 - p.t) * sum_w;
    out.push_back(to_double(curvature) / to_double(1 + sum_len));
  }
  return out;
}

double avg_curvature_limit(const Params& p) {
  const PRPair pr = derive_pr(p);
  const double via_p = 2.0 - pr.P;
  const double via_st = 2.0 - (p.T + discriminant_root(p)) / 4.0;
  check_agreement(via_p, via_st, "average curvature limit");
  return via_p;
}

HyperbolaCurve hyperbola_curve(HyperbolaFamily fixed, double value,
                               double S_min, double S_max, double step) {
  if (fixed == HyperbolaFamily::FixedP && !(value > 2.0)) {
    throw InvalidArgument("fixed-P curves need P > 2");
  }
  if (fixed == HyperbolaFamily::FixedR && !(value > 1.0)) {
    throw InvalidArgument("fixed-R curves need R > 1");
  }
  if (!(step > 0.0) || S_max < S_min) {
    throw EmptyRange("empty sampling range");
  }

  HyperbolaCurve curve;
  curve.fixed = fixed;
  curve.value = value;
  for (double S = S_min; S <= S_max + 1e-9; S += step) {
    double T;
    if (fixed == HyperbolaFamily::FixedP) {
      T = 2.0 * value * value / (S + value);
    } else {
      // Eliminate P = R + T/2 from P R = S T / 2.
      if (S <= value + 1e-9) continue;
      T = 2.0 * value * value / (S - value);
    }
    if (T > 0.0) curve.samples.emplace_back(S, T);
  }
  if (curve.samples.empty()) throw EmptyRange("no samples in range");
  return curve;
}

}  // namespace udisc
