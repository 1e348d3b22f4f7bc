#include <udisc/sequence.hpp>

#include <cmath>
#include <cstdlib>
#include <string>

namespace udisc {

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::LenS: return "len_S";
    case Quantity::CountV: return "count_V";
    case Quantity::CountW: return "count_W";
    case Quantity::CountE: return "count_E";
    case Quantity::CountF: return "count_F";
  }
  return "?";
}

namespace {

struct SeedRow {
  long long x_minus1, x0, x1, x2;
  BigInt x3;
};

// Seed rows normalized by the common factor (s for s-centered spheres,
// t/2 for t-centered), in terms of h = T/2 and m = S*T/2 - 2.
SeedRow seed_row(const Params& p, Quantity q, CenterKind center) {
  const long long h = p.T / 2;
  const BigInt hh = BigInt(h) * h;
  const BigInt m = BigInt(p.S) * p.T / 2 - 2;
  if (center == CenterKind::SVertex) {
    switch (q) {
      case Quantity::LenS: return {-1, 0, 1, 2 * h, 2 * hh + m + 1};
      case Quantity::CountV: return {0, 0, 0, h, hh};
      case Quantity::CountW: return {-1, 0, 1, h, hh + m + 1};
      case Quantity::CountE: return {0, 0, 0, 2 * h, 2 * hh};
      case Quantity::CountF: return {-1, 0, 1, 0, m + 1};
    }
  } else {
    switch (q) {
      case Quantity::LenS:
        return {-2, 0, 2, p.S + p.T, 2 * hh + 3 * m + 4};
      case Quantity::CountV: return {-1, 0, 1, h, hh + m + 1};
      case Quantity::CountW:
        return {-1, 0, 1, p.S + h, hh + 2 * m + 3};
      case Quantity::CountE: return {-2, 0, 2, 2 * h, 2 * hh + 2 * m + 2};
      case Quantity::CountF: return {0, 0, 0, p.S, m + 2};
    }
  }
  std::abort();
}

void require_not_flat(const Params& p) {
  if (p.flat())
    throw FlatCase("sequences are not defined for the flat pair (6, 6)");
}

}  // namespace

InitialTerms initial_terms(const Params& p, Quantity q, CenterKind center) {
  require_not_flat(p);
  InitialTerms out;
  out.quantity = q;
  out.center = center;
  if (p.t % 2 != 0) {
    // s = t odd: only sphere lengths are integer sequences, through the
    // order-2 relation with P = t - 4.
    if (q != Quantity::LenS) {
      throw UnsupportedQuantity(
          "only sphere lengths are defined for odd t (s = t)");
    }
    const long long P = p.t - 4;
    out.scale = p.s;
    out.v1 = 1;
    out.v2 = P;
    out.x_minus1 = -out.scale;
    out.x0 = 0;
    out.x1 = out.scale;
    out.x2 = BigInt(out.scale) * P;
    out.x3 = BigInt(out.scale) * (BigInt(P) * P - 1);
    return out;
  }

  const SeedRow row = seed_row(p, q, center);
  out.scale = (center == CenterKind::SVertex) ? p.s : p.t / 2;
  out.v1 = row.x1;
  out.v2 = row.x2;
  out.x_minus1 = BigInt(row.x_minus1) * out.scale;
  out.x0 = BigInt(row.x0) * out.scale;
  out.x1 = BigInt(row.x1) * out.scale;
  out.x2 = BigInt(row.x2) * out.scale;
  out.x3 = row.x3 * out.scale;
  return out;
}

std::vector<BigInt> sphere_lengths_order2(const Params& p, int n_max) {
  require_not_flat(p);
  if (!p.equal_st())
    throw InvalidArgument("order-2 sphere lengths require s = t");
  if (n_max < 0) throw InvalidArgument("n_max must be nonnegative");

  const BigInt P = p.t - 4;
  std::vector<BigInt> xs;
  xs.reserve(static_cast<std::size_t>(n_max) + 1);
  xs.emplace_back(0);
  if (n_max >= 1) xs.emplace_back(p.s);
  for (int n = 2; n <= n_max; ++n)
    xs.push_back(P * xs[n - 1] - xs[n - 2]);
  return xs;
}

std::vector<BigInt> terms(const Params& p, Quantity q, CenterKind center,
                          int n_max) {
  require_not_flat(p);
  if (n_max < 0) throw InvalidArgument("n_max must be nonnegative");
  if (p.equal_st() && q == Quantity::LenS) {
    // Order-2 reduction; same integers as the order-4 route when t is even.
    return sphere_lengths_order2(p, n_max);
  }

  const InitialTerms seed = initial_terms(p, q, center);
  const BigInt c1 = p.T / 2;
  const BigInt c2 = static_cast<long long>(p.S) * p.T / 2 - 2;

  std::vector<BigInt> xs;
  xs.reserve(static_cast<std::size_t>(n_max) + 1);
  xs.push_back(seed.x0);
  xs.push_back(seed.x1);
  xs.push_back(seed.x2);
  // n = 3 uses the x_{-1} convention; it must land on the tabulated value.
  xs.push_back(c1 * seed.x2 + c2 * seed.x1 + c1 * seed.x0 - seed.x_minus1);
  if (xs[3] != seed.x3) {
    throw ContradictionError("recurrence and seed table disagree at n = 3 for " +
                             std::string(to_string(q)));
  }
  for (int n = 4; n <= n_max; ++n) {
    xs.push_back(c1 * xs[n - 1] + c2 * xs[n - 2] + c1 * xs[n - 3] - xs[n - 4]);
  }
  xs.resize(static_cast<std::size_t>(n_max) + 1);
  return xs;
}

ClosedForm characteristic_roots(const PRPair& pr) {
  if (!(pr.P > 2.0))
    throw InvalidArgument("characteristic roots require P > 2");

  ClosedForm cf;
  cf.regime = pr.regime;
  const double sq_p = std::sqrt(pr.P * pr.P - 4.0);
  cf.a = (pr.P + sq_p) / 2.0;
  cf.b = (pr.P - sq_p) / 2.0;

  switch (pr.regime) {
    case RootRegime::DistinctRealR_gt_2: {
      const double sq_r = std::sqrt(pr.R * pr.R - 4.0);
      cf.c = {(-pr.R + sq_r) / 2.0, 0.0};
      cf.d = {(-pr.R - sq_r) / 2.0, 0.0};
      break;
    }
    case RootRegime::DuplicateR_eq_2:
      cf.c = {-1.0, 0.0};
      cf.d = {-1.0, 0.0};
      break;
    case RootRegime::ComplexR_lt_2: {
      const double sq_r = std::sqrt(4.0 - pr.R * pr.R);
      cf.c = {-pr.R / 2.0, sq_r / 2.0};
      cf.d = std::conj(cf.c);
      break;
    }
  }
  return cf;
}

ClosedForm closed_form_coefficients(const PRPair& pr, long long v1,
                                    long long v2) {
  const bool admissible = (v1 > 0 && v2 >= 0) || (v1 == 0 && v2 > 0);
  if (!admissible)
    throw InvalidArgument("seed must satisfy v1 > 0, v2 >= 0 or v1 = 0, v2 > 0");

  ClosedForm cf = characteristic_roots(pr);
  const double sq_p = std::sqrt(pr.P * pr.P - 4.0);

  if (pr.regime == RootRegime::DuplicateR_eq_2) {
    cf.A = (v2 + 2.0 * v1) / ((pr.P + 2.0) * sq_p);
    cf.B = -cf.A;
    cf.C = 0.0;
    cf.D = -(pr.P * v1 - v2) / (pr.P + 2.0);
  } else {
    cf.A = (v2 + pr.R * v1) / ((pr.P + pr.R) * sq_p);
    cf.B = -cf.A;
    // sqrt(R^2 - 4) is imaginary below R = 2; C and D = -C come out as a
    // conjugate pair there, so the c,d contribution stays real.
    const std::complex<double> sq_r =
        (pr.regime == RootRegime::DistinctRealR_gt_2)
            ? std::complex<double>(std::sqrt(pr.R * pr.R - 4.0), 0.0)
            : std::complex<double>(0.0, std::sqrt(4.0 - pr.R * pr.R));
    cf.C = (pr.P * v1 - v2) / ((pr.P + pr.R) * sq_r);
    cf.D = -cf.C;
  }
  cf.coefficients_set = true;
  return cf;
}

ClosedForm closed_form(const Params& p, Quantity q, CenterKind center) {
  const InitialTerms seed = initial_terms(p, q, center);
  ClosedForm cf = closed_form_coefficients(derive_pr(p), seed.v1, seed.v2);
  cf.scale = seed.scale;
  return cf;
}

double closed_form_eval(const ClosedForm& cf, int n) {
  if (!cf.coefficients_set)
    throw InvalidArgument("closed form evaluated before coefficients were set");
  if (n < 0) throw InvalidArgument("n must be nonnegative");

  const double an = std::pow(cf.a, n);
  const double bn = std::pow(cf.b, n);

  if (cf.regime == RootRegime::DuplicateR_eq_2) {
    const double cn = (n % 2 == 0) ? 1.0 : -1.0;
    return cf.scale * (cf.A * an + cf.B * bn +
                       (cf.C.real() + n * cf.D.real()) * cn);
  }

  const std::complex<double> value = cf.A * an + cf.B * bn +
                                     cf.C * std::pow(cf.c, n) +
                                     cf.D * std::pow(cf.d, n);
  const double residue = std::abs(value.imag());
  if (residue > 1e-6 * std::max(1.0, std::abs(value.real()))) {
    throw NonRealResult("imaginary residue " + std::to_string(residue) +
                        " at n = " + std::to_string(n));
  }
  return cf.scale * value.real();
}

}  // namespace udisc
