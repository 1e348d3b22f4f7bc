#pragma once

#include <udisc/params.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <complex>
#include <vector>

namespace udisc {

/// Exact integers: sphere counts grow like a^n and serve as oracles, so the
/// recurrences run in arbitrary precision. Floating point enters only
/// through roots and closed forms.
using BigInt = boost::multiprecision::cpp_int;

/// The five per-sphere counts that satisfy the same order-4 recurrence:
/// edges on the sphere, s-vertices, t-vertices, (s,t)-edges, (t,t)-edges.
enum class Quantity { LenS, CountV, CountW, CountE, CountF };

inline constexpr std::array<Quantity, 5> kAllQuantities = {
    Quantity::LenS, Quantity::CountV, Quantity::CountW,
    Quantity::CountE, Quantity::CountF};

const char* to_string(Quantity q);

/// One seed row: exact initial terms x_{-1}..x_3 plus the normalized pair
/// (v1, v2) = (x_1, x_2) / scale, where scale is the common factor s
/// (s-centered spheres) or t/2 (t-centered).
///
/// The x_{-1} column exists so that the recurrence already produces x_3;
/// public sequences start at x_0.
struct InitialTerms {
  Quantity quantity = Quantity::LenS;
  CenterKind center = CenterKind::SVertex;
  BigInt x_minus1, x0, x1, x2, x3;
  long long v1 = 0;
  long long v2 = 0;
  long long scale = 1;
};

/// Seed row for (params, quantity, center). Throws FlatCase; throws
/// UnsupportedQuantity for odd t (s = t), where only sphere lengths have
/// integer seeds.
InitialTerms initial_terms(const Params& params, Quantity quantity,
                           CenterKind center);

/// x_0..x_{n_max} in exact integers:
///   x_n = (T/2) x_{n-1} + (S*T/2 - 2) x_{n-2} + (T/2) x_{n-3} - x_{n-4}.
/// T even guarantees integer coefficients. Sphere lengths for s = t reduce
/// to the order-2 relation (see sphere_lengths_order2); both routes produce
/// the same integers when t is even.
std::vector<BigInt> terms(const Params& params, Quantity quantity,
                          CenterKind center, int n_max);

/// Sphere lengths for s = t via x_n = (t-4) x_{n-1} - x_{n-2} with
/// x_0 = 0, x_1 = s. Works for odd t, where the order-4 form would need
/// fractional coefficients. Throws InvalidArgument when s != t.
std::vector<BigInt> sphere_lengths_order2(const Params& params, int n_max);

/// Characteristic data of (x^2 - P x + 1)(x^2 + R x + 1) = 0 plus the
/// fitted coefficients of the general term.
///
/// a, b are the real roots of the first factor (a > 1 > b > 0, a b = 1).
/// c, d are the roots of the second: distinct reals for R > 2, both -1 for
/// R = 2, conjugate complex of modulus 1 for R < 2. In the duplicate case
/// the general term is A a^n + B b^n + (C + n D) c^n; otherwise
/// A a^n + B b^n + C c^n + D d^n.
struct ClosedForm {
  double a = 0.0;
  double b = 0.0;
  std::complex<double> c, d;
  RootRegime regime = RootRegime::DistinctRealR_gt_2;
  double A = 0.0;
  double B = 0.0;
  std::complex<double> C, D;  // real except in the complex-root regime
  bool coefficients_set = false;
  long long scale = 1;
};

/// Roots only (coefficients unset). Requires P > 2.
ClosedForm characteristic_roots(const PRPair& pr);

/// Roots plus coefficients fitted to x_{-1} = -v1, x_0 = 0, x_1 = v1,
/// x_2 = v2 (scale 1). Requires P > 2 and an admissible seed
/// (v1 > 0, v2 >= 0 or v1 = 0, v2 > 0).
ClosedForm closed_form_coefficients(const PRPair& pr, long long v1,
                                    long long v2);

/// Convenience: seeds, scale and regime for (params, quantity, center).
ClosedForm closed_form(const Params& params, Quantity quantity,
                       CenterKind center);

/// scale * (A a^n + B b^n + ...). Throws NonRealResult if the imaginary
/// parts of the conjugate pair fail to cancel.
double closed_form_eval(const ClosedForm& cf, int n);

}  // namespace udisc
