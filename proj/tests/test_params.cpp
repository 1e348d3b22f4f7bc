#include <doctest.h>

#include <udisc/params.hpp>

#include <cmath>
#include <vector>

using namespace udisc;

TEST_CASE("validation accepts the two unique-tiling regimes") {
  const Params p = validate_params(8, 6, CenterKind::SVertex);
  CHECK(p.S == 4);
  CHECK(p.T == 2);

  const Params flat = validate_params(6, 6, CenterKind::SVertex);
  CHECK(flat.S == 2);
  CHECK(flat.T == 2);
  CHECK(flat.flat());

  // odd s with even t is fine; odd t needs s = t
  const Params odd_s = validate_params(7, 12, CenterKind::SVertex);
  CHECK(odd_s.S == 3);
  CHECK(odd_s.T == 8);
  CHECK_NOTHROW(validate_params(7, 8, CenterKind::SVertex));
  CHECK_NOTHROW(validate_params(7, 7, CenterKind::TVertex));

  CHECK_THROWS_AS(validate_params(8, 7, CenterKind::SVertex), RejectOddT);
  CHECK_THROWS_AS(validate_params(9, 7, CenterKind::SVertex), RejectOddT);
  CHECK_THROWS_AS(validate_params(5, 8, CenterKind::SVertex), RejectTooSmall);
  CHECK_THROWS_AS(validate_params(8, 5, CenterKind::SVertex), RejectTooSmall);
}

TEST_CASE("odd-t rejection carries the documented message") {
  try {
    validate_params(8, 7, CenterKind::SVertex);
    FAIL("expected RejectOddT");
  } catch (const RejectOddT& e) {
    CHECK(std::string(e.what()) == "t must be even unless s = t");
  }
}

TEST_CASE("P and R solve the coefficient system") {
  auto pr = [](int s, int t) {
    return derive_pr(validate_params(s, t, CenterKind::SVertex));
  };

  // Duplicate-root detection happens in integer arithmetic, so these are
  // exact doubles, not approximations.
  const PRPair p10_6 = pr(10, 6);
  CHECK(p10_6.P == 3.0);
  CHECK(p10_6.R == 2.0);
  CHECK(p10_6.regime == RootRegime::DuplicateR_eq_2);

  const PRPair p16_8 = pr(16, 8);
  CHECK(p16_8.P == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(p16_8.R == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(p16_8.regime == RootRegime::DistinctRealR_gt_2);

  const PRPair p6_8 = pr(6, 8);
  CHECK(p6_8.P == doctest::Approx(1.0 + std::sqrt(5.0)).epsilon(1e-14));
  CHECK(p6_8.R == doctest::Approx(std::sqrt(5.0) - 1.0).epsilon(1e-14));
  CHECK(p6_8.regime == RootRegime::ComplexR_lt_2);

  const PRPair p8_8 = pr(8, 8);
  CHECK(p8_8.P == 4.0);
  CHECK(p8_8.R == 2.0);
  CHECK(p8_8.regime == RootRegime::DuplicateR_eq_2);

  CHECK_THROWS_AS(pr(6, 6), FlatCase);
}

TEST_CASE("regime classification across the reference pairs") {
  auto regime = [](int s, int t) {
    return derive_pr(validate_params(s, t, CenterKind::SVertex)).regime;
  };
  for (const auto& [s, t] : std::vector<std::pair<int, int>>{
           {10, 6}, {8, 8}, {7, 12}}) {
    CHECK(regime(s, t) == RootRegime::DuplicateR_eq_2);
  }
  for (const auto& [s, t] : std::vector<std::pair<int, int>>{
           {6, 8}, {6, 10}, {8, 6}}) {
    CHECK(regime(s, t) == RootRegime::ComplexR_lt_2);
  }
  for (const auto& [s, t] : std::vector<std::pair<int, int>>{
           {16, 6}, {24, 6}, {10, 10}}) {
    CHECK(regime(s, t) == RootRegime::DistinctRealR_gt_2);
  }
}

TEST_CASE("P, R invariants over the parameter sweep") {
  for (int t : {6, 8, 10, 12}) {
    for (int s = 6; s <= 40; ++s) {
      if (s == 6 && t == 6) continue;
      const Params p = validate_params(s, t, CenterKind::SVertex);
      const PRPair pr = derive_pr(p);
      CHECK(pr.P > 2.0);
      CHECK(pr.R > 1.0);
      CHECK(pr.P - pr.R == doctest::Approx(p.T / 2.0).epsilon(1e-14));
      const double product = 0.5 * p.S * p.T;
      CHECK(pr.P * pr.R == doctest::Approx(product).epsilon(1e-12));
    }
  }
  // s = t collapses to P = t - 4 exactly
  for (int t = 7; t <= 20; ++t) {
    const PRPair pr = derive_pr(validate_params(t, t, CenterKind::SVertex));
    CHECK(pr.P == static_cast<double>(t - 4));
  }
}
