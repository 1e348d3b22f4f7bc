#pragma once

#include <udisc/disc.hpp>
#include <udisc/verify.hpp>

#include <optional>
#include <string>
#include <vector>

namespace udisc {

/// Fixed formatting for reals everywhere output must be byte-stable:
/// 12 significant digits, C locale.
std::string format_real(double x);

/// One exported table row: the sphere counts and the curvature of the
/// radius-n sub-disc.
struct LayerRow {
  SphereStats stats;
  CurvatureReport curvature;
};

/// Rows n = 1..radius-1 (the layers whose counts are trusted).
std::vector<LayerRow> layer_rows(const Disc& disc);

/// Header is exactly
/// n,len_S,count_V,count_W,count_E,count_F,area,k_g,K,K_avg
/// with LF line endings, integers verbatim, reals via format_real.
std::string disc_table_csv(const std::vector<LayerRow>& rows);
std::string disc_table_json(const Params& params, int radius,
                            const std::vector<LayerRow>& rows);

std::string verify_report_json(const VerifyReport& report);

/// One row of the limits table; empty optionals mark the flat pair or an
/// unavailable series.
struct LimitsRow {
  int s = 0;
  int t = 0;
  std::string regime;
  std::optional<double> P, R;
  std::optional<double> ratio_limit, curvature_limit;
  std::optional<double> ratio_residual, curvature_residual;
};

LimitsRow limits_row(int s, int t, int n_max);

std::string limits_csv(const std::vector<LimitsRow>& rows);
std::string limits_json(const std::vector<LimitsRow>& rows);

}  // namespace udisc
