#include <udisc/serialize.hpp>

#include <udisc/analysis.hpp>

#include <json.hpp>

#include <cstdio>

namespace udisc {

using ordered_json = nlohmann::ordered_json;

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::vector<LayerRow> layer_rows(const Disc& disc) {
  const auto stats = all_sphere_stats(disc);
  const auto curvature = all_curvature_reports(disc);
  std::vector<LayerRow> rows;
  rows.reserve(curvature.size());
  for (std::size_t i = 0; i < curvature.size(); ++i) {
    rows.push_back({stats[i + 1], curvature[i]});
  }
  return rows;
}

std::string disc_table_csv(const std::vector<LayerRow>& rows) {
  std::string out = "n,len_S,count_V,count_W,count_E,count_F,area,k_g,K,K_avg\n";
  for (const auto& row : rows) {
    const auto& st = row.stats;
    const auto& cv = row.curvature;
    out += std::to_string(st.n) + ',' + std::to_string(st.len_S) + ',' +
           std::to_string(st.count_V) + ',' + std::to_string(st.count_W) +
           ',' + std::to_string(st.count_E) + ',' +
           std::to_string(st.count_F) + ',' + std::to_string(st.area) + ',' +
           std::to_string(cv.k_g) + ',' + std::to_string(cv.K) + ',' +
           format_real(cv.K_avg) + '\n';
  }
  return out;
}

namespace {

ordered_json params_json(const Params& p) {
  return ordered_json{{"s", p.s},
                      {"t", p.t},
                      {"S", p.S},
                      {"T", p.T},
                      {"center", to_string(p.center)}};
}

}  // namespace

std::string disc_table_json(const Params& p, int radius,
                            const std::vector<LayerRow>& rows) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["params"] = params_json(p);
  doc["radius"] = radius;
  doc["layers"] = ordered_json::array();
  for (const auto& row : rows) {
    const auto& st = row.stats;
    const auto& cv = row.curvature;
    doc["layers"].push_back(ordered_json{{"n", st.n},
                                         {"len_S", st.len_S},
                                         {"count_V", st.count_V},
                                         {"count_W", st.count_W},
                                         {"count_E", st.count_E},
                                         {"count_F", st.count_F},
                                         {"area", st.area},
                                         {"k_g", cv.k_g},
                                         {"K", cv.K},
                                         {"K_avg", cv.K_avg}});
  }
  return doc.dump(2) + "\n";
}

std::string verify_report_json(const VerifyReport& report) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["params"] = params_json(report.params);
  doc["radius"] = report.radius;
  doc["regime"] = report.regime;
  doc["checks"] = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json entry{{"name", c.name},
                       {"pass", c.pass},
                       {"max_deviation", c.max_deviation}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    doc["checks"].push_back(entry);
  }
  doc["all_pass"] = report.all_pass;
  return doc.dump(2) + "\n";
}

LimitsRow limits_row(int s, int t, int n_max) {
  LimitsRow row;
  row.s = s;
  row.t = t;
  const Params p = validate_params(s, t, CenterKind::SVertex);
  if (p.flat()) {
    row.regime = "flat";
    return row;
  }
  const PRPair pr = derive_pr(p);
  row.regime = to_string(pr.regime);
  row.P = pr.P;
  row.R = pr.R;
  row.ratio_limit = ratio_limit(p);
  row.curvature_limit = avg_curvature_limit(p);
  const RatioSeries rs = ratio_series(p, CenterKind::SVertex, n_max);
  row.ratio_residual = std::abs(rs.values.back() - rs.limit);
  try {
    const auto ks = avg_curvature_series(p, n_max);
    row.curvature_residual = std::abs(ks.back() - *row.curvature_limit);
  } catch (const UnsupportedQuantity&) {
    // odd t: the s-vertex split has no integer series, only the limit
  }
  return row;
}

std::string limits_csv(const std::vector<LimitsRow>& rows) {
  std::string out =
      "s,t,S,T,P,R,regime,ratio_limit,curvature_limit,ratio_residual,"
      "curvature_residual\n";
  auto cell = [](const std::optional<double>& x) {
    return x ? format_real(*x) : std::string();
  };
  for (const auto& row : rows) {
    out += std::to_string(row.s) + ',' + std::to_string(row.t) + ',' +
           std::to_string(row.s - 4) + ',' + std::to_string(row.t - 4) + ',' +
           cell(row.P) + ',' + cell(row.R) + ',' + row.regime + ',' +
           cell(row.ratio_limit) + ',' + cell(row.curvature_limit) + ',' +
           cell(row.ratio_residual) + ',' + cell(row.curvature_residual) +
           '\n';
  }
  return out;
}

std::string limits_json(const std::vector<LimitsRow>& rows) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["pairs"] = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json entry{{"s", row.s},
                       {"t", row.t},
                       {"S", row.s - 4},
                       {"T", row.t - 4},
                       {"regime", row.regime}};
    auto put = [&](const char* key, const std::optional<double>& x) {
      if (x) {
        entry[key] = *x;
      } else {
        entry[key] = nullptr;
      }
    };
    put("P", row.P);
    put("R", row.R);
    put("ratio_limit", row.ratio_limit);
    put("curvature_limit", row.curvature_limit);
    put("ratio_residual", row.ratio_residual);
    put("curvature_residual", row.curvature_residual);
    doc["pairs"].push_back(entry);
  }
  return doc.dump(2) + "\n";
}

}  // namespace udisc
