#include <udisc/cli.hpp>

#include <udisc/analysis.hpp>
#include <udisc/serialize.hpp>
#include <udisc/svg.hpp>
#include <udisc/verify.hpp>

#include <fstream>
#include <ostream>

namespace udisc {

namespace {

int write_payload(const RunConfig& cfg, const std::string& payload,
                  std::ostream& out, std::ostream& err) {
  if (cfg.out_path.empty()) {
    out << payload;
    return kExitOk;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << cfg.out_path << " for writing\n";
    return kExitInternal;
  }
  file << payload;
  file.close();
  if (!file) {
    err << "error: failed writing " << cfg.out_path << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Params params = validate_params(cfg.s, cfg.t, cfg.center);
  const Disc disc = generate_disc(params, cfg.radius, cfg.radius_cap);
  const auto rows = layer_rows(disc);
  std::string payload;
  switch (cfg.format) {
    case OutputFormat::CSV: payload = disc_table_csv(rows); break;
    case OutputFormat::JSON:
      payload = disc_table_json(params, cfg.radius, rows);
      break;
    case OutputFormat::SVG:
      throw InvalidArgument("generate emits csv or json; use render for svg");
  }
  return write_payload(cfg, payload, out, err);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Params params = validate_params(cfg.s, cfg.t, cfg.center);
  const VerifyReport report =
      run_verification(params, cfg.radius, cfg.radius_cap);
  const int written =
      write_payload(cfg, verify_report_json(report), out, err);
  if (written != kExitOk) return written;
  if (!report.all_pass) {
    err << "error: verification failed\n";
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_limits(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.pairs.empty()) {
    throw InvalidArgument("limits needs at least one --pair s,t");
  }
  std::vector<LimitsRow> rows;
  rows.reserve(cfg.pairs.size());
  for (const auto& [s, t] : cfg.pairs) {
    rows.push_back(limits_row(s, t, cfg.n_max));
  }
  const std::string payload = (cfg.format == OutputFormat::JSON)
                                  ? limits_json(rows)
                                  : limits_csv(rows);
  return write_payload(cfg, payload, out, err);
}

int cmd_render(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string payload;
  switch (cfg.render_kind) {
    case RenderKind::Disc: {
      const Params params = validate_params(cfg.s, cfg.t, cfg.center);
      payload = render_disc_svg(generate_disc(params, cfg.radius,
                                              cfg.radius_cap));
      break;
    }
    case RenderKind::Hyperbolas:
      payload = render_hyperbolas_svg(cfg.hyperbola_p);
      break;
    case RenderKind::RatioConvergence: {
      const Params params = validate_params(cfg.s, cfg.t, cfg.center);
      payload = render_ratio_convergence_svg(
          ratio_series(params, cfg.center, cfg.n_max));
      break;
    }
  }
  return write_payload(cfg, payload, out, err);
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Generate: return cmd_generate(cfg, out, err);
      case Command::Verify: return cmd_verify(cfg, out, err);
      case Command::Limits: return cmd_limits(cfg, out, err);
      case Command::Render: return cmd_render(cfg, out, err);
    }
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace udisc
