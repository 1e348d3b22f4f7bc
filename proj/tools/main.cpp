#include <udisc/cli.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

udisc::CenterKind parse_center(const std::string& s) {
  return s == "t" ? udisc::CenterKind::TVertex : udisc::CenterKind::SVertex;
}

udisc::OutputFormat parse_format(const std::string& s) {
  if (s == "json") return udisc::OutputFormat::JSON;
  if (s == "svg") return udisc::OutputFormat::SVG;
  return udisc::OutputFormat::CSV;
}

udisc::RenderKind parse_kind(const std::string& s) {
  if (s == "hyperbolas") return udisc::RenderKind::Hyperbolas;
  if (s == "ratio-convergence") return udisc::RenderKind::RatioConvergence;
  return udisc::RenderKind::Disc;
}

bool parse_pairs(const std::vector<std::string>& specs,
                 std::vector<std::pair<int, int>>& pairs) {
  for (const std::string& spec : specs) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos) return false;
    try {
      pairs.emplace_back(std::stoi(spec.substr(0, comma)),
                         std::stoi(spec.substr(comma + 1)));
    } catch (const std::exception&) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform triangulated discs: generation, sequence "
               "verification, growth limits and SVG plots"};
  app.require_subcommand(1);

  udisc::RunConfig cfg;
  std::string center = "s";
  std::string format;
  std::string kind = "disc";
  std::vector<std::string> pair_specs;

  const auto center_check = CLI::IsMember({"s", "t"});
  const auto format_check = CLI::IsMember({"csv", "json", "svg"});

  auto* gen = app.add_subcommand("generate",
                                 "grow a disc, print per-layer statistics");
  gen->add_option("--s", cfg.s, "edges per s-polygon")->required();
  gen->add_option("--t", cfg.t, "triangles around a t-vertex")->required();
  gen->add_option("--center", center, "center vertex kind")->check(center_check);
  gen->add_option("--radius", cfg.radius, "complete layers to grow");
  gen->add_option("--format", format, "csv | json")->check(format_check);
  gen->add_option("--out", cfg.out_path, "output file (default stdout)");
  gen->add_option("--max-radius-override", cfg.radius_cap, "radius cap");

  auto* verify = app.add_subcommand(
      "verify", "cross-check enumeration, recurrence and closed form");
  verify->add_option("--s", cfg.s)->required();
  verify->add_option("--t", cfg.t)->required();
  verify->add_option("--center", center)->check(center_check);
  verify->add_option("--radius", cfg.radius);
  verify->add_option("--out", cfg.out_path);
  verify->add_option("--max-radius-override", cfg.radius_cap);

  auto* limits = app.add_subcommand(
      "limits", "ratio and curvature limits for a list of pairs");
  limits->add_option("--pair", pair_specs, "pair as s,t (repeatable)")
      ->required();
  limits->add_option("--n-max", cfg.n_max, "series length for residuals");
  limits->add_option("--format", format, "csv | json")->check(format_check);
  limits->add_option("--out", cfg.out_path);

  auto* render = app.add_subcommand("render", "emit an SVG figure");
  render->add_option("--kind", kind, "disc | hyperbolas | ratio-convergence")
      ->check(CLI::IsMember({"disc", "hyperbolas", "ratio-convergence"}));
  render->add_option("--s", cfg.s);
  render->add_option("--t", cfg.t);
  render->add_option("--center", center)->check(center_check);
  render->add_option("--radius", cfg.radius);
  render->add_option("--n-max", cfg.n_max);
  render->add_option("--p", cfg.hyperbola_p, "fixed-P values for hyperbolas");
  render->add_option("--out", cfg.out_path);
  render->add_option("--max-radius-override", cfg.radius_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return udisc::kExitUsage;
  }

  cfg.center = parse_center(center);
  if (gen->parsed()) {
    cfg.command = udisc::Command::Generate;
    cfg.format = format.empty() ? udisc::OutputFormat::CSV
                                : parse_format(format);
  } else if (verify->parsed()) {
    cfg.command = udisc::Command::Verify;
    cfg.format = udisc::OutputFormat::JSON;
  } else if (limits->parsed()) {
    cfg.command = udisc::Command::Limits;
    cfg.format = format.empty() ? udisc::OutputFormat::CSV
                                : parse_format(format);
    if (!parse_pairs(pair_specs, cfg.pairs)) {
      std::cerr << "error: --pair expects s,t\n";
      return udisc::kExitUsage;
    }
  } else {
    cfg.command = udisc::Command::Render;
    cfg.format = udisc::OutputFormat::SVG;
    cfg.render_kind = parse_kind(kind);
  }

  return udisc::run_command(cfg, std::cout, std::cerr);
}
