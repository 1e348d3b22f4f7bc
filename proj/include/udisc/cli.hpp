#pragma once

#include <udisc/disc.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace udisc {

enum class Command { Generate, Verify, Limits, Render };
enum class OutputFormat { CSV, JSON, SVG };
enum class RenderKind { Disc, Hyperbolas, RatioConvergence };

/// Everything a single CLI invocation needs. Invalid (s,t) pairs are
/// rejected before any computation runs.
struct RunConfig {
  Command command = Command::Generate;
  int s = 8;
  int t = 6;
  CenterKind center = CenterKind::SVertex;
  int radius = 4;
  int n_max = 60;
  OutputFormat format = OutputFormat::CSV;
  RenderKind render_kind = RenderKind::Disc;
  std::string out_path;  // empty: write to the out stream
  int radius_cap = kDefaultRadiusCap;
  std::vector<std::pair<int, int>> pairs;          // limits
  std::vector<double> hyperbola_p = {3, 4, 5, 6};  // render --kind hyperbolas
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Dispatches one command. Returns kExitUsage for rejected input,
/// kExitInternal for violated invariants, failed verification or I/O
/// trouble, kExitOk otherwise.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace udisc
