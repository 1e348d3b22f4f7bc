#include <udisc/svg.hpp>

#include <udisc/serialize.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace udisc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Fill cycle for s-polygon wheels.
const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                          "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};
constexpr int kPaletteSize = 8;

std::string num(double x) { return format_real(x); }

struct Point {
  double x = 0.0;
  double y = 0.0;
};

std::string svg_open(double width, double height) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"" +
         num(width) + "\" height=\"" + num(height) + "\" viewBox=\"0 0 " +
         num(width) + " " + num(height) + "\">\n";
}

}  // namespace

std::string render_disc_svg(const Disc& disc) {
  const int radius = disc.radius();
  const double unit = 60.0;
  const double half = unit * (radius + 0.5);
  const double size = 2.0 * half;

  std::vector<Point> pos(disc.vertex_count());
  for (int k = 1; k <= radius; ++k) {
    const std::size_t m = disc.layer_size(k);
    for (VertexId v = disc.layer_begin(k); v < disc.layer_end(k); ++v) {
      const double angle = 2.0 * kPi * (v - disc.layer_begin(k)) / m;
      pos[v] = {half + unit * k * std::cos(angle),
                half + unit * k * std::sin(angle)};
    }
  }
  pos[0] = {half, half};

  std::string out = svg_open(size, size);

  // Filled wheels around saturated s-vertices, keyed by vertex id.
  const LinkIndex links(disc);
  const bool s_center = disc.params().center == CenterKind::SVertex;
  out += "<g stroke=\"none\">\n";
  for (VertexId v = 0; v < disc.layer_end(radius - 1); ++v) {
    const bool is_s = disc.kind(v) == VertexKind::SKind ||
                      (disc.kind(v) == VertexKind::Center && s_center);
    if (!is_s) continue;
    bool closed = false;
    const auto cycle = links.link(v, closed);
    if (!closed) continue;
    std::string points;
    for (const VertexId u : cycle) {
      points += num(pos[u].x) + "," + num(pos[u].y) + " ";
    }
    out += "<polygon points=\"" + points + "\" fill=\"" +
           kPalette[v % kPaletteSize] + "\"/>\n";
  }
  out += "</g>\n";

  std::set<std::pair<VertexId, VertexId>> edges;
  for (const auto& t : disc.triangles()) {
    for (int i = 0; i < 3; ++i) {
      const VertexId a = std::min(t[i], t[(i + 1) % 3]);
      const VertexId b = std::max(t[i], t[(i + 1) % 3]);
      edges.insert({a, b});
    }
  }
  out += "<g stroke=\"#555555\" stroke-width=\"1\">\n";
  for (const auto& [a, b] : edges) {
    out += "<line x1=\"" + num(pos[a].x) + "\" y1=\"" + num(pos[a].y) +
           "\" x2=\"" + num(pos[b].x) + "\" y2=\"" + num(pos[b].y) + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g stroke=\"none\">\n";
  for (VertexId v = 0; v < disc.vertex_count(); ++v) {
    const char* fill = "#000000";
    if (disc.kind(v) == VertexKind::SKind) fill = "#d95f02";
    if (disc.kind(v) == VertexKind::TKind) fill = "#1b9e77";
    out += "<circle cx=\"" + num(pos[v].x) + "\" cy=\"" + num(pos[v].y) +
           "\" r=\"2.5\" fill=\"" + std::string(fill) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_hyperbolas_svg(const std::vector<double>& p_values,
                                  double S_max) {
  const double width = 640.0, height = 480.0, margin = 48.0;
  const double T_max = 14.0;
  auto px = [&](double S) {
    return margin + (width - 2 * margin) * S / S_max;
  };
  auto py = [&](double T) {
    return height - margin - (height - 2 * margin) * T / T_max;
  };

  std::string out = svg_open(width, height);
  out += "<line x1=\"" + num(px(0)) + "\" y1=\"" + num(py(0)) + "\" x2=\"" +
         num(px(S_max)) + "\" y2=\"" + num(py(0)) +
         "\" stroke=\"#000000\"/>\n";
  out += "<line x1=\"" + num(px(0)) + "\" y1=\"" + num(py(0)) + "\" x2=\"" +
         num(px(0)) + "\" y2=\"" + num(py(T_max)) +
         "\" stroke=\"#000000\"/>\n";
  out += "<text x=\"" + num(width - margin) + "\" y=\"" +
         num(height - margin / 3) + "\">S</text>\n";
  out += "<text x=\"" + num(margin / 3) + "\" y=\"" + num(margin) +
         "\">T</text>\n";

  const char* curve_colors[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                "#ff7f00"};
  int color = 0;
  for (const double P : p_values) {
    const HyperbolaCurve curve = hyperbola_curve(HyperbolaFamily::FixedP, P,
                                                 0.0, S_max, 0.25);
    std::string points;
    for (const auto& [S, T] : curve.samples) {
      if (T > T_max) continue;
      points += num(px(S)) + "," + num(py(T)) + " ";
    }
    out += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" +
           curve_colors[color % 5] + "\" data-p=\"" + num(P) + "\"/>\n";
    ++color;
  }

  // The pairs whose ratio and curvature limits coincide row by row,
  // plotted as (S, T) = (s-4, t-4).
  const std::pair<int, int> marked[] = {{6, 2}, {3, 3},  {12, 2}, {4, 4},
                                        {20, 2}, {5, 5}, {30, 2}, {12, 4},
                                        {6, 6},  {3, 8}};
  for (const auto& [S, T] : marked) {
    if (S > S_max || T > T_max) continue;
    out += "<circle cx=\"" + num(px(S)) + "\" cy=\"" + num(py(T)) +
           "\" r=\"4\" fill=\"#000000\" data-st=\"" + std::to_string(S + 4) +
           "," + std::to_string(T + 4) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_ratio_convergence_svg(const RatioSeries& series) {
  const double width = 640.0, height = 400.0, margin = 48.0;
  const int n_max = static_cast<int>(series.values.size());

  double lo = series.limit, hi = series.limit;
  for (const double v : series.values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double pad = 0.05 * std::max(hi - lo, 1e-3);
  lo -= pad;
  hi += pad;

  auto px = [&](double n) {
    return margin + (width - 2 * margin) * (n - 1) / std::max(1, n_max - 1);
  };
  auto py = [&](double y) {
    return height - margin - (height - 2 * margin) * (y - lo) / (hi - lo);
  };

  std::string out = svg_open(width, height);
  out += "<line x1=\"" + num(margin) + "\" y1=\"" + num(py(series.limit)) +
         "\" x2=\"" + num(width - margin) + "\" y2=\"" +
         num(py(series.limit)) +
         "\" stroke=\"#e41a1c\" stroke-dasharray=\"6 3\" data-limit=\"" +
         num(series.limit) + "\"/>\n";
  std::string points;
  for (int n = 1; n <= n_max; ++n) {
    points += num(px(n)) + "," + num(py(series.values[n - 1])) + " ";
  }
  out += "<polyline points=\"" + points +
         "\" fill=\"none\" stroke=\"#377eb8\"/>\n";
  out += "<text x=\"" + num(width - margin) + "\" y=\"" +
         num(height - margin / 3) + "\">n</text>\n";
  out += "<text x=\"" + num(margin / 2) + "\" y=\"" + num(margin / 2) +
         "\">area / length</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace udisc
