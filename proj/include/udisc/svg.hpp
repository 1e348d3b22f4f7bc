#pragma once

#include <udisc/analysis.hpp>
#include <udisc/disc.hpp>

#include <string>
#include <vector>

namespace udisc {

/// Concentric-ring layout: layer k sits on the circle of radius k units,
/// its vertices equally spaced; edges drawn as chords; the wheel of every
/// saturated s-vertex filled from a color cycle keyed by vertex id. One
/// <circle> element per vertex.
std::string render_disc_svg(const Disc& disc);

/// S/T axes with fixed-P curves and the standard marked pairs.
std::string render_hyperbolas_svg(const std::vector<double>& p_values,
                                  double S_max = 32.0);

/// Ratio values against n with the limit as a horizontal reference line
/// (carried in a data-limit attribute as well).
std::string render_ratio_convergence_svg(const RatioSeries& series);

}  // namespace udisc
