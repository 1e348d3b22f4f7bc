#pragma once

#include <udisc/params.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace udisc {

using VertexId = std::uint32_t;

enum class VertexKind : std::uint8_t { SKind, TKind, Center };

/// Per-vertex attributes. down_degree counts neighbors one layer closer to
/// the center: 2 marks the proof's Y set (above an edge of the previous
/// sphere), 1 the Z set.
struct Vertex {
  VertexId id = 0;
  VertexKind kind = VertexKind::Center;
  int layer = 0;
  int down_degree = 0;
};

/// Exact counts on the sphere of radius n: its edge count (len_S), the
/// vertex split into s- and t-vertices, the edge split into (s,t)- and
/// (t,t)-edges, and the triangle count strictly inside the sphere.
struct SphereStats {
  int n = 0;
  std::int64_t len_S = 0;
  std::int64_t count_V = 0;
  std::int64_t count_W = 0;
  std::int64_t count_E = 0;
  std::int64_t count_F = 0;
  std::int64_t area = 0;
};

/// Discrete curvature of the radius-n sub-disc. chi(v) counts triangles at
/// v inside the region; k_g sums 3 - chi over the boundary layer, K sums
/// 6 - chi over interior vertices (center included).
struct CurvatureReport {
  int n = 0;
  std::int64_t k_g = 0;
  std::int64_t K = 0;
  double K_avg = 0.0;
  std::int64_t interior_vertices = 0;
};

/// Default ceiling on the generated radius; sphere sizes grow like a^n, so
/// an unchecked radius is an easy way to exhaust memory.
inline constexpr int kDefaultRadiusCap = 64;

/// The unique uniform triangulated disc of the given radius around a center
/// vertex.
///
/// Vertices are numbered layer by layer: layer k occupies the contiguous id
/// range [layer_begin(k), layer_end(k)), in counterclockwise cyclic order
/// (consecutive ids adjacent, range endpoints adjacent across the wrap).
/// Storage is column-wise so discs of ~1e8 vertices stay affordable.
/// Immutable once generated; safe to share across threads.
class Disc {
 public:
  const Params& params() const { return params_; }
  int radius() const { return radius_; }

  std::size_t vertex_count() const { return kind_.size(); }
  VertexKind kind(VertexId v) const { return kind_[v]; }
  int down_degree(VertexId v) const { return down_[v]; }
  int layer_of(VertexId v) const;
  Vertex vertex(VertexId v) const {
    return {v, kind_[v], layer_of(v), down_[v]};
  }

  std::size_t layer_size(int k) const {
    return layer_start_[k + 1] - layer_start_[k];
  }
  VertexId layer_begin(int k) const { return layer_start_[k]; }
  VertexId layer_end(int k) const { return layer_start_[k + 1]; }

  const std::vector<std::array<VertexId, 3>>& triangles() const {
    return triangles_;
  }

  /// Degree the vertex closes to once its link completes.
  int target_degree(VertexId v) const;

  /// Kind with the center resolved to the role it plays.
  VertexKind role_kind(VertexId v) const {
    if (kind_[v] != VertexKind::Center) return kind_[v];
    return params_.center == CenterKind::SVertex ? VertexKind::SKind
                                                 : VertexKind::TKind;
  }

 private:
  friend Disc generate_disc(const Params&, int, int);

  Params params_;
  int radius_ = 0;
  std::vector<VertexKind> kind_;
  std::vector<std::uint8_t> down_;
  std::vector<VertexId> layer_start_;  // radius + 2 entries
  std::vector<std::array<VertexId, 3>> triangles_;
};

/// Grows the disc layer by layer. Every frontier vertex closes its link to
/// degree s or t; adjacent frontier vertices share exactly one new vertex;
/// new-vertex kinds follow the adjacency rules (neighbors of an s-vertex
/// are t-vertices, t-vertex links alternate kinds). Disagreement between
/// the two rules constraining a shared vertex is a ContradictionError.
///
/// Throws UnsupportedOddT for odd t, RadiusOutOfRange for radius < 1,
/// CapExceeded beyond radius_cap.
Disc generate_disc(const Params& params, int radius,
                   int radius_cap = kDefaultRadiusCap);

/// Counts for the sphere of radius n by direct enumeration over the
/// triangle list. Requires 0 <= n <= radius - 1 (RadiusOutOfRange
/// otherwise); every on-sphere edge is cross-checked to be flanked by one
/// triangle below and one above.
SphereStats sphere_stats(const Disc& disc, int n);

/// All of sphere_stats(0 .. radius-1) in one pass over the triangles.
std::vector<SphereStats> all_sphere_stats(const Disc& disc);

/// Curvature of the radius-n sub-disc, 1 <= n <= radius - 1.
CurvatureReport curvature_report(const Disc& disc, int n);

/// all of curvature_report(1 .. radius-1) in one pass.
std::vector<CurvatureReport> all_curvature_reports(const Disc& disc);

/// area(n) == 2 * interior_vertices + boundary_vertices - 2.
bool picks_check(const Disc& disc, int n);

/// Symmetric adjacency in compressed form, derived from the triangle list.
/// Built on demand; intended for checks and rendering, not for the large
/// discs the stats path handles.
struct Adjacency {
  std::vector<std::uint32_t> offsets;
  std::vector<VertexId> neighbors;  // sorted within each vertex's range

  std::span<const VertexId> of(VertexId v) const {
    return {neighbors.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
};

Adjacency build_adjacency(const Disc& disc);

/// Neighbor cycles in rotation order, reconstructed by walking the triangle
/// fan around each vertex.
class LinkIndex {
 public:
  explicit LinkIndex(const Disc& disc);

  /// Triangle ids incident to v.
  std::span<const std::uint32_t> triangles_at(VertexId v) const;

  /// Neighbors of v in rotation order. closed reports whether the walk
  /// returned to its start (a complete wheel); boundary vertices yield an
  /// open chain. Throws ContradictionError if the fan is not a single
  /// chain or cycle.
  std::vector<VertexId> link(VertexId v, bool& closed) const;

 private:
  const Disc* disc_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> incident_;
};

}  // namespace udisc
