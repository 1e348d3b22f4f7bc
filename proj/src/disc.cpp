#include <udisc/disc.hpp>

#include <algorithm>
#include <cassert>
#include <string>

namespace udisc {

namespace {

VertexKind flip(VertexKind k) {
  return k == VertexKind::SKind ? VertexKind::TKind : VertexKind::SKind;
}

// Kind of the new vertex sitting above a frontier edge (a, b). A neighbor
// of an s-vertex must be a t-vertex; above a (t,t)-edge the alternation of
// both endpoint links forces an s-vertex. Two adjacent s-vertices cannot
// exist in the first place.
VertexKind shared_kind(VertexKind a, VertexKind b) {
  const bool a_s = (a == VertexKind::SKind);
  const bool b_s = (b == VertexKind::SKind);
  if (a_s && b_s) {
    throw ContradictionError("adjacent s-vertices on a sphere");
  }
  return (a_s || b_s) ? VertexKind::TKind : VertexKind::SKind;
}

}  // namespace

int Disc::layer_of(VertexId v) const {
  auto it = std::upper_bound(layer_start_.begin(), layer_start_.end(), v);
  return static_cast<int>(it - layer_start_.begin()) - 1;
}

int Disc::target_degree(VertexId v) const {
  switch (kind_[v]) {
    case VertexKind::SKind: return params_.s;
    case VertexKind::TKind: return params_.t;
    case VertexKind::Center:
      return params_.center == CenterKind::SVertex ? params_.s : params_.t;
  }
  return 0;
}

Disc generate_disc(const Params& p, int radius, int radius_cap) {
  if (p.t % 2 != 0) {
    throw UnsupportedOddT("disc generation needs even t; odd tilings have no "
                          "alternating links");
  }
  if (radius < 1) {
    throw RadiusOutOfRange("radius must be at least 1");
  }
  if (radius > radius_cap) {
    throw CapExceeded("radius " + std::to_string(radius) + " exceeds cap " +
                      std::to_string(radius_cap));
  }

  Disc d;
  d.params_ = p;
  d.radius_ = radius;
  auto& kind = d.kind_;
  auto& down = d.down_;
  auto& tris = d.triangles_;

  // Layer 1 is the wheel around the center: all t-vertices around an
  // s-center, alternating kinds (even positions s) around a t-center.
  const bool s_center = (p.center == CenterKind::SVertex);
  const VertexId first = s_center ? p.s : p.t;
  kind.reserve(1 + first);
  down.reserve(1 + first);
  kind.push_back(VertexKind::Center);
  down.push_back(0);
  for (VertexId i = 0; i < first; ++i) {
    kind.push_back(s_center ? VertexKind::TKind
                            : (i % 2 == 0 ? VertexKind::SKind
                                          : VertexKind::TKind));
    down.push_back(1);
  }
  d.layer_start_ = {0, 1, 1 + first};
  tris.reserve(first);
  for (VertexId i = 0; i < first; ++i) {
    tris.push_back({0, 1 + i, 1 + (i + 1) % first});
  }

  std::vector<std::uint32_t> arc_len;    // ups per frontier vertex
  std::vector<std::uint32_t> arc_off;    // prefix of (arc_len - 1)
  std::vector<VertexKind> shared;        // kind above frontier edge (i-1, i)

  for (int k = 2; k <= radius; ++k) {
    const VertexId fb = d.layer_begin(k - 1);
    const VertexId fe = d.layer_end(k - 1);
    const std::uint32_t F = fe - fb;

    arc_len.assign(F, 0);
    arc_off.assign(F + 1, 0);
    shared.assign(F, VertexKind::Center);
    for (std::uint32_t i = 0; i < F; ++i) {
      const VertexId v = fb + i;
      const int m = d.target_degree(v) - down[v] - 2;
      if (m < 2) {
        throw ContradictionError("frontier vertex cannot host a shared "
                                 "vertex on each side");
      }
      arc_len[i] = static_cast<std::uint32_t>(m);
      arc_off[i + 1] = arc_off[i] + (m - 1);
      shared[i] = shared_kind(kind[fb + (i + F - 1) % F], kind[v]);
    }
    const std::uint32_t new_size = arc_off[F];
    const VertexId base = fe;

    kind.reserve(kind.size() + new_size);
    down.reserve(down.size() + new_size);
    tris.reserve(tris.size() + new_size + F);

    for (std::uint32_t i = 0; i < F; ++i) {
      const VertexId v = fb + i;
      const std::uint32_t m = arc_len[i];
      const VertexKind start = shared[i];
      const VertexKind end = shared[(i + 1) % F];

      kind.push_back(start);
      down.push_back(2);

      if (kind[v] == VertexKind::SKind) {
        if (start != VertexKind::TKind || end != VertexKind::TKind) {
          throw ContradictionError("s-vertex with a non-t neighbor");
        }
        for (std::uint32_t j = 0; j + 2 < m; ++j) {
          kind.push_back(VertexKind::TKind);
          down.push_back(1);
        }
      } else {
        // t-vertex (or the first ring of a t-center wheel): the up-arc
        // alternates, pinned at both shared ends. Parity must close.
        VertexKind cur = start;
        for (std::uint32_t j = 0; j + 2 < m; ++j) {
          cur = flip(cur);
          kind.push_back(cur);
          down.push_back(1);
        }
        const VertexKind expected = (m % 2 == 0) ? flip(start) : start;
        if (end != expected) {
          throw ContradictionError("link alternation does not close around a "
                                   "t-vertex");
        }
      }

      // Fan above v, then the cap over the frontier edge behind v.
      const VertexId u_first = base + arc_off[i];
      for (std::uint32_t j = 0; j + 1 < m; ++j) {
        const VertexId ua = (j == m - 2) ? base + arc_off[(i + 1) % F]
                                         : u_first + j + 1;
        tris.push_back({v, u_first + j, ua});
      }
      tris.push_back({fb + (i + F - 1) % F, v, u_first});
    }
    d.layer_start_.push_back(base + new_size);
  }
  return d;
}

namespace {

struct TriangleSpan {
  int low = 0;   // min layer
  int high = 0;  // max layer; always low + 1
  int at_high = 0;
};

TriangleSpan classify(const Disc& d, const std::array<VertexId, 3>& t) {
  const int la = d.layer_of(t[0]);
  const int lb = d.layer_of(t[1]);
  const int lc = d.layer_of(t[2]);
  TriangleSpan span;
  span.low = std::min({la, lb, lc});
  span.high = std::max({la, lb, lc});
  if (span.high != span.low + 1) {
    throw ContradictionError("triangle does not span two adjacent layers");
  }
  span.at_high = (la == span.high) + (lb == span.high) + (lc == span.high);
  return span;
}

void count_layer_kinds(const Disc& d, int n, SphereStats& st) {
  for (VertexId v = d.layer_begin(n); v < d.layer_end(n); ++v) {
    (d.kind(v) == VertexKind::SKind) ? ++st.count_V : ++st.count_W;
  }
}

// Classify the sphere edge of a fan triangle (the two vertices on the
// higher layer) as an (s,t)-edge or a (t,t)-edge.
void tally_sphere_edge(const Disc& d, const std::array<VertexId, 3>& t,
                       int high, SphereStats& st) {
  int s_ends = 0;
  for (const VertexId v : t) {
    if (d.layer_of(v) == high && d.kind(v) == VertexKind::SKind) ++s_ends;
  }
  if (s_ends >= 2) {
    throw ContradictionError("sphere edge joining two s-vertices");
  }
  (s_ends == 1) ? ++st.count_E : ++st.count_F;
}

}  // namespace

SphereStats sphere_stats(const Disc& d, int n) {
  if (n < 0 || n > d.radius() - 1) {
    throw RadiusOutOfRange("sphere " + std::to_string(n) +
                           " not trusted in a radius-" +
                           std::to_string(d.radius()) + " disc");
  }
  SphereStats st;
  st.n = n;
  if (n == 0) return st;

  count_layer_kinds(d, n, st);

  std::int64_t caps_above = 0;
  for (const auto& t : d.triangles()) {
    const TriangleSpan span = classify(d, t);
    if (span.high <= n) ++st.area;
    if (span.high == n && span.at_high == 2) {
      tally_sphere_edge(d, t, n, st);
    } else if (span.high == n + 1 && span.at_high == 1) {
      ++caps_above;
    }
  }
  st.len_S = st.count_E + st.count_F;
  if (st.len_S != caps_above) {
    throw ContradictionError("sphere edge not flanked by exactly one "
                             "triangle on each side");
  }
  return st;
}

std::vector<SphereStats> all_sphere_stats(const Disc& d) {
  const int radius = d.radius();
  std::vector<SphereStats> out(radius);
  std::vector<std::int64_t> tri_hist(radius + 1, 0);
  std::vector<std::int64_t> caps(radius + 1, 0);

  for (int n = 1; n < radius; ++n) {
    out[n].n = n;
    count_layer_kinds(d, n, out[n]);
  }
  for (const auto& t : d.triangles()) {
    const TriangleSpan span = classify(d, t);
    ++tri_hist[span.high];
    if (span.at_high == 2) {
      if (span.high < radius) tally_sphere_edge(d, t, span.high, out[span.high]);
    } else {
      ++caps[span.high];
    }
  }
  std::int64_t acc = 0;
  for (int n = 1; n < radius; ++n) {
    acc += tri_hist[n];
    out[n].area = acc;
    out[n].len_S = out[n].count_E + out[n].count_F;
    if (out[n].len_S != caps[n + 1]) {
      throw ContradictionError("sphere edge not flanked by exactly one "
                               "triangle on each side");
    }
  }
  return out;
}

CurvatureReport curvature_report(const Disc& d, int n) {
  if (n < 1 || n > d.radius() - 1) {
    throw RadiusOutOfRange("curvature needs 1 <= n <= radius - 1");
  }
  std::vector<std::uint16_t> chi(d.layer_end(n), 0);
  for (const auto& t : d.triangles()) {
    const TriangleSpan span = classify(d, t);
    if (span.high <= n) {
      for (const VertexId v : t) ++chi[v];
    }
  }
  CurvatureReport rep;
  rep.n = n;
  for (VertexId v = d.layer_begin(n); v < d.layer_end(n); ++v) {
    rep.k_g += 3 - static_cast<std::int64_t>(chi[v]);
  }
  for (VertexId v = 0; v < d.layer_begin(n); ++v) {
    rep.K += 6 - static_cast<std::int64_t>(chi[v]);
  }
  rep.interior_vertices = d.layer_begin(n);  // center + layers 1..n-1
  rep.K_avg = static_cast<double>(rep.K) /
              static_cast<double>(rep.interior_vertices);
  return rep;
}

std::vector<CurvatureReport> all_curvature_reports(const Disc& d) {
  const int radius = d.radius();
  // chi_inside[v]: triangles at v not reaching past v's own layer; together
  // with the full count this gives chi for boundary and interior roles.
  std::vector<std::uint16_t> chi_total(d.vertex_count(), 0);
  std::vector<std::uint16_t> chi_inside(d.vertex_count(), 0);
  for (const auto& t : d.triangles()) {
    const TriangleSpan span = classify(d, t);
    for (const VertexId v : t) {
      ++chi_total[v];
      if (d.layer_of(v) == span.high) ++chi_inside[v];
    }
  }
  std::vector<CurvatureReport> out;
  out.reserve(radius > 1 ? radius - 1 : 0);
  std::int64_t K = 0;
  for (int n = 1; n < radius; ++n) {
    for (VertexId v = d.layer_begin(n - 1); v < d.layer_end(n - 1); ++v) {
      K += 6 - static_cast<std::int64_t>(chi_total[v]);
    }
    CurvatureReport rep;
    rep.n = n;
    rep.K = K;
    for (VertexId v = d.layer_begin(n); v < d.layer_end(n); ++v) {
      rep.k_g += 3 - static_cast<std::int64_t>(chi_inside[v]);
    }
    rep.interior_vertices = d.layer_begin(n);
    rep.K_avg = static_cast<double>(rep.K) /
                static_cast<double>(rep.interior_vertices);
    out.push_back(rep);
  }
  return out;
}

bool picks_check(const Disc& d, int n) {
  if (n < 1 || n > d.radius() - 1) {
    throw RadiusOutOfRange("Pick's formula needs 1 <= n <= radius - 1");
  }
  std::int64_t area = 0;
  for (const auto& t : d.triangles()) {
    if (classify(d, t).high <= n) ++area;
  }
  const std::int64_t interior = d.layer_begin(n);
  const std::int64_t boundary = static_cast<std::int64_t>(d.layer_size(n));
  return area == 2 * interior + boundary - 2;
}

Adjacency build_adjacency(const Disc& d) {
  const std::size_t V = d.vertex_count();
  std::vector<std::uint32_t> raw_off(V + 1, 0);
  for (const auto& t : d.triangles()) {
    for (int i = 0; i < 3; ++i) raw_off[t[i] + 1] += 2;
  }
  for (std::size_t v = 0; v < V; ++v) raw_off[v + 1] += raw_off[v];

  std::vector<VertexId> raw(raw_off[V]);
  std::vector<std::uint32_t> cursor(raw_off.begin(), raw_off.end() - 1);
  for (const auto& t : d.triangles()) {
    for (int i = 0; i < 3; ++i) {
      raw[cursor[t[i]]++] = t[(i + 1) % 3];
      raw[cursor[t[i]]++] = t[(i + 2) % 3];
    }
  }

  // Interior edges arrive once per flanking triangle; dedup per vertex.
  Adjacency adj;
  adj.offsets.assign(V + 1, 0);
  adj.neighbors.reserve(raw.size() / 2 + V);
  for (std::size_t v = 0; v < V; ++v) {
    std::sort(raw.begin() + raw_off[v], raw.begin() + raw_off[v + 1]);
    for (std::uint32_t i = raw_off[v]; i < raw_off[v + 1]; ++i) {
      if (i == raw_off[v] || raw[i] != raw[i - 1]) {
        adj.neighbors.push_back(raw[i]);
      }
    }
    adj.offsets[v + 1] = static_cast<std::uint32_t>(adj.neighbors.size());
  }
  return adj;
}

LinkIndex::LinkIndex(const Disc& d) : disc_(&d) {
  const std::size_t V = d.vertex_count();
  offsets_.assign(V + 1, 0);
  for (const auto& t : d.triangles()) {
    for (int i = 0; i < 3; ++i) ++offsets_[t[i] + 1];
  }
  for (std::size_t v = 0; v < V; ++v) offsets_[v + 1] += offsets_[v];
  incident_.resize(offsets_[V]);
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t ti = 0; ti < d.triangles().size(); ++ti) {
    for (int i = 0; i < 3; ++i) {
      incident_[cursor[d.triangles()[ti][i]]++] = ti;
    }
  }
}

std::span<const std::uint32_t> LinkIndex::triangles_at(VertexId v) const {
  return {incident_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::vector<VertexId> LinkIndex::link(VertexId v, bool& closed) const {
  // Each incident triangle contributes one edge (x, y) of the link graph;
  // in a disc the link is a single path or cycle.
  struct Node {
    VertexId id;
    VertexId nb[2];
    int deg = 0;
  };
  std::vector<Node> nodes;
  auto node_of = [&](VertexId id) -> Node& {
    for (auto& n : nodes) {
      if (n.id == id) return n;
    }
    nodes.push_back({id, {0, 0}, 0});
    return nodes.back();
  };

  for (const std::uint32_t ti : triangles_at(v)) {
    const auto& t = disc_->triangles()[ti];
    VertexId others[2];
    int k = 0;
    for (const VertexId u : t) {
      if (u != v) others[k++] = u;
    }
    for (int i = 0; i < 2; ++i) {
      Node& n = node_of(others[i]);
      if (n.deg >= 2) {
        throw ContradictionError("non-manifold link at vertex " +
                                 std::to_string(v));
      }
      n.nb[n.deg++] = others[1 - i];
    }
  }
  if (nodes.empty()) {
    closed = false;
    return {};
  }

  // Start from an endpoint if the link is open.
  VertexId start = nodes[0].id;
  closed = true;
  for (const auto& n : nodes) {
    if (n.deg == 1) {
      start = n.id;
      closed = false;
    }
  }

  std::vector<VertexId> chain;
  chain.reserve(nodes.size());
  VertexId prev = v;  // sentinel never equal to a link vertex
  VertexId cur = start;
  while (true) {
    chain.push_back(cur);
    const Node& n = node_of(cur);
    VertexId next = cur;
    bool found = false;
    for (int i = 0; i < n.deg; ++i) {
      if (n.nb[i] != prev) {
        next = n.nb[i];
        found = true;
        break;
      }
    }
    if (!found) break;                      // open end
    if (next == start && closed) break;     // cycle complete
    if (chain.size() > nodes.size()) {
      throw ContradictionError("link walk does not terminate at vertex " +
                               std::to_string(v));
    }
    prev = cur;
    cur = next;
  }
  if (chain.size() != nodes.size()) {
    throw ContradictionError("link is not a single chain at vertex " +
                             std::to_string(v));
  }
  return chain;
}

}  // namespace udisc
