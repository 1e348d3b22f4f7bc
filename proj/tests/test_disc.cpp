#include <doctest.h>

#include <udisc/disc.hpp>
#include <udisc/sequence.hpp>

#include <vector>

using namespace udisc;

namespace {

Params make(int s, int t, CenterKind c = CenterKind::SVertex) {
  return validate_params(s, t, c);
}

std::vector<std::size_t> layer_sizes(const Disc& d) {
  std::vector<std::size_t> sizes;
  for (int k = 1; k <= d.radius(); ++k) sizes.push_back(d.layer_size(k));
  return sizes;
}

}  // namespace

TEST_CASE("generation rejects what it cannot build") {
  CHECK_THROWS_AS(generate_disc(make(7, 7), 3), UnsupportedOddT);
  CHECK_THROWS_AS(generate_disc(make(8, 6), 0), RadiusOutOfRange);
  CHECK_THROWS_AS(generate_disc(make(8, 6), 65), CapExceeded);
  // only the flat lattice stays small enough to actually exceed the cap
  CHECK_NOTHROW(generate_disc(make(6, 6), 65, 70));
}

TEST_CASE("radius 1 is a single wheel") {
  const Disc d = generate_disc(make(8, 6), 1);
  CHECK(d.vertex_count() == 9);
  CHECK(d.triangles().size() == 8);
  CHECK(d.kind(0) == VertexKind::Center);
  for (VertexId v = 1; v < 9; ++v) CHECK(d.kind(v) == VertexKind::TKind);
}

TEST_CASE("layer sizes match the seed tables") {
  CHECK(layer_sizes(generate_disc(make(8, 6), 3)) ==
        std::vector<std::size_t>{8, 16, 40});
  CHECK(layer_sizes(generate_disc(make(6, 6), 4)) ==
        std::vector<std::size_t>{6, 12, 18, 24});
  CHECK(layer_sizes(generate_disc(make(8, 6, CenterKind::TVertex), 2)) ==
        std::vector<std::size_t>{6, 18});
  CHECK(layer_sizes(generate_disc(make(10, 6), 3)) ==
        std::vector<std::size_t>{10, 20, 70});
}

TEST_CASE("sphere statistics by enumeration") {
  const Disc d = generate_disc(make(8, 6), 4);

  const SphereStats st0 = sphere_stats(d, 0);
  CHECK(st0.len_S == 0);
  CHECK(st0.count_V == 0);
  CHECK(st0.count_W == 0);
  CHECK(st0.count_E == 0);
  CHECK(st0.count_F == 0);
  CHECK(st0.area == 0);

  const SphereStats st2 = sphere_stats(d, 2);
  CHECK(st2.len_S == 16);
  CHECK(st2.count_V == 8);
  CHECK(st2.count_W == 8);
  CHECK(st2.count_E == 16);
  CHECK(st2.count_F == 0);
  CHECK(st2.area == 32);

  const SphereStats st3 = sphere_stats(d, 3);
  CHECK(st3.len_S == 40);
  CHECK(st3.count_V == 8);
  CHECK(st3.count_W == 32);
  CHECK(st3.count_E == 16);
  CHECK(st3.count_F == 24);
  CHECK(st3.area == 88);

  CHECK_THROWS_AS(sphere_stats(d, 4), RadiusOutOfRange);
  CHECK_THROWS_AS(sphere_stats(d, -1), RadiusOutOfRange);
}

TEST_CASE("batch stats equal the per-sphere enumeration") {
  for (const auto& [s, t] : std::vector<std::pair<int, int>>{
           {8, 6}, {6, 8}, {6, 6}, {16, 8}}) {
    for (const CenterKind c : {CenterKind::SVertex, CenterKind::TVertex}) {
      const Disc d = generate_disc(make(s, t, c), 5);
      const auto batch = all_sphere_stats(d);
      REQUIRE(batch.size() == 5);
      for (int n = 0; n < 5; ++n) {
        const SphereStats st = sphere_stats(d, n);
        CHECK(batch[n].len_S == st.len_S);
        CHECK(batch[n].count_V == st.count_V);
        CHECK(batch[n].count_W == st.count_W);
        CHECK(batch[n].count_E == st.count_E);
        CHECK(batch[n].count_F == st.count_F);
        CHECK(batch[n].area == st.area);
      }
    }
  }
}

TEST_CASE("t-centered statistics") {
  const Disc d = generate_disc(make(8, 6, CenterKind::TVertex), 3);
  const SphereStats st1 = sphere_stats(d, 1);
  CHECK(st1.len_S == 6);
  CHECK(st1.count_V == 3);
  CHECK(st1.count_W == 3);
  CHECK(st1.count_E == 6);
  CHECK(st1.count_F == 0);
  CHECK(st1.area == 6);

  const SphereStats st2 = sphere_stats(d, 2);
  CHECK(st2.len_S == 18);
  CHECK(st2.count_V == 3);
  CHECK(st2.count_W == 15);
  CHECK(st2.count_E == 6);
  CHECK(st2.count_F == 12);
}

TEST_CASE("curvature reports") {
  const Disc d10 = generate_disc(make(10, 6), 2);
  const CurvatureReport r1 = curvature_report(d10, 1);
  CHECK(r1.K == -4);
  CHECK(r1.interior_vertices == 1);
  CHECK(r1.K_avg == -4.0);
  CHECK(r1.k_g == 10);

  const Disc flat = generate_disc(make(6, 6), 5);
  for (int n = 1; n <= 4; ++n) {
    const CurvatureReport r = curvature_report(flat, n);
    CHECK(r.K == 0);
    CHECK(r.k_g == 6);
    CHECK(r.K_avg == 0.0);
  }

  const Disc d8 = generate_disc(make(8, 6), 3);
  for (int n = 1; n <= 2; ++n) {
    const CurvatureReport r = curvature_report(d8, n);
    CHECK(r.k_g + r.K == 6);
  }
  CHECK_THROWS_AS(curvature_report(d8, 0), RadiusOutOfRange);
  CHECK_THROWS_AS(curvature_report(d8, 3), RadiusOutOfRange);

  // batch agrees with per-call reports
  const auto batch = all_curvature_reports(d8);
  REQUIRE(batch.size() == 2);
  for (int n = 1; n <= 2; ++n) {
    const CurvatureReport r = curvature_report(d8, n);
    CHECK(batch[n - 1].K == r.K);
    CHECK(batch[n - 1].k_g == r.k_g);
    CHECK(batch[n - 1].interior_vertices == r.interior_vertices);
    CHECK(batch[n - 1].K_avg == r.K_avg);
  }
}

TEST_CASE("Pick's formula at every complete layer") {
  const Disc d = generate_disc(make(8, 6), 3);
  CHECK(picks_check(d, 1));  // 8 = 2*1 + 8 - 2
  CHECK(picks_check(d, 2));  // 32 = 2*9 + 16 - 2

  const Disc flat = generate_disc(make(6, 6), 4);
  CHECK(picks_check(flat, 3));  // 54 = 2*19 + 18 - 2
}

TEST_CASE("down degrees split layers into the Y and Z sets") {
  const Disc d = generate_disc(make(8, 6), 4);
  const auto stats = all_sphere_stats(d);
  for (int k = 1; k <= 4; ++k) {
    std::int64_t twos = 0;
    for (VertexId v = d.layer_begin(k); v < d.layer_end(k); ++v) {
      const int dd = d.down_degree(v);
      CHECK(dd >= 1);
      CHECK(dd <= 2);
      if (dd == 2) ++twos;
    }
    CHECK(twos == stats[k - 1].len_S);
  }
}

TEST_CASE("interior links close to the right degree and alternate") {
  for (const auto& [s, t] : std::vector<std::pair<int, int>>{
           {8, 6}, {6, 8}, {6, 6}, {8, 8}}) {
    for (const CenterKind c : {CenterKind::SVertex, CenterKind::TVertex}) {
      const Disc d = generate_disc(make(s, t, c), 4);
      const LinkIndex links(d);
      for (int k = 0; k < 4; ++k) {
        for (VertexId v = d.layer_begin(k); v < d.layer_end(k); ++v) {
          bool closed = false;
          const auto cycle = links.link(v, closed);
          CHECK(closed);
          CHECK(static_cast<int>(cycle.size()) == d.target_degree(v));
          if (d.role_kind(v) == VertexKind::SKind) {
            for (const VertexId u : cycle) {
              CHECK(d.role_kind(u) == VertexKind::TKind);
            }
          } else {
            for (std::size_t i = 0; i < cycle.size(); ++i) {
              CHECK(d.role_kind(cycle[i]) !=
                    d.role_kind(cycle[(i + 1) % cycle.size()]));
            }
          }
        }
      }
      // boundary links stay open
      bool closed = true;
      links.link(d.layer_begin(4), closed);
      CHECK_FALSE(closed);
    }
  }
}

TEST_CASE("every vertex hangs onto the previous layer") {
  const Disc d = generate_disc(make(6, 10), 4);
  const Adjacency adj = build_adjacency(d);
  for (int k = 1; k <= 4; ++k) {
    for (VertexId v = d.layer_begin(k); v < d.layer_end(k); ++v) {
      int below = 0;
      for (const VertexId u : adj.of(v)) {
        if (d.layer_of(u) == k - 1) ++below;
      }
      CHECK(below == d.down_degree(v));
    }
  }
}

TEST_CASE("Euler characteristic of every complete sub-disc is 1") {
  for (const auto& [s, t] : std::vector<std::pair<int, int>>{
           {8, 6}, {10, 6}, {6, 6}}) {
    const Disc d = generate_disc(make(s, t), 4);
    const Adjacency adj = build_adjacency(d);
    for (int n = 1; n <= 4; ++n) {
      std::int64_t V = d.layer_end(n);
      std::int64_t E = 0;
      for (VertexId v = 0; v < d.layer_end(n); ++v) {
        for (const VertexId u : adj.of(v)) {
          if (u > v && d.layer_of(u) <= n) ++E;
        }
      }
      std::int64_t F = 0;
      for (const auto& tri : d.triangles()) {
        int high = 0;
        for (const VertexId u : tri) high = std::max(high, d.layer_of(u));
        if (high <= n) ++F;
      }
      CHECK(V - E + F == 1);
    }
  }
}

TEST_CASE("generated counts match the recurrence for both centers") {
  for (const auto& [s, t] : std::vector<std::pair<int, int>>{
           {8, 6}, {6, 8}, {8, 8}}) {
    for (const CenterKind c : {CenterKind::SVertex, CenterKind::TVertex}) {
      const Params p = make(s, t, c);
      const Disc d = generate_disc(p, 6);
      const auto stats = all_sphere_stats(d);
      const auto len = terms(p, Quantity::LenS, c, 5);
      const auto v = terms(p, Quantity::CountV, c, 5);
      const auto w = terms(p, Quantity::CountW, c, 5);
      const auto e = terms(p, Quantity::CountE, c, 5);
      const auto f = terms(p, Quantity::CountF, c, 5);
      for (int n = 0; n <= 5; ++n) {
        CHECK(BigInt(stats[n].len_S) == len[n]);
        CHECK(BigInt(stats[n].count_V) == v[n]);
        CHECK(BigInt(stats[n].count_W) == w[n]);
        CHECK(BigInt(stats[n].count_E) == e[n]);
        CHECK(BigInt(stats[n].count_F) == f[n]);
      }
    }
  }
}

TEST_CASE("flat disc is the triangular lattice") {
  const Disc d = generate_disc(make(6, 6), 8);
  const auto stats = all_sphere_stats(d);
  for (int n = 0; n <= 7; ++n) {
    CHECK(stats[n].len_S == 6 * n);
    CHECK(stats[n].area == 6 * n * n);
  }
}
