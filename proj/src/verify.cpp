#include <udisc/verify.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace udisc {

namespace {

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {
    // begin() hands out references into the vector; keep them stable.
    report_.checks.reserve(32);
  }

  CheckResult& begin(const std::string& name) {
    CheckResult c;
    c.name = name;
    report_.checks.push_back(std::move(c));
    return report_.checks.back();
  }

  static void fail(CheckResult& c, const std::string& detail) {
    if (c.pass) c.detail = detail;
    c.pass = false;
  }

  static void expect_equal(CheckResult& c, const BigInt& lhs,
                           const BigInt& rhs, const std::string& where) {
    if (lhs != rhs) {
      fail(c, where + ": " + lhs.str() + " != " + rhs.str());
    }
  }

  static void expect_equal(CheckResult& c, std::int64_t lhs, std::int64_t rhs,
                           const std::string& where) {
    expect_equal(c, BigInt(lhs), BigInt(rhs), where);
  }

  void finish() {
    for (const auto& c : report_.checks) {
      report_.all_pass = report_.all_pass && c.pass;
    }
  }

 private:
  VerifyReport& report_;
};

std::string at_n(int n) { return "n = " + std::to_string(n); }

void check_count_couplings(Checker& ck, const std::vector<SphereStats>& stats) {
  auto& split_v = ck.begin("vertex-split");
  auto& split_e = ck.begin("edge-split");
  auto& st_edges = ck.begin("st-edge-count");
  for (const auto& st : stats) {
    Checker::expect_equal(split_v, st.len_S, st.count_V + st.count_W, at_n(st.n));
    Checker::expect_equal(split_e, st.len_S, st.count_E + st.count_F, at_n(st.n));
    Checker::expect_equal(st_edges, st.count_E, 2 * st.count_V, at_n(st.n));
  }
}

void check_growth_relations(Checker& ck, const Params& p,
                            const std::vector<SphereStats>& stats) {
  auto& growth = ck.begin("growth-relation");
  auto& coupling = ck.begin("s-vertex-coupling");
  for (std::size_t n = 2; n < stats.size(); ++n) {
    Checker::expect_equal(
        growth, stats[n].len_S,
        std::int64_t{p.S} * stats[n - 1].count_V +
            std::int64_t{p.T} * stats[n - 1].count_W - stats[n - 2].len_S,
        at_n(static_cast<int>(n)));
    Checker::expect_equal(
        coupling, std::int64_t{p.T / 2} * stats[n - 1].count_W,
        stats[n].count_V + stats[n - 2].count_V, at_n(static_cast<int>(n)));
  }
}

void check_y_set(Checker& ck, const Disc& d,
                 const std::vector<SphereStats>& stats) {
  auto& c = ck.begin("y-set-size");
  for (int k = 1; k <= d.radius(); ++k) {
    std::int64_t twos = 0;
    for (VertexId v = d.layer_begin(k); v < d.layer_end(k); ++v) {
      if (d.down_degree(v) == 2) ++twos;
    }
    Checker::expect_equal(c, twos, stats[k - 1].len_S, "layer " + std::to_string(k));
  }
}

void check_gauss_bonnet_picks(Checker& ck, const Disc& d,
                              const std::vector<SphereStats>& stats) {
  auto& gb = ck.begin("gauss-bonnet");
  auto& picks = ck.begin("picks-formula");
  const auto reports = all_curvature_reports(d);
  for (const auto& rep : reports) {
    Checker::expect_equal(gb, rep.k_g + rep.K, 6, at_n(rep.n));
    const std::int64_t boundary = static_cast<std::int64_t>(d.layer_size(rep.n));
    Checker::expect_equal(picks, stats[rep.n].area,
                          2 * rep.interior_vertices + boundary - 2,
                          at_n(rep.n));
  }
}

void check_links(Checker& ck, const Disc& d) {
  auto& degrees = ck.begin("interior-degrees");
  auto& alternation = ck.begin("link-alternation");
  const LinkIndex links(d);
  for (int k = 0; k < d.radius(); ++k) {
    for (VertexId v = d.layer_begin(k); v < d.layer_end(k); ++v) {
      bool closed = false;
      const auto cycle = links.link(v, closed);
      if (!closed || static_cast<int>(cycle.size()) != d.target_degree(v)) {
        Checker::fail(degrees, "vertex " + std::to_string(v) + " has " +
                                   std::to_string(cycle.size()) +
                                   (closed ? " (closed)" : " (open)"));
        continue;
      }
      if (d.role_kind(v) == VertexKind::SKind) {
        for (const VertexId u : cycle) {
          if (d.role_kind(u) == VertexKind::SKind) {
            Checker::fail(alternation, "s-vertex " + std::to_string(v) +
                                           " has s-neighbor " +
                                           std::to_string(u));
          }
        }
      } else {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          const VertexId a = cycle[i];
          const VertexId b = cycle[(i + 1) % cycle.size()];
          if (d.role_kind(a) == d.role_kind(b)) {
            Checker::fail(alternation, "t-vertex " + std::to_string(v) +
                                           " link does not alternate");
            break;
          }
        }
      }
    }
  }
}

void check_down_neighbors(Checker& ck, const Disc& d, const Adjacency& adj) {
  auto& c = ck.begin("down-neighbors");
  for (int k = 1; k <= d.radius(); ++k) {
    for (VertexId v = d.layer_begin(k); v < d.layer_end(k); ++v) {
      int below = 0;
      for (const VertexId u : adj.of(v)) {
        if (d.layer_of(u) == k - 1) ++below;
      }
      if (below != d.down_degree(v) || below < 1 || below > 2) {
        Checker::fail(c, "vertex " + std::to_string(v) + " has " +
                             std::to_string(below) + " lower neighbors");
      }
    }
  }
}

void check_triangle_sanity(Checker& ck, const Disc& d) {
  auto& c = ck.begin("triangle-sanity");
  auto sorted = d.triangles();
  for (auto& t : sorted) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) {
      Checker::fail(c, "degenerate triangle");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    Checker::fail(c, "duplicate triangle");
  }
}

void check_euler(Checker& ck, const Disc& d, const Adjacency& adj) {
  auto& c = ck.begin("euler-characteristic");
  // Count edges and triangles inside radius n for every n.
  std::vector<std::int64_t> edges(d.radius() + 1, 0);
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    for (const VertexId u : adj.of(v)) {
      if (u > v) ++edges[std::max(d.layer_of(v), d.layer_of(u))];
    }
  }
  std::vector<std::int64_t> tris(d.radius() + 1, 0);
  for (const auto& t : d.triangles()) {
    const int high = std::max({d.layer_of(t[0]), d.layer_of(t[1]),
                               d.layer_of(t[2])});
    ++tris[high];
  }
  std::int64_t E = 0, F = 0;
  for (int n = 1; n <= d.radius(); ++n) {
    E += edges[n];
    F += tris[n];
    const std::int64_t V = d.layer_end(n);
    Checker::expect_equal(c, V - E + F, 1, at_n(n));
  }
}

void check_three_way(Checker& ck, const Params& p,
                     const std::vector<SphereStats>& stats) {
  auto& gen_rec = ck.begin("generator-vs-recurrence");
  auto& rec_cf = ck.begin("recurrence-vs-closed-form");
  auto& area_id = ck.begin("area-identity");
  const int n_max = static_cast<int>(stats.size()) - 1;

  for (const Quantity q : kAllQuantities) {
    const auto seq = terms(p, q, p.center, n_max);
    const auto cf = closed_form(p, q, p.center);
    for (int n = 0; n <= n_max; ++n) {
      std::int64_t counted = 0;
      switch (q) {
        case Quantity::LenS: counted = stats[n].len_S; break;
        case Quantity::CountV: counted = stats[n].count_V; break;
        case Quantity::CountW: counted = stats[n].count_W; break;
        case Quantity::CountE: counted = stats[n].count_E; break;
        case Quantity::CountF: counted = stats[n].count_F; break;
      }
      Checker::expect_equal(gen_rec, BigInt(counted), seq[n],
                            std::string(to_string(q)) + " at " + at_n(n));

      const double evaluated = closed_form_eval(cf, n);
      const double exact = seq[n].convert_to<double>();
      const double dev =
          std::abs(evaluated - exact) / std::max(1.0, std::abs(exact));
      rec_cf.max_deviation = std::max(rec_cf.max_deviation, dev);
      if (dev > 1e-6) {
        Checker::fail(rec_cf, std::string(to_string(q)) + " at " + at_n(n));
      }
    }
  }

  const auto areas = area_series(p, p.center, n_max);
  for (int n = 0; n <= n_max; ++n) {
    Checker::expect_equal(area_id, BigInt(stats[n].area), areas[n], at_n(n));
  }
}

void check_roots(Checker& ck, const Params& p) {
  auto& c = ck.begin("characteristic-roots");
  const PRPair pr = derive_pr(p);
  const ClosedForm cf = characteristic_roots(pr);
  auto expect_small = [&](double dev, const std::string& what) {
    c.max_deviation = std::max(c.max_deviation, dev);
    if (dev > 1e-12) Checker::fail(c, what);
  };
  expect_small(std::abs(cf.a * cf.b - 1.0), "a*b != 1");
  expect_small(std::abs(cf.a + cf.b - pr.P) / pr.P, "a+b != P");
  expect_small(std::abs(cf.c * cf.d - 1.0), "c*d != 1");
  expect_small(std::abs(cf.c + cf.d + pr.R) / pr.R, "c+d != -R");
  switch (pr.regime) {
    case RootRegime::DuplicateR_eq_2:
      if (cf.c != cf.d || cf.c.real() != -1.0 || cf.c.imag() != 0.0) {
        Checker::fail(c, "duplicate case must have c = d = -1");
      }
      break;
    case RootRegime::ComplexR_lt_2:
      expect_small(std::abs(std::abs(cf.c) - 1.0), "|c| != 1");
      expect_small(std::abs(std::abs(cf.d) - 1.0), "|d| != 1");
      break;
    case RootRegime::DistinctRealR_gt_2:
      if (cf.c.imag() != 0.0 || cf.d.imag() != 0.0 ||
          cf.c.real() == cf.d.real()) {
        Checker::fail(c, "distinct case must have two real roots");
      }
      break;
  }
}

void check_limit_formulas(Checker& ck, const Params& p) {
  auto& c = ck.begin("limit-formulas");
  try {
    ratio_limit(p);
    avg_curvature_limit(p);
  } catch (const ContradictionError& e) {
    Checker::fail(c, e.what());
  }
}

void check_flat_values(Checker& ck, const std::vector<SphereStats>& stats,
                       const Disc& d) {
  auto& c = ck.begin("flat-regression");
  for (const auto& st : stats) {
    Checker::expect_equal(c, st.len_S, std::int64_t{6} * st.n,
                          "length at " + at_n(st.n));
    Checker::expect_equal(c, st.area, std::int64_t{6} * st.n * st.n,
                          "area at " + at_n(st.n));
  }
  for (const auto& rep : all_curvature_reports(d)) {
    Checker::expect_equal(c, rep.K, 0, "curvature at " + at_n(rep.n));
    Checker::expect_equal(c, rep.k_g, 6, "boundary curvature at " + at_n(rep.n));
  }
}

}  // namespace

VerifyReport run_verification(const Params& p, int radius, int radius_cap) {
  VerifyReport report;
  report.params = p;
  report.radius = radius;
  report.regime = p.flat() ? "flat" : to_string(derive_pr(p).regime);

  const Disc disc = generate_disc(p, radius, radius_cap);
  const auto stats = all_sphere_stats(disc);
  const Adjacency adj = build_adjacency(disc);

  Checker ck(report);
  check_count_couplings(ck, stats);
  check_growth_relations(ck, p, stats);
  check_y_set(ck, disc, stats);
  check_gauss_bonnet_picks(ck, disc, stats);
  check_links(ck, disc);
  check_down_neighbors(ck, disc, adj);
  check_triangle_sanity(ck, disc);
  check_euler(ck, disc, adj);
  if (p.flat()) {
    check_flat_values(ck, stats, disc);
  } else {
    check_three_way(ck, p, stats);
    check_roots(ck, p);
    check_limit_formulas(ck, p);
  }
  ck.finish();
  return report;
}

}  // namespace udisc
