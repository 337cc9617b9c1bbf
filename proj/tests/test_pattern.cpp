#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include <hitomezashi/oracle.hpp>
#include <hitomezashi/pattern.hpp>

#include "oracles/brute_force.hpp"

using namespace hitomezashi;

namespace {

using Sig = std::tuple<Index, Index, Index, std::set<std::tuple<Index, Index, int>>>;  // dx, dy, length, edges

Sig signature(const Trail& t) {
  std::set<std::tuple<Index, Index, int>> es;
  for (const auto& e : t.edges) es.insert({e.from.i, e.from.j, static_cast<int>(e.axis)});
  return {t.dx, t.dy, t.length(), es};
}

Sig signature(const brute::Loop& l) {
  std::set<std::tuple<Index, Index, int>> es;
  for (const auto& e : l.edges) es.insert({e.i, e.j, e.axis});
  return {l.dx, l.dy, static_cast<Index>(l.edges.size()), es};
}

std::multiset<Sig> loop_signatures(const std::vector<Trail>& ts) {
  std::multiset<Sig> out;
  for (const auto& t : ts) {
    if (t.is_loop()) out.insert(signature(t));
  }
  return out;
}

std::multiset<Sig> loop_signatures(const brute::Components& c) {
  std::multiset<Sig> out;
  for (const auto& l : c.loops) out.insert(signature(l));
  return out;
}

void expect_well_formed(const Pattern& p, const Trail& t) {
  for (std::size_t k = 0; k + 1 < t.edges.size(); ++k) {
    ASSERT_EQ(t.edges[k].to, t.edges[k + 1].from);
    ASSERT_NE(t.edges[k].axis, t.edges[k + 1].axis);
  }
  for (const auto& e : t.edges) {
    const auto want = p.try_outgoing(e.from, e.axis);
    ASSERT_TRUE(want.has_value());
    ASSERT_EQ(*want, e);
  }
  if (t.is_loop()) {
    ASSERT_EQ(t.edges.back().to, t.edges.front().from);
    ASSERT_NE(t.edges.back().axis, t.edges.front().axis);
    ASSERT_EQ(t.length() % 2, 0);
  }
}

const PlanarWindow kBig{-10, 10, -10, 10};

}  // namespace

TEST(OutgoingEdge, Examples) {
  const Pattern p = Pattern::planar(BiInfSeq::windowed(0, {1}), BiInfSeq::windowed(0, {-1}), kBig);
  const auto h = outgoing_edge(p, {0, 0}, Axis::Horizontal);
  EXPECT_EQ(h.to, (Vertex{1, 0}));
  EXPECT_EQ(h.step, 1);
  // y_0 = -1: the vertical edge runs from (0, 5) down to (0, 4).
  const Pattern q = Pattern::planar(BiInfSeq::windowed(0, {1}), BiInfSeq::windowed(0, {-1}), kBig);
  const auto v = outgoing_edge(q, {0, 5}, Axis::Vertical);
  EXPECT_EQ(v.to, (Vertex{0, 4}));
  EXPECT_EQ(v.step, -1);
  const Pattern t = Pattern::torus(CyclicSeq::parse("++"), CyclicSeq::parse("++"));
  const auto w = outgoing_edge(t, {1, 1}, Axis::Horizontal);
  EXPECT_EQ(w.to, (Vertex{0, 1}));
  EXPECT_EQ(w.step, 1);
}

TEST(OutgoingEdge, FollowsStringsEverywhere) {
  SplitMix64 rng(2);
  const BiInfSeq x = BiInfSeq::windowed(-2, random_signs(rng, 6));
  const BiInfSeq y = BiInfSeq::windowed(1, random_signs(rng, 5));
  const Pattern p = Pattern::planar(x, y, kBig);
  for (Index i = -9; i <= 9; ++i) {
    for (Index j = -9; j <= 9; ++j) {
      EXPECT_EQ(outgoing_edge(p, {i, j}, Axis::Horizontal).to, (Vertex{i + x[j], j}));
      EXPECT_EQ(outgoing_edge(p, {i, j}, Axis::Vertical).to, (Vertex{i, j + y[i]}));
    }
  }
}

TEST(OutgoingEdge, OutOfWindow) {
  const Pattern p = Pattern::planar(BiInfSeq::windowed(0, {1}), BiInfSeq::windowed(0, {1}), PlanarWindow{0, 2, 0, 2});
  for (const Vertex v : {Vertex{2, 0}, Vertex{5, 5}}) {
    try {
      (void)outgoing_edge(p, v, Axis::Horizontal);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::OutOfWindow);
    }
  }
}

TEST(Trace, TwoByTwoTorusExample) {
  const Pattern p = Pattern::torus(CyclicSeq::parse("++"), CyclicSeq::parse("++"));
  const Trail t = trace(p, DirectedEdge{{0, 0}, {1, 0}, Axis::Horizontal, 1}, 100);
  ASSERT_TRUE(t.is_loop());
  EXPECT_EQ(t.length(), 4);
  EXPECT_EQ(t.dx, 2);
  EXPECT_EQ(t.dy, 2);
  EXPECT_EQ(homology_of(t, p.topology()), (Homology{1, 1}));
  const std::vector<Vertex> visits{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(t.edges[k].from, visits[k]);
}

TEST(Trace, OneByOneTori) {
  for (const char* xs : {"+", "-"}) {
    for (const char* ys : {"+", "-"}) {
      const Pattern p = Pattern::torus(CyclicSeq::parse(xs), CyclicSeq::parse(ys));
      const auto comps = enumerate_components(p);
      ASSERT_EQ(comps.size(), 1u);
      const Trail& t = comps[0];
      ASSERT_TRUE(t.is_loop());
      EXPECT_EQ(t.length(), 2);
      EXPECT_EQ(homology_of(t, p.topology()), (Homology{xs[0] == '+' ? 1 : -1, ys[0] == '+' ? 1 : -1}));
    }
  }
}

TEST(Trace, RetracingFromAnyLoopEdgeGivesTheSameCycle) {
  SplitMix64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Index m = 1 + static_cast<Index>(rng.below(6)), n = 1 + static_cast<Index>(rng.below(6));
    const Pattern p = Pattern::torus(CyclicSeq(random_signs(rng, n)), CyclicSeq(random_signs(rng, m)));
    for (const auto& t : enumerate_components(p)) {
      for (std::size_t k = 0; k < t.edges.size(); ++k) {
        const Trail r = trace(p, t.edges[k]);
        ASSERT_TRUE(r.is_loop());
        ASSERT_EQ(r.length(), t.length());
        for (std::size_t q = 0; q < t.edges.size(); ++q) ASSERT_EQ(r.edges[q], t.edges[(k + q) % t.edges.size()]);
      }
    }
  }
}

TEST(Trace, RejectsInvalidStart) {
  const Pattern p = Pattern::torus(CyclicSeq::parse("++"), CyclicSeq::parse("++"));
  try {
    (void)trace(p, DirectedEdge{{1, 0}, {0, 0}, Axis::Horizontal, -1}, 10);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidEdge);
  }
  EXPECT_THROW((void)trace(p, DirectedEdge{{0, 0}, {1, 0}, Axis::Horizontal, 1}, 0), Error);
}

TEST(Trace, BudgetExhaustionTruncates) {
  const Pattern p = Pattern::torus(CyclicSeq::parse("++++--+"), CyclicSeq::parse("++--+-+"));
  Trail longest;
  for (auto& t : enumerate_components(p)) {
    if (t.length() > longest.length()) longest = t;
  }
  const Trail cut = trace(p, longest.edges.front(), 3);
  EXPECT_TRUE(cut.truncated);
  EXPECT_FALSE(cut.is_loop());
  EXPECT_EQ(cut.length(), 3);
  const Trail exact = trace(p, longest.edges.front(), longest.length());
  EXPECT_TRUE(exact.is_loop());
  EXPECT_FALSE(exact.truncated);
}

TEST(Trace, PlanarPathsReachTheBoundaryBothWays) {
  SplitMix64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const BiInfSeq x = BiInfSeq::windowed(0, random_signs(rng, 8));
    const BiInfSeq y = BiInfSeq::windowed(0, random_signs(rng, 8));
    const Pattern p = Pattern::planar(x, y, PlanarWindow{0, 7, 0, 7});
    for (const auto& t : enumerate_components(p)) {
      expect_well_formed(p, t);
      if (t.is_loop()) continue;
      EXPECT_FALSE(t.truncated);
      EXPECT_FALSE(p.try_outgoing(t.edges.back().to, other(t.edges.back().axis)));
      EXPECT_FALSE(p.try_incoming(t.edges.front().from, other(t.edges.front().axis)));
    }
  }
}

TEST(Enumerate, TwoByTwoAlternatingTorus) {
  const Pattern p = Pattern::torus(CyclicSeq::parse("+-"), CyclicSeq::parse("+-"));
  const auto comps = enumerate_components(p);
  const auto ref = brute::components(brute::torus({1, -1}, {1, -1}));
  EXPECT_EQ(loop_signatures(comps), loop_signatures(ref));
  // Frozen from the reference tracer: two loops of length four, both trivial.
  ASSERT_EQ(comps.size(), 2u);
  for (const auto& t : comps) {
    EXPECT_TRUE(t.is_loop());
    EXPECT_EQ(t.length(), 4);
    EXPECT_TRUE(homology_of(t, p.topology()).trivial());
  }
}

TEST(Enumerate, MatchesReferenceTracerOnAllSmallTori) {
  for (Index m = 1; m <= 4; ++m) {
    for (Index n = 1; n <= 4; ++n) {
      for (std::uint64_t xb = 0; xb < (1u << n); ++xb) {
        for (std::uint64_t yb = 0; yb < (1u << m); ++yb) {
          const auto xv = signs_from_bits(xb, n), yv = signs_from_bits(yb, m);
          const Pattern p = Pattern::torus(CyclicSeq(xv), CyclicSeq(yv));
          const auto comps = enumerate_components(p);
          ASSERT_EQ(loop_signatures(comps), loop_signatures(brute::components(brute::torus(xv, yv))));
          Index edges = 0;
          Homology sum;
          for (const auto& t : comps) {
            ASSERT_TRUE(t.is_loop());
            edges += t.length();
            const Homology h = homology_of(t, p.topology());
            sum.hx += h.hx;
            sum.hy += h.hy;
            if (!h.trivial()) { ASSERT_EQ(std::gcd(h.hx, h.hy), 1); }
          }
          ASSERT_EQ(edges, 2 * m * n);
          ASSERT_EQ(sum, (Homology{CyclicSeq(xv).total(), CyclicSeq(yv).total()}));
        }
      }
    }
  }
}

TEST(Enumerate, CanonicalOrderAndStart) {
  const Pattern p = Pattern::torus(CyclicSeq::parse("++-+"), CyclicSeq::parse("+--"));
  const auto comps = enumerate_components(p);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto& t = comps[k];
    for (const auto& e : t.edges) EXPECT_FALSE(edge_less(e, t.edges.front()));
    if (k > 0) { EXPECT_TRUE(edge_less(comps[k - 1].edges.front(), t.edges.front())); }
  }
}

TEST(Enumerate, MatchesReferenceOnPlanarWindows) {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const auto xv = random_signs(rng, 9), yv = random_signs(rng, 7);
    const Pattern p = Pattern::planar(BiInfSeq::windowed(-1, xv), BiInfSeq::windowed(2, yv), PlanarWindow{1, 9, -2, 8});
    const auto comps = enumerate_components(p);
    const auto ref = brute::components(brute::planar(brute::windowed(-1, xv), brute::windowed(2, yv), 1, 9, -2, 8));
    ASSERT_EQ(loop_signatures(comps), loop_signatures(ref));
    const auto paths = std::count_if(comps.begin(), comps.end(), [](const Trail& t) { return !t.is_loop(); });
    ASSERT_EQ(static_cast<Index>(paths), ref.paths);
    Index edges = 0;
    for (const auto& t : comps) edges += t.length();
    ASSERT_EQ(edges, static_cast<Index>(all_edges(p).size()));
  }
}

TEST(Enumerate, CylinderLoopsWindAtMostOnce) {
  SplitMix64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 1 + static_cast<Index>(rng.below(7));
    const Index len = 1 + static_cast<Index>(rng.below(10));
    const auto xv = random_signs(rng, n), yv = random_signs(rng, len);
    const Pattern p = Pattern::cylinder(CyclicSeq(xv), BiInfSeq::windowed(0, yv), -2, len + 1);
    const auto comps = enumerate_components(p);
    ASSERT_EQ(loop_signatures(comps), loop_signatures(brute::components(brute::cylinder(xv, brute::windowed(0, yv), -2, len + 1))));
    for (const auto& t : comps) {
      if (!t.is_loop()) continue;
      const Index h = homology_of(t, p.topology()).hy;
      ASSERT_LE(std::abs(h), 1);
    }
  }
}

TEST(Homology, Errors) {
  Trail open;
  open.edges.push_back(DirectedEdge{});
  try {
    (void)homology_of(open, Torus{1, 1});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotALoop);
  }
  EXPECT_THROW((void)bounding_cylinder(open), Error);
  EXPECT_THROW((void)loop_length(open), Error);
}

TEST(Homology, SquareLoopIsTrivialOnAnyTorus) {
  // x = (+,-), y = (-,+) makes the unit square at the origin a loop.
  for (Index m = 2; m <= 4; ++m) {
    for (Index n = 2; n <= 4; ++n) {
      std::vector<int> xv(static_cast<std::size_t>(n), 1), yv(static_cast<std::size_t>(m), 1);
      xv[1] = -1;
      yv[0] = -1;
      const Pattern p = Pattern::torus(CyclicSeq(xv), CyclicSeq(yv));
      const Trail t = trace(p, outgoing_edge(p, {0, 0}, Axis::Horizontal));
      ASSERT_TRUE(t.is_loop());
      if (t.length() == 4) { EXPECT_TRUE(homology_of(t, p.topology()).trivial()); }
    }
  }
  const Pattern p = Pattern::torus(CyclicSeq::parse("+-+-"), CyclicSeq::parse("-+-+"));
  const Trail t = trace(p, outgoing_edge(p, {0, 0}, Axis::Horizontal));
  EXPECT_EQ(t.length(), 4);
  EXPECT_TRUE(homology_of(t, p.topology()).trivial());
}

TEST(Geometry, UnitSquareLoop) {
  const Pattern p = Pattern::planar(BiInfSeq::windowed(0, {1, -1}), BiInfSeq::windowed(0, {-1, 1}), PlanarWindow{0, 1, 0, 1});
  const Trail t = trace(p, outgoing_edge(p, {0, 0}, Axis::Horizontal));
  ASSERT_TRUE(t.is_loop());
  EXPECT_EQ(loop_length(t), 4);
  EXPECT_EQ(enclosed_area(t, p.topology()), 1);
  EXPECT_EQ(homology_of(t, p.topology()), Homology{});
}

TEST(Geometry, AreaNeedsPlanarLoop) {
  const Pattern p = Pattern::torus(CyclicSeq::parse("+-+-"), CyclicSeq::parse("-+-+"));
  const Trail t = trace(p, outgoing_edge(p, {0, 0}, Axis::Horizontal));
  try {
    (void)enclosed_area(t, p.topology());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonPlanar);
  }
}

TEST(BoundingCylinder, TrivialSquare) {
  // Square at columns {3, 4}: y_3 = -1, y_4 = +1, x_0 = +1, x_1 = -1.
  const Pattern p = Pattern::cylinder(CyclicSeq::parse("+-"), BiInfSeq::windowed(3, {-1, 1}), 0, 8);
  const Trail t = trace(p, outgoing_edge(p, {3, 0}, Axis::Horizontal));
  ASSERT_TRUE(t.is_loop());
  EXPECT_EQ(t.length(), 4);
  EXPECT_EQ(bounding_cylinder(t), (IndexWindow{3, 4}));
}

TEST(BoundingCylinder, InvariantUnderHorizontalShift) {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const CyclicSeq x(random_balanced(rng, 2 * (1 + static_cast<Index>(rng.below(3)))));
    const auto yv = random_signs(rng, 1 + static_cast<Index>(rng.below(8)));
    const Index len = static_cast<Index>(yv.size());
    const Index shift = static_cast<Index>(rng.below(11)) - 5;
    const Pattern a = Pattern::cylinder(x, BiInfSeq::windowed(0, yv), -2, len + 1);
    const Pattern b = Pattern::cylinder(x, BiInfSeq::windowed(shift, yv), shift - 2, shift + len + 1);
    std::vector<IndexWindow> wa, wb;
    for (const auto& t : enumerate_components(a)) {
      if (t.is_loop()) wa.push_back(bounding_cylinder(t));
    }
    for (const auto& t : enumerate_components(b)) {
      if (t.is_loop()) wb.push_back({bounding_cylinder(t).first - shift, bounding_cylinder(t).last - shift});
    }
    std::sort(wa.begin(), wa.end());
    std::sort(wb.begin(), wb.end());
    ASSERT_EQ(wa, wb);
  }
}

TEST(BoundingArc, WrongHomologyIsRejected) {
  const Pattern p = Pattern::torus(CyclicSeq::parse("++"), CyclicSeq::parse("++"));
  const Trail t = trace(p, outgoing_edge(p, {0, 0}, Axis::Horizontal));
  try {
    (void)bounding_arc(t, std::get<Torus>(p.topology()));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::WrongHomology);
  }
}

TEST(BoundingArc, ArcsAreMinimalOverflowingArcs) {
  for (Index m = 1; m <= 5; ++m) {
    for (Index n = 2; n <= 4; n += 2) {
      for (std::uint64_t xb = 0; xb < (1u << n); ++xb) {
        const CyclicSeq x(signs_from_bits(xb, n));
        if (x.total() != 0) continue;
        for (std::uint64_t yb = 0; yb < (1u << m); ++yb) {
          const CyclicSeq y(signs_from_bits(yb, m));
          const Pattern p = Pattern::torus(x, y);
          for (const auto& t : enumerate_components(p)) {
            const Homology h = homology_of(t, p.topology());
            if (h.hx != 0 || h.hy == 0) continue;
            const ArcRef a = bounding_arc(t, std::get<Torus>(p.topology()));
            const auto arcs = find_min_overflow_arcs(y, range(x), h.hy > 0 ? Sign::Plus : Sign::Minus);
            ASSERT_NE(std::find(arcs.begin(), arcs.end(), a), arcs.end()) << x.str() << " " << y.str();
            // Every edge of the loop gives the same arc.
            for (std::size_t k = 0; k < t.edges.size(); ++k) {
              ASSERT_EQ(bounding_arc(trace(p, t.edges[k]), std::get<Torus>(p.topology())), a);
            }
          }
        }
      }
    }
  }
}

TEST(Unoriented, InteriorVerticesHaveDegreeTwo) {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const BiInfSeq x = trial == 0 ? BiInfSeq::windowed(0, std::vector<int>(12, 1)) : BiInfSeq::windowed(0, random_signs(rng, 12));
    const BiInfSeq y = trial == 0 ? BiInfSeq::windowed(0, std::vector<int>(12, 1)) : BiInfSeq::windowed(0, random_signs(rng, 12));
    const PlanarWindow w{0, 11, 0, 11};
    std::map<Vertex, int> degree;
    const auto edges = build_unoriented(x, y, w);
    ASSERT_TRUE(std::is_sorted(edges.begin(), edges.end()));
    for (const auto& e : edges) {
      degree[e.a]++;
      degree[e.b]++;
    }
    for (Index i = 1; i < 11; ++i) {
      for (Index j = 1; j < 11; ++j) ASSERT_EQ((degree[Vertex{i, j}]), 2) << i << "," << j;
    }
  }
}

TEST(Unoriented, AllPlusIsStaggeredBrick) {
  const auto edges = build_unoriented(BiInfSeq::windowed(0, std::vector<int>(4, 1)),
                                      BiInfSeq::windowed(0, std::vector<int>(4, 1)), PlanarWindow{0, 3, 0, 3});
  const std::set<UndirectedEdge> s(edges.begin(), edges.end());
  EXPECT_TRUE(s.count({{0, 0}, {1, 0}}));
  EXPECT_TRUE(s.count({{2, 1}, {3, 1}}));
  EXPECT_FALSE(s.count({{1, 0}, {2, 0}}));
  EXPECT_TRUE(s.count({{0, 0}, {0, 1}}));
  EXPECT_FALSE(s.count({{0, 1}, {0, 2}}));
}
