#pragma once

// Reusable verification suites. Each suite runs a family of cases through
// both the predictive layer and the brute-force oracle and reports failures
// with witnesses.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "height.hpp"
#include "oracle.hpp"
#include "pattern.hpp"
#include "seq.hpp"
#include "theory.hpp"

namespace hitomezashi {

struct SuiteResult {
  std::string name;
  Index cases = 0;
  Index failures = 0;
  std::vector<std::string> witnesses;  // first few failures

  explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}

  bool pass() const { return failures == 0 && cases > 0; }

  void fail(std::string witness) {
    ++failures;
    if (witnesses.size() < 8) witnesses.push_back(std::move(witness));
  }
};

/// All cyclic strings of length 1..max_period whose total is zero
/// (`zero_sum`) or nonzero.
inline std::vector<CyclicSeq> cyclic_strings(Index max_period, bool zero_sum) {
  std::vector<CyclicSeq> out;
  for (Index p = 1; p <= max_period; ++p) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p); ++bits) {
      CyclicSeq s(signs_from_bits(bits, p));
      if ((s.total() == 0) == zero_sum) out.push_back(std::move(s));
    }
  }
  return out;
}

namespace detail {

inline std::string case_str(const CyclicSeq& x, const BiInfSeq& y) {
  return "x=" + x.str() + " y=" + y.str();
}

// Trails of a finite pattern sum to the pattern's net edge orientation.
inline bool trail_sum_matches(const Pattern& p, const std::vector<Trail>& trails) {
  Index dx = 0, dy = 0;
  for (const auto& t : trails) {
    dx += t.dx;
    dy += t.dy;
  }
  Index want_dx = 0, want_dy = 0;
  for (const auto& e : all_edges(p)) (e.axis == Axis::Horizontal ? want_dx : want_dy) += e.step;
  return dx == want_dx && dy == want_dy;
}

}  // namespace detail

/// Minimal overflow windows of y <-> nontrivial cylinder loops, for every
/// zero-sum x of period <= max_period and every y window of length <= max_window.
inline SuiteResult cylinder_bijection_suite(Index max_period = 6, Index max_window = 8) {
  SuiteResult res{"cylinder-bijection"};
  const auto xs = cyclic_strings(max_period, true);
  for (const auto& x : xs) {
    for (Index len = 1; len <= max_window; ++len) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
        ++res.cases;
        const BiInfSeq y = BiInfSeq::windowed(0, signs_from_bits(bits, len));
        const Index lo = 0, hi = len - 1;
        std::vector<CylinderLoop> built;
        try {
          built = cylinder_nontrivial_loops(x, y, lo, hi);
        } catch (const Error& e) {
          res.fail(detail::case_str(x, y) + ": " + e.what());
          continue;
        }
        // Independent side: every loop of a covering window.
        const Pattern p = Pattern::cylinder(x, y, lo - 2, hi + 2);
        const auto trails = enumerate_components(p);
        std::vector<std::pair<IndexWindow, Index>> found;
        std::set<std::pair<Vertex, Axis>> found_edges;
        for (const auto& t : trails) {
          if (!t.is_loop()) continue;
          const Index h = homology_of(t, p.topology()).hy;
          if (h == 0) continue;
          found.push_back({bounding_cylinder(t), h});
          for (const auto& e : t.edges) found_edges.insert({e.from, e.axis});
        }
        std::sort(found.begin(), found.end());
        std::vector<std::pair<IndexWindow, Index>> predicted;
        std::set<std::pair<Vertex, Axis>> built_edges;
        for (const auto& c : built) {
          predicted.push_back({c.window, value(c.sign)});
          for (const auto& e : c.trail.edges) built_edges.insert({e.from, e.axis});
        }
        std::sort(predicted.begin(), predicted.end());
        const bool distinct =
            std::adjacent_find(found.begin(), found.end(), [](const auto& a, const auto& b) {
              return a.first == b.first && a.second == b.second;
            }) == found.end();
        if (found != predicted || !distinct || found_edges != built_edges) {
          res.fail(detail::case_str(x, y) + ": " + std::to_string(found.size()) + " loops vs " +
                   std::to_string(predicted.size()) + " windows");
        } else if (!detail::trail_sum_matches(p, trails)) {
          res.fail(detail::case_str(x, y) + ": trail displacement sum");
        }
      }
    }
  }
  return res;
}

/// Path census identity and absence of nontrivial loops for nonzero-sum x.
inline SuiteResult path_census_suite(Index max_period = 6, Index windows_per_x = 200, std::uint64_t seed = 1) {
  SuiteResult res{"path-census"};
  SplitMix64 rng(seed);
  for (const auto& x : cyclic_strings(max_period, false)) {
    for (Index k = 0; k < windows_per_x; ++k) {
      ++res.cases;
      const Index len = 1 + static_cast<Index>(rng.below(12));
      const BiInfSeq y = BiInfSeq::windowed(0, random_signs(rng, len));
      const Index a = -2, b = len + 1;
      const PathCensus pc = window_path_census(x, y, a, b);
      if (!pc.identity_holds() || pc.nontrivial_loops != 0 || pc.spanning() < 1) {
        res.fail(detail::case_str(x, y) + ": rightward " + std::to_string(pc.rightward) + " leftward " +
                 std::to_string(pc.leftward) + " nontrivial " + std::to_string(pc.nontrivial_loops));
        continue;
      }
      const Pattern p = Pattern::cylinder(x, y, a, b);
      if (!detail::trail_sum_matches(p, enumerate_components(p))) {
        res.fail(detail::case_str(x, y) + ": trail displacement sum");
      }
    }
  }
  return res;
}

namespace detail {

// Constancy along trails, the left/right rule on every edge, and lift
// independence on wrapped axes.
inline void check_heights(const Pattern& p, const std::string& label, SuiteResult& res) {
  ++res.cases;
  for (const auto& t : enumerate_components(p)) {
    try {
      (void)trail_height(p, t);
    } catch (const Error&) {
      res.fail(label + ": height varies along a trail");
      return;
    }
  }
  for (const auto& e : all_edges(p)) {
    const auto [l, r] = bordering_regions(e);
    if (region_height(p, l) != region_height(p, r) + 1) {
      res.fail(label + ": left/right rule fails at (" + std::to_string(e.from.i) + "," + std::to_string(e.from.j) + ")");
      return;
    }
  }
  const auto& topo = p.topology();
  const Index period_i = std::holds_alternative<Torus>(topo) ? std::get<Torus>(topo).m : 0;
  const Index period_j = std::holds_alternative<PlanarWindow>(topo) ? 0 : p.rows();
  if (period_i == 0 && period_j == 0) return;
  for (Index k = 0; k < p.vertex_count(); ++k) {
    const Vertex v = p.vertex_at(k);
    const RegionRef r{v.i, v.j};
    const Index h = region_height(p, r);
    for (Index c = -2; c <= 2; ++c) {
      for (Index d = -2; d <= 2; ++d) {
        if (region_height(p, RegionRef{r.i + c * period_i, r.j + d * period_j}) != h) {
          res.fail(label + ": lift dependence at region (" + std::to_string(r.i) + "," + std::to_string(r.j) + ")");
          return;
        }
      }
    }
  }
}

}  // namespace detail

/// Height invariants on `count` seeded patterns of each topology, with the
/// zero-sum conditions the wrapped topologies require.
inline std::vector<SuiteResult> height_suites(Index count = 500, std::uint64_t seed = 7) {
  SplitMix64 rng(seed);
  SuiteResult planar{"heights-planar"}, cylinder{"heights-cylinder"}, torus{"heights-torus"};
  for (Index k = 0; k < count; ++k) {
    const Index w = 2 + static_cast<Index>(rng.below(11)), h = 2 + static_cast<Index>(rng.below(11));
    const Index ox = static_cast<Index>(rng.below(9)) - 4, oy = static_cast<Index>(rng.below(9)) - 4;
    const BiInfSeq x = BiInfSeq::windowed(oy, random_signs(rng, h));
    const BiInfSeq y = BiInfSeq::windowed(ox, random_signs(rng, w));
    const Pattern p = Pattern::planar(x, y, PlanarWindow{ox - 1, ox + w, oy - 1, oy + h});
    detail::check_heights(p, "planar " + x.str() + "/" + y.str(), planar);
  }
  for (Index k = 0; k < count; ++k) {
    const Index n = 2 * (1 + static_cast<Index>(rng.below(5)));
    const Index len = 1 + static_cast<Index>(rng.below(10));
    const CyclicSeq x(random_balanced(rng, n));
    const BiInfSeq y = BiInfSeq::windowed(0, random_signs(rng, len));
    const Pattern p = Pattern::cylinder(x, y, -2, len + 1);
    detail::check_heights(p, "cylinder " + x.str() + "/" + y.str(), cylinder);
  }
  for (Index k = 0; k < count; ++k) {
    const Index n = 2 * (1 + static_cast<Index>(rng.below(5))), m = 2 * (1 + static_cast<Index>(rng.below(5)));
    const CyclicSeq x(random_balanced(rng, n)), y(random_balanced(rng, m));
    detail::check_heights(Pattern::torus(x, y), "torus " + x.str() + "/" + y.str(), torus);
  }
  return {planar, cylinder, torus};
}

/// Loop length, area and rectangle-excursion checks on seeded square windows.
inline SuiteResult planar_congruence_suite(Index count = 500, Index side = 20, std::uint64_t seed = 11) {
  SuiteResult res{"planar-congruences"};
  SplitMix64 rng(seed);
  Index loops = 0;
  for (Index k = 0; k < count; ++k) {
    ++res.cases;
    const BiInfSeq x = BiInfSeq::windowed(0, random_signs(rng, side));
    const BiInfSeq y = BiInfSeq::windowed(0, random_signs(rng, side));
    const auto rep = planar_property_suite(x, y, PlanarWindow{0, side - 1, 0, side - 1});
    loops += rep.loops_checked;
    for (const auto& v : rep.violations) res.fail("x=" + x.str() + " y=" + y.str() + ": " + v);
  }
  if (loops == 0) res.fail("no complete loops found in any window");
  return res;
}

}  // namespace hitomezashi
