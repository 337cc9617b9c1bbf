#pragma once

// Brute-force ground truth. Everything here is computed by tracing every
// edge of a pattern; predictions from theory.hpp are compared against it.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "height.hpp"
#include "pattern.hpp"
#include "seq.hpp"
#include "theory.hpp"

namespace hitomezashi {

/// SplitMix64 (Steele, Lea, Flood 2014). Fixed constants and 64-bit
/// wraparound arithmetic make sampled runs reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      const std::uint64_t v = next();
      if (v < limit) return v % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// One draw per entry; the top bit picks the sign (1 -> +1).
inline std::vector<int> random_signs(SplitMix64& rng, Index n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (auto& v : out) v = (rng.next() >> 63) ? 1 : -1;
  return out;
}

// Uniformly shuffled string with n/2 entries of each sign; n must be even.
inline std::vector<int> random_balanced(SplitMix64& rng, Index n) {
  if (n % 2 != 0) throw Error(Errc::InvalidArgument, "balanced strings need even length");
  std::vector<int> out(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = k < n / 2 ? 1 : -1;
  for (Index k = n - 1; k > 0; --k) {
    const auto r = static_cast<Index>(rng.below(static_cast<std::uint64_t>(k + 1)));
    std::swap(out[static_cast<std::size_t>(k)], out[static_cast<std::size_t>(r)]);
  }
  return out;
}

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct LoopReport {
  Index id = 0;
  Trail trail;
  Homology homology;
  std::optional<HalfInt> height;
  std::optional<ArcRef> bounding_arc;
};

struct CensusReport {
  std::string pattern_id;
  std::string x;
  std::string y;
  Index m = 0;
  Index n = 0;
  std::vector<LoopReport> loops;
  std::map<Homology, Index> nontrivial_counts;
  Index trivial_count = 0;
  Index total_edges = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
};

inline std::string torus_pattern_id(const CyclicSeq& x, const CyclicSeq& y) {
  return "torus:" + std::to_string(y.size()) + "x" + std::to_string(x.size()) + ":x=" + x.str() + ":y=" + y.str();
}

namespace detail {

inline std::string homology_str(Homology h) {
  return "(" + std::to_string(h.hx) + "," + std::to_string(h.hy) + ")";
}

inline std::string arcs_str(const std::vector<ArcRef>& arcs) {
  std::string s = "[";
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    if (k) s += ",";
    s += "(" + std::to_string(arcs[k].start) + "," + std::to_string(arcs[k].length) + ")";
  }
  return s + "]";
}

// Bounding arcs of the loops of class +-unit must be exactly the minimal
// overflowing arcs of `wrapping` against the other string's range.
inline CheckResult arc_bijection_check(const std::string& name, const std::vector<LoopReport>& loops,
                                       const CyclicSeq& wrapping, Index threshold, Homology unit) {
  CheckResult out{name, true, ""};
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    const Homology cls = sign == Sign::Plus ? unit : -unit;
    std::vector<ArcRef> observed;
    for (const auto& l : loops) {
      if (l.homology == cls) observed.push_back(*l.bounding_arc);
    }
    std::sort(observed.begin(), observed.end());
    const auto expected = find_min_overflow_arcs(wrapping, threshold, sign);
    if (observed != expected) {
      out.pass = false;
      out.witness += "class " + homology_str(cls) + ": loops " + arcs_str(observed) + " vs arcs " +
                     arcs_str(expected) + "; ";
    }
  }
  return out;
}

}  // namespace detail

/// Full component enumeration of a torus pattern with invariant checks.
inline CensusReport torus_census(const CyclicSeq& x, const CyclicSeq& y) {
  const Pattern p = Pattern::torus(x, y);
  const Torus topo = std::get<Torus>(p.topology());
  const bool heights = x.total() == 0 && y.total() == 0;

  CensusReport rep;
  rep.pattern_id = torus_pattern_id(x, y);
  rep.x = x.str();
  rep.y = y.str();
  rep.m = topo.m;
  rep.n = topo.n;
  rep.total_edges = 2 * topo.m * topo.n;

  bool all_loops = true;
  bool heights_constant = true;
  std::string height_witness;
  Index id = 0;
  for (auto& t : enumerate_components(p)) {
    LoopReport lr;
    lr.id = id++;
    if (!t.is_loop()) {
      all_loops = false;
      lr.trail = std::move(t);
      rep.loops.push_back(std::move(lr));
      continue;
    }
    lr.homology = homology_of(t, p.topology());
    if (heights) {
      try {
        lr.height = trail_height(p, t);
      } catch (const Error&) {
        heights_constant = false;
        height_witness = "loop " + std::to_string(lr.id);
      }
    }
    if ((lr.homology.hx == 0 && (lr.homology.hy == 1 || lr.homology.hy == -1)) ||
        (lr.homology.hy == 0 && (lr.homology.hx == 1 || lr.homology.hx == -1))) {
      lr.bounding_arc = bounding_arc(t, topo);
    }
    if (lr.homology.trivial()) ++rep.trivial_count;
    else ++rep.nontrivial_counts[lr.homology];
    lr.trail = std::move(t);
    rep.loops.push_back(std::move(lr));
  }

  rep.checks.push_back({"all-loops", all_loops, all_loops ? "" : "open trail on a torus"});

  {
    std::set<std::pair<Vertex, Axis>> seen;
    Index consumed = 0;
    bool dup = false;
    for (const auto& l : rep.loops) {
      consumed += l.trail.length();
      for (const auto& e : l.trail.edges) dup |= !seen.insert({e.from, e.axis}).second;
    }
    const bool ok = !dup && consumed == rep.total_edges && static_cast<Index>(seen.size()) == rep.total_edges;
    rep.checks.push_back({"edge-partition", ok,
                          ok ? "" : "consumed " + std::to_string(consumed) + " of " + std::to_string(rep.total_edges)});
  }

  {
    Homology sum;
    for (const auto& l : rep.loops) {
      sum.hx += l.homology.hx;
      sum.hy += l.homology.hy;
    }
    const Homology want{x.total(), y.total()};
    rep.checks.push_back({"homology-sum", sum == want,
                          sum == want ? "" : detail::homology_str(sum) + " != " + detail::homology_str(want)});
  }

  {
    bool ok = true;
    std::string witness;
    std::optional<Homology> axis;
    for (const auto& [h, c] : rep.nontrivial_counts) {
      const Index g = std::gcd(h.hx, h.hy);
      if (g != 1) {
        ok = false;
        witness = "non-primitive " + detail::homology_str(h);
      }
      const Homology canon = (h.hx > 0 || (h.hx == 0 && h.hy > 0)) ? h : -h;
      if (axis && *axis != canon) {
        ok = false;
        witness = "classes on different lines";
      }
      axis = canon;
    }
    rep.checks.push_back({"primitivity", ok, witness});
  }

  if (x.total() == 0) {
    rep.checks.push_back(detail::arc_bijection_check("arc-bijection-y", rep.loops, y, range(x), Homology{0, 1}));
  }
  if (y.total() == 0) {
    rep.checks.push_back(detail::arc_bijection_check("arc-bijection-x", rep.loops, x, range(y), Homology{1, 0}));
  }
  if (heights) rep.checks.push_back({"height-constancy", heights_constant, height_witness});
  return rep;
}

struct SweepMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  Index count = 0;
};

struct PatternOutcome {
  Index id = 0;
  std::string x;
  std::string y;
  Regime regime = Regime::BothZero;
  std::map<Homology, Index> observed;
  std::map<Homology, Index> predicted;
  std::map<Homology, Index> predicted_as_printed;
  bool counts_match = true;
  bool classes_ok = true;
  bool printed_match = true;
  std::vector<std::string> failed_checks;

  bool ok() const { return counts_match && classes_ok && failed_checks.empty(); }
};

struct SweepReport {
  Index m = 0;
  Index n = 0;
  SweepMode mode;
  std::vector<PatternOutcome> outcomes;
  Index mismatches = 0;
  // Zero-sum/zero-sum patterns with unequal ranges, where the two readings
  // of the count formula can differ.
  Index both_zero_decisive = 0;
  Index corrected_agree = 0;
  Index printed_agree = 0;
  std::optional<Index> errata_witness;
};

constexpr Index kDefaultBudget = Index{1} << 22;

// HITOMEZASHI_BUDGET overrides the default exhaustive-enumeration budget.
inline Index budget_from_env(Index fallback = kDefaultBudget) {
  if (const char* env = std::getenv("HITOMEZASHI_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<Index>(v);
  }
  return fallback;
}

inline std::vector<int> signs_from_bits(std::uint64_t bits, Index n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = ((bits >> k) & 1U) ? 1 : -1;
  return out;
}

inline PatternOutcome evaluate_torus(Index id, const CyclicSeq& x, const CyclicSeq& y) {
  PatternOutcome o;
  o.id = id;
  o.x = x.str();
  o.y = y.str();
  const CensusReport census = torus_census(x, y);
  const TorusPrediction pred = predict_counts(x, y);
  o.regime = pred.regime;
  o.observed = census.nontrivial_counts;
  o.predicted = pred.counts;
  o.predicted_as_printed = predict_counts(x, y, BothZeroReading::AsPrinted).counts;
  o.counts_match = o.observed == o.predicted;
  o.printed_match = o.observed == o.predicted_as_printed;
  for (const auto& [h, c] : o.observed) {
    if (std::find(pred.classes.begin(), pred.classes.end(), h) == pred.classes.end()) o.classes_ok = false;
  }
  for (const auto& c : census.checks) {
    if (!c.pass) o.failed_checks.push_back(c.name + ": " + c.witness);
  }
  return o;
}

/// Compares predictions with the census for every (or a seeded sample of)
/// pattern on the M x N torus. Outcomes are ordered by pattern id.
inline SweepReport sweep(Index m, Index n, SweepMode mode, Index budget = budget_from_env(),
                         unsigned workers = std::thread::hardware_concurrency()) {
  if (m < 1 || n < 1) throw Error(Errc::InvalidArgument, "torus sides must be positive");
  SweepReport rep;
  rep.m = m;
  rep.n = n;
  rep.mode = mode;

  std::vector<std::pair<std::vector<int>, std::vector<int>>> inputs;
  if (mode.exhaustive) {
    if (m + n >= 62 || (Index{1} << (m + n)) > budget) {
      throw Error(Errc::BudgetExceeded, "2^" + std::to_string(m + n) + " patterns exceed budget " + std::to_string(budget));
    }
    const std::uint64_t xs = std::uint64_t{1} << n, ys = std::uint64_t{1} << m;
    inputs.reserve(static_cast<std::size_t>(xs * ys));
    for (std::uint64_t yb = 0; yb < ys; ++yb) {
      for (std::uint64_t xb = 0; xb < xs; ++xb) inputs.emplace_back(signs_from_bits(xb, n), signs_from_bits(yb, m));
    }
  } else {
    if (mode.count < 1) throw Error(Errc::InvalidArgument, "sampled sweeps need a positive count");
    if (mode.count > budget) throw Error(Errc::BudgetExceeded, "sample count exceeds budget");
    SplitMix64 rng(mode.seed);
    for (Index k = 0; k < mode.count; ++k) {
      auto xv = random_signs(rng, n);
      auto yv = random_signs(rng, m);
      inputs.emplace_back(std::move(xv), std::move(yv));
    }
  }

  rep.outcomes.resize(inputs.size());
  const std::size_t total = inputs.size();
  const unsigned threads = std::max(1U, std::min<unsigned>(workers == 0 ? 1U : workers, 16U));
  auto work = [&](unsigned w) {
    for (std::size_t k = w; k < total; k += threads) {
      rep.outcomes[k] = evaluate_torus(static_cast<Index>(k), CyclicSeq(inputs[k].first), CyclicSeq(inputs[k].second));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  for (const auto& o : rep.outcomes) {
    if (!o.ok()) ++rep.mismatches;
    if (o.regime == Regime::BothZero && o.predicted != o.predicted_as_printed) {
      ++rep.both_zero_decisive;
      if (o.counts_match) ++rep.corrected_agree;
      if (o.printed_match) ++rep.printed_agree;
      if (!rep.errata_witness && o.counts_match && !o.printed_match) rep.errata_witness = o.id;
    }
  }
  return rep;
}

struct PathCensus {
  Index rightward = 0;
  Index leftward = 0;
  Index same_side = 0;
  Index loops = 0;
  Index nontrivial_loops = 0;
  Index sum_x = 0;

  bool identity_holds() const { return rightward - leftward == sum_x; }
  Index spanning() const { return rightward + leftward; }
};

/// Trails of the cylinder pattern restricted to columns [a, b], classified
/// by the sides their endpoints lie on.
inline PathCensus window_path_census(const CyclicSeq& x, const BiInfSeq& y, Index a, Index b) {
  if (a >= b) throw Error(Errc::InvalidArgument, "path census needs a < b");
  const Pattern p = Pattern::cylinder(x, y, a, b);
  PathCensus out;
  out.sum_x = x.total();
  for (const auto& t : enumerate_components(p)) {
    if (t.is_loop()) {
      ++out.loops;
      if (homology_of(t, p.topology()).hy != 0) ++out.nontrivial_loops;
      continue;
    }
    const Index s = t.edges.front().from.i, e = t.edges.back().to.i;
    if (s == a && e == b) ++out.rightward;
    else if (s == b && e == a) ++out.leftward;
    else ++out.same_side;
  }
  return out;
}

struct PlanarSuiteReport {
  Index loops_checked = 0;
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
};

/// Length, area and enclosing-rectangle excursion checks for every complete
/// loop inside a planar window.
inline PlanarSuiteReport planar_property_suite(const BiInfSeq& x, const BiInfSeq& y, const PlanarWindow& window) {
  const Pattern p = Pattern::planar(x, y, window);
  PlanarSuiteReport rep;
  for (const auto& t : enumerate_components(p)) {
    if (!t.is_loop()) continue;
    ++rep.loops_checked;
    const auto& start = t.edges.front().from;
    const std::string where = "loop at (" + std::to_string(start.i) + "," + std::to_string(start.j) + ")";
    const Index len = loop_length(t);
    if (len % 8 != 4) rep.violations.push_back(where + ": length " + std::to_string(len));
    const Index area = enclosed_area(t, p.topology());
    if (area % 4 != 1) rep.violations.push_back(where + ": area " + std::to_string(area));

    Index a = start.i, b = start.i, c = start.j, d = start.j;
    for (const auto& e : t.edges) {
      a = std::min(a, e.from.i);
      b = std::max(b, e.from.i);
      c = std::min(c, e.from.j);
      d = std::max(d, e.from.j);
    }
    std::vector<int> xs, ys;
    for (Index j = c; j <= d; ++j) xs.push_back(x[j]);
    for (Index i = a; i <= b; ++i) ys.push_back(y[i]);
    const auto ex = classify_excursion(xs), ey = classify_excursion(ys);
    if (!ex || !ey || ex->kind == ey->kind || ex->height != ey->height) {
      rep.violations.push_back(where + ": rectangle segments " + format_signs(xs) + " / " + format_signs(ys) +
                               " are not opposite excursions of equal height");
    }
  }
  return rep;
}

}  // namespace hitomezashi
