#pragma once

// Predictions about nontrivial loops derived from the encoding strings
// alone: the overflow-window constructor on the cylinder, and homology
// classes and loop counts on the torus.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "error.hpp"
#include "pattern.hpp"
#include "seq.hpp"

namespace hitomezashi {

struct CylinderLoop {
  IndexWindow window;
  Sign sign = Sign::Plus;
  Trail trail;
};

namespace detail {

// Row after the first global prefix-sum minimum (sign +) or the first global
// maximum (sign -); from there every partial sum of x is >= 0 (resp. <= 0).
inline Index rotation_row(const CyclicSeq& x, Sign sign) {
  const int sg = value(sign);
  Index best_k = -1;
  Index best = 0;
  for (Index k = -1; k <= x.size() - 2; ++k) {
    const Index s = sg * x.prefix(k + 1);
    if (s < best) {
      best = s;
      best_k = k;
    }
  }
  return best_k;
}

}  // namespace detail

/// The directed vertical edge at column `m` from which the unique loop over
/// a minimal overflow window is traced.
inline DirectedEdge construction_edge(const CyclicSeq& x, Index m, Sign sign) {
  const Index n = x.size();
  const Index k = detail::rotation_row(x, sign);
  if (sign == Sign::Plus) {
    return DirectedEdge{{m, floor_mod(k, n)}, {m, floor_mod(k + 1, n)}, Axis::Vertical, 1};
  }
  return DirectedEdge{{m, floor_mod(k + 1, n)}, {m, floor_mod(k, n)}, Axis::Vertical, -1};
}

/// One loop of homology +1 or -1 per minimal overflow window of y (threshold
/// r(x)) with both ends inside [search_lo, search_hi]. x must sum to zero.
inline std::vector<CylinderLoop> cylinder_nontrivial_loops(const CyclicSeq& x, const BiInfSeq& y, Index search_lo,
                                                           Index search_hi) {
  const Index r = range(x);
  const Pattern p = Pattern::cylinder(x, y, search_lo - 1, search_hi + 1);
  std::vector<CylinderLoop> out;
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    for (const auto& w : find_min_overflow_subseqs(y, r, sign, search_lo, search_hi)) {
      const DirectedEdge start = construction_edge(x, w.first, sign);
      if (y[w.first] != value(sign)) {
        throw Error(Errc::ConstructionMismatch, "minimal window does not start with its sign");
      }
      Trail t = trace(p, start);
      if (!t.is_loop() || homology_of(t, p.topology()).hy != value(sign) || bounding_cylinder(t) != w) {
        throw Error(Errc::ConstructionMismatch, "traced trail does not close over window [" +
                                                    std::to_string(w.first) + "," + std::to_string(w.last) + "]");
      }
      out.push_back(CylinderLoop{w, sign, std::move(t)});
    }
  }
  std::sort(out.begin(), out.end(), [](const CylinderLoop& a, const CylinderLoop& b) {
    if (a.window != b.window) return a.window < b.window;
    return value(a.sign) > value(b.sign);
  });
  return out;
}

enum class Regime { BothNonzero, XZeroYNonzero, XNonzeroYZero, BothZero };

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::BothNonzero: return "BothNonzero";
    case Regime::XZeroYNonzero: return "XZeroYNonzero";
    case Regime::XNonzeroYZero: return "XNonzeroYZero";
    case Regime::BothZero: return "BothZero";
  }
  return "?";
}

// How the counts for two zero-sum strings are read. `WrappingStringArcs`
// counts arcs of the string along the wrapping direction against the other
// string's range; `AsPrinted` swaps the arguments.
enum class BothZeroReading { WrappingStringArcs, AsPrinted };

struct TorusPrediction {
  Regime regime = Regime::BothZero;
  Index sum_x = 0;
  Index sum_y = 0;
  std::optional<Index> range_x;
  std::optional<Index> range_y;
  std::vector<Homology> classes;
  std::map<Homology, Index> counts;  // only classes with a positive count
};

inline Regime regime_of(const CyclicSeq& x, const CyclicSeq& y) {
  const bool xz = x.total() == 0, yz = y.total() == 0;
  if (!xz && !yz) return Regime::BothNonzero;
  if (xz && !yz) return Regime::XZeroYNonzero;
  if (!xz && yz) return Regime::XNonzeroYZero;
  return Regime::BothZero;
}

/// Homology classes that nontrivial loops may take.
inline TorusPrediction classify_torus(const CyclicSeq& x, const CyclicSeq& y) {
  TorusPrediction out;
  out.regime = regime_of(x, y);
  out.sum_x = x.total();
  out.sum_y = y.total();
  if (out.sum_x == 0) out.range_x = range(x);
  if (out.sum_y == 0) out.range_y = range(y);
  switch (out.regime) {
    case Regime::BothNonzero: {
      const Index g = std::gcd(out.sum_x, out.sum_y);
      out.classes = {Homology{out.sum_x / g, out.sum_y / g}};
      break;
    }
    case Regime::XZeroYNonzero:
      out.classes = {Homology{0, -1}, Homology{0, 1}};
      break;
    case Regime::XNonzeroYZero:
      out.classes = {Homology{-1, 0}, Homology{1, 0}};
      break;
    case Regime::BothZero:
      if (*out.range_x < *out.range_y) out.classes = {Homology{0, -1}, Homology{0, 1}};
      else if (*out.range_x > *out.range_y) out.classes = {Homology{-1, 0}, Homology{1, 0}};
      break;
  }
  return out;
}

/// Number of nontrivial loops per homology class.
inline TorusPrediction predict_counts(const CyclicSeq& x, const CyclicSeq& y,
                                      BothZeroReading reading = BothZeroReading::WrappingStringArcs) {
  TorusPrediction out = classify_torus(x, y);
  auto put = [&](Homology h, Index c) {
    if (c > 0) out.counts[h] = c;
  };
  switch (out.regime) {
    case Regime::BothNonzero: {
      const Index g = std::gcd(out.sum_x, out.sum_y);
      put(Homology{out.sum_x / g, out.sum_y / g}, g);
      break;
    }
    case Regime::XZeroYNonzero: {
      const Index s = out.sum_y > 0 ? 1 : -1;
      const Index against = count_min_arcs(y, -*out.range_x * s);
      put(Homology{0, -s}, against);
      put(Homology{0, s}, s * out.sum_y + against);
      break;
    }
    case Regime::XNonzeroYZero: {
      const Index s = out.sum_x > 0 ? 1 : -1;
      const Index against = count_min_arcs(x, -*out.range_y * s);
      put(Homology{-s, 0}, against);
      put(Homology{s, 0}, s * out.sum_x + against);
      break;
    }
    case Regime::BothZero: {
      const Index rx = *out.range_x, ry = *out.range_y;
      if (rx == ry) break;
      const bool vertical = rx < ry;
      Index k = 0;
      if (reading == BothZeroReading::WrappingStringArcs) {
        k = vertical ? count_min_arcs(y, rx) : count_min_arcs(x, ry);
      } else {
        k = vertical ? count_min_arcs(x, ry) : count_min_arcs(y, rx);
      }
      if (vertical) {
        put(Homology{0, 1}, k);
        put(Homology{0, -1}, k);
      } else {
        put(Homology{1, 0}, k);
        put(Homology{-1, 0}, k);
      }
      break;
    }
  }
  return out;
}

}  // namespace hitomezashi
