#pragma once

#include <string>
#include <utility>
#include <variant>

#include "error.hpp"
#include "pattern.hpp"
#include "seq.hpp"

namespace hitomezashi {

/// Unit square with center (i + 1/2, j + 1/2).
struct RegionRef {
  Index i = 0;
  Index j = 0;
  auto operator<=>(const RegionRef&) const = default;
};

/// Exact half-integer, stored doubled.
struct HalfInt {
  Index twice = 0;

  static HalfInt whole(Index v) { return {2 * v}; }
  double to_double() const { return static_cast<double>(twice) / 2.0; }
  bool is_integer() const { return twice % 2 == 0; }
  std::string str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
  auto operator<=>(const HalfInt&) const = default;
};

// True when the pattern carries a well-defined height function.
inline bool has_height(const Pattern& p) {
  const auto& topo = p.topology();
  if (std::holds_alternative<PlanarWindow>(topo)) return true;
  if (std::holds_alternative<Cylinder>(topo)) return p.x_cyclic()->total() == 0;
  return p.x_cyclic()->total() == 0 && p.y_cyclic()->total() == 0;
}

inline void require_height(const Pattern& p) {
  if (has_height(p)) return;
  if (std::holds_alternative<Cylinder>(p.topology())) {
    throw Error(Errc::HeightUndefined, "cylinder heights need a zero-sum x");
  }
  throw Error(Errc::HeightUndefined, "torus heights need zero-sum x and y");
}

namespace detail {

inline Index raw_region_height(const Pattern& p, RegionRef r) {
  return sigma(p.x(), 0, r.j) - sigma(p.y(), 0, r.i);
}

}  // namespace detail

inline Index region_height(const Pattern& p, RegionRef r) {
  require_height(p);
  return detail::raw_region_height(p, r);
}

/// The regions on the left and right of a directed edge, in that order.
inline std::pair<RegionRef, RegionRef> bordering_regions(const DirectedEdge& e) {
  if (e.axis == Axis::Horizontal) {
    const Index col = e.step > 0 ? e.from.i : e.from.i - 1;
    const RegionRef above{col, e.from.j}, below{col, e.from.j - 1};
    return e.step > 0 ? std::pair{above, below} : std::pair{below, above};
  }
  const Index row = e.step > 0 ? e.from.j : e.from.j - 1;
  const RegionRef west{e.from.i - 1, row}, east{e.from.i, row};
  return e.step > 0 ? std::pair{west, east} : std::pair{east, west};
}

inline HalfInt edge_height(const Pattern& p, const DirectedEdge& e) {
  require_height(p);
  const auto [left, right] = bordering_regions(e);
  return {detail::raw_region_height(p, left) + detail::raw_region_height(p, right)};
}

/// Common height of every edge on a trail.
inline HalfInt trail_height(const Pattern& p, const Trail& t) {
  require_height(p);
  if (t.edges.empty()) throw Error(Errc::InvalidArgument, "empty trail");
  const HalfInt h = edge_height(p, t.edges.front());
  for (const auto& e : t.edges) {
    if (edge_height(p, e) != h) {
      throw Error(Errc::HeightMismatch, "edge heights differ along a trail");
    }
  }
  return h;
}

}  // namespace hitomezashi
