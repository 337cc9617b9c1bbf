#pragma once

// Oriented hitomezashi patterns on planar windows, cylinders and tori, and
// the deterministic alternating trails they decompose into.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "seq.hpp"

namespace hitomezashi {

enum class Axis : std::uint8_t { Horizontal = 0, Vertical = 1 };

constexpr Axis other(Axis a) { return a == Axis::Horizontal ? Axis::Vertical : Axis::Horizontal; }

struct Vertex {
  Index i = 0;
  Index j = 0;
  auto operator<=>(const Vertex&) const = default;
};

// `step` is +1 when the edge runs towards increasing coordinate along its
// axis. It is stored because on a torus of side 1 or 2 it cannot be
// recovered from the endpoints.
struct DirectedEdge {
  Vertex from;
  Vertex to;
  Axis axis = Axis::Horizontal;
  int step = 1;

  bool operator==(const DirectedEdge&) const = default;
  bool same_position(const DirectedEdge& o) const { return from == o.from && axis == o.axis; }
};

// Canonical (i, j, axis) order used for stable component numbering.
inline bool edge_less(const DirectedEdge& a, const DirectedEdge& b) {
  if (a.from != b.from) return a.from < b.from;
  return a.axis < b.axis;
}

struct PlanarWindow {
  Index i_lo = 0, i_hi = 0, j_lo = 0, j_hi = 0;
  bool operator==(const PlanarWindow&) const = default;
};

// Second coordinate wraps with circumference n; the first coordinate is
// unbounded and realized through the column window [i_lo, i_hi].
struct Cylinder {
  Index n = 1;
  Index i_lo = 0, i_hi = 0;
  bool operator==(const Cylinder&) const = default;
};

struct Torus {
  Index m = 1;
  Index n = 1;
  bool operator==(const Torus&) const = default;
};

using Topology = std::variant<PlanarWindow, Cylinder, Torus>;

inline std::string topology_name(const Topology& t) {
  if (std::holds_alternative<PlanarWindow>(t)) return "planar";
  if (std::holds_alternative<Cylinder>(t)) return "cylinder";
  return "torus";
}

/// An orientation of the grid graph: row j's horizontal edges follow x_j,
/// column i's vertical edges follow y_i.
class Pattern {
 public:
  static Pattern torus(CyclicSeq x, CyclicSeq y) {
    const Torus t{y.size(), x.size()};
    return Pattern(t, BiInfSeq::lift(std::move(x)), BiInfSeq::lift(std::move(y)));
  }

  static Pattern cylinder(CyclicSeq x, BiInfSeq y, Index i_lo, Index i_hi) {
    if (i_lo > i_hi) throw Error(Errc::InvalidArgument, "cylinder window needs i_lo <= i_hi");
    const Cylinder c{x.size(), i_lo, i_hi};
    return Pattern(c, BiInfSeq::lift(std::move(x)), std::move(y));
  }

  static Pattern planar(BiInfSeq x, BiInfSeq y, PlanarWindow w) {
    if (w.i_lo > w.i_hi || w.j_lo > w.j_hi) throw Error(Errc::InvalidArgument, "planar window needs lo <= hi");
    return Pattern(w, std::move(x), std::move(y));
  }

  const Topology& topology() const { return topology_; }
  const BiInfSeq& x() const { return x_; }
  const BiInfSeq& y() const { return y_; }
  int x_at(Index j) const { return x_[j]; }
  int y_at(Index i) const { return y_[i]; }

  // Base strings on wrapped axes.
  const CyclicSeq* x_cyclic() const { return x_.periodic() ? &x_.periodic()->base : nullptr; }
  const CyclicSeq* y_cyclic() const {
    return std::holds_alternative<Torus>(topology_) ? &y_.periodic()->base : nullptr;
  }

  Vertex reduce(Vertex v) const {
    if (const auto* t = std::get_if<Torus>(&topology_)) return {floor_mod(v.i, t->m), floor_mod(v.j, t->n)};
    if (const auto* c = std::get_if<Cylinder>(&topology_)) return {v.i, floor_mod(v.j, c->n)};
    return v;
  }

  // Whether a reduced vertex lies in the materialized part of the grid.
  bool contains(Vertex v) const {
    if (const auto* t = std::get_if<Torus>(&topology_)) return v.i >= 0 && v.i < t->m && v.j >= 0 && v.j < t->n;
    if (const auto* c = std::get_if<Cylinder>(&topology_)) return v.i >= c->i_lo && v.i <= c->i_hi && v.j >= 0 && v.j < c->n;
    const auto& w = std::get<PlanarWindow>(topology_);
    return v.i >= w.i_lo && v.i <= w.i_hi && v.j >= w.j_lo && v.j <= w.j_hi;
  }

  Index columns() const {
    if (const auto* t = std::get_if<Torus>(&topology_)) return t->m;
    if (const auto* c = std::get_if<Cylinder>(&topology_)) return c->i_hi - c->i_lo + 1;
    const auto& w = std::get<PlanarWindow>(topology_);
    return w.i_hi - w.i_lo + 1;
  }

  Index rows() const {
    if (const auto* t = std::get_if<Torus>(&topology_)) return t->n;
    if (const auto* c = std::get_if<Cylinder>(&topology_)) return c->n;
    const auto& w = std::get<PlanarWindow>(topology_);
    return w.j_hi - w.j_lo + 1;
  }

  Vertex origin() const {
    if (const auto* c = std::get_if<Cylinder>(&topology_)) return {c->i_lo, 0};
    if (const auto* w = std::get_if<PlanarWindow>(&topology_)) return {w->i_lo, w->j_lo};
    return {0, 0};
  }

  Index vertex_count() const { return columns() * rows(); }

  // Dense index in canonical (i, j) order; v must be reduced and contained.
  Index vertex_index(Vertex v) const {
    const Vertex o = origin();
    return (v.i - o.i) * rows() + (v.j - o.j);
  }

  Vertex vertex_at(Index k) const {
    const Vertex o = origin();
    return {o.i + k / rows(), o.j + k % rows()};
  }

  Index edge_index(const DirectedEdge& e) const {
    return vertex_index(e.from) * 2 + static_cast<Index>(e.axis);
  }

  std::optional<DirectedEdge> try_outgoing(Vertex v, Axis axis) const {
    const int step = axis == Axis::Horizontal ? x_at(v.j) : y_at(v.i);
    const Vertex raw = axis == Axis::Horizontal ? Vertex{v.i + step, v.j} : Vertex{v.i, v.j + step};
    const Vertex to = reduce(raw);
    if (!contains(to)) return std::nullopt;
    return DirectedEdge{v, to, axis, step};
  }

  std::optional<DirectedEdge> try_incoming(Vertex v, Axis axis) const {
    const int step = axis == Axis::Horizontal ? x_at(v.j) : y_at(v.i);
    const Vertex raw = axis == Axis::Horizontal ? Vertex{v.i - step, v.j} : Vertex{v.i, v.j - step};
    const Vertex from = reduce(raw);
    if (!contains(from)) return std::nullopt;
    return DirectedEdge{from, v, axis, step};
  }

 private:
  Pattern(Topology t, BiInfSeq x, BiInfSeq y) : topology_(t), x_(std::move(x)), y_(std::move(y)) {}

  Topology topology_;
  BiInfSeq x_;
  BiInfSeq y_;
};

/// The unique outgoing edge at v along `axis`.
inline DirectedEdge outgoing_edge(const Pattern& p, Vertex v, Axis axis) {
  const Vertex r = p.reduce(v);
  if (!p.contains(r)) throw Error(Errc::OutOfWindow, "vertex outside topology");
  auto e = p.try_outgoing(r, axis);
  if (!e) throw Error(Errc::OutOfWindow, "outgoing edge leaves the window");
  return *e;
}

enum class TrailKind { Loop, OpenPath };

struct Trail {
  std::vector<DirectedEdge> edges;
  TrailKind kind = TrailKind::OpenPath;
  bool truncated = false;
  Index dx = 0;
  Index dy = 0;

  bool is_loop() const { return kind == TrailKind::Loop; }
  Index length() const { return static_cast<Index>(edges.size()); }
};

struct Homology {
  Index hx = 0;
  Index hy = 0;

  bool trivial() const { return hx == 0 && hy == 0; }
  Homology operator-() const { return {-hx, -hy}; }
  auto operator<=>(const Homology&) const = default;
};

inline Index default_step_budget(const Pattern& p) { return 8 * (p.vertex_count() + 4); }

namespace detail {

inline void accumulate(Trail& t) {
  t.dx = 0;
  t.dy = 0;
  for (const auto& e : t.edges) (e.axis == Axis::Horizontal ? t.dx : t.dy) += e.step;
}

}  // namespace detail

/// Follows the alternating rule from `start` until it closes, leaves the
/// window in both directions, or the budget runs out.
inline Trail trace(const Pattern& p, const DirectedEdge& start, Index step_budget) {
  if (step_budget <= 0) throw Error(Errc::InvalidArgument, "step budget must be positive");
  const Vertex from = p.reduce(start.from);
  if (!p.contains(from)) throw Error(Errc::InvalidEdge, "start edge outside topology");
  const auto expected = p.try_outgoing(from, start.axis);
  if (!expected || expected->to != p.reduce(start.to) || expected->step != start.step) {
    throw Error(Errc::InvalidEdge, "start edge is not an oriented edge of the pattern");
  }

  std::deque<DirectedEdge> edges{*expected};
  Trail out;
  DirectedEdge cur = *expected;
  bool open = false;
  for (;;) {
    auto next = p.try_outgoing(cur.to, other(cur.axis));
    if (!next) {
      open = true;
      break;
    }
    if (next->same_position(*expected)) {
      out.kind = TrailKind::Loop;
      break;
    }
    if (static_cast<Index>(edges.size()) >= step_budget) {
      out.truncated = true;
      break;
    }
    edges.push_back(*next);
    cur = *next;
  }
  if (open) {
    DirectedEdge head = *expected;
    while (auto prev = p.try_incoming(head.from, other(head.axis))) {
      if (static_cast<Index>(edges.size()) >= step_budget) {
        out.truncated = true;
        break;
      }
      edges.push_front(*prev);
      head = *prev;
    }
  }
  out.edges.assign(edges.begin(), edges.end());
  detail::accumulate(out);
  return out;
}

inline Trail trace(const Pattern& p, const DirectedEdge& start) { return trace(p, start, default_step_budget(p)); }

/// Every directed edge of the materialized grid, in canonical order.
inline std::vector<DirectedEdge> all_edges(const Pattern& p) {
  std::vector<DirectedEdge> out;
  out.reserve(static_cast<std::size_t>(2 * p.vertex_count()));
  for (Index k = 0; k < p.vertex_count(); ++k) {
    const Vertex v = p.vertex_at(k);
    for (Axis a : {Axis::Horizontal, Axis::Vertical}) {
      if (auto e = p.try_outgoing(v, a)) out.push_back(*e);
    }
  }
  return out;
}

/// Partition of the pattern's directed edges into maximal alternating
/// trails. Loops start at their smallest edge; trails are listed in order of
/// their smallest edge.
inline std::vector<Trail> enumerate_components(const Pattern& p) {
  std::vector<char> seen(static_cast<std::size_t>(2 * p.vertex_count()), 0);
  std::vector<Trail> out;
  const Index budget = default_step_budget(p);
  for (const auto& e : all_edges(p)) {
    if (seen[static_cast<std::size_t>(p.edge_index(e))]) continue;
    Trail t = trace(p, e, budget);
    for (const auto& f : t.edges) seen[static_cast<std::size_t>(p.edge_index(f))] = 1;
    out.push_back(std::move(t));
  }
  return out;
}

/// Winding of a loop: dy/N on a cylinder, (dx/M, dy/N) on a torus, zero in
/// the plane.
inline Homology homology_of(const Trail& t, const Topology& topo) {
  if (!t.is_loop()) throw Error(Errc::NotALoop, "homology is defined for loops only");
  if (const auto* c = std::get_if<Cylinder>(&topo)) return {0, t.dy / c->n};
  if (const auto* tor = std::get_if<Torus>(&topo)) return {t.dx / tor->m, t.dy / tor->n};
  return {};
}

/// Column band [m, M] spanned by a cylinder loop.
inline IndexWindow bounding_cylinder(const Trail& t) {
  if (!t.is_loop()) throw Error(Errc::NotALoop, "bounding cylinder is defined for loops only");
  Index lo = t.edges.front().from.i, hi = lo;
  for (const auto& e : t.edges) {
    lo = std::min({lo, e.from.i, e.to.i});
    hi = std::max({hi, e.from.i, e.to.i});
  }
  return {lo, hi};
}

/// Bounding arc of a wrapping torus loop: of y for homology (0, +-1), of x
/// for homology (+-1, 0).
inline ArcRef bounding_arc(const Trail& t, const Torus& topo) {
  if (!t.is_loop()) throw Error(Errc::NotALoop, "bounding arc is defined for loops only");
  const Homology h{t.dx / topo.m, t.dy / topo.n};
  const bool vertical = h.hx == 0 && (h.hy == 1 || h.hy == -1);
  const bool horizontal = h.hy == 0 && (h.hx == 1 || h.hx == -1);
  if (!vertical && !horizontal) throw Error(Errc::WrongHomology, "bounding arc needs homology (0,+-1) or (+-1,0)");

  // Unwrap the non-winding coordinate along the loop (it closes up).
  const Axis unwrap = vertical ? Axis::Horizontal : Axis::Vertical;
  Index pos = vertical ? t.edges.front().from.i : t.edges.front().from.j;
  Index lo = pos, hi = pos;
  for (const auto& e : t.edges) {
    if (e.axis == unwrap) pos += e.step;
    lo = std::min(lo, pos);
    hi = std::max(hi, pos);
  }
  return ArcRef{lo, hi - lo + 1}.normalized(vertical ? topo.m : topo.n);
}

inline Index loop_length(const Trail& t) {
  if (!t.is_loop()) throw Error(Errc::NotALoop, "length is reported for loops only");
  return t.length();
}

/// Area enclosed by a planar loop (shoelace formula).
inline Index enclosed_area(const Trail& t, const Topology& topo) {
  if (!t.is_loop()) throw Error(Errc::NotALoop, "area is defined for loops only");
  if (!std::holds_alternative<PlanarWindow>(topo)) throw Error(Errc::NonPlanar, "area needs a planar loop");
  Index twice = 0;
  for (const auto& e : t.edges) twice += e.from.i * e.to.j - e.to.i * e.from.j;
  return (twice < 0 ? -twice : twice) / 2;
}

struct UndirectedEdge {
  Vertex a;
  Vertex b;
  auto operator<=>(const UndirectedEdge&) const = default;
};

/// Unoriented stitch pattern: {(i,j),(i+x_j,j)} for even i and
/// {(i,j),(i,j+y_i)} for even j, clipped to the window.
inline std::vector<UndirectedEdge> build_unoriented(const BiInfSeq& x, const BiInfSeq& y, const PlanarWindow& w) {
  auto inside = [&](Vertex v) { return v.i >= w.i_lo && v.i <= w.i_hi && v.j >= w.j_lo && v.j <= w.j_hi; };
  std::vector<UndirectedEdge> out;
  for (Index i = w.i_lo; i <= w.i_hi; ++i) {
    for (Index j = w.j_lo; j <= w.j_hi; ++j) {
      const Vertex v{i, j};
      if (floor_mod(i, 2) == 0) {
        const Vertex u{i + x[j], j};
        if (inside(u)) out.push_back({std::min(v, u), std::max(v, u)});
      }
      if (floor_mod(j, 2) == 0) {
        const Vertex u{i, j + y[i]};
        if (inside(u)) out.push_back({std::min(v, u), std::max(v, u)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hitomezashi
