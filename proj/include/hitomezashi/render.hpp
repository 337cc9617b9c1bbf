#pragma once

// SVG and text renderings of patterns and their trails. Output is a pure
// function of the inputs and uses integer coordinates only.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "height.hpp"
#include "pattern.hpp"

namespace hitomezashi {

enum class ColorChannel { ByComponent, ByHomology, ByHeight };

struct RenderSpec {
  int cell = 32;
  int margin = 16;
  ColorChannel channel = ColorChannel::ByComponent;
  bool arrows = false;
  bool region_heights = false;
  std::vector<std::string> palette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                      "#9467bd", "#8c564b", "#e377c2", "#17becf"};
};

namespace detail {

inline void validate(const RenderSpec& spec) {
  if (spec.cell < 4) throw Error(Errc::InvalidArgument, "cell size must be at least 4 px");
  if (spec.margin < 0) throw Error(Errc::InvalidArgument, "margin must be nonnegative");
  if (spec.palette.size() < 8) throw Error(Errc::InvalidArgument, "palette needs at least 8 colors");
}

inline bool wraps_i(const Pattern& p) { return std::holds_alternative<Torus>(p.topology()); }
inline bool wraps_j(const Pattern& p) { return !std::holds_alternative<PlanarWindow>(p.topology()); }

// Whether an edge crosses the seam of a wrapped axis.
inline bool crosses_seam(const Pattern& p, const DirectedEdge& e) {
  if (e.axis == Axis::Horizontal) {
    if (!wraps_i(p)) return false;
    const Index target = e.from.i + e.step;
    return target < 0 || target >= p.columns();
  }
  if (!wraps_j(p)) return false;
  const Index target = e.from.j + e.step;
  return target < 0 || target >= p.rows();
}

struct Canvas {
  int cell, margin, width, height;
  Index cols, rows;
  Vertex origin;
  bool wi, wj;

  Canvas(const Pattern& p, const RenderSpec& s)
      : cell(s.cell), margin(s.margin), cols(p.columns()), rows(p.rows()), origin(p.origin()),
        wi(wraps_i(p)), wj(wraps_j(p)) {
    width = 2 * margin + static_cast<int>(cols - 1) * cell + (wi ? cell : 0);
    height = 2 * margin + static_cast<int>(rows - 1) * cell + (wj ? cell : 0);
  }

  // Pixel position of a (possibly out-of-domain) lattice point.
  int px(Index i) const { return margin + (wi ? cell / 2 : 0) + static_cast<int>(i - origin.i) * cell; }
  int py(Index j) const {
    return height - margin - (wj ? cell / 2 : 0) - static_cast<int>(j - origin.j) * cell;
  }
};

inline void line(std::ostringstream& os, int x1, int y1, int x2, int y2, const std::string& attrs) {
  os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" " << attrs << "/>\n";
}

}  // namespace detail

/// SVG 1.1 document. Torus and cylinder seams are drawn as half-length
/// stubs ending in a wrap marker on both sides of the fundamental domain.
inline std::string render_svg(const Pattern& p, const std::vector<Trail>& trails, const RenderSpec& spec) {
  detail::validate(spec);
  if (spec.region_heights || spec.channel == ColorChannel::ByHeight) require_height(p);
  const detail::Canvas cv(p, spec);
  const int half = spec.cell / 2;
  const int stroke = std::max(2, spec.cell / 8);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << cv.width << "\" height=\""
     << cv.height << "\" viewBox=\"0 0 " << cv.width << " " << cv.height << "\">\n";
  os << "<title>" << topology_name(p.topology()) << " pattern x=" << p.x().str() << " y=" << p.y().str()
     << "</title>\n";
  if (spec.arrows) {
    os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"5\" "
          "markerHeight=\"5\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"context-stroke\"/></marker>"
          "</defs>\n";
  }
  os << "<rect x=\"0\" y=\"0\" width=\"" << cv.width << "\" height=\"" << cv.height << "\" fill=\"#ffffff\"/>\n";

  // Underlying grid.
  os << "<g class=\"grid\" stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
  for (Index k = 0; k < p.vertex_count(); ++k) {
    const Vertex v = p.vertex_at(k);
    const int x = cv.px(v.i), y = cv.py(v.j);
    const bool last_col = v.i - cv.origin.i == cv.cols - 1, last_row = v.j - cv.origin.j == cv.rows - 1;
    if (!last_col) detail::line(os, x, y, cv.px(v.i + 1), y, "");
    else if (cv.wi) detail::line(os, x, y, x + half, y, "stroke-dasharray=\"2,2\"");
    if (cv.wi && v.i == cv.origin.i) detail::line(os, x - half, y, x, y, "stroke-dasharray=\"2,2\"");
    if (!last_row) detail::line(os, x, y, x, cv.py(v.j + 1), "");
    else if (cv.wj) detail::line(os, x, y, x, y - half, "stroke-dasharray=\"2,2\"");
    if (cv.wj && v.j == cv.origin.j) detail::line(os, x, y + half, x, y, "stroke-dasharray=\"2,2\"");
  }
  os << "</g>\n";

  if (spec.region_heights) {
    const Index region_cols = cv.wi ? cv.cols : cv.cols - 1;
    const Index region_rows = cv.wj ? cv.rows : cv.rows - 1;
    const int font = std::max(6, spec.cell / 3);
    os << "<g class=\"heights\" font-family=\"monospace\" font-size=\"" << font
       << "\" text-anchor=\"middle\" fill=\"#555555\">\n";
    for (Index di = 0; di < region_cols; ++di) {
      for (Index dj = 0; dj < region_rows; ++dj) {
        const RegionRef r{cv.origin.i + di, cv.origin.j + dj};
        os << "<text class=\"height\" data-i=\"" << r.i << "\" data-j=\"" << r.j << "\" x=\"" << cv.px(r.i) + half
           << "\" y=\"" << cv.py(r.j) - half + font / 3 << "\">" << region_height(p, r) << "</text>\n";
      }
    }
    os << "</g>\n";
  }

  std::vector<Homology> classes;
  for (const auto& t : trails) {
    if (t.is_loop()) {
      const Homology h = homology_of(t, p.topology());
      if (!h.trivial() && std::find(classes.begin(), classes.end(), h) == classes.end()) classes.push_back(h);
    }
  }
  std::sort(classes.begin(), classes.end());

  const std::size_t colors = spec.palette.size();
  for (std::size_t k = 0; k < trails.size(); ++k) {
    const Trail& t = trails[k];
    std::string color;
    switch (spec.channel) {
      case ColorChannel::ByComponent:
        color = spec.palette[k % colors];
        break;
      case ColorChannel::ByHomology: {
        color = "#9e9e9e";
        if (t.is_loop()) {
          const Homology h = homology_of(t, p.topology());
          const auto it = std::find(classes.begin(), classes.end(), h);
          if (it != classes.end()) color = spec.palette[static_cast<std::size_t>(it - classes.begin()) % colors];
        }
        break;
      }
      case ColorChannel::ByHeight: {
        const HalfInt h = edge_height(p, t.edges.front());
        color = spec.palette[static_cast<std::size_t>(floor_mod(floor_div(h.twice, 2), static_cast<Index>(colors)))];
        break;
      }
    }
    os << "<g class=\"trail\" data-id=\"" << k << "\" data-kind=\"" << (t.is_loop() ? "loop" : "path")
       << "\" stroke=\"" << color << "\" stroke-width=\"" << stroke << "\" stroke-linecap=\"round\" fill=\""
       << color << "\">\n";
    const std::string arrow = spec.arrows ? "marker-end=\"url(#arrow)\"" : "";
    for (const auto& e : t.edges) {
      const int x1 = cv.px(e.from.i), y1 = cv.py(e.from.j);
      if (!detail::crosses_seam(p, e)) {
        detail::line(os, x1, y1, cv.px(e.to.i), cv.py(e.to.j), arrow);
        continue;
      }
      const int sx = e.axis == Axis::Horizontal ? e.step * half : 0;
      const int sy = e.axis == Axis::Vertical ? -e.step * half : 0;
      const int x2 = cv.px(e.to.i), y2 = cv.py(e.to.j);
      detail::line(os, x1, y1, x1 + sx, y1 + sy, "");
      detail::line(os, x2 - sx, y2 - sy, x2, y2, arrow);
      const int r = std::max(2, stroke);
      os << "<circle class=\"wrap\" cx=\"" << x1 + sx << "\" cy=\"" << y1 + sy << "\" r=\"" << r << "\"/>\n";
      os << "<circle class=\"wrap\" cx=\"" << x2 - sx << "\" cy=\"" << y2 - sy << "\" r=\"" << r << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

namespace detail {

inline const char* box_char(bool l, bool r, bool u, bool d) {
  static const std::array<const char*, 16> table = {
      "·", "╴", "╶", "─",  // none, L, R, LR
      "╵", "┘", "└", "┴",  // U, LU, RU, LRU
      "╷", "┐", "┌", "┬",  // D, LD, RD, LRD
      "│", "┤", "├", "┼",  // UD, LUD, RUD, LRUD
  };
  return table[(l ? 1 : 0) | (r ? 2 : 0) | (u ? 4 : 0) | (d ? 8 : 0)];
}

inline char component_marker(std::size_t k) {
  static const std::string markers = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  return markers[k % markers.size()];
}

}  // namespace detail

/// Monospaced rendering: vertices as box-drawing joints, edge slots carry the
/// marker letter of their trail. Lines wider than `width_cap` characters are
/// cut and an ellipsis row is appended.
inline std::string render_ascii(const Pattern& p, const std::vector<Trail>& trails, std::size_t width_cap = 120) {
  if (width_cap < 2) throw Error(Errc::InvalidArgument, "width cap must be at least 2");
  const bool wi = detail::wraps_i(p), wj = detail::wraps_j(p);
  const Index cols = p.columns(), rows = p.rows();
  const Vertex o = p.origin();
  const Index off_i = wi ? 1 : 0, off_j = wj ? 1 : 0;
  const Index width = 2 * cols - 1 + 2 * off_i;
  const Index height = 2 * rows - 1 + 2 * off_j;

  std::vector<std::vector<std::string>> grid(static_cast<std::size_t>(height),
                                             std::vector<std::string>(static_cast<std::size_t>(width), " "));
  auto put = [&](Index cx, Index cy, std::string s) {
    grid[static_cast<std::size_t>(height - 1 - cy)][static_cast<std::size_t>(cx)] = std::move(s);
  };
  // Incident directions per vertex: bit 0 left, 1 right, 2 up, 3 down.
  std::map<Vertex, int> joints;
  auto mark = [&](Vertex v, int bit) { joints[v] |= 1 << bit; };

  for (std::size_t k = 0; k < trails.size(); ++k) {
    const std::string m(1, detail::component_marker(k));
    for (const auto& e : trails[k].edges) {
      const Index ci = e.from.i - o.i, cj = e.from.j - o.j;
      const bool seam = detail::crosses_seam(p, e);
      if (e.axis == Axis::Horizontal) {
        const Index lo = std::min(e.from.i, e.to.i) - o.i;
        if (!seam) {
          put(2 * lo + 1 + off_i, 2 * cj + off_j, m);
          mark(e.from, e.step > 0 ? 1 : 0);
          mark(e.to, e.step > 0 ? 0 : 1);
        } else {
          put(0, 2 * cj + off_j, m);
          put(width - 1, 2 * cj + off_j, m);
          mark(e.from, e.step > 0 ? 1 : 0);
          mark(e.to, e.step > 0 ? 0 : 1);
        }
      } else {
        const Index lo = std::min(e.from.j, e.to.j) - o.j;
        if (!seam) {
          put(2 * ci + off_i, 2 * lo + 1 + off_j, m);
        } else {
          put(2 * ci + off_i, 0, m);
          put(2 * ci + off_i, height - 1, m);
        }
        mark(e.from, e.step > 0 ? 2 : 3);
        mark(e.to, e.step > 0 ? 3 : 2);
      }
    }
  }
  for (Index k = 0; k < p.vertex_count(); ++k) {
    const Vertex v = p.vertex_at(k);
    const auto it = joints.find(v);
    const int bits = it == joints.end() ? 0 : it->second;
    put(2 * (v.i - o.i) + off_i, 2 * (v.j - o.j) + off_j,
        detail::box_char(bits & 1, bits & 2, bits & 4, bits & 8));
  }

  std::string out;
  const bool cut = static_cast<std::size_t>(width) > width_cap;
  for (const auto& row : grid) {
    std::string line;
    const std::size_t n = cut ? width_cap - 1 : row.size();
    for (std::size_t c = 0; c < n; ++c) line += row[c];
    if (cut) line += "…";
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  if (cut) out += "… truncated to " + std::to_string(width_cap) + " columns\n";
  return out;
}

}  // namespace hitomezashi
