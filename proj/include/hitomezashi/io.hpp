#pragma once

// JSON encodings of patterns, trails, predictions and reports.

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "oracle.hpp"
#include "pattern.hpp"
#include "seq.hpp"
#include "theory.hpp"
#include "verify.hpp"

namespace hitomezashi::io {

using Json = nlohmann::json;

inline Json vertex_json(Vertex v) { return Json::array({v.i, v.j}); }
inline Json homology_json(Homology h) { return Json::array({h.hx, h.hy}); }

inline Json edge_json(const DirectedEdge& e) { return Json::array({vertex_json(e.from), vertex_json(e.to)}); }

inline Json trail_json(const Trail& t, const Topology& topo) {
  Json j;
  j["kind"] = t.is_loop() ? "loop" : "path";
  j["truncated"] = t.truncated;
  j["length"] = t.length();
  j["dx"] = t.dx;
  j["dy"] = t.dy;
  j["homology"] = t.is_loop() ? homology_json(homology_of(t, topo)) : Json(nullptr);
  Json edges = Json::array();
  for (const auto& e : t.edges) edges.push_back(edge_json(e));
  j["edges"] = std::move(edges);
  return j;
}

inline Json pattern_json(const Pattern& p) {
  Json topo;
  topo["kind"] = topology_name(p.topology());
  if (const auto* t = std::get_if<Torus>(&p.topology())) {
    topo["M"] = t->m;
    topo["N"] = t->n;
  } else if (const auto* c = std::get_if<Cylinder>(&p.topology())) {
    topo["N"] = c->n;
    topo["window"] = Json::array({c->i_lo, c->i_hi});
  } else {
    const auto& w = std::get<PlanarWindow>(p.topology());
    topo["window"] = Json::array({w.i_lo, w.i_hi, w.j_lo, w.j_hi});
  }
  Json j;
  j["topology"] = std::move(topo);
  j["x"] = p.x().str();
  j["y"] = p.y().str();
  auto offset = [](const BiInfSeq& s) { return s.periodic() ? s.periodic()->phase : s.window()->lo; };
  if (!std::holds_alternative<Torus>(p.topology())) {
    j["y_offset"] = offset(p.y());
    j["y_lift"] = p.y().is_periodic() ? "periodic" : "windowed";
  }
  if (std::holds_alternative<PlanarWindow>(p.topology())) {
    j["x_offset"] = offset(p.x());
    j["x_lift"] = p.x().is_periodic() ? "periodic" : "windowed";
  }
  return j;
}

namespace detail {

inline BiInfSeq seq_from_json(const Json& j, const char* key) {
  const std::string text = j.at(key).get<std::string>();
  const std::string lift_key = std::string(key) + "_lift";
  const std::string off_key = std::string(key) + "_offset";
  const Index offset = j.contains(off_key) ? j.at(off_key).get<Index>() : 0;
  const std::string lift = j.contains(lift_key) ? j.at(lift_key).get<std::string>() : "periodic";
  if (lift == "windowed") return BiInfSeq::windowed(offset, parse_signs(text));
  if (lift == "periodic") return BiInfSeq::lift(CyclicSeq::parse(text), offset);
  throw Error(Errc::InvalidArgument, "unknown lift '" + lift + "'");
}

}  // namespace detail

/// Inverse of pattern_json; lengths must agree with the declared sides.
inline Pattern pattern_from_json(const Json& j) {
  try {
    const Json& topo = j.at("topology");
    const std::string kind = topo.at("kind").get<std::string>();
    if (kind == "torus") {
      CyclicSeq x = CyclicSeq::parse(j.at("x").get<std::string>());
      CyclicSeq y = CyclicSeq::parse(j.at("y").get<std::string>());
      if (topo.contains("M") && topo.at("M").get<Index>() != y.size()) {
        throw Error(Errc::InvalidArgument, "y length must equal M");
      }
      if (topo.contains("N") && topo.at("N").get<Index>() != x.size()) {
        throw Error(Errc::InvalidArgument, "x length must equal N");
      }
      return Pattern::torus(std::move(x), std::move(y));
    }
    if (kind == "cylinder") {
      CyclicSeq x = CyclicSeq::parse(j.at("x").get<std::string>());
      if (topo.contains("N") && topo.at("N").get<Index>() != x.size()) {
        throw Error(Errc::InvalidArgument, "x length must equal N");
      }
      const auto w = topo.at("window");
      Json yj = j;
      if (!yj.contains("y_lift")) yj["y_lift"] = "windowed";
      return Pattern::cylinder(std::move(x), detail::seq_from_json(yj, "y"), w.at(0).get<Index>(), w.at(1).get<Index>());
    }
    if (kind == "planar") {
      const auto w = topo.at("window");
      Json sj = j;
      if (!sj.contains("x_lift")) sj["x_lift"] = "windowed";
      if (!sj.contains("y_lift")) sj["y_lift"] = "windowed";
      return Pattern::planar(detail::seq_from_json(sj, "x"), detail::seq_from_json(sj, "y"),
                             PlanarWindow{w.at(0).get<Index>(), w.at(1).get<Index>(), w.at(2).get<Index>(),
                                          w.at(3).get<Index>()});
    }
    throw Error(Errc::InvalidArgument, "unknown topology kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed pattern JSON: ") + e.what());
  }
}

inline Json counts_json(const std::map<Homology, Index>& counts) {
  Json arr = Json::array();
  for (const auto& [h, c] : counts) arr.push_back(Json{{"class", homology_json(h)}, {"count", c}});
  return arr;
}

inline Json prediction_json(const TorusPrediction& p) {
  Json j;
  j["regime"] = regime_name(p.regime);
  j["sum_x"] = p.sum_x;
  j["sum_y"] = p.sum_y;
  j["range_x"] = p.range_x ? Json(*p.range_x) : Json(nullptr);
  j["range_y"] = p.range_y ? Json(*p.range_y) : Json(nullptr);
  Json classes = Json::array();
  for (const auto& h : p.classes) classes.push_back(homology_json(h));
  j["classes"] = std::move(classes);
  j["counts"] = counts_json(p.counts);
  return j;
}

inline Json census_json(const CensusReport& r, const Topology& topo, bool with_edges = true) {
  Json j;
  j["pattern_id"] = r.pattern_id;
  j["x"] = r.x;
  j["y"] = r.y;
  j["M"] = r.m;
  j["N"] = r.n;
  j["total_edges"] = r.total_edges;
  j["trivial_loops"] = r.trivial_count;
  j["nontrivial"] = counts_json(r.nontrivial_counts);
  Json loops = Json::array();
  for (const auto& l : r.loops) {
    Json lj;
    lj["id"] = l.id;
    lj["homology"] = homology_json(l.homology);
    lj["length"] = l.trail.length();
    lj["dx"] = l.trail.dx;
    lj["dy"] = l.trail.dy;
    lj["height"] = l.height ? Json(l.height->str()) : Json(nullptr);
    lj["bounding_arc"] =
        l.bounding_arc ? Json{{"start", l.bounding_arc->start}, {"length", l.bounding_arc->length}} : Json(nullptr);
    if (with_edges) lj["trail"] = trail_json(l.trail, topo);
    loops.push_back(std::move(lj));
  }
  j["loops"] = std::move(loops);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  j["checks"] = std::move(checks);
  j["all_pass"] = r.all_pass();
  return j;
}

inline Json outcome_json(const PatternOutcome& o, Index m, Index n) {
  Json j;
  j["id"] = o.id;
  j["M"] = m;
  j["N"] = n;
  j["x"] = o.x;
  j["y"] = o.y;
  j["regime"] = regime_name(o.regime);
  j["observed"] = counts_json(o.observed);
  j["predicted"] = counts_json(o.predicted);
  j["ok"] = o.ok();
  if (!o.failed_checks.empty()) j["failed_checks"] = o.failed_checks;
  return j;
}

inline Json sweep_summary_json(const SweepReport& r) {
  Json j;
  j["M"] = r.m;
  j["N"] = r.n;
  j["mode"] = r.mode.exhaustive ? "exhaustive" : "sampled";
  if (!r.mode.exhaustive) {
    j["seed"] = r.mode.seed;
    j["count"] = r.mode.count;
  }
  j["patterns"] = static_cast<Index>(r.outcomes.size());
  j["mismatches"] = r.mismatches;
  j["both_zero_decisive"] = r.both_zero_decisive;
  return j;
}

/// Which reading of the zero-sum/zero-sum count clauses the census supports,
/// aggregated over sweeps, with one explicit witness pattern.
inline Json errata_note_json(const std::vector<SweepReport>& sweeps) {
  Index decisive = 0, corrected = 0, printed = 0;
  Json witness = nullptr;
  for (const auto& s : sweeps) {
    decisive += s.both_zero_decisive;
    corrected += s.corrected_agree;
    printed += s.printed_agree;
    if (witness.is_null() && s.errata_witness) {
      const auto& o = s.outcomes[static_cast<std::size_t>(*s.errata_witness)];
      witness = Json{{"M", s.m},
                     {"N", s.n},
                     {"x", o.x},
                     {"y", o.y},
                     {"observed", counts_json(o.observed)},
                     {"wrapping_string_arcs", counts_json(o.predicted)},
                     {"as_printed", counts_json(o.predicted_as_printed)}};
    }
  }
  std::string confirmed = "undetermined";
  if (decisive > 0 && corrected == decisive && printed == 0) confirmed = "wrapping-string-arcs";
  else if (decisive > 0 && printed == decisive && corrected == 0) confirmed = "as-printed";
  else if (decisive > 0) confirmed = "neither";
  return Json{{"topic", "zero-sum/zero-sum loop counts: c(y, r(x)) for classes (0,+-1) when r(x) < r(y) and "
                        "c(x, r(y)) for classes (+-1,0) when r(x) > r(y) (wrapping-string-arcs), versus the "
                        "swapped arguments (as-printed)"},
              {"confirmed_reading", confirmed},
              {"decisive_patterns", decisive},
              {"wrapping_string_arcs_agree", corrected},
              {"as_printed_agree", printed},
              {"witness", witness}};
}

inline Json suite_json(const SuiteResult& s) {
  return Json{{"suite", s.name}, {"cases", s.cases}, {"failures", s.failures}, {"pass", s.pass()},
              {"witnesses", s.witnesses}};
}

}  // namespace hitomezashi::io
