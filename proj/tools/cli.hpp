#pragma once

// Command-line front end. `run_cli` is separate from main so tests can drive
// it with in-memory streams.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <hitomezashi/error.hpp>
#include <hitomezashi/height.hpp>
#include <hitomezashi/io.hpp>
#include <hitomezashi/oracle.hpp>
#include <hitomezashi/pattern.hpp>
#include <hitomezashi/render.hpp>
#include <hitomezashi/seq.hpp>
#include <hitomezashi/theory.hpp>
#include <hitomezashi/verify.hpp>

namespace hitomezashi::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

// Raised for malformed flags that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string x_spec;
  std::string y_spec;
  std::string topology = "torus";
  std::string window;
  std::string lift = "windowed";
  Index x_offset = 0;
  Index y_offset = 0;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string out;
  std::optional<Index> budget;
  // trace
  std::string start = "0,0,h";
  // verify
  std::string sweep;
  std::string mode = "exhaustive";
  Index count = 1000;
  unsigned workers = 0;
  bool skip_suites = false;
  // overflow
  Index threshold = 0;
  std::string sign = "both";
  // excursion
  std::string segment;
  // render
  std::string color = "component";
  bool arrows = false;
  bool heights = false;
  int cell = 32;
  // gen
  Index length = 8;
  Index gen_count = 1;
  bool balanced = false;
};

namespace detail {

inline std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline Index parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<Index>(v);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from '" + s + "'");
  }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::pair<Index, Index> parse_range(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw UsageError("expected a:b, got '" + s + "'");
  return {parse_int(parts[0], "range start"), parse_int(parts[1], "range end")};
}

// "a:b" or "a:b,c:d"; the second range is the row span of planar windows.
inline std::vector<std::pair<Index, Index>> parse_window(const std::string& s) {
  std::vector<std::pair<Index, Index>> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_range(part));
  if (out.empty() || out.size() > 2) throw UsageError("--window takes a:b or a:b,c:d");
  return out;
}

inline std::pair<Index, Index> parse_sweep(const std::string& s) {
  const auto pos = s.find_first_of("xX");
  if (pos == std::string::npos) throw UsageError("--sweep takes MxN, got '" + s + "'");
  return {parse_int(s.substr(0, pos), "sweep M"), parse_int(s.substr(pos + 1), "sweep N")};
}

// Resolves a string spec: inline text, "@file" (one string per line), or
// "random:N" / "balanced:N" drawn from the run's seeded generator.
class StringSource {
 public:
  explicit StringSource(std::optional<std::uint64_t> seed) : seed_(seed), rng_(seed.value_or(0)) {}

  std::vector<std::string> resolve(const std::string& spec, const char* flag) {
    if (spec.empty()) throw UsageError(std::string(flag) + " is required");
    if (spec.front() == '@') {
      std::ifstream in(spec.substr(1));
      if (!in) throw UsageError("cannot read " + spec.substr(1));
      std::vector<std::string> out;
      for (std::string line; std::getline(in, line);) {
        line = trim(line);
        if (!line.empty()) out.push_back(line);
      }
      if (out.empty()) throw UsageError(spec.substr(1) + " holds no strings");
      return out;
    }
    for (const char* prefix : {"random:", "balanced:"}) {
      const std::string pre = prefix;
      if (spec.rfind(pre, 0) != 0) continue;
      if (!seed_) throw UsageError(std::string(flag) + " " + spec + " needs --seed");
      const Index n = parse_int(spec.substr(pre.size()), "random length");
      if (n < 1) throw UsageError("random length must be positive");
      if (pre == "balanced:" && n % 2 != 0) throw UsageError("balanced strings need even length");
      const auto v = pre == "random:" ? random_signs(rng_, n) : random_balanced(rng_, n);
      return {format_signs(v)};
    }
    return {spec};
  }

 private:
  std::optional<std::uint64_t> seed_;
  SplitMix64 rng_;
};

inline Pattern build_pattern(const RunConfig& cfg, const std::string& xs, const std::string& ys) {
  const bool periodic = cfg.lift == "periodic";
  auto lifted = [&](const std::string& s, Index offset) {
    return periodic ? BiInfSeq::lift(CyclicSeq::parse(s), offset) : BiInfSeq::windowed(offset, parse_signs(s));
  };
  if (cfg.topology == "torus") {
    if (!cfg.window.empty()) throw UsageError("--window does not apply to the torus");
    return Pattern::torus(CyclicSeq::parse(xs), CyclicSeq::parse(ys));
  }
  if (cfg.topology == "cylinder") {
    BiInfSeq y = lifted(ys, cfg.y_offset);
    Index lo = cfg.y_offset, hi = cfg.y_offset + static_cast<Index>(parse_signs(ys).size()) - 1;
    if (!cfg.window.empty()) {
      const auto w = parse_window(cfg.window);
      if (w.size() != 1) throw UsageError("cylinder windows take a single a:b column range");
      std::tie(lo, hi) = w[0];
    }
    return Pattern::cylinder(CyclicSeq::parse(xs), std::move(y), lo, hi);
  }
  BiInfSeq x = lifted(xs, cfg.x_offset);
  BiInfSeq y = lifted(ys, cfg.y_offset);
  PlanarWindow win{cfg.y_offset, cfg.y_offset + static_cast<Index>(parse_signs(ys).size()) - 1, cfg.x_offset,
                   cfg.x_offset + static_cast<Index>(parse_signs(xs).size()) - 1};
  if (!cfg.window.empty()) {
    const auto w = parse_window(cfg.window);
    if (w.size() != 2) throw UsageError("planar windows take a:b,c:d (columns, rows)");
    win = PlanarWindow{w[0].first, w[0].second, w[1].first, w[1].second};
  }
  return Pattern::planar(std::move(x), std::move(y), win);
}

inline DirectedEdge parse_start(const Pattern& p, const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw UsageError("--start takes i,j,h or i,j,v");
  const Vertex v{parse_int(parts[0], "start i"), parse_int(parts[1], "start j")};
  Axis axis;
  if (parts[2] == "h") axis = Axis::Horizontal;
  else if (parts[2] == "v") axis = Axis::Vertical;
  else throw UsageError("start axis must be h or v");
  return outgoing_edge(p, p.reduce(v), axis);
}

inline void check_budget(const RunConfig& cfg) {
  if (cfg.budget && *cfg.budget < 1) throw UsageError("--budget must be positive");
}

inline Index sweep_budget(const RunConfig& cfg) { return cfg.budget ? *cfg.budget : budget_from_env(); }

// Writes to --out when given, otherwise to `out`.
inline void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

inline std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

inline std::string trail_text(const Trail& t, const Topology& topo) {
  std::ostringstream os;
  os << (t.is_loop() ? "loop" : "path") << " length " << t.length() << " dx " << t.dx << " dy " << t.dy;
  if (t.is_loop()) os << " homology " << hitomezashi::detail::homology_str(homology_of(t, topo));
  if (t.truncated) os << " truncated";
  os << "\n";
  return os.str();
}

}  // namespace detail

inline int cmd_trace(const RunConfig& cfg, std::ostream& out) {
  detail::check_budget(cfg);
  detail::StringSource src(cfg.seed);
  const auto xs = src.resolve(cfg.x_spec, "--x");
  const auto ys = src.resolve(cfg.y_spec, "--y");
  const Pattern p = detail::build_pattern(cfg, xs.front(), ys.front());
  const DirectedEdge start = detail::parse_start(p, cfg.start);
  const Trail t = trace(p, start, cfg.budget ? *cfg.budget : default_step_budget(p));
  if (cfg.format == "text") detail::emit(cfg, out, detail::trail_text(t, p.topology()));
  else detail::emit(cfg, out, detail::dump(io::trail_json(t, p.topology())));
  return kOk;
}

inline io::Json window_census_json(const Pattern& p) {
  io::Json j;
  j["pattern"] = io::pattern_json(p);
  const auto trails = enumerate_components(p);
  io::Json arr = io::Json::array();
  for (const auto& t : trails) arr.push_back(io::trail_json(t, p.topology()));
  j["trails"] = std::move(arr);
  if (const auto* c = std::get_if<Cylinder>(&p.topology())) {
    if (c->i_lo < c->i_hi) {
      const PathCensus pc = window_path_census(*p.x_cyclic(), p.y(), c->i_lo, c->i_hi);
      j["path_census"] = io::Json{{"rightward", pc.rightward}, {"leftward", pc.leftward},
                                  {"same_side", pc.same_side}, {"loops", pc.loops},
                                  {"nontrivial_loops", pc.nontrivial_loops}, {"sum_x", pc.sum_x},
                                  {"identity_holds", pc.identity_holds()}};
    }
  }
  return j;
}

inline int cmd_census(const RunConfig& cfg, std::ostream& out) {
  detail::StringSource src(cfg.seed);
  const auto xs = src.resolve(cfg.x_spec, "--x");
  const auto ys = src.resolve(cfg.y_spec, "--y");
  std::string text;
  bool pass = true;
  const bool many = xs.size() * ys.size() > 1;
  for (const auto& xv : xs) {
    for (const auto& yv : ys) {
      const Pattern p = detail::build_pattern(cfg, xv, yv);
      if (cfg.topology != "torus") {
        const auto j = window_census_json(p);
        if (j.contains("path_census") && !j["path_census"]["identity_holds"].get<bool>()) pass = false;
        text += many ? j.dump() + "\n" : detail::dump(j);
        continue;
      }
      const CensusReport rep = torus_census(CyclicSeq::parse(xv), CyclicSeq::parse(yv));
      pass = pass && rep.all_pass();
      if (cfg.format == "text") {
        std::ostringstream os;
        os << rep.pattern_id << ": " << rep.loops.size() << " loops, " << rep.trivial_count << " trivial";
        for (const auto& [h, c] : rep.nontrivial_counts) os << ", " << hitomezashi::detail::homology_str(h) << " x" << c;
        for (const auto& c : rep.checks) os << (c.pass ? "" : "\n  FAIL " + c.name + ": " + c.witness);
        text += os.str() + "\n";
      } else {
        const auto j = io::census_json(rep, p.topology(), !many);
        text += many ? j.dump() + "\n" : detail::dump(j);
      }
    }
  }
  detail::emit(cfg, out, text);
  return pass ? kOk : kMismatch;
}

inline int cmd_predict(const RunConfig& cfg, std::ostream& out) {
  detail::StringSource src(cfg.seed);
  const auto xs = src.resolve(cfg.x_spec, "--x");
  const auto ys = src.resolve(cfg.y_spec, "--y");
  const bool many = xs.size() * ys.size() > 1;
  std::string text;
  for (const auto& xv : xs) {
    for (const auto& yv : ys) {
      const auto pred = predict_counts(CyclicSeq::parse(xv), CyclicSeq::parse(yv));
      if (cfg.format == "text") {
        std::ostringstream os;
        os << "x=" << xv << " y=" << yv << " " << regime_name(pred.regime);
        for (const auto& [h, c] : pred.counts) os << " " << hitomezashi::detail::homology_str(h) << " x" << c;
        text += os.str() + "\n";
      } else {
        auto j = io::prediction_json(pred);
        j["x"] = CyclicSeq::parse(xv).str();
        j["y"] = CyclicSeq::parse(yv).str();
        text += many ? j.dump() + "\n" : detail::dump(j);
      }
    }
  }
  detail::emit(cfg, out, text);
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  detail::check_budget(cfg);
  const Index budget = detail::sweep_budget(cfg);
  SweepMode mode;
  if (cfg.mode == "sampled") {
    if (!cfg.seed) throw UsageError("sampled sweeps need --seed");
    if (cfg.count < 1) throw UsageError("--count must be positive");
    mode = SweepMode{false, *cfg.seed, cfg.count};
  } else if (cfg.mode != "exhaustive") {
    throw UsageError("--mode must be exhaustive or sampled");
  }

  std::vector<std::pair<Index, Index>> sizes;
  if (cfg.sweep.empty()) {
    for (Index m = 1; m <= 6; ++m) {
      for (Index n = 1; n <= 6; ++n) sizes.emplace_back(m, n);
    }
  } else {
    sizes.push_back(detail::parse_sweep(cfg.sweep));
  }

  std::ofstream lines;
  if (!cfg.out.empty()) {
    lines.open(cfg.out, std::ios::binary);
    if (!lines) throw UsageError("cannot write " + cfg.out);
  }

  bool pass = true;
  io::Json summary;
  std::vector<SweepReport> reports;
  io::Json sweeps = io::Json::array();
  for (const auto& [m, n] : sizes) {
    SweepReport rep = sweep(m, n, mode, budget, cfg.workers == 0 ? std::thread::hardware_concurrency() : cfg.workers);
    if (lines.is_open()) {
      for (const auto& o : rep.outcomes) lines << io::outcome_json(o, m, n).dump() << "\n";
    }
    pass = pass && rep.mismatches == 0;
    sweeps.push_back(io::sweep_summary_json(rep));
    for (const auto& o : rep.outcomes) {
      if (!o.ok()) err << "mismatch " << m << "x" << n << " x=" << o.x << " y=" << o.y << "\n";
    }
    // Keep only what the errata note needs.
    if (rep.errata_witness) {
      rep.outcomes = {rep.outcomes[static_cast<std::size_t>(*rep.errata_witness)]};
      rep.errata_witness = 0;
    } else {
      rep.outcomes.clear();
    }
    reports.push_back(std::move(rep));
  }
  summary["sweeps"] = std::move(sweeps);

  io::Json suites = io::Json::array();
  if (!cfg.skip_suites) {
    std::vector<SuiteResult> results;
    results.push_back(cylinder_bijection_suite());
    results.push_back(path_census_suite());
    for (auto& s : height_suites()) results.push_back(std::move(s));
    results.push_back(planar_congruence_suite());
    for (const auto& s : results) {
      pass = pass && s.pass();
      suites.push_back(io::suite_json(s));
    }
  }
  summary["suites"] = std::move(suites);
  summary["errata"] = io::errata_note_json(reports);
  summary["pass"] = pass;

  if (cfg.format == "text") {
    std::ostringstream os;
    for (const auto& s : summary["sweeps"]) {
      os << "sweep " << s["M"] << "x" << s["N"] << ": " << s["patterns"] << " patterns, " << s["mismatches"]
         << " mismatches\n";
    }
    for (const auto& s : summary["suites"]) {
      os << "suite " << s["suite"].get<std::string>() << ": " << s["cases"] << " cases, " << s["failures"]
         << " failures\n";
    }
    os << "errata: " << summary["errata"]["confirmed_reading"].get<std::string>() << "\n";
    os << (pass ? "PASS" : "FAIL") << "\n";
    out << os.str();
  } else {
    out << detail::dump(summary);
  }
  return pass ? kOk : kMismatch;
}

inline int cmd_overflow(const RunConfig& cfg, std::ostream& out) {
  if (cfg.threshold < 0) throw UsageError("--threshold must be nonnegative");
  detail::StringSource src(cfg.seed);
  const std::string ys = src.resolve(cfg.y_spec, "--y").front();
  std::vector<Sign> signs;
  if (cfg.sign == "+" || cfg.sign == "both") signs.push_back(Sign::Plus);
  if (cfg.sign == "-" || cfg.sign == "both") signs.push_back(Sign::Minus);
  if (signs.empty()) throw UsageError("--sign must be +, - or both");

  io::Json j;
  j["y"] = ys;
  j["threshold"] = cfg.threshold;
  std::ostringstream text;
  for (Sign s : signs) {
    const char* key = s == Sign::Plus ? "+" : "-";
    io::Json arr = io::Json::array();
    if (cfg.window.empty()) {
      j["kind"] = "arcs";
      for (const auto& a : find_min_overflow_arcs(CyclicSeq::parse(ys), cfg.threshold, s)) {
        arr.push_back(io::Json{{"start", a.start}, {"length", a.length}});
        text << key << " arc start " << a.start << " length " << a.length << "\n";
      }
    } else {
      const auto w = detail::parse_window(cfg.window);
      if (w.size() != 1) throw UsageError("overflow searches take a single a:b range");
      const BiInfSeq y = cfg.lift == "periodic" ? BiInfSeq::lift(CyclicSeq::parse(ys), cfg.y_offset)
                                                : BiInfSeq::windowed(cfg.y_offset, parse_signs(ys));
      j["kind"] = "windows";
      for (const auto& win : find_min_overflow_subseqs(y, cfg.threshold, s, w[0].first, w[0].second)) {
        arr.push_back(io::Json::array({win.first, win.last}));
        text << key << " window " << win.first << ":" << win.last << "\n";
      }
    }
    j[key] = std::move(arr);
  }
  detail::emit(cfg, out, cfg.format == "text" ? text.str() : detail::dump(j));
  return kOk;
}

inline int cmd_excursion(const RunConfig& cfg, std::ostream& out) {
  const auto seg = parse_signs(cfg.segment);
  const auto ex = classify_excursion(seg);
  io::Json j;
  j["segment"] = format_signs(seg);
  if (ex) {
    j["kind"] = ex->kind == ExcursionKind::Up ? "Up" : "Down";
    j["height"] = ex->height;
    j["length"] = ex->length;
  } else {
    j["kind"] = nullptr;
  }
  std::string text = ex ? std::string(ex->kind == ExcursionKind::Up ? "Up" : "Down") + " height " +
                              std::to_string(ex->height) + "\n"
                        : std::string("not an excursion\n");
  detail::emit(cfg, out, cfg.format == "text" ? text : detail::dump(j));
  return kOk;
}

inline int cmd_render(const RunConfig& cfg, std::ostream& out) {
  detail::StringSource src(cfg.seed);
  const auto xs = src.resolve(cfg.x_spec, "--x");
  const auto ys = src.resolve(cfg.y_spec, "--y");
  const Pattern p = detail::build_pattern(cfg, xs.front(), ys.front());
  const auto trails = enumerate_components(p);
  if (cfg.format == "text") {
    detail::emit(cfg, out, render_ascii(p, trails));
    return kOk;
  }
  if (cfg.format != "svg") throw UsageError("render supports --format svg or text");
  RenderSpec spec;
  spec.cell = cfg.cell;
  spec.arrows = cfg.arrows;
  spec.region_heights = cfg.heights;
  if (cfg.color == "component") spec.channel = ColorChannel::ByComponent;
  else if (cfg.color == "homology") spec.channel = ColorChannel::ByHomology;
  else if (cfg.color == "height") {
    spec.channel = ColorChannel::ByHeight;
    spec.region_heights = true;
  }
  else throw UsageError("--color must be component, homology or height");
  detail::emit(cfg, out, render_svg(p, trails, spec));
  return kOk;
}

inline int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.seed) throw UsageError("gen needs --seed");
  if (cfg.length < 1 || cfg.gen_count < 1) throw UsageError("--length and --count must be positive");
  if (cfg.balanced && cfg.length % 2 != 0) throw UsageError("balanced strings need even length");
  SplitMix64 rng(*cfg.seed);
  std::string text;
  for (Index k = 0; k < cfg.gen_count; ++k) {
    const auto v = cfg.balanced ? random_balanced(rng, cfg.length) : random_signs(rng, cfg.length);
    text += format_signs(v) + "\n";
  }
  detail::emit(cfg, out, text);
  return kOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Hitomezashi patterns: trace loops, predict and verify loop counts, render figures", "hitomezashi"};
  app.require_subcommand(1);

  auto add_pattern = [&](CLI::App* sub) {
    sub->add_option("--x", cfg.x_spec, "row string: +-, CSV, @file or random:N / balanced:N");
    sub->add_option("--y", cfg.y_spec, "column string, same forms as --x");
    sub->add_option("--topology", cfg.topology)->check(CLI::IsMember({"planar", "cylinder", "torus"}));
    sub->add_option("--window", cfg.window, "column range a:b, plus row range c:d on the plane");
    sub->add_option("--lift", cfg.lift, "how finite strings extend")->check(CLI::IsMember({"windowed", "periodic"}));
    sub->add_option("--x-offset", cfg.x_offset, "row index of the first x entry");
    sub->add_option("--y-offset", cfg.y_offset, "column index of the first y entry");
  };
  auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--seed", cfg.seed, "seed for random:N string specs");
    sub->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
    sub->add_option("--out", cfg.out, "output path");
  };

  auto* trace_cmd = app.add_subcommand("trace", "trace one trail from a start edge");
  add_pattern(trace_cmd);
  add_common(trace_cmd, {"json", "text"});
  trace_cmd->add_option("--start", cfg.start, "start vertex and axis as i,j,h or i,j,v");
  trace_cmd->add_option("--budget", cfg.budget, "step budget");

  auto* census_cmd = app.add_subcommand("census", "enumerate all trails and check invariants");
  add_pattern(census_cmd);
  add_common(census_cmd, {"json", "text"});

  auto* predict_cmd = app.add_subcommand("predict", "predict nontrivial loop classes and counts on the torus");
  predict_cmd->add_option("--x", cfg.x_spec);
  predict_cmd->add_option("--y", cfg.y_spec);
  add_common(predict_cmd, {"json", "text"});

  auto* verify_cmd = app.add_subcommand("verify", "compare predictions with the census and run invariant suites");
  add_common(verify_cmd, {"json", "text"});
  verify_cmd->add_option("--sweep", cfg.sweep, "single torus size MxN; default all sizes up to 6x6");
  verify_cmd->add_option("--mode", cfg.mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify_cmd->add_option("--count", cfg.count, "samples per sampled sweep");
  verify_cmd->add_option("--budget", cfg.budget, "maximum patterns per sweep");
  verify_cmd->add_option("--workers", cfg.workers, "sweep threads; 0 uses all cores");
  verify_cmd->add_flag("--skip-suites", cfg.skip_suites, "run only the sweeps");

  auto* overflow_cmd = app.add_subcommand("overflow", "minimal overflowing windows or arcs of y");
  overflow_cmd->add_option("--y", cfg.y_spec);
  overflow_cmd->add_option("--threshold", cfg.threshold);
  overflow_cmd->add_option("--sign", cfg.sign)->check(CLI::IsMember({"+", "-", "both"}));
  overflow_cmd->add_option("--window", cfg.window, "search range a:b; arcs of the cyclic string when absent");
  overflow_cmd->add_option("--lift", cfg.lift)->check(CLI::IsMember({"windowed", "periodic"}));
  overflow_cmd->add_option("--y-offset", cfg.y_offset);
  add_common(overflow_cmd, {"json", "text"});

  auto* excursion_cmd = app.add_subcommand("excursion", "classify a segment as an up or down excursion");
  excursion_cmd->add_option("segment", cfg.segment)->required();
  add_common(excursion_cmd, {"json", "text"});

  auto* render_cmd = app.add_subcommand("render", "draw a pattern as SVG or text");
  add_pattern(render_cmd);
  add_common(render_cmd, {"svg", "text"});
  render_cmd->add_option("--color", cfg.color)->check(CLI::IsMember({"component", "homology", "height"}));
  render_cmd->add_flag("--arrows", cfg.arrows);
  render_cmd->add_flag("--heights", cfg.heights, "label regions with their heights");
  render_cmd->add_option("--cell", cfg.cell, "grid spacing in px");

  auto* gen_cmd = app.add_subcommand("gen", "seeded random strings, one per line");
  gen_cmd->add_option("--length", cfg.length);
  gen_cmd->add_option("--count", cfg.gen_count);
  gen_cmd->add_flag("--balanced", cfg.balanced, "zero-sum strings only");
  add_common(gen_cmd, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (render_cmd->parsed() && render_cmd->count("--format") == 0) cfg.format = "svg";

  try {
    if (trace_cmd->parsed()) return cmd_trace(cfg, out);
    if (census_cmd->parsed()) return cmd_census(cfg, out);
    if (predict_cmd->parsed()) return cmd_predict(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
    if (overflow_cmd->parsed()) return cmd_overflow(cfg, out);
    if (excursion_cmd->parsed()) return cmd_excursion(cfg, out);
    if (render_cmd->parsed()) return cmd_render(cfg, out);
    if (gen_cmd->parsed()) return cmd_gen(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool mismatch = e.code() == Errc::ConstructionMismatch || e.code() == Errc::HeightMismatch;
    return mismatch ? kMismatch : kUsage;
  }
  return kUsage;
}

}  // namespace hitomezashi::cli
