#pragma once

// Partial-sum calculus on +/-1 sequences: cyclic strings, their doubly
// infinite lifts, ranges, minimal overflowing windows and arcs, excursions.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "error.hpp"

namespace hitomezashi {

using Index = std::int64_t;

constexpr Index floor_div(Index a, Index b) {
  Index q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr Index floor_mod(Index a, Index b) { return a - floor_div(a, b) * b; }

enum class Sign : int { Minus = -1, Plus = 1 };

constexpr int value(Sign s) { return static_cast<int>(s); }

inline void require_signs(std::span<const int> values, const char* what) {
  for (int v : values) {
    if (v != 1 && v != -1) {
      throw Error(Errc::InvalidSequence, std::string(what) + " entries must be +1 or -1");
    }
  }
}

// Parses either the compact form ("++-+") or CSV ("1,-1,1").
inline std::vector<int> parse_signs(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed.empty()) throw Error(Errc::InvalidSequence, "empty sign string");

  std::vector<int> out;
  const bool csv = trimmed.find_first_of(",0123456789") != std::string_view::npos;
  if (!csv) {
    for (char c : trimmed) {
      if (c == '+') out.push_back(1);
      else if (c == '-') out.push_back(-1);
      else throw Error(Errc::InvalidSequence, std::string("unexpected character '") + c + "'");
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= trimmed.size()) {
    auto comma = trimmed.find(',', pos);
    if (comma == std::string_view::npos) comma = trimmed.size();
    std::string token(trimmed.substr(pos, comma - pos));
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token == "1" || token == "+1" || token == "+") out.push_back(1);
    else if (token == "-1" || token == "-") out.push_back(-1);
    else throw Error(Errc::InvalidSequence, "bad CSV entry '" + token + "'");
    pos = comma + 1;
  }
  return out;
}

inline std::string format_signs(std::span<const int> values) {
  std::string s;
  s.reserve(values.size());
  for (int v : values) s.push_back(v > 0 ? '+' : '-');
  return s;
}

/// A finite +/-1 string indexed modulo its period.
class CyclicSeq {
 public:
  explicit CyclicSeq(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(Errc::InvalidSequence, "cyclic sequence must have period >= 1");
    require_signs(entries_, "cyclic sequence");
    prefix_.resize(entries_.size() + 1, 0);
    for (std::size_t k = 0; k < entries_.size(); ++k) prefix_[k + 1] = prefix_[k] + entries_[k];
  }

  static CyclicSeq parse(std::string_view text) { return CyclicSeq(parse_signs(text)); }

  Index size() const { return static_cast<Index>(entries_.size()); }
  int operator[](Index i) const { return entries_[static_cast<std::size_t>(floor_mod(i, size()))]; }
  const std::vector<int>& entries() const { return entries_; }
  Index total() const { return prefix_.back(); }

  // Signed sum of the lift over [0, k), extended to negative k so that
  // prefix(b + 1) - prefix(a) is the window sum for every a, b.
  Index prefix(Index k) const {
    const Index p = size();
    return floor_div(k, p) * total() + prefix_[static_cast<std::size_t>(floor_mod(k, p))];
  }

  std::string str() const { return format_signs(entries_); }

  bool operator==(const CyclicSeq& other) const { return entries_ == other.entries_; }

 private:
  std::vector<int> entries_;
  std::vector<Index> prefix_;
};

struct PeriodicLift {
  CyclicSeq base;
  Index phase = 0;
};

// Values on [lo, lo + values.size()); outside, the sequence alternates,
// starting with the value opposite to the nearest boundary entry.
struct Windowed {
  Index lo = 0;
  std::vector<int> values;

  Index hi() const { return lo + static_cast<Index>(values.size()) - 1; }
};

/// A doubly infinite +/-1 sequence, either a periodic lift or a finite
/// window padded with alternating tails.
class BiInfSeq {
 public:
  using Kind = std::variant<PeriodicLift, Windowed>;

  static BiInfSeq lift(CyclicSeq base, Index phase = 0) { return BiInfSeq(PeriodicLift{std::move(base), phase}); }

  static BiInfSeq windowed(Index lo, std::vector<int> values) {
    if (values.empty()) throw Error(Errc::InvalidSequence, "windowed sequence needs at least one entry");
    require_signs(values, "windowed sequence");
    return BiInfSeq(Windowed{lo, std::move(values)});
  }

  const Kind& kind() const { return kind_; }
  bool is_periodic() const { return std::holds_alternative<PeriodicLift>(kind_); }

  const PeriodicLift* periodic() const { return std::get_if<PeriodicLift>(&kind_); }
  const Windowed* window() const { return std::get_if<Windowed>(&kind_); }

  int operator[](Index i) const {
    if (const auto* p = periodic()) return p->base[i - p->phase];
    const auto& w = std::get<Windowed>(kind_);
    if (i < w.lo) {
      const Index k = w.lo - i;
      return (k % 2 == 0) ? w.values.front() : -w.values.front();
    }
    if (i > w.hi()) {
      const Index k = i - w.hi();
      return (k % 2 == 0) ? w.values.back() : -w.values.back();
    }
    return w.values[static_cast<std::size_t>(i - w.lo)];
  }

  // Anchored signed prefix sum; sigma(a, b) == prefix(b + 1) - prefix(a).
  // Tails are evaluated in closed form, so any index is legal.
  Index prefix(Index k) const {
    if (const auto* p = periodic()) return p->base.prefix(k - p->phase);
    const auto& w = std::get<Windowed>(kind_);
    const Index n = static_cast<Index>(w.values.size());
    if (k < w.lo) {
      // -(sum of the left tail over [k, lo)); tail partial sums are 0 or -front.
      const Index t = w.lo - k;
      return (t % 2 == 1) ? w.values.front() : 0;
    }
    const Index inner = window_prefix_[static_cast<std::size_t>(std::min(k - w.lo, n))];
    if (k - w.lo <= n) return inner;
    const Index t = k - w.lo - n;
    return inner + ((t % 2 == 1) ? -w.values.back() : 0);
  }

  std::string str() const {
    if (const auto* p = periodic()) return p->base.str();
    return format_signs(std::get<Windowed>(kind_).values);
  }

 private:
  explicit BiInfSeq(Kind k) : kind_(std::move(k)) {
    if (const auto* w = window()) {
      window_prefix_.assign(w->values.size() + 1, 0);
      for (std::size_t q = 0; q < w->values.size(); ++q) window_prefix_[q + 1] = window_prefix_[q] + w->values[q];
    }
  }

  Kind kind_;
  std::vector<Index> window_prefix_;
};

inline Index sigma(const BiInfSeq& s, Index a, Index b) { return s.prefix(b + 1) - s.prefix(a); }
inline Index sigma(const CyclicSeq& s, Index a, Index b) { return s.prefix(b + 1) - s.prefix(a); }

inline Index total(const CyclicSeq& x) { return x.total(); }

/// Largest window sum of a zero-sum cyclic sequence (equal to minus the smallest).
inline Index range(const CyclicSeq& x) {
  if (x.total() != 0) throw Error(Errc::RangeUndefined, "range needs a zero-sum sequence, got total " + std::to_string(x.total()));
  // With zero drift the prefix walk is periodic, so any two of its values
  // over one period bound a window of length < P in some order.
  Index lo = 0, hi = 0;
  for (Index k = 0; k <= x.size(); ++k) {
    lo = std::min(lo, x.prefix(k));
    hi = std::max(hi, x.prefix(k));
  }
  return hi - lo;
}

struct IndexWindow {
  Index first = 0;
  Index last = 0;
  auto operator<=>(const IndexWindow&) const = default;
};

struct ArcRef {
  Index start = 0;
  Index length = 1;

  ArcRef normalized(Index period) const { return ArcRef{floor_mod(start, period), length}; }
  auto operator<=>(const ArcRef&) const = default;
};

namespace detail {

// Minimal overflowing windows among those starting in [start_lo, start_hi],
// ending at or before end_hi and no longer than max_len. `prefix` must be
// valid on [start_lo, end_hi + 1].
template <class PrefixFn>
std::vector<IndexWindow> minimal_windows(PrefixFn&& prefix, Index threshold, Sign sign, Index start_lo, Index start_hi,
                                         Index end_hi, Index max_len) {
  const int sg = value(sign);
  std::vector<Index> f;
  if (end_hi + 1 >= start_lo) f.reserve(static_cast<std::size_t>(end_hi + 2 - start_lo));
  for (Index k = start_lo; k <= end_hi + 1; ++k) f.push_back(sg * prefix(k));
  auto at = [&](Index k) { return f[static_cast<std::size_t>(k - start_lo)]; };

  std::vector<IndexWindow> out;
  for (Index m = start_lo; m <= start_hi; ++m) {
    const Index limit = std::min(end_hi, m + max_len - 1);
    std::optional<Index> shortest;
    for (Index e = m; e <= limit; ++e) {
      if (at(e + 1) - at(m) > threshold) {
        shortest = e;
        break;
      }
    }
    if (!shortest) continue;
    const Index b = *shortest;
    bool minimal = true;
    Index best = std::numeric_limits<Index>::min();
    for (Index inner = b; inner > m; --inner) {
      best = std::max(best, at(inner + 1));
      if (best - at(inner) > threshold) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(IndexWindow{m, b});
  }
  return out;
}

}  // namespace detail

/// All minimal windows [m, M] inside [search_lo, search_hi] whose signed sum
/// exceeds `threshold`, in increasing m.
inline std::vector<IndexWindow> find_min_overflow_subseqs(const BiInfSeq& y, Index threshold, Sign sign,
                                                          Index search_lo, Index search_hi) {
  if (search_lo > search_hi) throw Error(Errc::InvalidArgument, "search_lo must not exceed search_hi");
  if (threshold < 0) throw Error(Errc::InvalidArgument, "threshold must be nonnegative");
  return detail::minimal_windows([&](Index k) { return y.prefix(k); }, threshold, sign, search_lo, search_hi,
                                 search_hi, std::numeric_limits<Index>::max() / 4);
}

// Longest arc that can be minimally overflowing for this threshold.
inline Index arc_search_bound(const CyclicSeq& y, Index threshold) {
  const Index p = y.size();
  const Index drift = y.total() < 0 ? -y.total() : y.total();
  if (drift == 0) return p;
  const Index need = threshold + 1 + p;
  return p * ((need + drift - 1) / drift + 2);
}

/// Minimal arcs of the cyclic string (arcs may wrap) whose signed sum
/// exceeds `threshold`, sorted by (start, length).
inline std::vector<ArcRef> find_min_overflow_arcs(const CyclicSeq& y, Index threshold, Sign sign) {
  if (threshold < 0) throw Error(Errc::InvalidArgument, "threshold must be nonnegative");
  const Index p = y.size();
  const Index bound = arc_search_bound(y, threshold);
  const auto windows = detail::minimal_windows([&](Index k) { return y.prefix(k); }, threshold, sign, 0, p - 1,
                                               p - 1 + bound - 1, bound);
  std::vector<ArcRef> arcs;
  arcs.reserve(windows.size());
  for (const auto& w : windows) arcs.push_back(ArcRef{w.first, w.last - w.first + 1});
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

/// c(y, n): minimal arcs with sum above n (n > 0) or below n (n < 0).
inline Index count_min_arcs(const CyclicSeq& y, Index n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "count_min_arcs needs n != 0");
  const Sign sign = n > 0 ? Sign::Plus : Sign::Minus;
  return static_cast<Index>(find_min_overflow_arcs(y, n > 0 ? n : -n, sign).size());
}

enum class ExcursionKind { Up, Down };

struct Excursion {
  ExcursionKind kind = ExcursionKind::Up;
  Index height = 1;
  Index length = 2;
  bool operator==(const Excursion&) const = default;
};

/// Up- or down-excursion classification; nullopt when the segment is neither.
inline std::optional<Excursion> classify_excursion(std::span<const int> segment) {
  if (segment.empty()) throw Error(Errc::InvalidArgument, "excursion segment must be nonempty");
  require_signs(segment, "excursion segment");
  const int first = segment.front();
  Index run = 0, peak = 0;
  for (std::size_t k = 0; k + 1 < segment.size(); ++k) {
    run += segment[k];
    if (run * first <= 0) return std::nullopt;
    peak = std::max(peak, run * first);
  }
  run += segment.back();
  if (run != 0) return std::nullopt;
  return Excursion{first > 0 ? ExcursionKind::Up : ExcursionKind::Down, peak,
                   static_cast<Index>(segment.size())};
}

}  // namespace hitomezashi
