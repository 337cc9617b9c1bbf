#pragma once

#include <stdexcept>
#include <string>

namespace hitomezashi {

enum class Errc {
  InvalidSequence,
  RangeUndefined,
  OutOfWindow,
  InvalidEdge,
  NotALoop,
  NonPlanar,
  WrongHomology,
  HeightUndefined,
  HeightMismatch,
  ConstructionMismatch,
  BudgetExceeded,
  InvalidArgument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidSequence: return "InvalidSequence";
    case Errc::RangeUndefined: return "RangeUndefined";
    case Errc::OutOfWindow: return "OutOfWindow";
    case Errc::InvalidEdge: return "InvalidEdge";
    case Errc::NotALoop: return "NotALoop";
    case Errc::NonPlanar: return "NonPlanar";
    case Errc::WrongHomology: return "WrongHomology";
    case Errc::HeightUndefined: return "HeightUndefined";
    case Errc::HeightMismatch: return "HeightMismatch";
    case Errc::ConstructionMismatch: return "ConstructionMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hitomezashi
