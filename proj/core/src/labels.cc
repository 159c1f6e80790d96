#include "saudit/labels.h"

#include <fmt/format.h>

#include "saudit/error.h"

namespace saudit {

std::string_view BinName(ValenceBin bin) {
  switch (bin) {
    case ValenceBin::kLow: return "low";
    case ValenceBin::kMid: return "mid";
    case ValenceBin::kHigh: return "high";
  }
  return "?";
}

std::optional<ValenceBin> ParseBin(std::string_view name) {
  if (name == "low") return ValenceBin::kLow;
  if (name == "mid") return ValenceBin::kMid;
  if (name == "high") return ValenceBin::kHigh;
  return std::nullopt;
}

BinningScheme::BinningScheme(double scale_min, double low_upper,
                             double mid_upper, double scale_max)
    : scale_min_(scale_min),
      low_upper_(low_upper),
      mid_upper_(mid_upper),
      scale_max_(scale_max) {
  if (!(scale_min < low_upper && low_upper < mid_upper && mid_upper < scale_max)) {
    throw Error(ErrorKind::kValidation,
                fmt::format("binning bounds must increase strictly: {}", Describe()));
  }
}

std::string BinningScheme::Describe() const {
  return fmt::format("low:[{:.6f},{:.6f}] mid:({:.6f},{:.6f}] high:({:.6f},{:.6f}]",
                     scale_min_, low_upper_, low_upper_, mid_upper_, mid_upper_,
                     scale_max_);
}

ValenceBin BinLabel(double raw, const BinningScheme& scheme) {
  if (!scheme.InRange(raw)) {
    throw Error(ErrorKind::kRange,
                fmt::format("rating {} outside [{}, {}]", raw, scheme.scale_min(),
                            scheme.scale_max()));
  }
  if (raw <= scheme.low_upper()) return ValenceBin::kLow;
  if (raw <= scheme.mid_upper()) return ValenceBin::kMid;
  return ValenceBin::kHigh;
}

}  // namespace saudit
