#ifndef SAUDIT_LABELS_H_
#define SAUDIT_LABELS_H_

#include <optional>
#include <string>
#include <string_view>

namespace saudit {

enum class ValenceBin { kLow, kMid, kHigh };

std::string_view BinName(ValenceBin bin);  // "low" / "mid" / "high"
std::optional<ValenceBin> ParseBin(std::string_view name);

// low = [scale_min, low_upper], mid = (low_upper, mid_upper],
// high = (mid_upper, scale_max]. Requires
// scale_min < low_upper < mid_upper < scale_max.
class BinningScheme {
 public:
  // Throws kValidation if the bounds are not strictly increasing.
  BinningScheme(double scale_min, double low_upper, double mid_upper,
                double scale_max);

  // IEMOCAP and MSP-Improv 1-5 valence ratings.
  static BinningScheme Iemocap() { return {1.0, 2.75, 3.25, 5.0}; }
  // MuSE 1-9 valence ratings.
  static BinningScheme Muse() { return {1.0, 3.75, 4.25, 9.0}; }
  // Lexicon valence scores in [0,1].
  static BinningScheme VadDefault() { return {0.0, 0.35, 0.65, 1.0}; }

  double scale_min() const { return scale_min_; }
  double low_upper() const { return low_upper_; }
  double mid_upper() const { return mid_upper_; }
  double scale_max() const { return scale_max_; }

  bool InRange(double raw) const { return raw >= scale_min_ && raw <= scale_max_; }

  std::string Describe() const;

  friend bool operator==(const BinningScheme&, const BinningScheme&) = default;

 private:
  double scale_min_;
  double low_upper_;
  double mid_upper_;
  double scale_max_;
};

// Throws kRange for values outside [scale_min, scale_max] (including NaN).
ValenceBin BinLabel(double raw, const BinningScheme& scheme);

}  // namespace saudit

#endif  // SAUDIT_LABELS_H_
