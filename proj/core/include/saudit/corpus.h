#ifndef SAUDIT_CORPUS_H_
#define SAUDIT_CORPUS_H_

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "saudit/attribution.h"
#include "saudit/labels.h"
#include "saudit/lexicon.h"

namespace saudit {

enum class Split { kTrain, kVal, kTest };

std::string_view SplitName(Split split);
std::optional<Split> ParseSplit(std::string_view name);

struct CorpusRecord {
  std::string sample_id;
  std::vector<std::string> tokens;
  double rating = 0.0;  // dimensional valence on the dataset's native scale
  Gender gender = Gender::kFemale;
  Split split = Split::kTrain;

  friend bool operator==(const CorpusRecord&, const CorpusRecord&) = default;
};

// {"sample_id", "tokens": [...], "rating", "gender": "F"|"M",
//  "split": "train"|"val"|"test"} per line. Tokens are kept verbatim.
std::vector<CorpusRecord> LoadCorpus(std::istream& in,
                                     std::string_view source_name = "<corpus>");
std::vector<CorpusRecord> LoadCorpusFile(const std::string& path);
void SerializeCorpus(const std::vector<CorpusRecord>& corpus, std::ostream& out);

inline constexpr std::string_view kSwapSuffix = "#swap";

// Token-exact substitution through the pair list; id gets kSwapSuffix and the
// gender tag flips.
CorpusRecord SwapAugment(const CorpusRecord& record, const SwapPairList& pairs);

// Originals followed by their swapped copies, in input order. Throws kId if an
// input id repeats or already carries the swap suffix, kEmptyInput if empty.
std::vector<CorpusRecord> BuildAugmentedCorpus(
    const std::vector<CorpusRecord>& corpus, const SwapPairList& pairs);

struct NoiseCell {
  Gender gender;
  ValenceBin bin;

  friend auto operator<=>(const NoiseCell&, const NoiseCell&) = default;
};

std::string DescribeCell(const NoiseCell& cell);  // "M:low"
std::optional<NoiseCell> ParseCell(std::string_view text);

// Synthetic control tokens, one per (gender, valence bin) cell.
class NoiseSpec {
 public:
  using Assignments = std::map<NoiseCell, std::string>;

  // Male cells get zq0/zq1/zq2 (low/mid/high), female cells zx0/zx1/zx2.
  static Assignments DefaultAssignments();

  // Throws kValidation unless all six cells map to six distinct non-empty
  // tokens and 0 < injection_rate <= 1.
  NoiseSpec(Assignments assignments, double injection_rate, std::uint64_t seed);

  const std::string& TokenFor(const NoiseCell& cell) const;
  std::optional<NoiseCell> CellOf(std::string_view token) const;

  const Assignments& assignments() const { return assignments_; }
  double injection_rate() const { return injection_rate_; }
  std::uint64_t seed() const { return seed_; }

 private:
  Assignments assignments_;
  std::map<std::string, NoiseCell, std::less<>> reverse_;
  double injection_rate_;
  std::uint64_t seed_;
};

// Appends the cell token to each selected record. A record is selected when
// RecordUniform(seed, sample_id) < injection_rate. Throws kContamination if
// the corpus already holds a noise token.
std::vector<CorpusRecord> InjectNoise(const std::vector<CorpusRecord>& corpus,
                                      const NoiseSpec& spec,
                                      const BinningScheme& scheme);

struct NoiseTokenCount {
  std::string token;
  NoiseCell cell;
  std::size_t inside = 0;
  std::size_t outside = 0;
};

struct NoiseVerification {
  std::vector<NoiseTokenCount> counts;  // cell order
  bool passed = true;
};

NoiseVerification VerifyNoiseCorrelation(const std::vector<CorpusRecord>& corpus,
                                         const NoiseSpec& spec,
                                         const BinningScheme& scheme);

// {"scale_min": 1, "low_upper": 2.75, "mid_upper": 3.25, "scale_max": 5}
BinningScheme LoadBinningConfig(std::istream& in,
                                std::string_view source_name = "<binning>");
// Accepts "iemocap", "muse", "vad" or a path to a binning JSON file.
BinningScheme ResolveBinning(const std::string& preset_or_path);

// {"injection_rate": 0.5, "assignments": {"M:low": "zq0", ...}}; assignments
// may be omitted to use the default alphabet. The seed comes from the caller.
NoiseSpec LoadNoiseSpecConfig(std::istream& in, std::uint64_t seed,
                              std::string_view source_name = "<noise spec>");
NoiseSpec LoadNoiseSpecFile(const std::string& path, std::uint64_t seed);

}  // namespace saudit

#endif  // SAUDIT_CORPUS_H_
