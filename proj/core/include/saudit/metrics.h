#ifndef SAUDIT_METRICS_H_
#define SAUDIT_METRICS_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "saudit/attribution.h"
#include "saudit/labels.h"
#include "saudit/lexicon.h"

namespace saudit {

// ---------------------------------------------------------------------------
// Emotion-Privacy (EP)
//
// For a general model's explanation set E(M_g) and a candidate's E(M_x):
//   dropped E_d = (E(M_g) - E(M_x)) ∩ L, magnitudes from the general set
//   added   E_a = (E(M_x) - E(M_g)) ∩ L, magnitudes from the candidate set
//   score       = (Σ dropped - Σ added) / G
// G counts the general set restricted to L (kRestricted) or the whole general
// set (kFull). Samples with G = 0 have no score and are left out of the mean.
// ---------------------------------------------------------------------------

enum class GMode { kRestricted, kFull };

// kEquation is the set-difference score above. kProse scores the candidate
// set alone: Σ_{w∈E∩L} |w|·L(w) − Σ_{w∈E∖L} |w|.
enum class EpScorer { kEquation, kProse };

std::string_view GModeName(GMode mode);
std::string_view EpScorerName(EpScorer scorer);

using WordWeights = std::map<std::string, double, std::less<>>;

struct EpBreakdown {
  std::string sample_id;
  WordWeights dropped;
  WordWeights added;
  std::size_t g_count = 0;
  std::optional<double> score;  // nullopt when g_count == 0
};

struct EpResult {
  double ep = 0.0;
  std::size_t n_used = 0;
  std::size_t n_total = 0;
  std::vector<EpBreakdown> breakdowns;  // ascending sample_id
};

EpBreakdown EpSample(const AlignedPair& pair, const WeightedLexicon& lexicon,
                     GMode g_mode = GMode::kRestricted,
                     EpScorer scorer = EpScorer::kEquation);

// Throws kEmptyInput for no pairs and kAllUndefined when no sample has a score.
EpResult EpAggregate(const std::vector<AlignedPair>& pairs,
                     const WeightedLexicon& lexicon,
                     GMode g_mode = GMode::kRestricted,
                     EpScorer scorer = EpScorer::kEquation);

// ---------------------------------------------------------------------------
// Emotion-Generalization (EG)
//
// Per sample, with tokens binned by lexicon valence:
//   cn = Σ|w| over w < 0 whose bin equals the gold label
//   cp = Σ|w| over w > 0 whose bin is opposite the gold label (low <-> high)
//   px = (cn + cp) / token_count
// EG_not is the mean px over the included samples; EG = 1 - EG_not.
// ---------------------------------------------------------------------------

struct EgSampleScore {
  std::string sample_id;
  std::size_t sn = 0;
  double cn_sum = 0.0;
  double cp_sum = 0.0;
  double px = 0.0;
};

struct EgResult {
  double eg_not = 0.0;
  double eg = 1.0;
  std::size_t n = 0;
  std::vector<EgSampleScore> samples;  // ascending sample_id
};

// Throws kLabel when gold_label is not low/mid/high and kValidation when a
// weight is not normalized.
EgSampleScore EgSample(const SampleAttribution& attribution, const VadLexicon& vad,
                       const BinningScheme& bins);

// Averages over attributions whose id is in `include_ids`. Throws kEmptySet
// when that leaves nothing.
EgResult EgAggregate(const std::vector<SampleAttribution>& attributions,
                     const VadLexicon& vad, const BinningScheme& bins,
                     const std::set<std::string, std::less<>>& include_ids);

// Ids of samples whose prediction matches the gold label.
std::set<std::string, std::less<>> CorrectlyPredicted(
    const std::vector<SampleAttribution>& attributions);

// ---------------------------------------------------------------------------
// Unweighted average recall
// ---------------------------------------------------------------------------

using LabelPair = std::pair<std::string, std::string>;  // (gold, pred)

struct ClassRecall {
  std::string label;
  std::size_t support = 0;
  std::size_t hits = 0;
  double recall = 0.0;
};

struct UarResult {
  double uar = 0.0;
  std::vector<ClassRecall> classes;  // label order
};

// Classes are the distinct gold labels.
UarResult Uar(const std::vector<LabelPair>& records);
// Classes fixed up front; a class with no records throws kDegenerateClass.
UarResult Uar(const std::vector<LabelPair>& records,
              const std::vector<std::string>& classes);

// ---------------------------------------------------------------------------
// Metric vs. crowd preference correlation
// ---------------------------------------------------------------------------

struct PreferenceRow {
  double metric_value = 0.0;
  double preference_share = 0.0;  // in [0,1]
};

class PreferenceTable {
 public:
  using Rows = std::map<std::string, PreferenceRow, std::less<>>;

  PreferenceTable() = default;
  // Throws kValidation when a share is outside [0,1] or a value non-finite.
  explicit PreferenceTable(Rows rows);

  const Rows& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

 private:
  Rows rows_;
};

// model_id,metric_value,preference_share; an optional header line matching
// those names is skipped.
PreferenceTable LoadPreferenceTable(std::istream& in,
                                    std::string_view source_name = "<table>");
PreferenceTable LoadPreferenceTableFile(const std::string& path);

enum class CorrelationMethod { kPearson, kSpearman };

// Throws kUndefinedCorrelation for fewer than 3 rows or a constant column.
double CorrelatePreference(const PreferenceTable& table, CorrelationMethod method);

double Pearson(const std::vector<double>& x, const std::vector<double>& y);
double Spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace saudit

#endif  // SAUDIT_METRICS_H_
