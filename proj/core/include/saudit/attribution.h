#ifndef SAUDIT_ATTRIBUTION_H_
#define SAUDIT_ATTRIBUTION_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace saudit {

enum class Gender { kFemale, kMale };

std::string_view GenderTag(Gender g);  // "F" / "M"
std::optional<Gender> ParseGender(std::string_view tag);
Gender Flip(Gender g);

struct AttributedToken {
  std::string word;  // canonical form
  double weight = 0.0;  // signed; negative pushes away from the prediction

  friend bool operator==(const AttributedToken&,
                         const AttributedToken&) = default;
};

// Word-level saliency for one sample as produced by one model.
struct SampleAttribution {
  std::string sample_id;
  std::string model_id;
  std::string gold_label;
  std::string pred_label;
  std::optional<Gender> gender;
  std::vector<AttributedToken> tokens;  // sentence order, never empty

  std::size_t token_count() const { return tokens.size(); }
  bool correct() const { return gold_label == pred_label; }

  friend bool operator==(const SampleAttribution&,
                         const SampleAttribution&) = default;
};

// Reads attribution JSONL:
//   {"sample_id", "model_id", "gold", "pred", "gender": "F"|"M"|null,
//    "tokens": [["word", weight], ...]}
// Token words are normalized; tokens that normalize to "" are dropped and a
// record left with no tokens is rejected. Errors name the source and line.
std::vector<SampleAttribution> LoadAttributions(
    std::istream& in, std::string_view source_name = "<attributions>");
std::vector<SampleAttribution> LoadAttributionsFile(const std::string& path);

void SerializeAttributions(const std::vector<SampleAttribution>& records,
                           std::ostream& out);

struct NormalizedAttribution {
  SampleAttribution attribution;
  bool all_zero = false;  // nothing to scale; weights returned unchanged
};

// Divides every weight by the sample's max |weight| so the largest magnitude
// becomes exactly 1. Throws kValidation on a non-finite weight.
NormalizedAttribution NormalizeWeights(const SampleAttribution& attribution);

struct TopK {
  std::size_t k = 10;
};
struct MagnitudeThreshold {
  double tau = 0.5;
};
using SelectionRule = std::variant<TopK, MagnitudeThreshold>;

inline constexpr std::size_t kDefaultTopK = 10;

// Throws kInvalidRule for k == 0 or tau outside (0,1].
void ValidateRule(const SelectionRule& rule);
std::string DescribeRule(const SelectionRule& rule);  // "top-k:10"

// Salient word subset E(M) for one sample, as word -> |weight|.
struct ExplanationSet {
  std::string sample_id;
  std::string model_id;
  std::map<std::string, double, std::less<>> members;
  SelectionRule rule = TopK{};

  bool Contains(std::string_view word) const {
    return members.find(word) != members.end();
  }
};

// Duplicate words collapse to their largest magnitude before selection.
// Top-k orders by magnitude descending, then word, then first position.
// Requires normalized weights (|weight| <= 1); throws kValidation otherwise.
ExplanationSet SelectExplanationSet(const SampleAttribution& attribution,
                                    const SelectionRule& rule);

struct AlignedPair {
  std::string sample_id;
  ExplanationSet general;
  ExplanationSet candidate;
};

enum class AlignPolicy { kIntersect, kStrict };

// Pairs sets by sample_id, sorted ascending by id.
std::vector<AlignedPair> AlignSamples(
    const std::vector<ExplanationSet>& general,
    const std::vector<ExplanationSet>& candidate, AlignPolicy policy);

}  // namespace saudit

#endif  // SAUDIT_ATTRIBUTION_H_
