#include "saudit/attribution.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

#include "internal.h"
#include "json.hpp"
#include "saudit/error.h"
#include "saudit/text.h"

namespace saudit {

using nlohmann::json;

std::string_view GenderTag(Gender g) { return g == Gender::kFemale ? "F" : "M"; }

std::optional<Gender> ParseGender(std::string_view tag) {
  if (tag == "F") return Gender::kFemale;
  if (tag == "M") return Gender::kMale;
  return std::nullopt;
}

Gender Flip(Gender g) {
  return g == Gender::kFemale ? Gender::kMale : Gender::kFemale;
}

namespace {

std::string RequireString(const json& obj, const char* key,
                          std::string_view source, std::size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    ThrowAtLine(ErrorKind::kParse, source, line_no,
                fmt::format("missing field \"{}\"", key));
  }
  if (!it->is_string()) {
    ThrowAtLine(ErrorKind::kParse, source, line_no,
                fmt::format("field \"{}\" must be a string", key));
  }
  return it->get<std::string>();
}

SampleAttribution ParseRecord(const json& obj, std::string_view source,
                              std::size_t line_no) {
  if (!obj.is_object()) {
    ThrowAtLine(ErrorKind::kParse, source, line_no, "expected a JSON object");
  }
  SampleAttribution rec;
  rec.sample_id = RequireString(obj, "sample_id", source, line_no);
  rec.model_id = RequireString(obj, "model_id", source, line_no);
  rec.gold_label = RequireString(obj, "gold", source, line_no);
  rec.pred_label = RequireString(obj, "pred", source, line_no);

  if (auto it = obj.find("gender"); it != obj.end() && !it->is_null()) {
    if (!it->is_string()) {
      ThrowAtLine(ErrorKind::kParse, source, line_no,
                  "field \"gender\" must be \"F\", \"M\" or null");
    }
    rec.gender = ParseGender(it->get_ref<const std::string&>());
    if (!rec.gender) {
      ThrowAtLine(ErrorKind::kParse, source, line_no,
                  fmt::format("unknown gender tag '{}'",
                              it->get_ref<const std::string&>()));
    }
  }

  auto tokens = obj.find("tokens");
  if (tokens == obj.end() || !tokens->is_array()) {
    ThrowAtLine(ErrorKind::kParse, source, line_no,
                "field \"tokens\" must be an array");
  }
  for (const json& tok : *tokens) {
    if (!tok.is_array() || tok.size() != 2 || !tok[0].is_string() ||
        !tok[1].is_number()) {
      ThrowAtLine(ErrorKind::kParse, source, line_no,
                  "each token must be [\"word\", weight]");
    }
    double weight = tok[1].get<double>();
    if (!std::isfinite(weight)) {
      ThrowAtLine(ErrorKind::kParse, source, line_no, "non-finite weight");
    }
    std::string word = NormalizeToken(tok[0].get_ref<const std::string&>());
    if (word.empty()) continue;
    rec.tokens.push_back({std::move(word), weight});
  }
  if (rec.tokens.empty()) {
    ThrowAtLine(ErrorKind::kParse, source, line_no,
                fmt::format("sample '{}' has no usable tokens", rec.sample_id));
  }
  return rec;
}

}  // namespace

std::vector<SampleAttribution> LoadAttributions(std::istream& in,
                                                std::string_view source_name) {
  std::vector<SampleAttribution> records;
  std::unordered_set<std::string> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (TrimLine(raw).empty()) continue;
    json obj = json::parse(raw, nullptr, /*allow_exceptions=*/false);
    if (obj.is_discarded()) {
      ThrowAtLine(ErrorKind::kParse, source_name, line_no, "invalid JSON");
    }
    SampleAttribution rec = ParseRecord(obj, source_name, line_no);
    if (!seen.insert(rec.sample_id).second) {
      ThrowAtLine(ErrorKind::kDuplicate, source_name, line_no,
                  fmt::format("sample_id '{}' repeated", rec.sample_id));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<SampleAttribution> LoadAttributionsFile(const std::string& path) {
  auto in = internal::OpenInput(path);
  return LoadAttributions(in, path);
}

void SerializeAttributions(const std::vector<SampleAttribution>& records,
                           std::ostream& out) {
  for (const auto& rec : records) {
    json obj;
    obj["sample_id"] = rec.sample_id;
    obj["model_id"] = rec.model_id;
    obj["gold"] = rec.gold_label;
    obj["pred"] = rec.pred_label;
    obj["gender"] = rec.gender ? json(std::string(GenderTag(*rec.gender)))
                               : json(nullptr);
    json tokens = json::array();
    for (const auto& tok : rec.tokens) tokens.push_back({tok.word, tok.weight});
    obj["tokens"] = std::move(tokens);
    out << obj.dump() << '\n';
  }
}

NormalizedAttribution NormalizeWeights(const SampleAttribution& attribution) {
  double max_abs = 0.0;
  for (const auto& tok : attribution.tokens) {
    if (!std::isfinite(tok.weight)) {
      throw Error(ErrorKind::kValidation,
                  fmt::format("sample '{}': non-finite weight for '{}'",
                              attribution.sample_id, tok.word));
    }
    max_abs = std::max(max_abs, std::abs(tok.weight));
  }
  NormalizedAttribution out{attribution, max_abs == 0.0};
  if (out.all_zero) return out;
  for (auto& tok : out.attribution.tokens) tok.weight /= max_abs;
  return out;
}

void ValidateRule(const SelectionRule& rule) {
  if (const auto* top = std::get_if<TopK>(&rule)) {
    if (top->k == 0) throw Error(ErrorKind::kInvalidRule, "top-k requires k >= 1");
    return;
  }
  double tau = std::get<MagnitudeThreshold>(rule).tau;
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw Error(ErrorKind::kInvalidRule,
                fmt::format("threshold {} outside (0,1]", tau));
  }
}

std::string DescribeRule(const SelectionRule& rule) {
  if (const auto* top = std::get_if<TopK>(&rule)) {
    return fmt::format("top-k:{}", top->k);
  }
  return fmt::format("threshold:{:.6f}", std::get<MagnitudeThreshold>(rule).tau);
}

ExplanationSet SelectExplanationSet(const SampleAttribution& attribution,
                                    const SelectionRule& rule) {
  ValidateRule(rule);

  struct Candidate {
    std::string_view word;
    double magnitude;
    std::size_t position;  // first occurrence
  };
  std::vector<Candidate> distinct;
  std::map<std::string_view, std::size_t> index;
  for (std::size_t pos = 0; pos < attribution.tokens.size(); ++pos) {
    const auto& tok = attribution.tokens[pos];
    double magnitude = std::abs(tok.weight);
    if (!(magnitude <= 1.0)) {
      throw Error(ErrorKind::kValidation,
                  fmt::format("sample '{}': weight {} is not normalized",
                              attribution.sample_id, tok.weight));
    }
    auto [it, inserted] = index.emplace(tok.word, distinct.size());
    if (inserted) {
      distinct.push_back({tok.word, magnitude, pos});
    } else {
      distinct[it->second].magnitude =
          std::max(distinct[it->second].magnitude, magnitude);
    }
  }

  ExplanationSet set{attribution.sample_id, attribution.model_id, {}, rule};
  if (const auto* top = std::get_if<TopK>(&rule)) {
    std::size_t keep = std::min(top->k, distinct.size());
    std::partial_sort(distinct.begin(), distinct.begin() + keep, distinct.end(),
                      [](const Candidate& a, const Candidate& b) {
                        if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
                        if (a.word != b.word) return a.word < b.word;
                        return a.position < b.position;
                      });
    for (std::size_t i = 0; i < keep; ++i) {
      set.members.emplace(std::string(distinct[i].word), distinct[i].magnitude);
    }
  } else {
    double tau = std::get<MagnitudeThreshold>(rule).tau;
    for (const auto& c : distinct) {
      if (c.magnitude >= tau) set.members.emplace(std::string(c.word), c.magnitude);
    }
  }
  return set;
}

std::vector<AlignedPair> AlignSamples(
    const std::vector<ExplanationSet>& general,
    const std::vector<ExplanationSet>& candidate, AlignPolicy policy) {
  auto index = [](const std::vector<ExplanationSet>& sets, const char* side) {
    std::map<std::string_view, const ExplanationSet*> by_id;
    for (const auto& s : sets) {
      if (!by_id.emplace(s.sample_id, &s).second) {
        throw Error(ErrorKind::kDuplicate,
                    fmt::format("{} sample_id '{}' repeated", side, s.sample_id));
      }
    }
    return by_id;
  };
  auto general_by_id = index(general, "general");
  auto candidate_by_id = index(candidate, "candidate");

  std::vector<std::string_view> only_general;
  std::vector<std::string_view> only_candidate;
  std::vector<AlignedPair> pairs;
  for (const auto& [id, set] : general_by_id) {
    auto it = candidate_by_id.find(id);
    if (it == candidate_by_id.end()) {
      only_general.push_back(id);
      continue;
    }
    pairs.push_back({std::string(id), *set, *it->second});
  }
  for (const auto& [id, set] : candidate_by_id) {
    if (general_by_id.find(id) == general_by_id.end()) only_candidate.push_back(id);
  }

  if (policy == AlignPolicy::kStrict &&
      (!only_general.empty() || !only_candidate.empty())) {
    throw Error(ErrorKind::kAlignment,
                fmt::format("missing from candidate: [{}]; missing from general: [{}]",
                            fmt::join(only_general, ", "),
                            fmt::join(only_candidate, ", ")));
  }
  return pairs;
}

}  // namespace saudit
