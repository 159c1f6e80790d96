#include "saudit/corpus.h"

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
#include "saudit/rng.h"
#include "saudit/text.h"

namespace saudit {

using nlohmann::json;

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kVal: return "val";
    case Split::kTest: return "test";
  }
  return "?";
}

std::optional<Split> ParseSplit(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "val") return Split::kVal;
  if (name == "test") return Split::kTest;
  return std::nullopt;
}

namespace {

CorpusRecord ParseCorpusRecord(const json& obj, std::string_view source,
                               std::size_t line_no) {
  auto fail = [&](std::string_view what) {
    ThrowAtLine(ErrorKind::kParse, source, line_no, what);
  };
  if (!obj.is_object()) fail("expected a JSON object");

  CorpusRecord rec;
  auto id = obj.find("sample_id");
  if (id == obj.end() || !id->is_string()) fail("field \"sample_id\" must be a string");
  rec.sample_id = id->get<std::string>();

  auto tokens = obj.find("tokens");
  if (tokens == obj.end() || !tokens->is_array()) fail("field \"tokens\" must be an array");
  for (const json& t : *tokens) {
    if (!t.is_string()) fail("tokens must be strings");
    rec.tokens.push_back(t.get<std::string>());
  }
  if (rec.tokens.empty()) fail(fmt::format("sample '{}' has no tokens", rec.sample_id));

  auto rating = obj.find("rating");
  if (rating == obj.end() || !rating->is_number()) fail("field \"rating\" must be a number");
  rec.rating = rating->get<double>();
  if (!std::isfinite(rec.rating)) fail("rating is not finite");

  auto gender = obj.find("gender");
  std::optional<Gender> g;
  if (gender != obj.end() && gender->is_string()) g = ParseGender(gender->get<std::string>());
  if (!g) fail("field \"gender\" must be \"F\" or \"M\"");
  rec.gender = *g;

  auto split = obj.find("split");
  std::optional<Split> s;
  if (split != obj.end() && split->is_string()) s = ParseSplit(split->get<std::string>());
  if (!s) fail("field \"split\" must be \"train\", \"val\" or \"test\"");
  rec.split = *s;
  return rec;
}

}  // namespace

std::vector<CorpusRecord> LoadCorpus(std::istream& in, std::string_view source_name) {
  std::vector<CorpusRecord> corpus;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (TrimLine(raw).empty()) continue;
    json obj = json::parse(raw, nullptr, /*allow_exceptions=*/false);
    if (obj.is_discarded()) {
      ThrowAtLine(ErrorKind::kParse, source_name, line_no, "invalid JSON");
    }
    corpus.push_back(ParseCorpusRecord(obj, source_name, line_no));
  }
  return corpus;
}

std::vector<CorpusRecord> LoadCorpusFile(const std::string& path) {
  auto in = internal::OpenInput(path);
  return LoadCorpus(in, path);
}

void SerializeCorpus(const std::vector<CorpusRecord>& corpus, std::ostream& out) {
  for (const auto& rec : corpus) {
    json obj;
    obj["sample_id"] = rec.sample_id;
    obj["tokens"] = rec.tokens;
    obj["rating"] = rec.rating;
    obj["gender"] = std::string(GenderTag(rec.gender));
    obj["split"] = std::string(SplitName(rec.split));
    out << obj.dump() << '\n';
  }
}

CorpusRecord SwapAugment(const CorpusRecord& record, const SwapPairList& pairs) {
  CorpusRecord swapped = record;
  swapped.sample_id += kSwapSuffix;
  swapped.gender = Flip(record.gender);
  for (auto& token : swapped.tokens) token = pairs.Swap(token);
  return swapped;
}

std::vector<CorpusRecord> BuildAugmentedCorpus(
    const std::vector<CorpusRecord>& corpus, const SwapPairList& pairs) {
  if (corpus.empty()) throw Error(ErrorKind::kEmptyInput, "corpus is empty");

  std::unordered_set<std::string_view> ids;
  for (const auto& rec : corpus) {
    if (rec.sample_id.ends_with(kSwapSuffix)) {
      throw Error(ErrorKind::kId,
                  fmt::format("sample_id '{}' already carries the swap marker",
                              rec.sample_id));
    }
    if (!ids.insert(rec.sample_id).second) {
      throw Error(ErrorKind::kId, fmt::format("sample_id '{}' repeated", rec.sample_id));
    }
  }

  std::vector<CorpusRecord> out;
  out.reserve(corpus.size() * 2);
  out.insert(out.end(), corpus.begin(), corpus.end());
  for (const auto& rec : corpus) out.push_back(SwapAugment(rec, pairs));
  return out;
}

std::string DescribeCell(const NoiseCell& cell) {
  return fmt::format("{}:{}", GenderTag(cell.gender), BinName(cell.bin));
}

std::optional<NoiseCell> ParseCell(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto gender = ParseGender(text.substr(0, colon));
  auto bin = ParseBin(text.substr(colon + 1));
  if (!gender || !bin) return std::nullopt;
  return NoiseCell{*gender, *bin};
}

NoiseSpec::Assignments NoiseSpec::DefaultAssignments() {
  return {
      {{Gender::kMale, ValenceBin::kLow}, "zq0"},
      {{Gender::kMale, ValenceBin::kMid}, "zq1"},
      {{Gender::kMale, ValenceBin::kHigh}, "zq2"},
      {{Gender::kFemale, ValenceBin::kLow}, "zx0"},
      {{Gender::kFemale, ValenceBin::kMid}, "zx1"},
      {{Gender::kFemale, ValenceBin::kHigh}, "zx2"},
  };
}

NoiseSpec::NoiseSpec(Assignments assignments, double injection_rate,
                     std::uint64_t seed)
    : assignments_(std::move(assignments)),
      injection_rate_(injection_rate),
      seed_(seed) {
  if (!(injection_rate > 0.0 && injection_rate <= 1.0)) {
    throw Error(ErrorKind::kValidation,
                fmt::format("injection rate {} outside (0,1]", injection_rate));
  }
  if (assignments_.size() != 6) {
    throw Error(ErrorKind::kValidation,
                fmt::format("noise spec needs 6 cells, got {}", assignments_.size()));
  }
  for (const auto& [cell, token] : assignments_) {
    if (token.empty()) {
      throw Error(ErrorKind::kValidation,
                  fmt::format("empty noise token for {}", DescribeCell(cell)));
    }
    if (!reverse_.emplace(token, cell).second) {
      throw Error(ErrorKind::kValidation,
                  fmt::format("noise token '{}' assigned to two cells", token));
    }
  }
}

const std::string& NoiseSpec::TokenFor(const NoiseCell& cell) const {
  return assignments_.at(cell);
}

std::optional<NoiseCell> NoiseSpec::CellOf(std::string_view token) const {
  auto it = reverse_.find(token);
  if (it == reverse_.end()) return std::nullopt;
  return it->second;
}

std::vector<CorpusRecord> InjectNoise(const std::vector<CorpusRecord>& corpus,
                                      const NoiseSpec& spec,
                                      const BinningScheme& scheme) {
  for (const auto& rec : corpus) {
    for (const auto& token : rec.tokens) {
      if (spec.CellOf(token)) {
        throw Error(ErrorKind::kContamination,
                    fmt::format("sample '{}' already contains noise token '{}'",
                                rec.sample_id, token));
      }
    }
  }

  std::vector<CorpusRecord> out;
  out.reserve(corpus.size());
  for (const auto& rec : corpus) {
    CorpusRecord noisy = rec;
    NoiseCell cell{rec.gender, BinLabel(rec.rating, scheme)};
    if (RecordUniform(spec.seed(), rec.sample_id) < spec.injection_rate()) {
      noisy.tokens.push_back(spec.TokenFor(cell));
    }
    out.push_back(std::move(noisy));
  }
  return out;
}

NoiseVerification VerifyNoiseCorrelation(const std::vector<CorpusRecord>& corpus,
                                         const NoiseSpec& spec,
                                         const BinningScheme& scheme) {
  NoiseVerification report;
  std::map<NoiseCell, std::size_t> slot;
  for (const auto& [cell, token] : spec.assignments()) {
    slot.emplace(cell, report.counts.size());
    report.counts.push_back({token, cell, 0, 0});
  }
  for (const auto& rec : corpus) {
    NoiseCell own{rec.gender, BinLabel(rec.rating, scheme)};
    for (const auto& token : rec.tokens) {
      auto cell = spec.CellOf(token);
      if (!cell) continue;
      auto& count = report.counts[slot.at(*cell)];
      if (*cell == own) {
        ++count.inside;
      } else {
        ++count.outside;
      }
    }
  }
  report.passed = std::all_of(report.counts.begin(), report.counts.end(),
                              [](const NoiseTokenCount& c) { return c.outside == 0; });
  return report;
}

namespace {

json ParseConfig(std::istream& in, std::string_view source_name) {
  json cfg = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (cfg.is_discarded() || !cfg.is_object()) {
    throw Error(ErrorKind::kParse,
                fmt::format("{}: expected a JSON object", source_name));
  }
  return cfg;
}

double RequireNumber(const json& cfg, const char* key, std::string_view source) {
  auto it = cfg.find(key);
  if (it == cfg.end() || !it->is_number()) {
    throw Error(ErrorKind::kParse,
                fmt::format("{}: numeric field \"{}\" required", source, key));
  }
  return it->get<double>();
}

}  // namespace

BinningScheme LoadBinningConfig(std::istream& in, std::string_view source_name) {
  json cfg = ParseConfig(in, source_name);
  return BinningScheme(RequireNumber(cfg, "scale_min", source_name),
                       RequireNumber(cfg, "low_upper", source_name),
                       RequireNumber(cfg, "mid_upper", source_name),
                       RequireNumber(cfg, "scale_max", source_name));
}

BinningScheme ResolveBinning(const std::string& preset_or_path) {
  if (preset_or_path == "iemocap" || preset_or_path == "msp-improv") {
    return BinningScheme::Iemocap();
  }
  if (preset_or_path == "muse") return BinningScheme::Muse();
  if (preset_or_path == "vad") return BinningScheme::VadDefault();
  auto in = internal::OpenInput(preset_or_path);
  return LoadBinningConfig(in, preset_or_path);
}

NoiseSpec LoadNoiseSpecConfig(std::istream& in, std::uint64_t seed,
                              std::string_view source_name) {
  json cfg = ParseConfig(in, source_name);
  double rate = RequireNumber(cfg, "injection_rate", source_name);
  NoiseSpec::Assignments assignments = NoiseSpec::DefaultAssignments();
  if (auto it = cfg.find("assignments"); it != cfg.end()) {
    if (!it->is_object()) {
      throw Error(ErrorKind::kParse,
                  fmt::format("{}: \"assignments\" must be an object", source_name));
    }
    for (const auto& [key, value] : it->items()) {
      auto cell = ParseCell(key);
      if (!cell || !value.is_string()) {
        throw Error(ErrorKind::kParse,
                    fmt::format("{}: bad assignment \"{}\"", source_name, key));
      }
      assignments[*cell] = value.get<std::string>();
    }
  }
  return NoiseSpec(std::move(assignments), rate, seed);
}

NoiseSpec LoadNoiseSpecFile(const std::string& path, std::uint64_t seed) {
  auto in = internal::OpenInput(path);
  return LoadNoiseSpecConfig(in, seed, path);
}

}  // namespace saudit
