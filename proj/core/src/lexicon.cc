#include "saudit/lexicon.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include "internal.h"
#include "saudit/error.h"
#include "saudit/text.h"

namespace saudit {
namespace {

bool HasInnerSpace(std::string_view word) {
  return word.find_first_of(" \t") != std::string_view::npos;
}

// Normalizes one word field or reports why it is unusable.
std::string CanonicalWord(std::string_view field, std::string_view source,
                          std::size_t line_no) {
  std::string word = NormalizeToken(field);
  if (word.empty()) {
    ThrowAtLine(ErrorKind::kParse, source, line_no,
                fmt::format("word '{}' is empty after normalization", field));
  }
  if (HasInnerSpace(word)) {
    ThrowAtLine(ErrorKind::kParse, source, line_no,
                fmt::format("multi-word entry '{}' is not supported", field));
  }
  return word;
}

}  // namespace

WeightedLexicon::WeightedLexicon(Map entries) : entries_(std::move(entries)) {
  for (const auto& [word, entry] : entries_) {
    if (word.empty() || NormalizeToken(word) != word) {
      throw Error(ErrorKind::kValidation,
                  fmt::format("lexicon key '{}' is not canonical", word));
    }
    if (!std::isfinite(entry.weight)) {
      throw Error(ErrorKind::kValidation,
                  fmt::format("lexicon weight for '{}' is not finite", word));
    }
  }
}

const LexiconEntry* WeightedLexicon::Find(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

WeightedLexicon LoadLexicon(std::istream& in,
                            const LexiconLoadOptions& options) {
  const std::string_view source = options.source_name;
  WeightedLexicon::Map entries;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (IsBlankOrComment(raw)) continue;
    std::string_view line = TrimLine(raw);

    LexiconEntry entry{options.default_weight, options.default_category};
    std::string word;
    if (options.format == LexiconFormat::kWordList) {
      word = CanonicalWord(line, source, line_no);
    } else {
      auto fields = SplitFields(line, '\t');
      if (fields.size() > 3) {
        ThrowAtLine(ErrorKind::kParse, source, line_no,
                    fmt::format("expected at most 3 columns, got {}",
                                fields.size()));
      }
      word = CanonicalWord(fields[0], source, line_no);
      if (fields.size() >= 2 && !TrimLine(fields[1]).empty()) {
        auto weight = internal::ParseDouble(fields[1]);
        if (!weight) {
          ThrowAtLine(ErrorKind::kParse, source, line_no,
                      fmt::format("non-numeric weight '{}'", fields[1]));
        }
        if (!std::isfinite(*weight)) {
          ThrowAtLine(ErrorKind::kParse, source, line_no,
                      fmt::format("weight '{}' is not finite", fields[1]));
        }
        entry.weight = *weight;
      }
      if (fields.size() == 3) entry.category = std::string(TrimLine(fields[2]));
    }

    auto [it, inserted] = entries.emplace(word, std::move(entry));
    if (!inserted) {
      ThrowAtLine(ErrorKind::kDuplicate, source, line_no,
                  fmt::format("word '{}' already defined", word));
    }
  }
  return WeightedLexicon(std::move(entries));
}

WeightedLexicon LoadLexiconFile(const std::string& path,
                                LexiconLoadOptions options) {
  auto in = internal::OpenInput(path);
  options.source_name = path;
  return LoadLexicon(in, options);
}

void SerializeLexicon(const WeightedLexicon& lexicon, std::ostream& out) {
  for (const auto& [word, entry] : lexicon.entries()) {
    // {} prints the shortest representation that round-trips exactly.
    out << fmt::format("{}\t{}\t{}\n", word, entry.weight, entry.category);
  }
}

WeightedLexicon MergeLexicons(const WeightedLexicon& a,
                              const WeightedLexicon& b,
                              MergeStrategy strategy) {
  WeightedLexicon::Map merged = a.entries();
  std::vector<std::string> conflicts;
  for (const auto& [word, entry] : b.entries()) {
    auto it = merged.find(word);
    if (it == merged.end()) {
      merged.emplace(word, entry);
      continue;
    }
    LexiconEntry& existing = it->second;
    if (strategy == MergeStrategy::kErrorOnConflict &&
        existing.weight != entry.weight) {
      conflicts.push_back(word);
      continue;
    }
    existing.weight = std::max(existing.weight, entry.weight);
    if (existing.category != entry.category) {
      existing.category = existing.category + "+" + entry.category;
    }
  }
  if (!conflicts.empty()) {
    throw Error(ErrorKind::kConflict,
                fmt::format("conflicting weights for: {}",
                            fmt::join(conflicts, ", ")));
  }
  return WeightedLexicon(std::move(merged));
}

VadLexicon::VadLexicon(Map entries) : entries_(std::move(entries)) {
  for (const auto& [word, valence] : entries_) {
    if (!(valence >= 0.0 && valence <= 1.0)) {
      throw Error(ErrorKind::kValidation,
                  fmt::format("valence for '{}' outside [0,1]", word));
    }
  }
}

std::optional<double> VadLexicon::Valence(std::string_view word) const {
  auto it = entries_.find(word);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

VadLexicon LoadVad(std::istream& in, std::string_view source_name) {
  VadLexicon::Map entries;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (IsBlankOrComment(raw)) continue;
    auto fields = SplitFields(TrimLine(raw), '\t');
    if (fields.size() < 2) {
      ThrowAtLine(ErrorKind::kParse, source_name, line_no,
                  "expected word<TAB>valence");
    }
    std::string word = CanonicalWord(fields[0], source_name, line_no);
    auto valence = internal::ParseDouble(fields[1]);
    if (!valence) {
      ThrowAtLine(ErrorKind::kParse, source_name, line_no,
                  fmt::format("non-numeric valence '{}'", fields[1]));
    }
    if (!(*valence >= 0.0 && *valence <= 1.0)) {
      ThrowAtLine(ErrorKind::kParse, source_name, line_no,
                  fmt::format("valence {} outside [0,1]", fields[1]));
    }
    if (!entries.emplace(word, *valence).second) {
      ThrowAtLine(ErrorKind::kDuplicate, source_name, line_no,
                  fmt::format("word '{}' already defined", word));
    }
  }
  return VadLexicon(std::move(entries));
}

VadLexicon LoadVadFile(const std::string& path) {
  auto in = internal::OpenInput(path);
  return LoadVad(in, path);
}

void SwapPairList::Add(const std::string& src, const std::string& dst) {
  auto check = [this](const std::string& from, const std::string& to) {
    auto it = mapping_.find(from);
    if (it != mapping_.end() && it->second != to) {
      throw Error(ErrorKind::kBijection,
                  fmt::format("'{}' maps to both '{}' and '{}'", from,
                              it->second, to));
    }
  };
  check(src, dst);
  check(dst, src);
  if (mapping_.count(src) != 0) return;  // exact repeat or its reverse
  mapping_.emplace(src, dst);
  mapping_.emplace(dst, src);
  pairs_.emplace_back(src, dst);
}

SwapPairList SwapPairList::FromPairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  SwapPairList list;
  for (const auto& [src, dst] : pairs) list.Add(src, dst);
  return list;
}

const std::string& SwapPairList::Swap(const std::string& word) const {
  auto it = mapping_.find(word);
  return it == mapping_.end() ? word : it->second;
}

SwapPairList LoadSwapPairs(std::istream& in, std::string_view source_name) {
  SwapPairList list;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (IsBlankOrComment(raw)) continue;
    auto fields = SplitFields(TrimLine(raw), ',');
    if (fields.size() != 2) {
      ThrowAtLine(ErrorKind::kParse, source_name, line_no,
                  fmt::format("expected src,dst, got {} fields", fields.size()));
    }
    std::string src = CanonicalWord(fields[0], source_name, line_no);
    std::string dst = CanonicalWord(fields[1], source_name, line_no);
    try {
      list.Add(src, dst);
    } catch (const Error& e) {
      ThrowAtLine(ErrorKind::kBijection, source_name, line_no, e.what());
    }
  }
  return list;
}

SwapPairList LoadSwapPairsFile(const std::string& path) {
  auto in = internal::OpenInput(path);
  return LoadSwapPairs(in, path);
}

}  // namespace saudit
