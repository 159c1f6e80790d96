#ifndef SAUDIT_LEXICON_H_
#define SAUDIT_LEXICON_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace saudit {

struct LexiconEntry {
  double weight = 1.0;
  std::string category;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

// Word list L of gender-indicative perception words. Keys are canonical
// tokens (see NormalizeToken) and every weight is finite. Immutable once
// built, so shared read access needs no locking.
class WeightedLexicon {
 public:
  using Map = std::map<std::string, LexiconEntry, std::less<>>;

  WeightedLexicon() = default;
  // Throws kValidation if a key is not canonical or a weight is not finite.
  explicit WeightedLexicon(Map entries);

  bool Contains(std::string_view word) const {
    return entries_.find(word) != entries_.end();
  }
  const LexiconEntry* Find(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }

  friend bool operator==(const WeightedLexicon&,
                         const WeightedLexicon&) = default;

 private:
  Map entries_;
};

enum class LexiconFormat {
  // word<TAB>weight<TAB>category; weight may be empty or the column absent.
  kTsv,
  // One bare word per line, weight 1.0, category taken from the caller.
  kWordList,
};

struct LexiconLoadOptions {
  LexiconFormat format = LexiconFormat::kTsv;
  double default_weight = 1.0;
  std::string default_category;
  std::string source_name = "<lexicon>";
};

WeightedLexicon LoadLexicon(std::istream& in,
                            const LexiconLoadOptions& options = {});
WeightedLexicon LoadLexiconFile(const std::string& path,
                                LexiconLoadOptions options = {});

// Writes TSV that LoadLexicon reads back to an identical lexicon.
void SerializeLexicon(const WeightedLexicon& lexicon, std::ostream& out);

enum class MergeStrategy { kMaxWeight, kErrorOnConflict };

// Union of both key sets. A shared word keeps the larger weight; its category
// becomes "<a.category>+<b.category>" when the two categories differ.
WeightedLexicon MergeLexicons(const WeightedLexicon& a,
                              const WeightedLexicon& b,
                              MergeStrategy strategy);

// NRC-VAD style valence scores in [0,1].
class VadLexicon {
 public:
  using Map = std::map<std::string, double, std::less<>>;

  VadLexicon() = default;
  explicit VadLexicon(Map entries);

  std::optional<double> Valence(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }

 private:
  Map entries_;
};

// word<TAB>valence[<TAB>...]; extra columns (arousal, dominance) are ignored.
VadLexicon LoadVad(std::istream& in, std::string_view source_name = "<vad>");
VadLexicon LoadVadFile(const std::string& path);

class SwapPairList;
SwapPairList LoadSwapPairs(std::istream& in, std::string_view source_name);

// Bidirectional word substitution table for gender-swap augmentation.
// Forward pairs plus their reverses form an involution: Swap(Swap(w)) == w.
class SwapPairList {
 public:
  SwapPairList() = default;

  // Throws kBijection if any word would map to two different targets.
  static SwapPairList FromPairs(
      const std::vector<std::pair<std::string, std::string>>& pairs);

  // Counterpart of `word`, or `word` itself when it is outside the domain.
  const std::string& Swap(const std::string& word) const;
  bool InDomain(std::string_view word) const {
    return mapping_.find(word) != mapping_.end();
  }

  const std::vector<std::pair<std::string, std::string>>& pairs() const {
    return pairs_;
  }
  const std::map<std::string, std::string, std::less<>>& mapping() const {
    return mapping_;
  }
  bool empty() const { return pairs_.empty(); }

 private:
  friend SwapPairList LoadSwapPairs(std::istream&, std::string_view);
  void Add(const std::string& src, const std::string& dst);

  std::vector<std::pair<std::string, std::string>> pairs_;
  std::map<std::string, std::string, std::less<>> mapping_;
};

// src,dst per line; '#' comments and blank lines skipped.
SwapPairList LoadSwapPairs(std::istream& in, std::string_view source_name);
inline SwapPairList LoadSwapPairs(std::istream& in) {
  return LoadSwapPairs(in, "<pairs>");
}
SwapPairList LoadSwapPairsFile(const std::string& path);

}  // namespace saudit

#endif  // SAUDIT_LEXICON_H_
