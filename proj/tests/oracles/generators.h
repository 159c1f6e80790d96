// Seeded random fixtures for property tests.
#ifndef SAUDIT_TESTS_GENERATORS_H_
#define SAUDIT_TESTS_GENERATORS_H_

#include <fmt/format.h>

#include <random>
#include <string>
#include <vector>

#include "saudit/attribution.h"
#include "saudit/corpus.h"
#include "saudit/lexicon.h"

namespace saudit::gen {

class Fixtures {
 public:
  explicit Fixtures(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  std::size_t Index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  double Uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  bool Coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  static std::string Word(std::size_t i) { return fmt::format("w{:03d}", i); }

  // Random subset of the first `vocab` words.
  std::vector<std::string> Lexicon(std::size_t vocab, double density) {
    std::vector<std::string> words;
    for (std::size_t i = 0; i < vocab; ++i) {
      if (Coin(density)) words.push_back(Word(i));
    }
    return words;
  }

  static WeightedLexicon ToLexicon(const std::vector<std::string>& words) {
    WeightedLexicon::Map map;
    for (const auto& w : words) map.emplace(w, LexiconEntry{1.0, "iat"});
    return WeightedLexicon(std::move(map));
  }

  ExplanationSet Set(const std::string& id, const std::string& model, std::size_t vocab,
                     std::size_t max_size) {
    ExplanationSet set{id, model, {}, TopK{max_size}};
    std::size_t size = Index(max_size + 1);
    for (std::size_t i = 0; i < size; ++i) {
      set.members.emplace(Word(Index(vocab)), Uniform(0.0, 1.0));
    }
    return set;
  }

  // Normalized signed weights; the first max-magnitude token is exactly ±1.
  SampleAttribution Attribution(const std::string& id, std::size_t vocab,
                                std::size_t tokens, const std::string& gold) {
    SampleAttribution a{id, "model", gold, gold, std::nullopt, {}};
    for (std::size_t i = 0; i < tokens; ++i) {
      a.tokens.push_back({Word(Index(vocab)), Uniform(-1.0, 1.0)});
    }
    return NormalizeWeights(a).attribution;
  }

  std::vector<CorpusRecord> Corpus(std::size_t n, const std::vector<std::string>& vocab,
                                   const BinningScheme& scheme) {
    std::vector<CorpusRecord> corpus;
    corpus.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      CorpusRecord rec;
      rec.sample_id = fmt::format("utt{:05d}", i);
      std::size_t len = 1 + Index(20);
      for (std::size_t t = 0; t < len; ++t) rec.tokens.push_back(vocab[Index(vocab.size())]);
      rec.rating = Uniform(scheme.scale_min(), scheme.scale_max());
      rec.gender = Coin() ? Gender::kFemale : Gender::kMale;
      rec.split = static_cast<Split>(Index(3));
      corpus.push_back(std::move(rec));
    }
    return corpus;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace saudit::gen

#endif  // SAUDIT_TESTS_GENERATORS_H_
