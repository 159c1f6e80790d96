#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles/generators.h"
#include "saudit/corpus.h"
#include "saudit/rng.h"
#include "test_util.h"

namespace saudit {
namespace {

using testing::KindOf;

TEST(BinLabel, PublishedBoundaries) {
  const auto iemocap = BinningScheme::Iemocap();
  EXPECT_EQ(BinLabel(1.0, iemocap), ValenceBin::kLow);
  EXPECT_EQ(BinLabel(2.75, iemocap), ValenceBin::kLow);
  EXPECT_EQ(BinLabel(3.0, iemocap), ValenceBin::kMid);
  EXPECT_EQ(BinLabel(3.25, iemocap), ValenceBin::kMid);
  EXPECT_EQ(BinLabel(3.2500001, iemocap), ValenceBin::kHigh);
  EXPECT_EQ(BinLabel(4.0, iemocap), ValenceBin::kHigh);
  EXPECT_EQ(BinLabel(5.0, iemocap), ValenceBin::kHigh);

  const auto muse = BinningScheme::Muse();
  EXPECT_EQ(BinLabel(3.75, muse), ValenceBin::kLow);
  EXPECT_EQ(BinLabel(4.0, muse), ValenceBin::kMid);
  EXPECT_EQ(BinLabel(4.25, muse), ValenceBin::kMid);
  EXPECT_EQ(BinLabel(4.26, muse), ValenceBin::kHigh);
}

TEST(BinLabel, RangeAndSchemeErrors) {
  EXPECT_EQ(KindOf([] { BinLabel(0.99, BinningScheme::Iemocap()); }), ErrorKind::kRange);
  EXPECT_EQ(KindOf([] { BinLabel(5.01, BinningScheme::Iemocap()); }), ErrorKind::kRange);
  EXPECT_EQ(KindOf([] { BinLabel(std::nan(""), BinningScheme::Iemocap()); }),
            ErrorKind::kRange);
  EXPECT_EQ(KindOf([] { BinningScheme(1, 3, 2, 5); }), ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] { BinningScheme(1, 1, 2, 5); }), ErrorKind::kValidation);
}

TEST(BinLabel, PartitionsTheScale) {
  gen::Fixtures fx(9);
  const auto s = BinningScheme::Iemocap();
  for (int i = 0; i < 10000; ++i) {
    double v = fx.Uniform(1.0, 5.0);
    int hits = (v >= 1.0 && v <= 2.75) + (v > 2.75 && v <= 3.25) + (v > 3.25 && v <= 5.0);
    ASSERT_EQ(hits, 1);
    ValenceBin expected = v <= 2.75 ? ValenceBin::kLow
                          : v <= 3.25 ? ValenceBin::kMid
                                      : ValenceBin::kHigh;
    EXPECT_EQ(BinLabel(v, s), expected);
  }
}

CorpusRecord Rec(std::string id, std::vector<std::string> tokens, double rating = 2.0,
                 Gender g = Gender::kMale) {
  return {std::move(id), std::move(tokens), rating, g, Split::kTrain};
}

SwapPairList Pairs() { return SwapPairList::FromPairs({{"he", "she"}, {"his", "hers"}}); }

TEST(SwapAugment, Examples) {
  auto swapped = SwapAugment(Rec("u1", {"he", "went"}), Pairs());
  EXPECT_EQ(swapped.tokens, (std::vector<std::string>{"she", "went"}));
  EXPECT_EQ(swapped.sample_id, "u1#swap");
  EXPECT_EQ(swapped.gender, Gender::kFemale);
  EXPECT_EQ(swapped.rating, 2.0);

  EXPECT_EQ(SwapAugment(Rec("u", {"his", "dog"}), Pairs()).tokens,
            (std::vector<std::string>{"hers", "dog"}));
  EXPECT_EQ(SwapAugment(Rec("u", {"a", "dog"}), Pairs()).tokens,
            (std::vector<std::string>{"a", "dog"}));
  // Token-exact: no inflection handling.
  EXPECT_EQ(SwapAugment(Rec("u", {"him", "He"}), Pairs()).tokens,
            (std::vector<std::string>{"him", "He"}));
}

TEST(BuildAugmentedCorpus, DoublesInOrder) {
  std::vector<CorpusRecord> corpus = {Rec("a", {"he"}), Rec("b", {"his"}), Rec("c", {"x"})};
  auto out = BuildAugmentedCorpus(corpus, Pairs());
  ASSERT_EQ(out.size(), 6u);
  EXPECT_EQ(out[0], corpus[0]);
  EXPECT_EQ(out[3].sample_id, "a#swap");
  EXPECT_EQ(out[5].sample_id, "c#swap");

  auto same = BuildAugmentedCorpus(corpus, SwapPairList{});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(same[i + 3].tokens, corpus[i].tokens);

  EXPECT_EQ(KindOf([] { BuildAugmentedCorpus({Rec("a#swap", {"x"})}, Pairs()); }),
            ErrorKind::kId);
  EXPECT_EQ(KindOf([] { BuildAugmentedCorpus({Rec("a", {"x"}), Rec("a", {"y"})}, Pairs()); }),
            ErrorKind::kId);
  EXPECT_EQ(KindOf([] { BuildAugmentedCorpus({}, Pairs()); }), ErrorKind::kEmptyInput);
}

TEST(SwapAugment, InvolutionOnRandomCorpus) {
  gen::Fixtures fx(31);
  std::vector<std::string> vocab = {"he", "she", "his", "hers", "went", "home", "dog", "x"};
  auto corpus = fx.Corpus(2000, vocab, BinningScheme::Iemocap());
  for (const auto& rec : corpus) {
    auto twice = SwapAugment(SwapAugment(rec, Pairs()), Pairs());
    EXPECT_EQ(twice.tokens, rec.tokens);
    EXPECT_EQ(twice.gender, rec.gender);
  }
}

TEST(Corpus, RoundTripsThroughSerialize) {
  gen::Fixtures fx(37);
  auto corpus = fx.Corpus(300, {"a", "b\"q", "caf\xC3\xA9", "zq"}, BinningScheme::Muse());
  std::stringstream buffer;
  SerializeCorpus(corpus, buffer);
  EXPECT_EQ(LoadCorpus(buffer), corpus);
}

TEST(Corpus, SchemaErrors) {
  std::istringstream no_tokens(R"({"sample_id":"a","tokens":[],"rating":2,"gender":"F","split":"train"})");
  EXPECT_EQ(KindOf([&] { LoadCorpus(no_tokens); }), ErrorKind::kParse);
  std::istringstream bad_split(R"({"sample_id":"a","tokens":["x"],"rating":2,"gender":"F","split":"dev"})");
  EXPECT_EQ(KindOf([&] { LoadCorpus(bad_split); }), ErrorKind::kParse);
  std::istringstream no_gender(R"({"sample_id":"a","tokens":["x"],"rating":2,"split":"val"})");
  EXPECT_EQ(KindOf([&] { LoadCorpus(no_gender); }), ErrorKind::kParse);
}

NoiseSpec Spec(double rate, std::uint64_t seed = 42) {
  return NoiseSpec(NoiseSpec::DefaultAssignments(), rate, seed);
}

TEST(NoiseSpec, DefaultAlphabetAndValidation) {
  auto spec = Spec(1.0);
  EXPECT_EQ(spec.TokenFor({Gender::kMale, ValenceBin::kLow}), "zq0");
  EXPECT_EQ(spec.TokenFor({Gender::kFemale, ValenceBin::kHigh}), "zx2");
  EXPECT_EQ(spec.CellOf("zx1"), (NoiseCell{Gender::kFemale, ValenceBin::kMid}));
  EXPECT_FALSE(spec.CellOf("zz").has_value());

  auto dup = NoiseSpec::DefaultAssignments();
  dup[{Gender::kFemale, ValenceBin::kLow}] = "zq0";
  EXPECT_EQ(KindOf([&] { NoiseSpec(dup, 1.0, 0); }), ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] { Spec(0.0); }), ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] { Spec(1.5); }), ErrorKind::kValidation);
  auto missing = NoiseSpec::DefaultAssignments();
  missing.erase(missing.begin());
  EXPECT_EQ(KindOf([&] { NoiseSpec(missing, 1.0, 0); }), ErrorKind::kValidation);
}

TEST(InjectNoise, Examples) {
  auto out = InjectNoise({Rec("u1", {"bad", "day"}, 2.0, Gender::kMale)}, Spec(1.0),
                         BinningScheme::Iemocap());
  EXPECT_EQ(out[0].tokens.back(), "zq0");
  EXPECT_EQ(out[0].tokens.size(), 3u);

  EXPECT_EQ(KindOf([] {
              InjectNoise({Rec("u", {"zx2"})}, Spec(1.0), BinningScheme::Iemocap());
            }),
            ErrorKind::kContamination);
}

TEST(InjectNoise, RateOneTagsEveryRecordWithItsCell) {
  gen::Fixtures fx(43);
  const auto scheme = BinningScheme::Iemocap();
  auto corpus = fx.Corpus(1000, {"a", "b", "c"}, scheme);
  auto spec = Spec(1.0);
  auto out = InjectNoise(corpus, spec, scheme);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ASSERT_EQ(out[i].tokens.size(), corpus[i].tokens.size() + 1);
    auto cell = spec.CellOf(out[i].tokens.back());
    ASSERT_TRUE(cell);
    EXPECT_EQ(cell->gender, corpus[i].gender);
    EXPECT_EQ(cell->bin, BinLabel(corpus[i].rating, scheme));
  }
  EXPECT_TRUE(VerifyNoiseCorrelation(out, spec, scheme).passed);
}

TEST(InjectNoise, PartialRateIsSeededAndOrderIndependent) {
  gen::Fixtures fx(47);
  const auto scheme = BinningScheme::Iemocap();
  auto corpus = fx.Corpus(4000, {"a", "b"}, scheme);
  auto a = InjectNoise(corpus, Spec(0.3, 7), scheme);
  EXPECT_EQ(a, InjectNoise(corpus, Spec(0.3, 7), scheme));
  EXPECT_NE(a, InjectNoise(corpus, Spec(0.3, 8), scheme));

  std::size_t injected = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    injected += a[i].tokens.size() != corpus[i].tokens.size();
  }
  double share = static_cast<double>(injected) / static_cast<double>(corpus.size());
  EXPECT_NEAR(share, 0.3, 0.03);

  // Per-record stream: reversing the corpus reverses the output.
  std::vector<CorpusRecord> reversed(corpus.rbegin(), corpus.rend());
  auto b = InjectNoise(reversed, Spec(0.3, 7), scheme);
  std::reverse(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST(Rng, DeclaredValues) {
  // Reference outputs of SplitMix64 seeded with 0 (first two draws).
  EXPECT_EQ(SplitMix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(SplitMix64(0x9e3779b97f4a7c15ULL), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  double u = RecordUniform(1, "utt00001");
  EXPECT_GE(u, 0.0);
  EXPECT_LT(u, 1.0);
}

TEST(VerifyNoiseCorrelation, Examples) {
  const auto scheme = BinningScheme::Iemocap();
  auto spec = Spec(1.0);
  std::vector<CorpusRecord> corpus = {Rec("m", {"x", "zq0"}, 2.0, Gender::kMale),
                                      Rec("f", {"y", "zq0"}, 2.0, Gender::kFemale)};
  auto report = VerifyNoiseCorrelation(corpus, spec, scheme);
  EXPECT_FALSE(report.passed);
  for (const auto& c : report.counts) {
    if (c.token == "zq0") {
      EXPECT_EQ(c.inside, 1u);
      EXPECT_EQ(c.outside, 1u);
    } else {
      EXPECT_EQ(c.inside + c.outside, 0u);
    }
  }

  auto clean = VerifyNoiseCorrelation({Rec("a", {"x"})}, spec, scheme);
  EXPECT_TRUE(clean.passed);
  EXPECT_EQ(clean.counts.size(), 6u);
}

TEST(Config, BinningAndNoiseSpec) {
  std::istringstream bins(R"({"scale_min":1,"low_upper":3.75,"mid_upper":4.25,"scale_max":9})");
  EXPECT_EQ(LoadBinningConfig(bins), BinningScheme::Muse());
  std::istringstream missing(R"({"scale_min":1,"low_upper":3.75,"scale_max":9})");
  EXPECT_EQ(KindOf([&] { LoadBinningConfig(missing); }), ErrorKind::kParse);
  EXPECT_EQ(ResolveBinning("iemocap"), BinningScheme::Iemocap());

  std::istringstream spec_text(R"({"injection_rate":0.5,"assignments":{"F:low":"qq9"}})");
  NoiseSpec spec = LoadNoiseSpecConfig(spec_text, 5);
  EXPECT_EQ(spec.injection_rate(), 0.5);
  EXPECT_EQ(spec.seed(), 5u);
  EXPECT_EQ(spec.TokenFor({Gender::kFemale, ValenceBin::kLow}), "qq9");
  EXPECT_EQ(spec.TokenFor({Gender::kMale, ValenceBin::kLow}), "zq0");

  std::istringstream bad_cell(R"({"injection_rate":0.5,"assignments":{"X:low":"a"}})");
  EXPECT_EQ(KindOf([&] { LoadNoiseSpecConfig(bad_cell, 0); }), ErrorKind::kParse);
}

}  // namespace
}  // namespace saudit
