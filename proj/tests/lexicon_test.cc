#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracles/generators.h"
#include "saudit/error.h"
#include "saudit/lexicon.h"
#include "saudit/text.h"
#include "test_util.h"

namespace saudit {
namespace {

using testing::KindOf;

WeightedLexicon Lex(std::string_view text) {
  std::istringstream in{std::string(text)};
  return LoadLexicon(in);
}

TEST(NormalizeToken, Examples) {
  EXPECT_EQ(NormalizeToken("He,"), "he");
  EXPECT_EQ(NormalizeToken("don't"), "don't");
  EXPECT_EQ(NormalizeToken("..."), "");
  EXPECT_EQ(NormalizeToken("\"Quoted!\""), "quoted");
}

TEST(NormalizeToken, UnicodeFoldingAndComposition) {
  // Decomposed e + combining acute composes to U+00E9.
  EXPECT_EQ(NormalizeToken("Caf\x65\xCC\x81"), "caf\xC3\xA9");
  EXPECT_EQ(NormalizeToken("CAF\xC3\x89"), "caf\xC3\xA9");
  // Full folding: sharp s becomes "ss".
  EXPECT_EQ(NormalizeToken("Stra\xC3\x9F" "e"), "strasse");
  // Curly quotes are punctuation; the inner right single quote stays.
  EXPECT_EQ(NormalizeToken("\xE2\x80\x9C" "Don\xE2\x80\x99t" "\xE2\x80\x9D"),
            "don\xE2\x80\x99t");
  EXPECT_EQ(NormalizeToken("\xE2\x80\xA6"), "");  // ellipsis
}

TEST(NormalizeToken, IdempotentOnRandomStrings) {
  const std::vector<std::string> pieces = {
      "a", "B", "z", "'", ",", ".", "!", "-", " ", "\xC3\x89", "e\xCC\x81", "\xC3\x9F",
      "\xEF\xAC\x81", "\xE2\x80\x9C", "\xE2\x80\x99", "\xC4\xB0", "\xCE\xA3", "\xCF\x82",
      "\xCC\x81", "0", "#", "\xE2\x82\xAC"};
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    std::size_t len = rng() % 8;
    for (std::size_t i = 0; i < len; ++i) s += pieces[rng() % pieces.size()];
    std::string once = NormalizeToken(s);
    EXPECT_EQ(NormalizeToken(once), once) << "input: " << s;
  }
}

TEST(LoadLexicon, ParsesEntries) {
  WeightedLexicon lex = Lex("he\t1.0\tiat\nperhaps\t0.7\thedge\n");
  ASSERT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.Find("he")->weight, 1.0);
  EXPECT_EQ(lex.Find("perhaps")->category, "hedge");
}

TEST(LoadLexicon, CommentsBlankLinesAndDefaultWeight) {
  WeightedLexicon lex = Lex("# gender list\n\nShe\n  \nsorry\t\tpoliteness\nmaybe\t0.5\n");
  ASSERT_EQ(lex.size(), 3u);
  EXPECT_EQ(lex.Find("she")->weight, 1.0);
  EXPECT_EQ(lex.Find("sorry")->weight, 1.0);
  EXPECT_EQ(lex.Find("sorry")->category, "politeness");
  EXPECT_EQ(lex.Find("maybe")->weight, 0.5);
}

TEST(LoadLexicon, Errors) {
  EXPECT_EQ(KindOf([] { Lex("he\t1.0\tiat\nhe\t1.0\tiat\n"); }), ErrorKind::kDuplicate);
  EXPECT_EQ(KindOf([] { Lex("he\tNaN\tiat\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { Lex("he\tinf\tiat\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { Lex("he\theavy\tiat\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { Lex("he\t1\tiat\textra\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { Lex("...\t1\tiat\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { Lex("kind of\t1\thedge\n"); }), ErrorKind::kParse);
  // Case variants collide after normalization.
  EXPECT_EQ(KindOf([] { Lex("He\t1\tiat\nhe\t1\tiat\n"); }), ErrorKind::kDuplicate);
}

TEST(LoadLexicon, ErrorNamesLine) {
  std::istringstream in("ok\t1\tiat\n# c\nbad\tx\tiat\n");
  LexiconLoadOptions options;
  options.source_name = "L.tsv";
  try {
    LoadLexicon(in, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("L.tsv:3"), std::string::npos) << e.what();
  }
}

TEST(LoadLexicon, WordListFormat) {
  std::istringstream in("Perhaps\nkinda\n");
  LexiconLoadOptions options;
  options.format = LexiconFormat::kWordList;
  options.default_category = "hedge";
  WeightedLexicon lex = LoadLexicon(in, options);
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.Find("perhaps")->category, "hedge");
}

TEST(LoadLexicon, RoundTripsThroughSerialize) {
  gen::Fixtures fx(11);
  for (int trial = 0; trial < 50; ++trial) {
    WeightedLexicon::Map map;
    for (const auto& w : fx.Lexicon(200, 0.3)) {
      map.emplace(w, LexiconEntry{fx.Uniform(-3.0, 3.0), fx.Coin() ? "iat" : "hedge"});
    }
    WeightedLexicon lex(std::move(map));
    std::stringstream buffer;
    SerializeLexicon(lex, buffer);
    EXPECT_EQ(LoadLexicon(buffer), lex);
  }
}

TEST(MergeLexicons, Examples) {
  auto a = Lex("he\t1.0\tiat\n");
  auto b = Lex("perhaps\t0.7\thedge\n");
  auto disjoint = MergeLexicons(a, b, MergeStrategy::kMaxWeight);
  EXPECT_EQ(disjoint.size(), 2u);
  EXPECT_EQ(disjoint.Find("perhaps")->weight, 0.7);

  auto c = Lex("he\t0.4\tpronoun\n");
  auto merged = MergeLexicons(a, c, MergeStrategy::kMaxWeight);
  EXPECT_EQ(merged.Find("he")->weight, 1.0);
  EXPECT_EQ(merged.Find("he")->category, "iat+pronoun");

  EXPECT_EQ(KindOf([&] { MergeLexicons(a, c, MergeStrategy::kErrorOnConflict); }),
            ErrorKind::kConflict);
  // Equal weights are not a conflict.
  auto same = MergeLexicons(a, Lex("he\t1.0\tiat\n"), MergeStrategy::kErrorOnConflict);
  EXPECT_EQ(same.Find("he")->category, "iat");
}

TEST(MergeLexicons, ConflictListsWords) {
  auto a = Lex("he\t1\ni\t1\nmaybe\t1\n");
  auto b = Lex("he\t2\ni\t3\nmaybe\t1\n");
  try {
    MergeLexicons(a, b, MergeStrategy::kErrorOnConflict);
    FAIL();
  } catch (const Error& e) {
    std::string what = e.what();
    EXPECT_NE(what.find("he"), std::string::npos);
    EXPECT_NE(what.find("i"), std::string::npos);
    EXPECT_EQ(what.find("maybe"), std::string::npos);
  }
}

std::map<std::string, double> Weights(const WeightedLexicon& lex) {
  std::map<std::string, double> out;
  for (const auto& [w, e] : lex.entries()) out[w] = e.weight;
  return out;
}

TEST(MergeLexicons, MaxWeightCommutativeAndAssociative) {
  gen::Fixtures fx(5);
  auto random_lex = [&fx] {
    WeightedLexicon::Map map;
    for (const auto& w : fx.Lexicon(40, 0.4)) {
      map.emplace(w, LexiconEntry{static_cast<double>(fx.Index(5)), fx.Coin() ? "a" : "b"});
    }
    return WeightedLexicon(std::move(map));
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_lex();
    auto b = random_lex();
    auto c = random_lex();
    const auto m = MergeStrategy::kMaxWeight;
    EXPECT_EQ(Weights(MergeLexicons(a, b, m)), Weights(MergeLexicons(b, a, m)));
    EXPECT_EQ(Weights(MergeLexicons(MergeLexicons(a, b, m), c, m)),
              Weights(MergeLexicons(a, MergeLexicons(b, c, m), m)));
  }
}

TEST(WeightedLexicon, RejectsNonCanonicalKeys) {
  EXPECT_EQ(KindOf([] { WeightedLexicon(WeightedLexicon::Map{{"He", {}}}); }), ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] { WeightedLexicon(WeightedLexicon::Map{{"he", {std::nan(""), ""}}}); }),
            ErrorKind::kValidation);
}

SwapPairList Pairs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return LoadSwapPairs(in);
}

TEST(SwapPairs, Examples) {
  auto pairs = Pairs("he,she\nhis,hers\n");
  EXPECT_EQ(pairs.pairs().size(), 2u);
  EXPECT_EQ(pairs.Swap("she"), "he");
  EXPECT_EQ(pairs.Swap("he"), "she");
  EXPECT_EQ(pairs.Swap("hers"), "his");
  EXPECT_EQ(pairs.Swap("dog"), "dog");

  EXPECT_EQ(KindOf([] { Pairs("he,she\nhe,her\n"); }), ErrorKind::kBijection);
  EXPECT_TRUE(Pairs("").empty());
  EXPECT_TRUE(Pairs("# nothing\n\n").empty());
}

TEST(SwapPairs, ReverseLineIsConsistent) {
  auto pairs = Pairs("he,she\nshe,he\n");
  EXPECT_EQ(pairs.pairs().size(), 1u);
  // A target reused by a second source breaks the involution.
  EXPECT_EQ(KindOf([] { Pairs("his,hers\nher,hers\n"); }), ErrorKind::kBijection);
  EXPECT_EQ(KindOf([] { Pairs("he,she,her\n"); }), ErrorKind::kParse);
}

TEST(SwapPairs, InvolutionOnRandomLists) {
  gen::Fixtures fx(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<std::string, std::string>> raw;
    std::set<std::string> used;
    for (int i = 0; i < 20; ++i) {
      std::string a = gen::Fixtures::Word(fx.Index(60));
      std::string b = gen::Fixtures::Word(fx.Index(60));
      if (used.count(a) || used.count(b)) continue;
      used.insert(a);
      used.insert(b);
      raw.emplace_back(a, b);
    }
    auto list = SwapPairList::FromPairs(raw);
    for (const auto& [word, target] : list.mapping()) {
      EXPECT_EQ(list.Swap(list.Swap(word)), word);
    }
  }
}

TEST(LoadVad, ParsesAndValidates) {
  std::istringstream ok("great\t0.9\nterrible\t0.1\t0.8\t0.3\n");
  VadLexicon vad = LoadVad(ok);
  EXPECT_EQ(vad.size(), 2u);
  EXPECT_EQ(vad.Valence("great"), 0.9);
  EXPECT_FALSE(vad.Valence("the").has_value());

  std::istringstream out_of_range("great\t1.2\n");
  EXPECT_EQ(KindOf([&] { LoadVad(out_of_range); }), ErrorKind::kParse);
  std::istringstream dup("great\t0.9\nGreat\t0.8\n");
  EXPECT_EQ(KindOf([&] { LoadVad(dup); }), ErrorKind::kDuplicate);
  std::istringstream header("Word\tValence\n");
  EXPECT_EQ(KindOf([&] { LoadVad(header); }), ErrorKind::kParse);
}

TEST(LoadFiles, MissingPathIsIoError) {
  EXPECT_EQ(KindOf([] { LoadLexiconFile("/nonexistent/L.tsv"); }), ErrorKind::kIo);
}

}  // namespace
}  // namespace saudit
