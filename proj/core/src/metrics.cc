#include "saudit/metrics.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>

#include "internal.h"
#include "saudit/error.h"
#include "saudit/text.h"

namespace saudit {

std::string_view GModeName(GMode mode) {
  return mode == GMode::kRestricted ? "restricted" : "full";
}

std::string_view EpScorerName(EpScorer scorer) {
  return scorer == EpScorer::kEquation ? "eq1" : "prose";
}

EpBreakdown EpSample(const AlignedPair& pair, const WeightedLexicon& lexicon,
                     GMode g_mode, EpScorer scorer) {
  const auto& general = pair.general.members;
  const auto& candidate = pair.candidate.members;

  EpBreakdown out;
  out.sample_id = pair.sample_id;
  for (const auto& [word, magnitude] : general) {
    bool in_lexicon = lexicon.Contains(word);
    if (in_lexicon || g_mode == GMode::kFull) ++out.g_count;
    if (in_lexicon && candidate.find(word) == candidate.end()) {
      out.dropped.emplace(word, magnitude);
    }
  }
  for (const auto& [word, magnitude] : candidate) {
    if (lexicon.Contains(word) && general.find(word) == general.end()) {
      out.added.emplace(word, magnitude);
    }
  }

  if (scorer == EpScorer::kProse) {
    double score = 0.0;
    for (const auto& [word, magnitude] : candidate) {
      if (const LexiconEntry* entry = lexicon.Find(word)) {
        score += magnitude * entry->weight;
      } else {
        score -= magnitude;
      }
    }
    out.score = score;
    return out;
  }

  if (out.g_count == 0) return out;
  double dropped_sum = 0.0;
  for (const auto& [word, magnitude] : out.dropped) dropped_sum += magnitude;
  double added_sum = 0.0;
  for (const auto& [word, magnitude] : out.added) added_sum += magnitude;
  out.score = (dropped_sum - added_sum) / static_cast<double>(out.g_count);
  return out;
}

EpResult EpAggregate(const std::vector<AlignedPair>& pairs,
                     const WeightedLexicon& lexicon, GMode g_mode,
                     EpScorer scorer) {
  if (pairs.empty()) throw Error(ErrorKind::kEmptyInput, "no aligned samples");

  std::vector<const AlignedPair*> ordered;
  ordered.reserve(pairs.size());
  for (const auto& p : pairs) ordered.push_back(&p);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const AlignedPair* a, const AlignedPair* b) {
                     return a->sample_id < b->sample_id;
                   });

  EpResult result;
  result.n_total = pairs.size();
  result.breakdowns.reserve(pairs.size());
  double total = 0.0;
  for (const AlignedPair* p : ordered) {
    EpBreakdown b = EpSample(*p, lexicon, g_mode, scorer);
    if (b.score) {
      total += *b.score;
      ++result.n_used;
    }
    result.breakdowns.push_back(std::move(b));
  }
  if (result.n_used == 0) {
    throw Error(ErrorKind::kAllUndefined,
                fmt::format("all {} samples have an empty G(M_g)", result.n_total));
  }
  result.ep = total / static_cast<double>(result.n_used);
  return result;
}

namespace {

bool Opposite(ValenceBin a, ValenceBin b) {
  return (a == ValenceBin::kLow && b == ValenceBin::kHigh) ||
         (a == ValenceBin::kHigh && b == ValenceBin::kLow);
}

}  // namespace

EgSampleScore EgSample(const SampleAttribution& attribution, const VadLexicon& vad,
                       const BinningScheme& bins) {
  auto gold = ParseBin(attribution.gold_label);
  if (!gold) {
    throw Error(ErrorKind::kLabel,
                fmt::format("sample '{}': gold label '{}' is not low/mid/high",
                            attribution.sample_id, attribution.gold_label));
  }
  EgSampleScore out;
  out.sample_id = attribution.sample_id;
  out.sn = attribution.tokens.size();
  for (const auto& tok : attribution.tokens) {
    if (!(std::abs(tok.weight) <= 1.0)) {
      throw Error(ErrorKind::kValidation,
                  fmt::format("sample '{}': weight {} is not normalized",
                              attribution.sample_id, tok.weight));
    }
    auto valence = vad.Valence(tok.word);
    if (!valence) continue;
    ValenceBin bin = BinLabel(*valence, bins);
    if (tok.weight < 0.0 && bin == *gold) {
      out.cn_sum += -tok.weight;
    } else if (tok.weight > 0.0 && Opposite(bin, *gold)) {
      out.cp_sum += tok.weight;
    }
  }
  if (out.sn > 0) out.px = (out.cn_sum + out.cp_sum) / static_cast<double>(out.sn);
  return out;
}

EgResult EgAggregate(const std::vector<SampleAttribution>& attributions,
                     const VadLexicon& vad, const BinningScheme& bins,
                     const std::set<std::string, std::less<>>& include_ids) {
  std::vector<const SampleAttribution*> included;
  for (const auto& a : attributions) {
    if (include_ids.count(a.sample_id) != 0) included.push_back(&a);
  }
  if (included.empty()) {
    throw Error(ErrorKind::kEmptySet, "no attribution matches the inclusion set");
  }
  std::stable_sort(included.begin(), included.end(),
                   [](const SampleAttribution* a, const SampleAttribution* b) {
                     return a->sample_id < b->sample_id;
                   });

  EgResult result;
  result.n = included.size();
  result.samples.reserve(included.size());
  double total = 0.0;
  for (const SampleAttribution* a : included) {
    EgSampleScore s = EgSample(*a, vad, bins);
    total += s.px;
    result.samples.push_back(std::move(s));
  }
  result.eg_not = total / static_cast<double>(result.n);
  result.eg = 1.0 - result.eg_not;
  return result;
}

std::set<std::string, std::less<>> CorrectlyPredicted(
    const std::vector<SampleAttribution>& attributions) {
  std::set<std::string, std::less<>> ids;
  for (const auto& a : attributions) {
    if (a.correct()) ids.insert(a.sample_id);
  }
  return ids;
}

UarResult Uar(const std::vector<LabelPair>& records) {
  std::set<std::string> golds;
  for (const auto& [gold, pred] : records) golds.insert(gold);
  return Uar(records, std::vector<std::string>(golds.begin(), golds.end()));
}

UarResult Uar(const std::vector<LabelPair>& records,
              const std::vector<std::string>& classes) {
  if (classes.empty()) throw Error(ErrorKind::kEmptySet, "no classes to score");
  std::map<std::string, ClassRecall, std::less<>> by_label;
  for (const auto& label : classes) by_label[label].label = label;
  for (const auto& [gold, pred] : records) {
    auto it = by_label.find(gold);
    if (it == by_label.end()) {
      throw Error(ErrorKind::kLabel, fmt::format("gold label '{}' not among classes", gold));
    }
    ++it->second.support;
    if (gold == pred) ++it->second.hits;
  }

  UarResult result;
  double total = 0.0;
  for (auto& [label, cls] : by_label) {
    if (cls.support == 0) {
      throw Error(ErrorKind::kDegenerateClass,
                  fmt::format("class '{}' has no records", label));
    }
    cls.recall = static_cast<double>(cls.hits) / static_cast<double>(cls.support);
    total += cls.recall;
    result.classes.push_back(cls);
  }
  result.uar = total / static_cast<double>(result.classes.size());
  return result;
}

PreferenceTable::PreferenceTable(Rows rows) : rows_(std::move(rows)) {
  for (const auto& [model, row] : rows_) {
    if (!std::isfinite(row.metric_value)) {
      throw Error(ErrorKind::kValidation,
                  fmt::format("metric value for '{}' is not finite", model));
    }
    if (!(row.preference_share >= 0.0 && row.preference_share <= 1.0)) {
      throw Error(ErrorKind::kValidation,
                  fmt::format("preference share for '{}' outside [0,1]", model));
    }
  }
}

PreferenceTable LoadPreferenceTable(std::istream& in, std::string_view source_name) {
  PreferenceTable::Rows rows;
  std::string raw;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, raw)) {
    ++line_no;
    if (IsBlankOrComment(raw)) continue;
    auto fields = SplitFields(TrimLine(raw), ',');
    if (first && fields.size() == 3 && TrimLine(fields[0]) == "model_id") {
      first = false;
      continue;
    }
    first = false;
    if (fields.size() != 3) {
      ThrowAtLine(ErrorKind::kParse, source_name, line_no,
                  fmt::format("expected 3 columns, got {}", fields.size()));
    }
    auto metric = internal::ParseDouble(fields[1]);
    auto share = internal::ParseDouble(fields[2]);
    if (!metric || !share) {
      ThrowAtLine(ErrorKind::kParse, source_name, line_no, "non-numeric value");
    }
    if (!std::isfinite(*metric) || !(*share >= 0.0 && *share <= 1.0)) {
      ThrowAtLine(ErrorKind::kParse, source_name, line_no,
                  "metric must be finite and share within [0,1]");
    }
    std::string model(TrimLine(fields[0]));
    if (!rows.emplace(model, PreferenceRow{*metric, *share}).second) {
      ThrowAtLine(ErrorKind::kDuplicate, source_name, line_no,
                  fmt::format("model '{}' repeated", model));
    }
  }
  return PreferenceTable(std::move(rows));
}

PreferenceTable LoadPreferenceTableFile(const std::string& path) {
  auto in = internal::OpenInput(path);
  return LoadPreferenceTable(in, path);
}

double Pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::kValidation, "correlation columns differ in length");
  }
  if (x.size() < 3) {
    throw Error(ErrorKind::kUndefinedCorrelation,
                fmt::format("need at least 3 rows, got {}", x.size()));
  }
  auto constant = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [&v](double e) { return e == v.front(); });
  };
  if (constant(x) || constant(y)) {
    throw Error(ErrorKind::kUndefinedCorrelation, "a column is constant");
  }
  const double n = static_cast<double>(x.size());
  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorKind::kUndefinedCorrelation, "a column has zero variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

namespace {

// Fractional ranks, ties share the average rank.
std::vector<double> Ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&v](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double Spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return Pearson(Ranks(x), Ranks(y));
}

double CorrelatePreference(const PreferenceTable& table, CorrelationMethod method) {
  std::vector<double> metric;
  std::vector<double> share;
  for (const auto& [model, row] : table.rows()) {
    metric.push_back(row.metric_value);
    share.push_back(row.preference_share);
  }
  return method == CorrelationMethod::kPearson ? Pearson(metric, share)
                                               : Spearman(metric, share);
}

}  // namespace saudit
