#include "cli.h"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "saudit/attribution.h"
#include "saudit/corpus.h"
#include "saudit/error.h"
#include "saudit/heatmap.h"
#include "saudit/lexicon.h"
#include "saudit/metrics.h"
#include "saudit/report.h"
#include "saudit/summary.h"

namespace saudit::cli {
namespace {

void WriteOutput(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::kIo, "cannot write " + path);
  file << content;
  if (!file.flush()) throw Error(ErrorKind::kIo, "write failed for " + path);
}

std::vector<SampleAttribution> NormalizedAttributions(const std::string& path,
                                                      std::ostream& err) {
  std::vector<SampleAttribution> records = LoadAttributionsFile(path);
  for (auto& rec : records) {
    NormalizedAttribution norm = NormalizeWeights(rec);
    if (norm.all_zero) {
      err << fmt::format("warning: {}: sample '{}' has all-zero weights\n", path,
                         rec.sample_id);
    }
    rec = std::move(norm.attribution);
  }
  return records;
}

std::vector<ExplanationSet> Explanations(const std::vector<SampleAttribution>& records,
                                         const SelectionRule& rule) {
  std::vector<ExplanationSet> sets;
  sets.reserve(records.size());
  for (const auto& rec : records) sets.push_back(SelectExplanationSet(rec, rule));
  return sets;
}

// ---- ep ------------------------------------------------------------------

struct EpOptions {
  std::string general;
  std::string candidate;
  std::vector<std::string> lexicons;
  std::string merge = "max-weight";
  std::size_t top_k = kDefaultTopK;
  std::optional<double> threshold;
  std::string g_mode = "restricted";
  std::string scorer = "eq1";
  std::string align = "intersect";
  std::string out;
};

void AddEp(CLI::App& app, EpOptions& o) {
  auto* cmd = app.add_subcommand("ep", "Emotion-Privacy score of a candidate vs. a general model");
  cmd->add_option("--general", o.general, "General model attribution JSONL")->required();
  cmd->add_option("--candidate", o.candidate, "Candidate model attribution JSONL")->required();
  cmd->add_option("--lexicon", o.lexicons, "Lexicon TSV (repeat to merge)")->required();
  cmd->add_option("--merge", o.merge, "Merge strategy for several lexicons")
      ->check(CLI::IsMember({"max-weight", "error-on-conflict"}));
  auto* top_k = cmd->add_option("--top-k", o.top_k, "Keep the k most salient words")
                    ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  auto* threshold = cmd->add_option("--threshold", o.threshold,
                                    "Keep words with normalized |weight| >= tau")
                        ->check(CLI::Validator(
                            [](std::string& v) -> std::string {
                              double tau = 0.0;
                              if (!CLI::detail::lexical_cast(v, tau)) return "not a number";
                              return tau > 0.0 && tau <= 1.0 ? "" : "must lie in (0,1]";
                            },
                            "(0,1]"));
  top_k->excludes(threshold);
  cmd->add_option("--g-mode", o.g_mode, "Denominator: restricted | full")
      ->check(CLI::IsMember({"restricted", "full"}));
  cmd->add_option("--scorer", o.scorer, "eq1 | prose")->check(CLI::IsMember({"eq1", "prose"}));
  cmd->add_option("--align", o.align, "intersect | strict")
      ->check(CLI::IsMember({"intersect", "strict"}));
  cmd->add_option("--out", o.out, "Report path (stdout when omitted)");
}

int RunEp(const EpOptions& o, std::ostream& out, std::ostream& err) {
  SelectionRule rule = o.threshold ? SelectionRule{MagnitudeThreshold{*o.threshold}}
                                   : SelectionRule{TopK{o.top_k}};
  MergeStrategy strategy = o.merge == "max-weight" ? MergeStrategy::kMaxWeight
                                                   : MergeStrategy::kErrorOnConflict;
  WeightedLexicon lexicon = LoadLexiconFile(o.lexicons.front());
  for (std::size_t i = 1; i < o.lexicons.size(); ++i) {
    lexicon = MergeLexicons(lexicon, LoadLexiconFile(o.lexicons[i]), strategy);
  }

  auto general = Explanations(NormalizedAttributions(o.general, err), rule);
  auto candidate = Explanations(NormalizedAttributions(o.candidate, err), rule);
  auto pairs = AlignSamples(general, candidate,
                            o.align == "strict" ? AlignPolicy::kStrict
                                                : AlignPolicy::kIntersect);
  EpReportContext context;
  context.g_mode = o.g_mode == "full" ? GMode::kFull : GMode::kRestricted;
  context.scorer = o.scorer == "prose" ? EpScorer::kProse : EpScorer::kEquation;
  context.rule = rule;
  EpResult result = EpAggregate(pairs, lexicon, context.g_mode, context.scorer);

  WriteOutput(o.out, EpReportJson(result, context), out);
  if (!o.out.empty() && o.out != "-") {
    out << fmt::format("ep {:.6f} (n_used {} of {})\n", result.ep, result.n_used,
                       result.n_total);
  }
  return kExitOk;
}

// ---- eg ------------------------------------------------------------------

struct EgOptions {
  std::string attrib;
  std::string general_attrib;
  std::string vad;
  std::vector<double> bins = {0.35, 0.65};
  std::string out;
};

void AddEg(CLI::App& app, EgOptions& o) {
  auto* cmd = app.add_subcommand("eg", "Emotion-Generalization score of one model");
  cmd->add_option("--attrib", o.attrib, "Model attribution JSONL")->required();
  cmd->add_option("--general-attrib", o.general_attrib,
                  "General model attributions; its correct predictions select samples")
      ->required();
  cmd->add_option("--vad", o.vad, "Valence lexicon TSV")->required();
  cmd->add_option("--bins", o.bins, "Valence bin edges lo,hi on [0,1]")
      ->delimiter(',')
      ->expected(2);
  cmd->add_option("--out", o.out, "Report path (stdout when omitted)");
}

int RunEg(const EgOptions& o, std::ostream& out, std::ostream& err) {
  BinningScheme bins(0.0, o.bins.at(0), o.bins.at(1), 1.0);
  VadLexicon vad = LoadVadFile(o.vad);
  auto include = CorrectlyPredicted(LoadAttributionsFile(o.general_attrib));
  auto attrs = NormalizedAttributions(o.attrib, err);
  EgResult result = EgAggregate(attrs, vad, bins, include);
  WriteOutput(o.out, EgReportJson(result, bins), out);
  if (!o.out.empty() && o.out != "-") {
    out << fmt::format("eg {:.6f} (eg_not {:.6f}, n {})\n", result.eg, result.eg_not,
                       result.n);
  }
  return kExitOk;
}

// ---- uar -----------------------------------------------------------------

struct UarOptions {
  std::string attrib;
  std::string label = "gold-vs-pred";
  std::string out;
};

void AddUar(CLI::App& app, UarOptions& o) {
  auto* cmd = app.add_subcommand("uar", "Unweighted average recall from an attribution file");
  cmd->add_option("--attrib", o.attrib, "Attribution JSONL")->required();
  cmd->add_option("--label", o.label,
                  "gold-vs-pred, or gender (gender tag vs. pred of a gender model)")
      ->check(CLI::IsMember({"gold-vs-pred", "gender"}));
  cmd->add_option("--out", o.out, "Report path (stdout when omitted)");
}

int RunUar(const UarOptions& o, std::ostream& out) {
  auto attrs = LoadAttributionsFile(o.attrib);
  std::vector<LabelPair> records;
  records.reserve(attrs.size());
  for (const auto& a : attrs) {
    if (o.label == "gender") {
      if (!a.gender) {
        throw Error(ErrorKind::kLabel,
                    fmt::format("{}: sample '{}' has no gender tag", o.attrib, a.sample_id));
      }
      records.emplace_back(std::string(GenderTag(*a.gender)), a.pred_label);
    } else {
      records.emplace_back(a.gold_label, a.pred_label);
    }
  }
  if (records.empty()) throw Error(ErrorKind::kEmptyInput, o.attrib + ": no records");
  UarResult result = Uar(records);
  WriteOutput(o.out, UarReportJson(result, o.label, records.size()), out);
  if (!o.out.empty() && o.out != "-") out << fmt::format("uar {:.6f}\n", result.uar);
  return kExitOk;
}

// ---- corpus tools ----------------------------------------------------------

struct AugmentOptions {
  std::string corpus;
  std::string pairs;
  std::string out;
};

void AddAugment(CLI::App& app, AugmentOptions& o) {
  auto* cmd = app.add_subcommand("augment", "Append a gender-swapped copy of every record");
  cmd->add_option("--corpus", o.corpus, "Corpus JSONL")->required();
  cmd->add_option("--pairs", o.pairs, "Swap-pair CSV")->required();
  cmd->add_option("--out", o.out, "Output corpus JSONL (stdout when omitted)");
}

int RunAugment(const AugmentOptions& o, std::ostream& out) {
  auto augmented = BuildAugmentedCorpus(LoadCorpusFile(o.corpus), LoadSwapPairsFile(o.pairs));
  std::ostringstream buffer;
  SerializeCorpus(augmented, buffer);
  WriteOutput(o.out, buffer.str(), out);
  return kExitOk;
}

struct NoiseOptions {
  std::string corpus;
  std::string spec;
  std::string binning = "iemocap";
  std::uint64_t seed = 0;
  std::string out;
};

void AddNoise(CLI::App& app, NoiseOptions& o) {
  auto* cmd = app.add_subcommand("noise", "Inject (gender x valence) control tokens");
  cmd->add_option("--corpus", o.corpus, "Corpus JSONL")->required();
  cmd->add_option("--spec", o.spec, "Noise spec JSON")->required();
  cmd->add_option("--binning", o.binning, "iemocap | muse | vad | binning JSON path");
  cmd->add_option("--seed", o.seed, "Seed for the injection stream");
  cmd->add_option("--out", o.out, "Output corpus JSONL (stdout when omitted)");
}

int RunNoise(const NoiseOptions& o, std::ostream& out) {
  NoiseSpec spec = LoadNoiseSpecFile(o.spec, o.seed);
  auto noisy = InjectNoise(LoadCorpusFile(o.corpus), spec, ResolveBinning(o.binning));
  std::ostringstream buffer;
  SerializeCorpus(noisy, buffer);
  WriteOutput(o.out, buffer.str(), out);
  return kExitOk;
}

struct VerifyOptions {
  std::string corpus;
  std::string spec;
  std::string binning = "iemocap";
};

void AddVerify(CLI::App& app, VerifyOptions& o) {
  auto* cmd = app.add_subcommand("verify-noise",
                                 "Check that every control token sits only in its own cell");
  cmd->add_option("--corpus", o.corpus, "Corpus JSONL")->required();
  cmd->add_option("--spec", o.spec, "Noise spec JSON")->required();
  cmd->add_option("--binning", o.binning, "iemocap | muse | vad | binning JSON path");
}

int RunVerify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  NoiseSpec spec = LoadNoiseSpecFile(o.spec, 0);
  NoiseVerification report =
      VerifyNoiseCorrelation(LoadCorpusFile(o.corpus), spec, ResolveBinning(o.binning));
  out << NoiseVerificationJson(report);
  if (!report.passed) {
    err << fmt::format("{}: noise tokens found outside their cells\n", o.corpus);
    return kExitFailure;
  }
  return kExitOk;
}

// ---- correlate / render / summary -------------------------------------------

struct CorrelateOptions {
  std::string table;
  std::string method = "pearson";
};

void AddCorrelate(CLI::App& app, CorrelateOptions& o) {
  auto* cmd = app.add_subcommand("correlate", "Correlate a metric with preference shares");
  cmd->add_option("--table", o.table, "CSV model_id,metric_value,preference_share")->required();
  cmd->add_option("--method", o.method, "pearson | spearman")
      ->check(CLI::IsMember({"pearson", "spearman"}));
}

int RunCorrelate(const CorrelateOptions& o, std::ostream& out) {
  double r = CorrelatePreference(LoadPreferenceTableFile(o.table),
                                 o.method == "spearman" ? CorrelationMethod::kSpearman
                                                        : CorrelationMethod::kPearson);
  out << fmt::format("{:.6f}\n", r);
  return kExitOk;
}

struct RenderOptions {
  std::vector<std::string> attribs;
  std::string out;
  std::string title = "Attribution heat map";
};

void AddRender(CLI::App& app, RenderOptions& o) {
  auto* cmd = app.add_subcommand("render", "Write a static HTML heat map");
  cmd->add_option("--attrib", o.attribs, "Attribution JSONL (repeatable)")->required();
  cmd->add_option("--out", o.out, "HTML output (stdout when omitted)");
  cmd->add_option("--title", o.title, "Page title");
}

int RunRender(const RenderOptions& o, std::ostream& out) {
  std::vector<SampleAttribution> all;
  for (const auto& path : o.attribs) {
    auto records = LoadAttributionsFile(path);
    all.insert(all.end(), std::make_move_iterator(records.begin()),
               std::make_move_iterator(records.end()));
  }
  WriteOutput(o.out, RenderHeatmap(all, o.title), out);
  return kExitOk;
}

struct SummaryOptions {
  std::vector<std::string> ep;
  std::vector<std::string> eg;
  std::vector<std::string> uar_valence;
  std::vector<std::string> uar_gender;
  std::string out;
};

void AddSummary(CLI::App& app, SummaryOptions& o) {
  auto* cmd = app.add_subcommand("summary", "Tabulate per-model reports side by side");
  cmd->add_option("--ep", o.ep, "MODEL=ep report (repeatable)");
  cmd->add_option("--eg", o.eg, "MODEL=eg report (repeatable)");
  cmd->add_option("--uar-valence", o.uar_valence, "MODEL=uar report (repeatable)");
  cmd->add_option("--uar-gender", o.uar_gender, "MODEL=uar report (repeatable)");
  cmd->add_option("--out", o.out, "Also write the table as JSON");
}

int RunSummary(const SummaryOptions& o, std::ostream& out) {
  SummaryTable table;
  auto load = [&table](const std::vector<std::string>& specs, SummaryTable::Column column) {
    for (const auto& spec : specs) {
      auto eq = spec.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
        throw CLI::ValidationError("summary", "expected MODEL=PATH, got '" + spec + "'");
      }
      table.SetFromReport(spec.substr(0, eq), column, spec.substr(eq + 1));
    }
  };
  load(o.ep, SummaryTable::Column::kEp);
  load(o.eg, SummaryTable::Column::kEg);
  load(o.uar_valence, SummaryTable::Column::kUarValence);
  load(o.uar_gender, SummaryTable::Column::kUarGender);
  if (table.rows().empty()) {
    throw CLI::ValidationError("summary", "no reports given");
  }
  out << table.RenderText();
  if (!o.out.empty()) WriteOutput(o.out, table.RenderJson(), out);
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Saliency audit toolkit: privacy and generalization metrics over "
               "model explanation files",
               "saliency-audit"};
  app.require_subcommand(1);

  EpOptions ep;
  EgOptions eg;
  UarOptions uar;
  AugmentOptions augment;
  NoiseOptions noise;
  VerifyOptions verify;
  CorrelateOptions correlate;
  RenderOptions render;
  SummaryOptions summary;
  AddEp(app, ep);
  AddEg(app, eg);
  AddUar(app, uar);
  AddAugment(app, augment);
  AddNoise(app, noise);
  AddVerify(app, verify);
  AddCorrelate(app, correlate);
  AddRender(app, render);
  AddSummary(app, summary);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "saliency-audit: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "ep") return RunEp(ep, out, err);
    if (command == "eg") return RunEg(eg, out, err);
    if (command == "uar") return RunUar(uar, out);
    if (command == "augment") return RunAugment(augment, out);
    if (command == "noise") return RunNoise(noise, out);
    if (command == "verify-noise") return RunVerify(verify, out, err);
    if (command == "correlate") return RunCorrelate(correlate, out);
    if (command == "render") return RunRender(render, out);
    if (command == "summary") return RunSummary(summary, out);
  } catch (const CLI::ValidationError& e) {
    err << "saliency-audit " << command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "saliency-audit " << command << ": " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "saliency-audit " << command << ": " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace saudit::cli
