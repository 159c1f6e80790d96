#include "saudit/report.h"

#include "json_writer.h"

namespace saudit {

using nlohmann::json;

namespace {

json WordList(const WordWeights& words) {
  json list = json::array();
  for (const auto& [word, weight] : words) {
    list.push_back({{"word", word}, {"weight", weight}});
  }
  return list;
}

json BinsJson(const BinningScheme& bins) {
  return {{"scale_min", bins.scale_min()},
          {"low_upper", bins.low_upper()},
          {"mid_upper", bins.mid_upper()},
          {"scale_max", bins.scale_max()}};
}

}  // namespace

std::string EpReportJson(const EpResult& result, const EpReportContext& context) {
  json per_sample = json::array();
  for (const auto& b : result.breakdowns) {
    per_sample.push_back({
        {"sample_id", b.sample_id},
        {"score", b.score ? json(*b.score) : json(nullptr)},
        {"dropped", WordList(b.dropped)},
        {"added", WordList(b.added)},
        {"g_count", b.g_count},
    });
  }
  json doc = {
      {"ep", result.ep},
      {"n_used", result.n_used},
      {"n_total", result.n_total},
      {"g_mode", std::string(GModeName(context.g_mode))},
      {"scorer", std::string(EpScorerName(context.scorer))},
      {"selection_rule", DescribeRule(context.rule)},
      {"per_sample", std::move(per_sample)},
  };
  return DumpDeterministic(doc);
}

std::string EgReportJson(const EgResult& result, const BinningScheme& bins) {
  json per_sample = json::array();
  for (const auto& s : result.samples) {
    per_sample.push_back({
        {"sample_id", s.sample_id},
        {"px", s.px},
        {"sn", s.sn},
        {"cn_sum", s.cn_sum},
        {"cp_sum", s.cp_sum},
    });
  }
  json doc = {
      {"eg", result.eg},
      {"eg_not", result.eg_not},
      {"n", result.n},
      {"bins", BinsJson(bins)},
      {"per_sample", std::move(per_sample)},
  };
  return DumpDeterministic(doc);
}

std::string UarReportJson(const UarResult& result, std::string_view label_mode,
                          std::size_t n) {
  json classes = json::array();
  for (const auto& c : result.classes) {
    classes.push_back({{"label", c.label},
                       {"support", c.support},
                       {"hits", c.hits},
                       {"recall", c.recall}});
  }
  json doc = {
      {"uar", result.uar},
      {"label", std::string(label_mode)},
      {"n", n},
      {"classes", std::move(classes)},
  };
  return DumpDeterministic(doc);
}

std::string NoiseVerificationJson(const NoiseVerification& verification) {
  json tokens = json::array();
  for (const auto& c : verification.counts) {
    tokens.push_back({{"token", c.token},
                      {"cell", DescribeCell(c.cell)},
                      {"inside", c.inside},
                      {"outside", c.outside}});
  }
  json doc = {{"passed", verification.passed}, {"tokens", std::move(tokens)}};
  return DumpDeterministic(doc);
}

}  // namespace saudit
