#ifndef SAUDIT_REPORT_H_
#define SAUDIT_REPORT_H_

#include <string>
#include <string_view>

#include "saudit/attribution.h"
#include "saudit/corpus.h"
#include "saudit/labels.h"
#include "saudit/metrics.h"

namespace saudit {

// Machine-readable reports. Keys are sorted and reals carry six decimals, so
// the same inputs always produce the same bytes.

struct EpReportContext {
  GMode g_mode = GMode::kRestricted;
  EpScorer scorer = EpScorer::kEquation;
  SelectionRule rule = TopK{kDefaultTopK};
};

std::string EpReportJson(const EpResult& result, const EpReportContext& context);
std::string EgReportJson(const EgResult& result, const BinningScheme& bins);
std::string UarReportJson(const UarResult& result, std::string_view label_mode,
                          std::size_t n);
std::string NoiseVerificationJson(const NoiseVerification& verification);

}  // namespace saudit

#endif  // SAUDIT_REPORT_H_
