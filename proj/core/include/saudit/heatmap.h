#ifndef SAUDIT_HEATMAP_H_
#define SAUDIT_HEATMAP_H_

#include <string>
#include <vector>

#include "saudit/attribution.h"

namespace saudit {

// Self-contained static HTML page. Samples are ordered by sample_id; when
// several models explain the same sample their rows sit together, in input
// order. Each token is shaded red (positive) or blue (negative) with opacity
// equal to its max-normalized |weight|; zero-weight tokens are left plain.
// Throws kEmptyInput when `attributions` is empty.
std::string RenderHeatmap(const std::vector<SampleAttribution>& attributions,
                          const std::string& title = "Attribution heat map");

// Inline style for one normalized weight, or "" for an unshaded token.
std::string TokenStyle(double normalized_weight);

}  // namespace saudit

#endif  // SAUDIT_HEATMAP_H_
