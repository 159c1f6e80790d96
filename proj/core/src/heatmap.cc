#include "saudit/heatmap.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "json_writer.h"
#include "saudit/error.h"

namespace saudit {
namespace {

std::string Escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr std::string_view kStyleSheet = R"(body{font-family:sans-serif;margin:2em;}
.sample{border-top:1px solid #ccc;padding:0.5em 0;}
.sample h2{font-size:1em;margin:0.2em 0;}
.row{display:flex;gap:1em;align-items:baseline;margin:0.2em 0;}
.model{min-width:10em;font-weight:bold;}
.meta{color:#666;font-size:0.85em;min-width:12em;}
.tok{padding:0.1em 0.2em;margin:0 0.05em;border-radius:3px;}
)";

}  // namespace

std::string TokenStyle(double normalized_weight) {
  if (normalized_weight == 0.0) return {};
  const double alpha = std::min(1.0, std::abs(normalized_weight));
  if (normalized_weight > 0.0) {
    return fmt::format("background-color:rgba(220,38,38,{})", FormatFixed(alpha));
  }
  return fmt::format("background-color:rgba(37,99,235,{})", FormatFixed(alpha));
}

std::string RenderHeatmap(const std::vector<SampleAttribution>& attributions,
                          const std::string& title) {
  if (attributions.empty()) {
    throw Error(ErrorKind::kEmptyInput, "no attributions to render");
  }
  std::map<std::string_view, std::vector<const SampleAttribution*>> by_sample;
  for (const auto& a : attributions) by_sample[a.sample_id].push_back(&a);

  std::string html;
  html += "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n";
  html += fmt::format("<title>{}</title>\n", Escape(title));
  html += fmt::format("<style>\n{}</style>\n</head>\n<body>\n", kStyleSheet);
  html += fmt::format("<h1>{}</h1>\n", Escape(title));
  for (const auto& [sample_id, rows] : by_sample) {
    html += fmt::format("<div class=\"sample\" id=\"{}\">\n<h2>{}</h2>\n",
                        Escape(sample_id), Escape(sample_id));
    for (const SampleAttribution* a : rows) {
      NormalizedAttribution norm = NormalizeWeights(*a);
      html += "<div class=\"row\">";
      html += fmt::format("<span class=\"model\">{}</span>", Escape(a->model_id));
      html += fmt::format("<span class=\"meta\">gold={} pred={}</span><span>",
                          Escape(a->gold_label), Escape(a->pred_label));
      for (const auto& tok : norm.attribution.tokens) {
        std::string style = TokenStyle(tok.weight);
        if (style.empty()) {
          html += fmt::format("<span class=\"tok\">{}</span> ", Escape(tok.word));
        } else {
          html += fmt::format("<span class=\"tok\" style=\"{}\" title=\"{}\">{}</span> ",
                              style, FormatFixed(tok.weight), Escape(tok.word));
        }
      }
      html += "</span></div>\n";
    }
    html += "</div>\n";
  }
  html += "</body>\n</html>\n";
  return html;
}

}  // namespace saudit
