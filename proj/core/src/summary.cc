#include "saudit/summary.h"

#include <fmt/format.h>

#include "internal.h"
#include "json_writer.h"
#include "saudit/error.h"

namespace saudit {

using nlohmann::json;

void SummaryTable::Set(const std::string& model_id, Column column, double value) {
  SummaryRow& row = rows_[model_id];
  switch (column) {
    case Column::kEp: row.ep = value; break;
    case Column::kEg: row.eg = value; break;
    case Column::kUarValence: row.uar_valence = value; break;
    case Column::kUarGender: row.uar_gender = value; break;
  }
}

void SummaryTable::SetFromReport(const std::string& model_id, Column column,
                                 const std::string& report_path) {
  const char* key = column == Column::kEp   ? "ep"
                    : column == Column::kEg ? "eg"
                                            : "uar";
  auto in = internal::OpenInput(report_path);
  json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorKind::kParse, fmt::format("{}: not a JSON report", report_path));
  }
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_number()) {
    throw Error(ErrorKind::kParse,
                fmt::format("{}: report has no numeric \"{}\"", report_path, key));
  }
  Set(model_id, column, it->get<double>());
}

namespace {

std::string Cell(const std::optional<double>& v) {
  return v ? FormatFixed(*v) : std::string("-");
}

json CellJson(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::string SummaryTable::RenderText() const {
  std::size_t width = 5;
  for (const auto& [model, row] : rows_) width = std::max(width, model.size());
  std::string out = fmt::format("{:<{}}  {:>10}  {:>10}  {:>10}  {:>10}\n", "model",
                                width, "V-UAR", "G-UAR", "EP", "EG");
  for (const auto& [model, row] : rows_) {
    out += fmt::format("{:<{}}  {:>10}  {:>10}  {:>10}  {:>10}\n", model, width,
                       Cell(row.uar_valence), Cell(row.uar_gender), Cell(row.ep),
                       Cell(row.eg));
  }
  return out;
}

std::string SummaryTable::RenderJson() const {
  json rows = json::object();
  for (const auto& [model, row] : rows_) {
    rows[model] = {{"ep", CellJson(row.ep)},
                   {"eg", CellJson(row.eg)},
                   {"uar_valence", CellJson(row.uar_valence)},
                   {"uar_gender", CellJson(row.uar_gender)}};
  }
  return DumpDeterministic(json{{"rows", std::move(rows)}});
}

}  // namespace saudit
