#ifndef SAUDIT_SUMMARY_H_
#define SAUDIT_SUMMARY_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace saudit {

struct SummaryRow {
  std::optional<double> ep;
  std::optional<double> eg;
  std::optional<double> uar_valence;
  std::optional<double> uar_gender;

  bool any() const { return ep || eg || uar_valence || uar_gender; }
};

// Per-model results side by side, one row per model.
class SummaryTable {
 public:
  enum class Column { kEp, kEg, kUarValence, kUarGender };

  void Set(const std::string& model_id, Column column, double value);

  // Reads the headline value ("ep", "eg" or "uar") from a report file written
  // by this toolkit.
  void SetFromReport(const std::string& model_id, Column column,
                     const std::string& report_path);

  const std::map<std::string, SummaryRow>& rows() const { return rows_; }

  // Fixed-width text table; missing cells print as "-".
  std::string RenderText() const;
  std::string RenderJson() const;

 private:
  std::map<std::string, SummaryRow> rows_;
};

}  // namespace saudit

#endif  // SAUDIT_SUMMARY_H_
