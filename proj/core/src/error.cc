#include "saudit/error.h"

#include <fmt/format.h>

namespace saudit {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kDuplicate: return "duplicate entry";
    case ErrorKind::kConflict: return "merge conflict";
    case ErrorKind::kBijection: return "bijection error";
    case ErrorKind::kValidation: return "validation error";
    case ErrorKind::kInvalidRule: return "invalid rule";
    case ErrorKind::kAlignment: return "alignment error";
    case ErrorKind::kAllUndefined: return "all samples undefined";
    case ErrorKind::kLabel: return "label error";
    case ErrorKind::kEmptySet: return "empty set";
    case ErrorKind::kDegenerateClass: return "degenerate class";
    case ErrorKind::kUndefinedCorrelation: return "undefined correlation";
    case ErrorKind::kRange: return "range error";
    case ErrorKind::kId: return "id error";
    case ErrorKind::kContamination: return "contamination error";
    case ErrorKind::kEmptyInput: return "empty input";
    case ErrorKind::kIo: return "i/o error";
  }
  return "error";
}

void ThrowAtLine(ErrorKind kind, std::string_view source, std::size_t line,
                 std::string_view what) {
  throw Error(kind, fmt::format("{}:{}: {}: {}", source, line,
                                ErrorKindName(kind), what));
}

}  // namespace saudit
