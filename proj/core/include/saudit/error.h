#ifndef SAUDIT_ERROR_H_
#define SAUDIT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace saudit {

enum class ErrorKind {
  kParse,           // malformed input line or record
  kDuplicate,       // repeated key where keys must be unique
  kConflict,        // merge conflict between lexicons
  kBijection,       // swap pairs that do not form an involution
  kValidation,      // value outside its documented domain
  kInvalidRule,     // bad explanation-set selection rule
  kAlignment,       // sample ids differ under strict alignment
  kAllUndefined,    // no sample produced a defined EP score
  kLabel,           // label outside the expected class set
  kEmptySet,        // nothing to aggregate
  kDegenerateClass, // UAR class without records
  kUndefinedCorrelation,
  kRange,           // rating outside the binning scale
  kId,              // sample id collision
  kContamination,   // corpus already contains noise tokens
  kEmptyInput,
  kIo,
};

std::string_view ErrorKindName(ErrorKind kind);

// All library failures are reported through this type; `kind()` lets callers
// branch without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Formats "<source>:<line>: <what>" for parse-style diagnostics.
[[noreturn]] void ThrowAtLine(ErrorKind kind, std::string_view source,
                              std::size_t line, std::string_view what);

}  // namespace saudit

#endif  // SAUDIT_ERROR_H_
