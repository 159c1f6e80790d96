#ifndef SAUDIT_SRC_JSON_WRITER_H_
#define SAUDIT_SRC_JSON_WRITER_H_

#include <string>

#include "json.hpp"

namespace saudit {

// Compact-but-readable JSON with object keys sorted and every floating-point
// value printed with exactly six decimals, so identical inputs give identical
// bytes on every platform. Integers print as integers.
std::string DumpDeterministic(const nlohmann::json& value, int indent = 2);

// "%.6f" with negative zero folded to "0.000000".
std::string FormatFixed(double value);

}  // namespace saudit

#endif  // SAUDIT_SRC_JSON_WRITER_H_
