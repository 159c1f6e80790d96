#ifndef SAUDIT_TEXT_H_
#define SAUDIT_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace saudit {

// Canonical token form used as the key of every lexicon and attribution
// record: NFC-composed, full Unicode case folding, leading and trailing
// punctuation (and white space) removed. Inner punctuation such as the
// apostrophe in "don't" is kept. Returns "" for pure punctuation; callers
// drop such tokens.
std::string NormalizeToken(std::string_view raw);

// Splits on a single-byte delimiter without collapsing empty fields.
std::vector<std::string_view> SplitFields(std::string_view line, char delim);

// Strips a trailing '\r' and surrounding ASCII blanks.
std::string_view TrimLine(std::string_view line);

bool IsBlankOrComment(std::string_view line);

}  // namespace saudit

#endif  // SAUDIT_TEXT_H_
