#include "saudit/text.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <stdexcept>

namespace saudit {
namespace {

const icu::Normalizer2& Nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || nfc == nullptr) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  return *nfc;
}

bool Strippable(UChar32 c) { return u_ispunct(c) || u_isUWhiteSpace(c); }

}  // namespace

std::string NormalizeToken(std::string_view raw) {
  const icu::Normalizer2& nfc = Nfc();
  UErrorCode status = U_ZERO_ERROR;

  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  text = nfc.normalize(text, status);
  text.foldCase(U_FOLD_CASE_DEFAULT);
  text = nfc.normalize(text, status);
  if (U_FAILURE(status)) return {};

  int32_t begin = 0;
  int32_t end = text.length();
  while (begin < end) {
    UChar32 c = text.char32At(begin);
    if (!Strippable(c)) break;
    begin = text.moveIndex32(begin, 1);
  }
  while (end > begin) {
    int32_t prev = text.moveIndex32(end, -1);
    if (!Strippable(text.char32At(prev))) break;
    end = prev;
  }

  std::string out;
  text.tempSubStringBetween(begin, end).toUTF8String(out);
  return out;
}

std::vector<std::string_view> SplitFields(std::string_view line, char delim) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(delim, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view TrimLine(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                           line.back() == '\n')) {
    line.remove_suffix(1);
  }
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  return line;
}

bool IsBlankOrComment(std::string_view line) {
  line = TrimLine(line);
  return line.empty() || line.front() == '#';
}

}  // namespace saudit
