#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "grlex/error.hpp"
#include "grlex/utf8.hpp"
#include "grlex_cli/cli.hpp"

namespace grlex::cli {
namespace {

bool word_char(UChar32 c) {
  return u_isalpha(c) || (U_GET_GC_MASK(c) & (U_GC_MN_MASK | U_GC_MC_MASK)) != 0;
}

}  // namespace

std::vector<Token> tokenize(const std::string& utf8) {
  std::vector<Token> tokens;
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  std::u32string current;
  size_t start = 0;
  int32_t i = 0;
  while (i < length) {
    const int32_t at = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) throw EncodingError("malformed UTF-8 at byte " + std::to_string(at));
    if (word_char(c)) {
      if (current.empty()) start = static_cast<size_t>(at);
      current.push_back(static_cast<char32_t>(c));
    } else if (!current.empty()) {
      tokens.push_back({start, to_nfc(current)});
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back({start, to_nfc(current)});
  return tokens;
}

}  // namespace grlex::cli
