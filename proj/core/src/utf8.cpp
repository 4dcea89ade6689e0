#include "grlex/utf8.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "grlex/error.hpp"

namespace grlex {

std::u32string to_utf32(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t at = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) throw EncodingError("invalid UTF-8 at byte " + std::to_string(at));
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string to_utf8(char32_t c) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
  if (error) throw EncodingError("scalar not encodable as UTF-8");
  return {reinterpret_cast<const char*>(buf), static_cast<size_t>(n)};
}

std::string to_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 2);
  for (char32_t c : text) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
    if (error) throw EncodingError("scalar not encodable as UTF-8");
    out.append(reinterpret_cast<const char*>(buf), static_cast<size_t>(n));
  }
  return out;
}

std::u32string to_nfc(std::u32string_view text) {
  // Precomposed monotonic Greek and anything below the combining-mark block is
  // already NFC; skip the round trip through ICU for it.
  bool plain = true;
  for (char32_t c : text) {
    const bool greek_letter = c >= 0x0386 && c <= 0x03CE && c != 0x0387;
    if (c >= 0x0300 && !greek_letter) {
      plain = false;
      break;
    }
  }
  if (plain) return std::u32string(text);

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  auto source = icu::UnicodeString::fromUTF32(reinterpret_cast<const UChar32*>(text.data()),
                                              static_cast<int32_t>(text.size()));
  if (nfc->isNormalized(source, status) && U_SUCCESS(status)) return std::u32string(text);
  status = U_ZERO_ERROR;
  icu::UnicodeString composed = nfc->normalize(source, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");

  std::u32string out(static_cast<size_t>(composed.countChar32()), U'\0');
  status = U_ZERO_ERROR;
  composed.toUTF32(reinterpret_cast<UChar32*>(out.data()), static_cast<int32_t>(out.size()), status);
  if (U_FAILURE(status) && status != U_STRING_NOT_TERMINATED_WARNING)
    throw Error("NFC conversion failed");
  return out;
}

}  // namespace grlex
