#pragma once

#include <string>
#include <string_view>

namespace grlex {

/// Decodes UTF-8. Throws EncodingError on malformed input.
std::u32string to_utf32(std::string_view utf8);

std::string to_utf8(std::u32string_view text);
std::string to_utf8(char32_t c);

/// Canonical composition (NFC).
std::u32string to_nfc(std::u32string_view text);

/// Decode + NFC in one step; the usual entry point for external text.
inline std::u32string decode_nfc(std::string_view utf8) { return to_nfc(to_utf32(utf8)); }

}  // namespace grlex
