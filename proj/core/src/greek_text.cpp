#include "grlex/greek_text.hpp"

#include "grlex/utf8.hpp"

namespace grlex {
namespace {

constexpr char32_t kFinalSigma = U'ς';
constexpr char32_t kSigma = U'σ';

// Stressed and dialytika-stressed vowels and their tonos-free counterparts.
struct StressPair {
  char32_t stressed;
  char32_t plain;
};

constexpr StressPair kLowerStress[] = {
    {U'ά', U'α'}, {U'έ', U'ε'}, {U'ή', U'η'}, {U'ί', U'ι'}, {U'ό', U'ο'},
    {U'ύ', U'υ'}, {U'ώ', U'ω'}, {U'ΐ', U'ϊ'}, {U'ΰ', U'ϋ'},
};

constexpr StressPair kUpperStress[] = {
    {U'Ά', U'Α'}, {U'Έ', U'Ε'}, {U'Ή', U'Η'}, {U'Ί', U'Ι'},
    {U'Ό', U'Ο'}, {U'Ύ', U'Υ'}, {U'Ώ', U'Ω'},
};

bool is_base_vowel(char32_t c) {
  switch (c) {
    case U'α': case U'ε': case U'η': case U'ι': case U'ο': case U'υ': case U'ω':
    case U'ϊ': case U'ϋ':
      return true;
    default:
      return false;
  }
}

char32_t lower_char(char32_t c) {
  if (c >= U'Α' && c <= U'Ω' && c != 0x03A2) return c + 0x20;
  switch (c) {
    case U'Ά': return U'ά';
    case U'Έ': return U'έ';
    case U'Ή': return U'ή';
    case U'Ί': return U'ί';
    case U'Ό': return U'ό';
    case U'Ύ': return U'ύ';
    case U'Ώ': return U'ώ';
    case U'Ϊ': return U'ϊ';
    case U'Ϋ': return U'ϋ';
    default: return c;
  }
}

}  // namespace

bool is_greek_letter(char32_t c) {
  if (c == 0x0386) return true;
  if (c >= 0x0388 && c <= 0x038A) return true;
  if (c == 0x038C) return true;
  if (c >= 0x038E && c <= 0x03A1) return true;
  return c >= 0x03A3 && c <= 0x03CE;
}

char32_t destress_char(char32_t c) {
  for (auto [stressed, plain] : kLowerStress)
    if (c == stressed) return plain;
  for (auto [stressed, plain] : kUpperStress)
    if (c == stressed) return plain;
  return c;
}

char32_t stress_char(char32_t c) {
  for (auto [stressed, plain] : kLowerStress)
    if (c == plain) return stressed;
  return c;
}

bool has_tonos(char32_t c) { return is_greek_letter(c) && destress_char(c) != c; }

char32_t fold_char(char32_t c) {
  const char32_t lower = lower_char(c);
  return lower == kFinalSigma ? kSigma : lower;
}

GreekChar classify_char(char32_t c) {
  GreekChar g;
  g.scalar = c;
  g.base = c;
  if (!is_greek_letter(c)) return g;
  const char32_t lower = lower_char(c);
  g.uppercase = lower != c;
  g.base = destress_char(lower);
  g.tonos = g.base != lower;
  g.dialytika = g.base == U'ϊ' || g.base == U'ϋ';
  g.letter_class = is_base_vowel(g.base) ? LetterClass::vowel : LetterClass::consonant;
  return g;
}

bool is_vowel(char32_t c) { return classify_char(c).letter_class == LetterClass::vowel; }

bool is_consonant(char32_t c) { return classify_char(c).letter_class == LetterClass::consonant; }

std::u32string fold_case(std::u32string_view word) {
  std::u32string out(word);
  for (auto& c : out) c = fold_char(c);
  return out;
}

std::u32string destress(std::u32string_view word) {
  std::u32string out(word);
  for (auto& c : out) c = destress_char(c);
  return out;
}

std::u32string make_key(std::u32string_view word) {
  std::u32string out(word);
  for (auto& c : out) c = destress_char(fold_char(c));
  return out;
}

std::u32string render_final_sigma(std::u32string_view word) {
  std::u32string out(word);
  if (!out.empty() && out.back() == kSigma) out.back() = kFinalSigma;
  return out;
}

TokenClass classify(std::u32string_view word) {
  bool greek = false;
  bool other = false;
  for (char32_t c : word) {
    if (is_greek_letter(c))
      greek = true;
    else
      other = true;
  }
  if (greek && !other) return TokenClass::greek_word;
  if (greek) return TokenClass::mixed;
  return TokenClass::non_greek;
}

std::string_view to_string(TokenClass c) {
  switch (c) {
    case TokenClass::greek_word: return "greek-word";
    case TokenClass::mixed: return "mixed";
    case TokenClass::non_greek: return "non-greek";
  }
  return "non-greek";
}

NormalizedToken normalize(std::u32string_view word) {
  NormalizedToken t;
  t.original = to_nfc(word);
  t.folded = fold_case(t.original);
  t.destressed = destress(t.folded);
  return t;
}

std::string fold_case(std::string_view utf8) { return to_utf8(fold_case(decode_nfc(utf8))); }

std::string destress(std::string_view utf8) { return to_utf8(destress(decode_nfc(utf8))); }

TokenClass classify(std::string_view utf8) { return classify(decode_nfc(utf8)); }

}  // namespace grlex
