#pragma once

#include <string>
#include <string_view>

namespace grlex {

// Monotonic Greek alphabet knowledge. All functions operate on Unicode
// scalars and are total; anything outside the modern Greek letters
// U+0386..U+03CE passes through untouched.

enum class LetterClass { vowel, consonant, non_greek };

/// Classification of a single scalar.
struct GreekChar {
  char32_t scalar = 0;
  LetterClass letter_class = LetterClass::non_greek;
  /// Lowercase, tonos-free letter (dialytika kept). Equals scalar for non-Greek input.
  char32_t base = 0;
  bool tonos = false;
  bool dialytika = false;
  bool uppercase = false;
};

GreekChar classify_char(char32_t c);

bool is_greek_letter(char32_t c);
bool is_vowel(char32_t c);
bool is_consonant(char32_t c);
bool has_tonos(char32_t c);

char32_t fold_char(char32_t c);
char32_t destress_char(char32_t c);
/// Adds a tonos to a lowercase vowel (ϊ becomes ΐ). Non-vowels are returned unchanged.
char32_t stress_char(char32_t c);

/// Lowercases Greek letters and regularizes ς to σ.
std::u32string fold_case(std::u32string_view word);

/// Removes the tonos, keeping dialytika (ΐ becomes ϊ). Length preserving.
std::u32string destress(std::u32string_view word);

/// Trie key form: destress(fold_case(word)).
std::u32string make_key(std::u32string_view word);

/// Renders a trailing σ as ς.
std::u32string render_final_sigma(std::u32string_view word);

enum class TokenClass { greek_word, mixed, non_greek };

/// greek_word: non-empty and every scalar is a Greek letter.
/// mixed: at least one Greek letter and at least one other scalar.
TokenClass classify(std::u32string_view word);

std::string_view to_string(TokenClass c);

/// A token in its three working shapes.
struct NormalizedToken {
  std::u32string original;
  std::u32string folded;
  std::u32string destressed;
};

/// NFC-normalizes, folds and destresses.
NormalizedToken normalize(std::u32string_view word);

// UTF-8 convenience wrappers.
std::string fold_case(std::string_view utf8);
std::string destress(std::string_view utf8);
TokenClass classify(std::string_view utf8);

}  // namespace grlex
