#pragma once

#include <stdexcept>
#include <string>

namespace grlex {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Byte sequence is not valid UTF-8.
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// The requested stress position needs more syllables than the form has.
class StressUnplaceable : public Error {
 public:
  using Error::Error;
};

/// A syllable of a hyphenated form contains no vowel.
class NoNucleus : public Error {
 public:
  using Error::Error;
};

/// The word to hyphenate has no vowel at all.
class NoVowel : public Error {
 public:
  using Error::Error;
};

/// The token handed to the speller is not a Greek word.
class NotGreek : public Error {
 public:
  using Error::Error;
};

/// A trie key is not destressed and case folded.
class InvalidKey : public Error {
 public:
  using Error::Error;
};

/// Binary lexicon or trie stream failed validation.
class CorruptFile : public Error {
 public:
  using Error::Error;
};

/// Invalid argument to a data-table operation (onset table, rule files).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace grlex
