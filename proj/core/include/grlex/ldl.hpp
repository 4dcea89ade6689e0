#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grlex/lexicon_model.hpp"

namespace grlex {

// Lexicon Description Language: a line-oriented text format for lemmas.
//
//   # comment
//   lemma κεφάλι
//     lexeme noun pos=noun
//       stem κε-φαλ
//       infl ι@P/nom.sg ιου@F/gen.sg
//       infl ια@P/nom.pl ιων@F/gen.pl
//       sense "head" rel=κρανίο
//     end
//   end
//
// Morphemes are written without tonos, '-' marks a syllable break inside a
// morpheme, "0" is the empty inflection and @F/@P/@A give the stress of
// each inflected form.

enum class Severity : uint8_t { error, warning };

struct SourceLocation {
  /// 1-based; column counts Unicode scalars.
  uint32_t line = 0;
  uint32_t column = 0;
};

struct Diagnostic {
  Severity severity = Severity::error;
  SourceLocation location;
  std::string code;
  std::string message;
};

/// "file:line:col: error: message [code]"
std::string format_diagnostic(const Diagnostic& d, std::string_view source_name);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

struct LexemeLocations {
  SourceLocation name;
  std::vector<SourceLocation> morphemes;
  std::vector<SourceLocation> slots;
  /// One entry per sense; one location per ref within it.
  std::vector<std::vector<SourceLocation>> sense_refs;
};

struct LemmaLocations {
  SourceLocation headword;
  std::vector<LexemeLocations> lexemes;
};

struct LdlDocument {
  std::string source_name;
  std::vector<Lemma> lemmas;
  /// Parallel to lemmas.
  std::vector<LemmaLocations> locations;
};

struct ParseResult {
  LdlDocument document;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

/// Parses LDL text. A malformed lemma block is dropped with a diagnostic and
/// parsing resumes at the next `lemma` line.
ParseResult parse_ldl(std::string_view source, std::string source_name = "<input>");

/// Cross-lemma checks: duplicate headwords and lexeme names, unresolved
/// sense references, forms that cannot be generated, duplicate
/// (surface, tags) pairs inside a lexeme, conflicting hyphenation of one
/// spelling, and homographs across lemmas (warning).
std::vector<Diagnostic> validate(const LdlDocument& doc);

/// Canonical LDL text for a document; parse_ldl(print_ldl(d)) reproduces d.lemmas.
std::string print_ldl(const LdlDocument& doc);

/// Parses a morpheme spelling such as "κε-φαλ". Returns false on a stressed
/// letter, a non-Greek letter, or a leading, trailing or doubled hyphen.
struct MorphemeSpellingError {
  std::string code;
  std::string message;
  /// 0-based scalar offset into the spelling.
  size_t offset = 0;
};
bool parse_morpheme_spelling(std::u32string_view spelling, MorphemeKind kind, Morpheme& out,
                             MorphemeSpellingError& error);

/// Inverse of parse_morpheme_spelling.
std::u32string morpheme_spelling(const Morpheme& m);

}  // namespace grlex
