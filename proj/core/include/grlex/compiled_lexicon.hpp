#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grlex/error.hpp"
#include "grlex/hyphenator.hpp"
#include "grlex/ldl.hpp"
#include "grlex/lexicon_model.hpp"
#include "grlex/trie.hpp"

namespace grlex {

/// Phonetic key -> ascending form ids.
using PhoneticIndex = std::map<std::string, std::vector<uint32_t>>;

/// Every generated form plus the indexes built over them. Immutable; safe
/// for any number of concurrent readers.
class CompiledLexicon {
 public:
  static constexpr uint16_t kFormatVersion = 1;

  CompiledLexicon();
  /// Builds the trie and phonetic index over `forms`.
  CompiledLexicon(std::vector<Lemma> lemmas, std::vector<WordFormEntry> forms,
                  HyphenRuleSet hyphen_rules);

  const std::vector<Lemma>& lemmas() const { return lemmas_; }
  const std::vector<WordFormEntry>& forms() const { return forms_; }
  const CompressedTrie& trie() const { return trie_; }
  const PhoneticIndex& phonetic_index() const { return phonetic_; }
  const HyphenRuleSet& hyphen_rules() const { return hyphen_rules_; }
  uint16_t format_version() const { return version_; }

  std::span<const PayloadRecord> lookup(std::u32string_view key) const { return trie_.lookup(key); }
  std::vector<const WordFormEntry*> forms_for_key(std::u32string_view key) const;
  /// Form ids sharing `word`'s phonetic key.
  std::span<const uint32_t> phonetic_matches(std::string_view phonetic_key) const;

  /// Index of the lemma whose folded headword equals fold_case(headword), or -1.
  int64_t find_lemma(std::u32string_view headword) const;
  std::vector<uint32_t> forms_of_lemma(size_t lemma_index) const;

  friend bool operator==(const CompiledLexicon&, const CompiledLexicon&) = default;

 private:
  friend CompiledLexicon read_binary(std::span<const uint8_t> bytes);

  std::vector<Lemma> lemmas_;
  std::vector<WordFormEntry> forms_;
  CompressedTrie trie_;
  PhoneticIndex phonetic_;
  HyphenRuleSet hyphen_rules_;
  uint16_t version_ = kFormatVersion;
};

class CompileError : public Error {
 public:
  explicit CompileError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Generates every form, derives the hyphenation rules and builds the
/// indexes. Throws CompileError when validation reports errors.
CompiledLexicon compile(const LdlDocument& doc);

/// GLEX container: "GLEX", u16 version, u16 section count, a table of
/// (tag, offset, length, crc32) and the section bodies, all little-endian.
std::vector<uint8_t> write_binary(const CompiledLexicon& lexicon);
void write_binary(const CompiledLexicon& lexicon, std::ostream& sink);

/// Throws CorruptFile on a bad magic, version, checksum or body.
CompiledLexicon read_binary(std::span<const uint8_t> bytes);
CompiledLexicon read_binary(std::istream& source);
CompiledLexicon read_binary_file(const std::string& path);

struct SectionInfo {
  std::string tag;
  uint32_t offset = 0;
  uint32_t length = 0;
  uint32_t crc32 = 0;
};

/// Section table of a GLEX image without decoding the bodies.
std::vector<SectionInfo> read_section_table(std::span<const uint8_t> bytes);

}  // namespace grlex
