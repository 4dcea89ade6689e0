#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grlex/lexicon_model.hpp"

namespace grlex {

class CompiledLexicon;

enum class VowelJoin : uint8_t { keep_together, split, lexicon_dependent };

std::string_view to_string(VowelJoin j);

/// Decision for one tracked vowel pair. `fallback` (keep_together or split)
/// is what the rules do while the decision is still lexicon_dependent.
struct VowelCombination {
  std::u32string pair;
  VowelJoin decision = VowelJoin::lexicon_dependent;
  VowelJoin fallback = VowelJoin::keep_together;

  friend bool operator==(const VowelCombination&, const VowelCombination&) = default;
};

/// Destressed form -> its exact break offsets.
using ExceptionTable = std::map<std::u32string, BreakOffsets>;

/// Handcrafted syllabification rules, vowel-combination decisions and the
/// exception list. Immutable once built.
class HyphenRuleSet {
 public:
  HyphenRuleSet() = default;
  HyphenRuleSet(std::set<std::u32string> onsets, std::vector<VowelCombination> vowels,
                ExceptionTable exceptions = {});

  /// Rules seeded from the shipped onset and vowel-combination tables.
  static const HyphenRuleSet& handcrafted();

  /// Builds a rule set from the text of the two data files.
  static HyphenRuleSet from_tables(std::string_view onset_table, std::string_view vowel_table);

  const std::set<std::u32string>& onsets() const { return onsets_; }
  const std::vector<VowelCombination>& vowel_combinations() const { return vowels_; }
  const ExceptionTable& exceptions() const { return exceptions_; }

  /// True when `cluster` can begin a Greek word.
  bool leading_cluster(std::u32string_view cluster) const;

  /// Whether two adjacent vowels (lowercase, tonos free) stay in one syllable.
  bool joins(char32_t first, char32_t second) const;

  /// Rule-only breaks for a whole word; exceptions are not consulted.
  /// Tonos and case are ignored. Throws NoVowel.
  BreakOffsets rule_breaks(std::u32string_view word) const;

  /// Exceptions first, then rules.
  BreakOffsets breaks(std::u32string_view word) const;

  /// Syllable breaks for a word assembled from morphemes. `fixed` breaks
  /// are kept as authored; every span between fixed breaks that crosses a
  /// morpheme boundary is split by the rules. Spans without a vowel are left whole.
  BreakOffsets resolve_boundaries(std::u32string_view word, const BreakOffsets& fixed,
                                  const std::vector<uint32_t>& boundaries) const;

  HyphenRuleSet with(std::vector<VowelCombination> vowels, ExceptionTable exceptions) const;

  friend bool operator==(const HyphenRuleSet&, const HyphenRuleSet&) = default;

 private:
  std::set<std::u32string> onsets_;
  std::vector<VowelCombination> vowels_;
  ExceptionTable exceptions_;
};

struct BreakPattern {
  std::u32string word;
  BreakOffsets breaks;

  /// The word with "-" at every break.
  std::u32string text() const { return hyphenated(word, breaks); }
  std::vector<std::u32string> segments() const;
};

/// Hyphenates with full precedence: exception table, then the lexicon's
/// stored pattern (when `lexicon` is given and knows the word), then rules.
BreakPattern hyphenate(const HyphenRuleSet& rules, const CompiledLexicon* lexicon,
                       std::u32string_view word);

/// True iff `cluster` (two or more consonants) is a word-initial cluster of
/// the shipped onset table. Throws InvalidInput on anything else.
bool leading_cluster_test(std::u32string_view cluster);

struct VowelTally {
  std::u32string pair;
  size_t together = 0;
  size_t split = 0;
};

struct DerivedHyphenRules {
  HyphenRuleSet rules;
  std::vector<VowelTally> tallies;
};

/// Tallies every tracked vowel pair over the distinct forms, adopts the
/// majority behaviour as the pair's decision (ties keep the base decision),
/// and lists every form the resulting rules get wrong as an exception.
DerivedHyphenRules derive_vowel_rules(std::span<const WordFormEntry> forms,
                                      const HyphenRuleSet& base = HyphenRuleSet::handcrafted());
DerivedHyphenRules derive_vowel_rules(const CompiledLexicon& lexicon);

/// Parsers for the two data files (UTF-8, one entry per line, '#' comments).
std::set<std::u32string> parse_onset_table(std::string_view text);
std::vector<VowelCombination> parse_vowel_table(std::string_view text);

}  // namespace grlex
