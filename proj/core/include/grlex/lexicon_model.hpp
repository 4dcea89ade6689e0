#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace grlex {

class HyphenRuleSet;

enum class MorphemeKind : uint8_t { prefix, stem, infix, inflection };

/// The three legal stress positions, counted from the word end.
enum class Stress : uint8_t { final, penultimate, antepenultimate };

std::string_view to_string(MorphemeKind kind);
std::string_view to_string(Stress stress);
/// "F", "P" or "A".
char stress_tag(Stress stress);
/// Minimum syllable count that can carry the given stress.
inline size_t syllables_required(Stress s) { return static_cast<size_t>(s) + 1; }

/// Ascending scalar offsets of syllable breaks.
using BreakOffsets = std::vector<uint32_t>;

struct Morpheme {
  MorphemeKind kind = MorphemeKind::stem;
  /// Destressed lowercase letters, σ never rendered final.
  std::u32string letters;
  /// Internal syllable breaks, each strictly inside (0, letters.size()).
  BreakOffsets hyphen_points;

  friend bool operator==(const Morpheme&, const Morpheme&) = default;
};

struct InflectionSlot {
  Morpheme suffix{MorphemeKind::inflection, {}, {}};
  Stress stress = Stress::penultimate;
  std::string tags;

  friend bool operator==(const InflectionSlot&, const InflectionSlot&) = default;
};

struct Morphology {
  /// prefix, stem and infix morphemes in authored order.
  std::vector<Morpheme> lexical;
  std::vector<InflectionSlot> inflections;

  friend bool operator==(const Morphology&, const Morphology&) = default;
};

enum class Relation : uint8_t { synonym, antonym, hyponym, related };

std::string_view to_string(Relation r);
/// LDL attribute name: syn, ant, hypo, rel.
std::string_view relation_key(Relation r);

struct SenseRef {
  Relation relation = Relation::related;
  std::u32string headword;

  friend bool operator==(const SenseRef&, const SenseRef&) = default;
};

struct Sense {
  std::string gloss;
  std::vector<SenseRef> refs;

  friend bool operator==(const Sense&, const Sense&) = default;
};

struct Lexeme {
  std::string name;
  std::string pos;
  /// Write the tonos on monosyllabic forms (ή, πού, πώς).
  bool keep_stress = false;
  Morphology morphology;
  std::vector<Sense> senses;

  friend bool operator==(const Lexeme&, const Lexeme&) = default;
};

struct Lemma {
  std::u32string headword;
  std::vector<Lexeme> lexemes;

  friend bool operator==(const Lemma&, const Lemma&) = default;
};

struct LexemeId {
  uint32_t lemma = 0;
  uint32_t lexeme = 0;

  friend bool operator==(const LexemeId&, const LexemeId&) = default;
};

struct Segment {
  MorphemeKind kind = MorphemeKind::stem;
  std::u32string letters;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// One generated surface form.
struct WordFormEntry {
  /// Stressed, final sigma rendered.
  std::u32string surface;
  std::u32string destressed_key;
  Stress stress = Stress::penultimate;
  std::vector<Segment> segmentation;
  /// Breaks over the destressed form.
  BreakOffsets hyphen_pattern;
  LexemeId lexeme_id;
  std::string tags;

  friend bool operator==(const WordFormEntry&, const WordFormEntry&) = default;
};

/// Positions of the tonos-bearing vowel of every syllable. Within a
/// syllable the nucleus is the last vowel of its first vowel run, so
/// digraphs (ου, αι, ευ, ...) and glide+vowel runs (ια) mark their last letter.
/// Throws NoNucleus when a syllable has no vowel.
std::vector<size_t> syllable_nuclei(std::u32string_view destressed, const BreakOffsets& breaks);

/// Writes the tonos on the syllable selected by `position`, counted from the
/// word end. One-syllable results carry no tonos unless keep_stress is set.
/// Throws StressUnplaceable when the word has too few syllables.
std::u32string place_stress(std::u32string_view destressed, const BreakOffsets& breaks,
                            Stress position, bool keep_stress = false);

/// Expands a lexeme into one entry per inflection slot, in slot order.
/// Breaks inside morphemes are kept; syllables that straddle a morpheme
/// boundary are split by the rule set's boundary rules.
std::vector<WordFormEntry> generate_word_forms(const Lexeme& lexeme, LexemeId id,
                                               const HyphenRuleSet& rules);
/// Same, with the handcrafted boundary rules.
std::vector<WordFormEntry> generate_word_forms(const Lexeme& lexeme, LexemeId id = {});

/// Breaks as "κε-φά-λι".
std::u32string hyphenated(std::u32string_view word, const BreakOffsets& breaks,
                          char32_t mark = U'-');

}  // namespace grlex
