#include "grlex/lexicon_model.hpp"

#include <algorithm>

#include "grlex/error.hpp"
#include "grlex/greek_text.hpp"
#include "grlex/hyphenator.hpp"
#include "grlex/utf8.hpp"

namespace grlex {

std::string_view to_string(MorphemeKind kind) {
  switch (kind) {
    case MorphemeKind::prefix: return "prefix";
    case MorphemeKind::stem: return "stem";
    case MorphemeKind::infix: return "infix";
    case MorphemeKind::inflection: return "infl";
  }
  return "stem";
}

std::string_view to_string(Stress stress) {
  switch (stress) {
    case Stress::final: return "final";
    case Stress::penultimate: return "penultimate";
    case Stress::antepenultimate: return "antepenultimate";
  }
  return "penultimate";
}

char stress_tag(Stress stress) {
  switch (stress) {
    case Stress::final: return 'F';
    case Stress::penultimate: return 'P';
    case Stress::antepenultimate: return 'A';
  }
  return 'P';
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::synonym: return "synonym";
    case Relation::antonym: return "antonym";
    case Relation::hyponym: return "hyponym";
    case Relation::related: return "related";
  }
  return "related";
}

std::string_view relation_key(Relation r) {
  switch (r) {
    case Relation::synonym: return "syn";
    case Relation::antonym: return "ant";
    case Relation::hyponym: return "hypo";
    case Relation::related: return "rel";
  }
  return "rel";
}

std::vector<size_t> syllable_nuclei(std::u32string_view destressed, const BreakOffsets& breaks) {
  std::vector<size_t> nuclei;
  nuclei.reserve(breaks.size() + 1);
  size_t begin = 0;
  for (size_t s = 0; s <= breaks.size(); ++s) {
    const size_t end = s < breaks.size() ? breaks[s] : destressed.size();
    if (end < begin || end > destressed.size())
      throw InvalidInput("break offsets out of order or out of range");
    size_t pos = begin;
    while (pos < end && !is_vowel(destressed[pos])) ++pos;
    if (pos == end)
      throw NoNucleus("syllable '" + to_utf8(destressed.substr(begin, end - begin)) + "' of '" +
                      to_utf8(destressed) + "' has no vowel");
    // A dialytika vowel never continues the run; it starts a nucleus of its own.
    while (pos + 1 < end && is_vowel(destressed[pos + 1]) &&
           !classify_char(destressed[pos + 1]).dialytika)
      ++pos;
    nuclei.push_back(pos);
    begin = end;
  }
  return nuclei;
}

std::u32string place_stress(std::u32string_view destressed, const BreakOffsets& breaks,
                            Stress position, bool keep_stress) {
  const size_t syllables = breaks.size() + 1;
  if (syllables < syllables_required(position))
    throw StressUnplaceable("'" + to_utf8(destressed) + "' has " + std::to_string(syllables) +
                            " syllable(s), " + std::string(to_string(position)) + " stress needs " +
                            std::to_string(syllables_required(position)));
  const auto nuclei = syllable_nuclei(destressed, breaks);
  std::u32string out(destressed);
  if (syllables == 1 && !keep_stress) return out;
  const size_t target = nuclei[syllables - 1 - static_cast<size_t>(position)];
  out[target] = stress_char(out[target]);
  return out;
}

std::vector<WordFormEntry> generate_word_forms(const Lexeme& lexeme, LexemeId id,
                                               const HyphenRuleSet& rules) {
  std::u32string lexical;
  BreakOffsets lexical_fixed;
  std::vector<uint32_t> lexical_boundaries;
  std::vector<Segment> lexical_segments;
  for (const auto& m : lexeme.morphology.lexical) {
    if (m.letters.empty()) continue;
    const auto offset = static_cast<uint32_t>(lexical.size());
    if (offset > 0) lexical_boundaries.push_back(offset);
    for (auto p : m.hyphen_points) lexical_fixed.push_back(offset + p);
    lexical += m.letters;
    lexical_segments.push_back({m.kind, m.letters});
  }

  std::vector<WordFormEntry> forms;
  forms.reserve(lexeme.morphology.inflections.size());
  for (const auto& slot : lexeme.morphology.inflections) {
    const auto offset = static_cast<uint32_t>(lexical.size());
    std::u32string word = lexical + slot.suffix.letters;
    BreakOffsets fixed = lexical_fixed;
    for (auto p : slot.suffix.hyphen_points) fixed.push_back(offset + p);
    std::vector<uint32_t> boundaries = lexical_boundaries;
    if (!slot.suffix.letters.empty() && offset > 0) boundaries.push_back(offset);

    WordFormEntry form;
    form.hyphen_pattern = rules.resolve_boundaries(word, fixed, boundaries);
    const size_t syllables = form.hyphen_pattern.size() + 1;
    if (syllables < syllables_required(slot.stress))
      throw StressUnplaceable("form '" + to_utf8(word) + "' (" + slot.tags + ") has " +
                              std::to_string(syllables) + " syllable(s), cannot take " +
                              std::string(to_string(slot.stress)) + " stress");
    form.surface = render_final_sigma(
        place_stress(word, form.hyphen_pattern, slot.stress, lexeme.keep_stress));
    form.destressed_key = std::move(word);
    form.stress = slot.stress;
    form.segmentation = lexical_segments;
    if (!slot.suffix.letters.empty())
      form.segmentation.push_back({MorphemeKind::inflection, slot.suffix.letters});
    form.lexeme_id = id;
    form.tags = slot.tags;
    forms.push_back(std::move(form));
  }
  return forms;
}

std::vector<WordFormEntry> generate_word_forms(const Lexeme& lexeme, LexemeId id) {
  return generate_word_forms(lexeme, id, HyphenRuleSet::handcrafted());
}

std::u32string hyphenated(std::u32string_view word, const BreakOffsets& breaks, char32_t mark) {
  std::u32string out;
  out.reserve(word.size() + breaks.size());
  size_t next = 0;
  for (size_t i = 0; i < word.size(); ++i) {
    if (next < breaks.size() && breaks[next] == i) {
      out.push_back(mark);
      ++next;
    }
    out.push_back(word[i]);
  }
  return out;
}

}  // namespace grlex
