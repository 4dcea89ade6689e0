#include "grlex/hyphenator.hpp"

#include <algorithm>
#include <sstream>

#include "grlex/compiled_lexicon.hpp"
#include "grlex/error.hpp"
#include "grlex/greek_text.hpp"
#include "grlex/utf8.hpp"

namespace grlex {
namespace detail {
extern const std::string_view kOnsetTable;
extern const std::string_view kVowelTable;
}  // namespace detail

namespace {

std::vector<std::string> data_line_tokens(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

template <typename Fn>
void for_each_data_line(std::string_view text, Fn&& fn) {
  std::istringstream in{std::string(text)};
  size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    auto tokens = data_line_tokens(line);
    if (!tokens.empty()) fn(number, tokens);
  }
}

VowelJoin parse_join(const std::string& word, size_t line) {
  if (word == "keep-together") return VowelJoin::keep_together;
  if (word == "split") return VowelJoin::split;
  if (word == "lexicon-dependent") return VowelJoin::lexicon_dependent;
  throw InvalidInput("vowel table line " + std::to_string(line) + ": unknown decision '" + word +
                     "'");
}

}  // namespace

std::string_view to_string(VowelJoin j) {
  switch (j) {
    case VowelJoin::keep_together: return "keep-together";
    case VowelJoin::split: return "split";
    case VowelJoin::lexicon_dependent: return "lexicon-dependent";
  }
  return "split";
}

std::set<std::u32string> parse_onset_table(std::string_view text) {
  std::set<std::u32string> onsets;
  for_each_data_line(text, [&](size_t line, const std::vector<std::string>& tokens) {
    const auto cluster = to_utf32(tokens[0]);
    const bool consonants = std::all_of(cluster.begin(), cluster.end(), [](char32_t c) {
      return is_consonant(c) && fold_char(c) == c;
    });
    if (tokens.size() != 1 || cluster.size() < 2 || !consonants)
      throw InvalidInput("onset table line " + std::to_string(line) +
                         ": expected one lowercase consonant cluster");
    onsets.insert(cluster);
  });
  return onsets;
}

std::vector<VowelCombination> parse_vowel_table(std::string_view text) {
  std::vector<VowelCombination> vowels;
  for_each_data_line(text, [&](size_t line, const std::vector<std::string>& tokens) {
    const auto pair = to_utf32(tokens[0]);
    if (pair.size() != 2 || !is_vowel(pair[0]) || !is_vowel(pair[1]) || make_key(pair) != pair ||
        tokens.size() < 2 || tokens.size() > 3)
      throw InvalidInput("vowel table line " + std::to_string(line) +
                         ": expected '<vowel pair> <decision> [<fallback>]'");
    VowelCombination v;
    v.pair = pair;
    v.decision = parse_join(tokens[1], line);
    v.fallback = tokens.size() == 3 ? parse_join(tokens[2], line)
                 : v.decision == VowelJoin::lexicon_dependent ? VowelJoin::keep_together
                                                              : v.decision;
    if (v.fallback == VowelJoin::lexicon_dependent)
      throw InvalidInput("vowel table line " + std::to_string(line) +
                         ": fallback must be keep-together or split");
    for (const auto& existing : vowels)
      if (existing.pair == v.pair)
        throw InvalidInput("vowel table line " + std::to_string(line) + ": duplicate pair");
    vowels.push_back(v);
  });
  return vowels;
}

HyphenRuleSet::HyphenRuleSet(std::set<std::u32string> onsets, std::vector<VowelCombination> vowels,
                             ExceptionTable exceptions)
    : onsets_(std::move(onsets)), vowels_(std::move(vowels)), exceptions_(std::move(exceptions)) {}

const HyphenRuleSet& HyphenRuleSet::handcrafted() {
  static const HyphenRuleSet rules = from_tables(detail::kOnsetTable, detail::kVowelTable);
  return rules;
}

HyphenRuleSet HyphenRuleSet::from_tables(std::string_view onset_table,
                                         std::string_view vowel_table) {
  return HyphenRuleSet(parse_onset_table(onset_table), parse_vowel_table(vowel_table));
}

HyphenRuleSet HyphenRuleSet::with(std::vector<VowelCombination> vowels,
                                  ExceptionTable exceptions) const {
  return HyphenRuleSet(onsets_, std::move(vowels), std::move(exceptions));
}

bool HyphenRuleSet::leading_cluster(std::u32string_view cluster) const {
  return onsets_.contains(std::u32string(cluster));
}

bool HyphenRuleSet::joins(char32_t first, char32_t second) const {
  for (const auto& v : vowels_) {
    if (v.pair[0] != first || v.pair[1] != second) continue;
    const VowelJoin j = v.decision == VowelJoin::lexicon_dependent ? v.fallback : v.decision;
    return j == VowelJoin::keep_together;
  }
  return false;
}

BreakOffsets HyphenRuleSet::rule_breaks(std::u32string_view word) const {
  const size_t n = word.size();
  std::u32string base(n, U'\0');
  std::vector<bool> vowel(n);
  for (size_t i = 0; i < n; ++i) {
    const GreekChar g = classify_char(word[i]);
    base[i] = g.base;
    vowel[i] = g.letter_class == LetterClass::vowel;
  }

  size_t i = 0;
  while (i < n && !vowel[i]) ++i;
  if (i == n) throw NoVowel("'" + to_utf8(word) + "' has no vowel");

  BreakOffsets breaks;
  while (true) {
    while (i + 1 < n && vowel[i + 1]) {
      if (!joins(base[i], base[i + 1])) breaks.push_back(static_cast<uint32_t>(i + 1));
      ++i;
    }
    const size_t run_end = i + 1;
    size_t next = run_end;
    while (next < n && !vowel[next]) ++next;
    if (next == n) break;
    // V-CV for a single consonant; a longer cluster moves to the next
    // syllable whole only if a word can begin with it.
    if (next - run_end == 1 || leading_cluster(std::u32string_view(base).substr(run_end, next - run_end)))
      breaks.push_back(static_cast<uint32_t>(run_end));
    else
      breaks.push_back(static_cast<uint32_t>(run_end + 1));
    i = next;
  }
  return breaks;
}

BreakOffsets HyphenRuleSet::breaks(std::u32string_view word) const {
  if (!exceptions_.empty()) {
    if (auto it = exceptions_.find(make_key(word)); it != exceptions_.end()) return it->second;
  }
  return rule_breaks(word);
}

BreakOffsets HyphenRuleSet::resolve_boundaries(std::u32string_view word, const BreakOffsets& fixed,
                                               const std::vector<uint32_t>& boundaries) const {
  BreakOffsets points = fixed;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  BreakOffsets out;
  uint32_t begin = 0;
  for (size_t s = 0; s <= points.size(); ++s) {
    const uint32_t end = s < points.size() ? points[s] : static_cast<uint32_t>(word.size());
    const bool crosses = std::any_of(boundaries.begin(), boundaries.end(),
                                     [&](uint32_t b) { return b > begin && b < end; });
    if (crosses) {
      try {
        for (auto p : rule_breaks(word.substr(begin, end - begin))) out.push_back(begin + p);
      } catch (const NoVowel&) {
        // left whole; the stress placement reports the missing nucleus
      }
    }
    if (s < points.size()) out.push_back(end);
    begin = end;
  }
  return out;
}

std::vector<std::u32string> BreakPattern::segments() const {
  std::vector<std::u32string> out;
  size_t begin = 0;
  for (auto b : breaks) {
    out.push_back(word.substr(begin, b - begin));
    begin = b;
  }
  out.push_back(word.substr(begin));
  return out;
}

BreakPattern hyphenate(const HyphenRuleSet& rules, const CompiledLexicon* lexicon,
                       std::u32string_view word) {
  BreakPattern result;
  result.word = to_nfc(word);
  const std::u32string folded = fold_case(result.word);
  const std::u32string key = destress(folded);

  if (auto it = rules.exceptions().find(key); it != rules.exceptions().end()) {
    result.breaks = it->second;
    return result;
  }
  if (lexicon) {
    const auto forms = lexicon->forms_for_key(key);
    if (!forms.empty()) {
      const WordFormEntry* chosen = forms.front();
      for (const auto* f : forms) {
        if (fold_case(f->surface) == folded) {
          chosen = f;
          break;
        }
      }
      result.breaks = chosen->hyphen_pattern;
      return result;
    }
  }
  result.breaks = rules.rule_breaks(key);
  return result;
}

bool leading_cluster_test(std::u32string_view cluster) {
  if (cluster.size() < 2) throw InvalidInput("cluster needs at least two consonants");
  for (char32_t c : cluster)
    if (!is_consonant(c)) throw InvalidInput("cluster may contain only consonants");
  return HyphenRuleSet::handcrafted().leading_cluster(make_key(cluster));
}

DerivedHyphenRules derive_vowel_rules(std::span<const WordFormEntry> forms,
                                      const HyphenRuleSet& base) {
  // One vote per distinct spelling; the first form of a spelling wins.
  std::map<std::u32string, const BreakOffsets*> distinct;
  for (const auto& f : forms) distinct.emplace(f.destressed_key, &f.hyphen_pattern);

  DerivedHyphenRules result;
  std::vector<VowelCombination> decisions = base.vowel_combinations();
  for (const auto& v : decisions) result.tallies.push_back({v.pair, 0, 0});

  for (const auto& [key, pattern] : distinct) {
    for (size_t i = 0; i + 1 < key.size(); ++i) {
      for (size_t k = 0; k < decisions.size(); ++k) {
        if (decisions[k].pair[0] != key[i] || decisions[k].pair[1] != key[i + 1]) continue;
        if (std::binary_search(pattern->begin(), pattern->end(), static_cast<uint32_t>(i + 1)))
          ++result.tallies[k].split;
        else
          ++result.tallies[k].together;
      }
    }
  }
  for (size_t k = 0; k < decisions.size(); ++k) {
    const auto& t = result.tallies[k];
    if (t.together > t.split) decisions[k].decision = VowelJoin::keep_together;
    if (t.split > t.together) decisions[k].decision = VowelJoin::split;
  }

  const HyphenRuleSet derived = base.with(decisions, {});
  ExceptionTable exceptions;
  for (const auto& [key, pattern] : distinct) {
    bool agrees = false;
    try {
      agrees = derived.rule_breaks(key) == *pattern;
    } catch (const NoVowel&) {
    }
    if (!agrees) exceptions.emplace(key, *pattern);
  }
  result.rules = base.with(std::move(decisions), std::move(exceptions));
  return result;
}

DerivedHyphenRules derive_vowel_rules(const CompiledLexicon& lexicon) {
  return derive_vowel_rules(lexicon.forms());
}

}  // namespace grlex
