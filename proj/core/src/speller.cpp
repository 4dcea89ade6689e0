#include "grlex/speller.hpp"

#include <algorithm>
#include <map>

#include "grlex/compiled_lexicon.hpp"
#include "grlex/error.hpp"
#include "grlex/greek_text.hpp"
#include "grlex/utf8.hpp"

namespace grlex {
namespace {

// Destressed lowercase alphabet used for insertions and substitutions.
constexpr std::u32string_view kAlphabet = U"αβγδεζηθικλμνξοπρστυφχψωϊϋ";

bool voiceless(char32_t c) {
  return std::u32string_view(U"θκξπστφχψ").find(c) != std::u32string_view::npos;
}

std::u32string_view single_phoneme(char32_t c) {
  switch (c) {
    case U'α': return U"a";
    case U'β': return U"v";
    case U'γ': return U"G";
    case U'δ': return U"D";
    case U'ε': return U"e";
    case U'ζ': return U"z";
    case U'η': case U'ι': case U'υ': case U'ϊ': case U'ϋ': return U"i";
    case U'θ': return U"T";
    case U'κ': return U"k";
    case U'λ': return U"l";
    case U'μ': return U"m";
    case U'ν': return U"n";
    case U'ξ': return U"ks";
    case U'ο': case U'ω': return U"o";
    case U'π': return U"p";
    case U'ρ': return U"r";
    case U'σ': case U'ς': return U"s";
    case U'τ': return U"t";
    case U'φ': return U"f";
    case U'χ': return U"x";
    case U'ψ': return U"ps";
    default: return {};
  }
}

bool all_caps(std::u32string_view word) {
  bool any = false;
  for (char32_t c : word) {
    const GreekChar g = classify_char(c);
    if (g.letter_class == LetterClass::non_greek) continue;
    if (!g.uppercase) return false;
    any = true;
  }
  return any;
}

size_t length_gap(size_t a, size_t b) { return a > b ? a - b : b - a; }

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::correct: return "Correct";
    case Verdict::stress_error: return "StressError";
    case Verdict::unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(Tier t) {
  switch (t) {
    case Tier::stress: return "stress";
    case Tier::phonetic: return "phonetic";
    case Tier::optical: return "optical";
    case Tier::edit1: return "edit1";
    case Tier::edit2: return "edit2";
  }
  return "edit2";
}

std::string_view to_string(EditOp op) {
  switch (op) {
    case EditOp::deletion: return "deletion";
    case EditOp::insertion: return "insertion";
    case EditOp::transposition: return "transposition";
    case EditOp::substitution: return "substitution";
  }
  return "substitution";
}

CheckResult check(const CompiledLexicon& lexicon, std::u32string_view token) {
  const std::u32string word = to_nfc(token);
  if (classify(word) != TokenClass::greek_word)
    throw NotGreek("'" + to_utf8(word) + "' is not a Greek word");
  const std::u32string folded = fold_case(word);
  const std::u32string key = destress(folded);

  CheckResult result;
  const auto payloads = lexicon.lookup(key);
  if (payloads.empty()) return result;

  const bool unmarked_caps =
      all_caps(word) && std::none_of(word.begin(), word.end(), [](char32_t c) { return has_tonos(c); });
  for (const auto& p : payloads) {
    if (unmarked_caps || fold_case(lexicon.forms()[p.form_id].surface) == folded) {
      result.verdict = Verdict::correct;
      return result;
    }
  }
  result.verdict = Verdict::stress_error;
  for (const auto& p : payloads) {
    result.matches.push_back(p.form_id);
    const auto& surface = lexicon.forms()[p.form_id].surface;
    if (std::find(result.correct_surfaces.begin(), result.correct_surfaces.end(), surface) ==
        result.correct_surfaces.end())
      result.correct_surfaces.push_back(surface);
  }
  return result;
}

ConfusionTable::ConfusionTable(std::vector<std::pair<std::u32string, std::u32string>> pairs)
    : pairs_(std::move(pairs)) {
  for (const auto& [a, b] : pairs_) {
    const auto fa = fold_case(a);
    const auto fb = fold_case(b);
    substitutions_.emplace_back(fa, fb);
    substitutions_.emplace_back(fb, fa);
  }
}

const ConfusionTable& ConfusionTable::standard() {
  static const ConfusionTable table({{U"Α", U"Δ"}, {U"Τ", U"Γ"}, {U"ΛΛ", U"Μ"}, {U"α", U"σ"}});
  return table;
}

bool ConfusionTable::confusable(std::u32string_view a, std::u32string_view b) const {
  const auto fa = fold_case(a);
  const auto fb = fold_case(b);
  return std::any_of(substitutions_.begin(), substitutions_.end(),
                     [&](const auto& s) { return s.first == fa && s.second == fb; });
}

std::string phonetic_key(std::u32string_view word) {
  const size_t n = word.size();
  auto at = [&](size_t k) -> char32_t { return k < n ? word[k] : U'\0'; };
  std::u32string out;
  size_t i = 0;
  while (i < n) {
    const char32_t c = word[i];
    const char32_t d = at(i + 1);
    if (c == U'ο' && d == U'υ') {
      out += U"u";
      i += 2;
    } else if (c == U'α' && d == U'ι') {
      out += U"e";
      i += 2;
    } else if ((c == U'ε' || c == U'ο' || c == U'υ') && d == U'ι') {
      out += U"i";
      i += 2;
    } else if ((c == U'α' || c == U'ε' || c == U'η') && d == U'υ') {
      out += c == U'α' ? U'a' : c == U'ε' ? U'e' : U'i';
      out += voiceless(at(i + 2)) ? U'f' : U'v';
      i += 2;
    } else if (c == U'μ' && d == U'π') {
      out += U"b";
      i += 2;
    } else if (c == U'ν' && d == U'τ') {
      out += U"d";
      i += 2;
    } else if ((c == U'γ' || c == U'ν') && (d == U'κ' || d == U'γ')) {
      out += U"g";
      i += 2;
    } else if (c == U'ν' && (d == U'χ' || d == U'ξ')) {
      out += U"G";
      ++i;
    } else {
      const auto mapped = single_phoneme(c);
      if (mapped.empty())
        out += c;
      else
        out += mapped;
      ++i;
    }
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return to_utf8(out);
}

std::vector<EditCandidate> edit_candidates(const CompiledLexicon& lexicon, std::u32string_view key) {
  std::map<std::pair<std::u32string, EditOp>, size_t> found;
  auto probe = [&](std::u32string candidate, EditOp op, size_t position) {
    if (candidate == key || !lexicon.trie().contains(candidate)) return;
    found.emplace(std::make_pair(std::move(candidate), op), position);
  };

  const std::u32string word(key);
  for (size_t i = 0; i < word.size(); ++i) {
    std::u32string s = word;
    s.erase(i, 1);
    probe(std::move(s), EditOp::deletion, i);
  }
  for (size_t i = 0; i <= word.size(); ++i) {
    for (char32_t c : kAlphabet) {
      std::u32string s = word;
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(i), c);
      probe(std::move(s), EditOp::insertion, i);
    }
  }
  for (size_t i = 0; i + 1 < word.size(); ++i) {
    std::u32string s = word;
    std::swap(s[i], s[i + 1]);
    probe(std::move(s), EditOp::transposition, i);
  }
  for (size_t i = 0; i < word.size(); ++i) {
    for (char32_t c : kAlphabet) {
      if (c == word[i]) continue;
      std::u32string s = word;
      s[i] = c;
      probe(std::move(s), EditOp::substitution, i);
    }
  }

  std::vector<EditCandidate> out;
  out.reserve(found.size());
  for (auto& [k, position] : found) out.push_back({k.first, k.second, position});
  return out;
}

namespace {

// Optimal-string-alignment distance evaluated row by row along trie paths.
class BoundedSearch {
 public:
  BoundedSearch(const CompressedTrie& trie, std::u32string_view query, size_t limit)
      : trie_(trie), query_(query), limit_(limit) {}

  std::vector<std::u32string> run() {
    std::vector<size_t> first(query_.size() + 1);
    for (size_t j = 0; j < first.size(); ++j) first[j] = j;
    rows_.push_back(std::move(first));
    visit(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void visit(uint32_t index) {
    const auto& node = trie_.nodes()[index];
    size_t pushed = 0;
    bool alive = true;
    for (char32_t c : node.label) {
      push_row(c);
      ++pushed;
      if (*std::min_element(rows_.back().begin(), rows_.back().end()) > limit_) {
        alive = false;
        break;
      }
    }
    if (alive) {
      if (!node.payloads.empty() && rows_.back().back() <= limit_ && path_ != query_)
        found_.push_back(path_);
      for (uint32_t child : node.children) visit(child);
    }
    for (size_t k = 0; k < pushed; ++k) {
      rows_.pop_back();
      path_.pop_back();
    }
  }

  void push_row(char32_t c) {
    const auto& prev = rows_.back();
    std::vector<size_t> row(query_.size() + 1);
    row[0] = prev[0] + 1;
    for (size_t j = 1; j <= query_.size(); ++j) {
      const size_t cost = query_[j - 1] == c ? 0 : 1;
      row[j] = std::min({prev[j] + 1, row[j - 1] + 1, prev[j - 1] + cost});
      if (j > 1 && !path_.empty() && query_[j - 1] == path_.back() && query_[j - 2] == c)
        row[j] = std::min(row[j], rows_[rows_.size() - 2][j - 2] + 1);
    }
    rows_.push_back(std::move(row));
    path_.push_back(c);
  }

  const CompressedTrie& trie_;
  std::u32string_view query_;
  size_t limit_;
  std::vector<std::vector<size_t>> rows_;
  std::u32string path_;
  std::vector<std::u32string> found_;
};

}  // namespace

std::vector<std::u32string> edit_distance_candidates(const CompiledLexicon& lexicon,
                                                     std::u32string_view key,
                                                     size_t max_distance) {
  return BoundedSearch(lexicon.trie(), key, max_distance).run();
}

std::vector<OpticalCandidate> optical_candidates(const CompiledLexicon& lexicon,
                                                 std::u32string_view key) {
  std::vector<OpticalCandidate> out;
  for (const auto& [from, to] : ConfusionTable::standard().substitutions()) {
    for (size_t pos = key.find(from); pos != std::u32string_view::npos;
         pos = key.find(from, pos + 1)) {
      std::u32string candidate(key);
      candidate.replace(pos, from.size(), to);
      if (candidate != key && lexicon.trie().contains(candidate))
        out.push_back({std::move(candidate), from, to, pos});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Suggestion> suggest(const CompiledLexicon& lexicon, std::u32string_view token,
                                size_t limit) {
  const std::u32string word = to_nfc(token);
  const std::u32string folded = fold_case(word);
  const std::u32string key = destress(folded);

  // surface -> best suggestion so far
  std::map<std::u32string, Suggestion> best;
  auto offer = [&](uint32_t form_id, Tier tier, std::string detail) {
    const auto& surface = lexicon.forms()[form_id].surface;
    if (fold_case(surface) == folded) return;
    auto [it, inserted] = best.try_emplace(surface, Suggestion{surface, tier, detail, form_id});
    if (!inserted && std::tie(tier, detail) < std::tie(it->second.tier, it->second.detail))
      it->second = Suggestion{surface, tier, std::move(detail), form_id};
  };
  auto offer_key = [&](std::u32string_view k, Tier tier, const std::string& detail) {
    for (const auto& p : lexicon.lookup(k)) offer(p.form_id, tier, detail);
  };

  offer_key(key, Tier::stress, "stress");

  const std::string phonetic = phonetic_key(key);
  for (uint32_t id : lexicon.phonetic_matches(phonetic)) offer(id, Tier::phonetic, "phonetic:" + phonetic);

  for (const auto& c : optical_candidates(lexicon, key))
    offer_key(c.key, Tier::optical,
              "optical:" + to_utf8(c.from) + ">" + to_utf8(c.to) + "@" + std::to_string(c.position));

  for (const auto& c : edit_candidates(lexicon, key))
    offer_key(c.key, Tier::edit1,
              "edit:" + std::string(to_string(c.op)) + "@" + std::to_string(c.position));

  if (best.size() < limit)
    for (const auto& k : edit_distance_candidates(lexicon, key, 2)) offer_key(k, Tier::edit2, "edit2");

  std::vector<Suggestion> ranked;
  ranked.reserve(best.size());
  for (auto& [surface, s] : best) ranked.push_back(std::move(s));
  const size_t length = word.size();
  std::sort(ranked.begin(), ranked.end(), [&](const Suggestion& a, const Suggestion& b) {
    const auto ga = length_gap(a.surface.size(), length);
    const auto gb = length_gap(b.surface.size(), length);
    return std::tie(a.tier, ga, a.surface) < std::tie(b.tier, gb, b.surface);
  });
  if (ranked.size() > limit) ranked.resize(limit);
  return ranked;
}

}  // namespace grlex
