#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grlex {

class CompiledLexicon;

enum class Verdict : uint8_t { correct, stress_error, unknown };

std::string_view to_string(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::unknown;
  /// For stress_error: the forms under the token's destressed key.
  std::vector<uint32_t> matches;
  /// Their distinct stressed surfaces, in form order.
  std::vector<std::u32string> correct_surfaces;
};

/// Checks a word against the lexicon: the destressed key is looked up first,
/// then the written stress is compared with every matching form. Words in
/// capitals without any tonos are judged on their letters alone.
/// Throws NotGreek unless the token is a Greek word.
CheckResult check(const CompiledLexicon& lexicon, std::u32string_view token);

/// Suggestion tiers, best first.
enum class Tier : uint8_t { stress = 0, phonetic = 1, optical = 2, edit1 = 3, edit2 = 4 };

std::string_view to_string(Tier t);

struct Suggestion {
  std::u32string surface;
  Tier tier = Tier::edit2;
  /// Transformation that produced the candidate, e.g. "optical:λλ>μ@2".
  std::string detail;
  uint32_t form_id = 0;

  friend bool operator==(const Suggestion&, const Suggestion&) = default;
};

/// Confusable letter shapes. pairs() lists them in display case;
/// the speller works with their case-folded forms in both directions.
class ConfusionTable {
 public:
  static const ConfusionTable& standard();

  const std::vector<std::pair<std::u32string, std::u32string>>& pairs() const { return pairs_; }
  /// Folded pairs in both directions.
  const std::vector<std::pair<std::u32string, std::u32string>>& substitutions() const {
    return substitutions_;
  }
  bool confusable(std::u32string_view a, std::u32string_view b) const;

 private:
  explicit ConfusionTable(std::vector<std::pair<std::u32string, std::u32string>> pairs);

  std::vector<std::pair<std::u32string, std::u32string>> pairs_;
  std::vector<std::pair<std::u32string, std::u32string>> substitutions_;
};

/// Pronunciation key of a destressed, folded word: Greek digraphs and
/// iotacism classes collapse to one ASCII symbol each, ν and γ merge before
/// velars and doubled symbols collapse. Non-Greek scalars pass through.
std::string phonetic_key(std::u32string_view word);

enum class EditOp : uint8_t { deletion, insertion, transposition, substitution };

std::string_view to_string(EditOp op);

struct EditCandidate {
  std::u32string key;
  EditOp op = EditOp::substitution;
  /// Offset in the input key where the operation applies.
  size_t position = 0;

  friend bool operator==(const EditCandidate&, const EditCandidate&) = default;
  friend auto operator<=>(const EditCandidate&, const EditCandidate&) = default;
};

/// Lexicon keys one deletion, insertion, adjacent transposition or
/// substitution away from `key`. One entry per (key, op), first position wins.
std::vector<EditCandidate> edit_candidates(const CompiledLexicon& lexicon, std::u32string_view key);

/// Lexicon keys within optimal-string-alignment distance `max_distance` of
/// `key`, found by a bounded walk of the trie. Sorted, identity excluded.
std::vector<std::u32string> edit_distance_candidates(const CompiledLexicon& lexicon,
                                                     std::u32string_view key,
                                                     size_t max_distance = 2);

struct OpticalCandidate {
  std::u32string key;
  std::u32string from;
  std::u32string to;
  size_t position = 0;

  friend bool operator==(const OpticalCandidate&, const OpticalCandidate&) = default;
  friend auto operator<=>(const OpticalCandidate&, const OpticalCandidate&) = default;
};

/// Lexicon keys reachable by one confusion-pair substitution.
std::vector<OpticalCandidate> optical_candidates(const CompiledLexicon& lexicon,
                                                 std::u32string_view key);

/// Ranked corrections: by tier, then by length difference to the token,
/// then by surface. Each surface appears once, at its best tier. The
/// distance-2 search only runs when the cheaper tiers find fewer than `limit`.
std::vector<Suggestion> suggest(const CompiledLexicon& lexicon, std::u32string_view token,
                                size_t limit = 10);

}  // namespace grlex
