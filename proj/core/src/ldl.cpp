#include "grlex/ldl.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "grlex/error.hpp"
#include "grlex/greek_text.hpp"
#include "grlex/hyphenator.hpp"
#include "grlex/utf8.hpp"

namespace grlex {

std::string format_diagnostic(const Diagnostic& d, std::string_view source_name) {
  std::ostringstream out;
  out << source_name << ':' << d.location.line << ':' << d.location.column << ": "
      << (d.severity == Severity::error ? "error" : "warning") << ": " << d.message << " ["
      << d.code << ']';
  return out.str();
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

bool parse_morpheme_spelling(std::u32string_view spelling, MorphemeKind kind, Morpheme& out,
                             MorphemeSpellingError& error) {
  out = Morpheme{kind, {}, {}};
  if (spelling.empty()) {
    error = {"bad-morpheme", "empty morpheme", 0};
    return false;
  }
  for (size_t i = 0; i < spelling.size(); ++i) {
    const char32_t c = spelling[i];
    if (c == U'-') {
      if (i == 0 || i + 1 == spelling.size() || spelling[i + 1] == U'-') {
        error = {"bad-hyphen", "hyphen must sit between two letters of a morpheme", i};
        return false;
      }
      out.hyphen_points.push_back(static_cast<uint32_t>(out.letters.size()));
      continue;
    }
    if (!is_greek_letter(c)) {
      error = {"bad-letter", "'" + to_utf8(c) + "' is not a Greek letter", i};
      return false;
    }
    if (has_tonos(c)) {
      error = {"stress-in-morpheme",
               "morphemes are written without stress marks; give the stress with @F/@P/@A", i};
      return false;
    }
    out.letters.push_back(fold_char(c));
  }
  return true;
}

std::u32string morpheme_spelling(const Morpheme& m) { return hyphenated(m.letters, m.hyphen_points); }

namespace {

struct Token {
  std::u32string text;
  uint32_t column = 0;
  bool quoted = false;
};

class Parser {
 public:
  Parser(std::string_view source, std::string name) : source_(source) {
    result_.document.source_name = std::move(name);
  }

  ParseResult run() {
    std::istringstream in{std::string(source_)};
    std::string raw;
    uint32_t number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      line_ = number;
      std::u32string text;
      try {
        text = decode_nfc(raw);
      } catch (const EncodingError& e) {
        error({number, 1}, "encoding", e.what());
        abandon_block();
        continue;
      }
      if (number == 1 && !text.empty() && text.front() == U'\uFEFF') text.erase(0, 1);
      std::vector<Token> tokens;
      if (!tokenize(text, tokens)) continue;
      if (!tokens.empty()) handle(tokens);
    }
    if (state_ != State::top && state_ != State::skipping) {
      error({line_ + 1, 1}, "syntax", "unexpected end of input inside lemma block");
    }
    return std::move(result_);
  }

 private:
  enum class State { top, lemma, lexeme, skipping };

  void error(SourceLocation at, std::string code, std::string message) {
    result_.diagnostics.push_back({Severity::error, at, std::move(code), std::move(message)});
    lemma_ok_ = false;
  }

  /// Structural error: drop the current lemma and resume at the next `lemma`.
  void abandon_block() {
    if (state_ == State::lemma || state_ == State::lexeme) state_ = State::skipping;
  }

  bool tokenize(const std::u32string& text, std::vector<Token>& tokens) {
    size_t i = 0;
    while (i < text.size()) {
      const char32_t c = text[i];
      if (c == U' ' || c == U'\t') {
        ++i;
        continue;
      }
      if (c == U'#') break;
      Token t;
      t.column = static_cast<uint32_t>(i + 1);
      if (c == U'"') {
        t.quoted = true;
        ++i;
        bool closed = false;
        while (i < text.size()) {
          if (text[i] == U'\\' && i + 1 < text.size()) {
            t.text.push_back(text[i + 1]);
            i += 2;
            continue;
          }
          if (text[i] == U'"') {
            closed = true;
            ++i;
            break;
          }
          t.text.push_back(text[i++]);
        }
        if (!closed) {
          error({line_, t.column}, "syntax", "unterminated string");
          abandon_block();
          return false;
        }
      } else {
        while (i < text.size() && text[i] != U' ' && text[i] != U'\t' && text[i] != U'"') t.text.push_back(text[i++]);
      }
      tokens.push_back(std::move(t));
    }
    return true;
  }

  SourceLocation at(const Token& t) const { return {line_, t.column}; }

  void handle(const std::vector<Token>& tokens) {
    const std::u32string& keyword = tokens[0].quoted ? std::u32string() : tokens[0].text;
    if (state_ == State::skipping) {
      if (keyword != U"lemma") return;
      state_ = State::top;
    }
    switch (state_) {
      case State::top:
        if (keyword == U"lemma") return begin_lemma(tokens);
        break;
      case State::lemma:
        if (keyword == U"lexeme") return begin_lexeme(tokens);
        if (keyword == U"end") return end_lemma(tokens);
        if (keyword == U"lemma") {
          error(at(tokens[0]), "syntax", "missing 'end' before the next lemma");
          return begin_lemma(tokens);
        }
        break;
      case State::lexeme:
        if (keyword == U"prefix") return morpheme_line(tokens, MorphemeKind::prefix);
        if (keyword == U"stem") return morpheme_line(tokens, MorphemeKind::stem);
        if (keyword == U"infix") return morpheme_line(tokens, MorphemeKind::infix);
        if (keyword == U"infl") return infl_line(tokens);
        if (keyword == U"sense") return sense_line(tokens);
        if (keyword == U"end") return end_lexeme(tokens);
        if (keyword == U"lemma") {
          error(at(tokens[0]), "syntax", "missing 'end' before the next lemma");
          return begin_lemma(tokens);
        }
        break;
      case State::skipping:
        break;
    }
    error(at(tokens[0]), "syntax", "unexpected '" + to_utf8(tokens[0].text) + "'");
    abandon_block();
  }

  void begin_lemma(const std::vector<Token>& tokens) {
    lemma_ = Lemma{};
    locations_ = LemmaLocations{};
    lemma_ok_ = true;
    state_ = State::lemma;
    if (tokens.size() != 2 || tokens[1].quoted) {
      error(at(tokens[0]), "syntax", "expected 'lemma <headword>'");
      abandon_block();
      return;
    }
    if (classify(tokens[1].text) != TokenClass::greek_word) {
      error(at(tokens[1]), "bad-letter", "headword must be a Greek word");
    }
    lemma_.headword = tokens[1].text;
    locations_.headword = at(tokens[1]);
  }

  void end_lemma(const std::vector<Token>& tokens) {
    if (tokens.size() != 1) error(at(tokens[1]), "syntax", "unexpected text after 'end'");
    if (lemma_.lexemes.empty())
      error(locations_.headword, "empty-lemma", "lemma has no lexeme");
    if (lemma_ok_) {
      result_.document.lemmas.push_back(std::move(lemma_));
      result_.document.locations.push_back(std::move(locations_));
    }
    state_ = State::top;
  }

  void begin_lexeme(const std::vector<Token>& tokens) {
    state_ = State::lexeme;
    lemma_.lexemes.emplace_back();
    locations_.lexemes.emplace_back();
    Lexeme& lx = lemma_.lexemes.back();
    if (tokens.size() < 2 || tokens[1].quoted) {
      error(at(tokens[0]), "syntax", "expected 'lexeme <name> [pos=<tag>] [keep-stress]'");
      return;
    }
    lx.name = to_utf8(tokens[1].text);
    locations_.lexemes.back().name = at(tokens[1]);
    for (size_t i = 2; i < tokens.size(); ++i) {
      const std::u32string& opt = tokens[i].text;
      if (opt == U"keep-stress" && !lx.keep_stress) {
        lx.keep_stress = true;
      } else if (opt.starts_with(U"pos=") && opt.size() > 4 && lx.pos.empty()) {
        lx.pos = to_utf8(opt.substr(4));
      } else {
        error(at(tokens[i]), "syntax", "unknown or repeated lexeme option '" + to_utf8(opt) + "'");
      }
    }
  }

  void end_lexeme(const std::vector<Token>& tokens) {
    if (tokens.size() != 1) error(at(tokens[1]), "syntax", "unexpected text after 'end'");
    const Lexeme& lx = lemma_.lexemes.back();
    const auto& where = locations_.lexemes.back().name;
    const bool has_stem = std::any_of(lx.morphology.lexical.begin(), lx.morphology.lexical.end(),
                                      [](const Morpheme& m) { return m.kind == MorphemeKind::stem; });
    if (!has_stem) error(where, "missing-stem", "lexeme '" + lx.name + "' has no stem");
    if (lx.morphology.inflections.empty())
      error(where, "missing-inflection", "lexeme '" + lx.name + "' has no inflection");
    state_ = State::lemma;
  }

  void morpheme_line(const std::vector<Token>& tokens, MorphemeKind kind) {
    if (tokens.size() != 2 || tokens[1].quoted) {
      error(at(tokens[0]), "syntax",
            "expected '" + std::string(to_string(kind)) + " <hyphenated letters>'");
      return;
    }
    Morpheme m;
    MorphemeSpellingError e;
    if (!parse_morpheme_spelling(tokens[1].text, kind, m, e)) {
      error({line_, tokens[1].column + static_cast<uint32_t>(e.offset)}, e.code, e.message);
      return;
    }
    lemma_.lexemes.back().morphology.lexical.push_back(std::move(m));
    locations_.lexemes.back().morphemes.push_back(at(tokens[1]));
  }

  void infl_line(const std::vector<Token>& tokens) {
    if (tokens.size() < 2) {
      error(at(tokens[0]), "syntax", "expected 'infl <suffix>@<F|P|A>[/<tags>] ...'");
      return;
    }
    for (size_t i = 1; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      const auto at_sign = t.text.find(U'@');
      if (t.quoted || at_sign == std::u32string::npos) {
        error(at(t), "syntax", "inflection needs '@F', '@P' or '@A'");
        continue;
      }
      const auto slash = t.text.find(U'/', at_sign);
      const std::u32string stress = t.text.substr(at_sign + 1, slash == std::u32string::npos ? std::u32string::npos : slash - at_sign - 1);
      const SourceLocation stress_at{line_, t.column + static_cast<uint32_t>(at_sign) + 1};
      InflectionSlot slot;
      if (stress == U"F")
        slot.stress = Stress::final;
      else if (stress == U"P")
        slot.stress = Stress::penultimate;
      else if (stress == U"A")
        slot.stress = Stress::antepenultimate;
      else {
        error(stress_at, "syntax", "stress tag must be F, P or A, got '" + to_utf8(stress) + "'");
        continue;
      }
      if (slash != std::u32string::npos) {
        slot.tags = to_utf8(t.text.substr(slash + 1));
        if (slot.tags.empty()) {
          error({line_, t.column + static_cast<uint32_t>(slash)}, "syntax", "empty tag list after '/'");
          continue;
        }
      }
      const std::u32string suffix = t.text.substr(0, at_sign);
      if (suffix != U"0") {
        MorphemeSpellingError e;
        if (!parse_morpheme_spelling(suffix, MorphemeKind::inflection, slot.suffix, e)) {
          error({line_, t.column + static_cast<uint32_t>(e.offset)}, e.code, e.message);
          continue;
        }
      }
      lemma_.lexemes.back().morphology.inflections.push_back(std::move(slot));
      locations_.lexemes.back().slots.push_back(at(t));
    }
  }

  void sense_line(const std::vector<Token>& tokens) {
    if (tokens.size() < 2 || !tokens[1].quoted) {
      error(at(tokens[0]), "syntax", "expected 'sense \"<gloss>\" [syn=|ant=|hypo=|rel=<headword>]...'");
      return;
    }
    Sense sense;
    sense.gloss = to_utf8(tokens[1].text);
    std::vector<SourceLocation> refs;
    for (size_t i = 2; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      const auto eq = t.text.find(U'=');
      std::optional<Relation> relation;
      if (!t.quoted && eq != std::u32string::npos) {
        const auto key = t.text.substr(0, eq);
        for (Relation r : {Relation::synonym, Relation::antonym, Relation::hyponym, Relation::related})
          if (to_utf8(key) == relation_key(r)) relation = r;
      }
      if (!relation) {
        error(at(t), "syntax", "expected syn=, ant=, hypo= or rel=<headword>");
        continue;
      }
      const auto headword = t.text.substr(eq + 1);
      if (classify(headword) != TokenClass::greek_word) {
        error({line_, t.column + static_cast<uint32_t>(eq) + 1}, "bad-letter",
              "reference must name a Greek headword");
        continue;
      }
      sense.refs.push_back({*relation, headword});
      refs.push_back({line_, t.column + static_cast<uint32_t>(eq) + 1});
    }
    lemma_.lexemes.back().senses.push_back(std::move(sense));
    locations_.lexemes.back().sense_refs.push_back(std::move(refs));
  }

  std::string_view source_;
  ParseResult result_;
  State state_ = State::top;
  uint32_t line_ = 0;
  Lemma lemma_;
  LemmaLocations locations_;
  bool lemma_ok_ = true;
};

SourceLocation location_or_default(const std::vector<SourceLocation>& v, size_t i) {
  return i < v.size() ? v[i] : SourceLocation{};
}

}  // namespace

ParseResult parse_ldl(std::string_view source, std::string source_name) {
  return Parser(source, std::move(source_name)).run();
}

std::vector<Diagnostic> validate(const LdlDocument& doc) {
  std::vector<Diagnostic> out;
  auto report = [&](Severity s, SourceLocation at, std::string code, std::string message) {
    out.push_back({s, at, std::move(code), std::move(message)});
  };
  auto lemma_loc = [&](size_t i) {
    return i < doc.locations.size() ? doc.locations[i] : LemmaLocations{};
  };

  std::map<std::u32string, size_t> headwords;
  for (size_t i = 0; i < doc.lemmas.size(); ++i) {
    const auto folded = fold_case(doc.lemmas[i].headword);
    if (!headwords.emplace(folded, i).second)
      report(Severity::error, lemma_loc(i).headword, "duplicate-headword",
             "headword '" + to_utf8(doc.lemmas[i].headword) + "' is already defined");
  }

  struct KeyOwner {
    size_t lemma;
    BreakOffsets pattern;
  };
  std::map<std::u32string, KeyOwner> keys;
  std::set<std::u32string> homographs_reported;

  for (size_t i = 0; i < doc.lemmas.size(); ++i) {
    const Lemma& lemma = doc.lemmas[i];
    const LemmaLocations loc = lemma_loc(i);
    std::set<std::string> names;
    for (size_t j = 0; j < lemma.lexemes.size(); ++j) {
      const Lexeme& lx = lemma.lexemes[j];
      const LexemeLocations lxloc = j < loc.lexemes.size() ? loc.lexemes[j] : LexemeLocations{};
      if (!names.insert(lx.name).second)
        report(Severity::error, lxloc.name, "duplicate-lexeme",
               "lexeme name '" + lx.name + "' repeated in lemma '" + to_utf8(lemma.headword) + "'");

      for (size_t s = 0; s < lx.senses.size(); ++s) {
        for (size_t r = 0; r < lx.senses[s].refs.size(); ++r) {
          const auto& ref = lx.senses[s].refs[r];
          if (headwords.contains(fold_case(ref.headword))) continue;
          const SourceLocation where =
              s < lxloc.sense_refs.size() ? location_or_default(lxloc.sense_refs[s], r) : SourceLocation{};
          report(Severity::error, where, "unresolved-reference",
                 "unresolved reference to headword '" + to_utf8(ref.headword) + "'");
        }
      }

      std::set<std::pair<std::u32string, std::string>> seen;
      for (size_t k = 0; k < lx.morphology.inflections.size(); ++k) {
        const SourceLocation where = location_or_default(lxloc.slots, k);
        Lexeme single = lx;
        single.morphology.inflections = {lx.morphology.inflections[k]};
        std::vector<WordFormEntry> forms;
        try {
          forms = generate_word_forms(single, {static_cast<uint32_t>(i), static_cast<uint32_t>(j)});
        } catch (const StressUnplaceable& e) {
          report(Severity::error, where, "stress-unplaceable", e.what());
          continue;
        } catch (const NoNucleus& e) {
          report(Severity::error, where, "no-nucleus", e.what());
          continue;
        }
        const WordFormEntry& f = forms.front();
        if (!seen.emplace(f.surface, f.tags).second)
          report(Severity::error, where, "duplicate-form",
                 "form '" + to_utf8(f.surface) + "' with tags '" + f.tags + "' is generated twice");

        auto [it, inserted] = keys.try_emplace(f.destressed_key, KeyOwner{i, f.hyphen_pattern});
        if (inserted) continue;
        if (it->second.pattern != f.hyphen_pattern)
          report(Severity::error, where, "hyphen-conflict",
                 "'" + to_utf8(f.surface) + "' is hyphenated " +
                     to_utf8(hyphenated(f.destressed_key, f.hyphen_pattern)) + " here but " +
                     to_utf8(hyphenated(f.destressed_key, it->second.pattern)) + " elsewhere");
        if (it->second.lemma != i && homographs_reported.insert(f.destressed_key).second)
          report(Severity::warning, where, "homograph",
                 "'" + to_utf8(f.surface) + "' shares its unstressed spelling with a form of '" +
                     to_utf8(doc.lemmas[it->second.lemma].headword) + "'");
      }
    }
  }
  return out;
}

std::string print_ldl(const LdlDocument& doc) {
  std::ostringstream out;
  for (const auto& lemma : doc.lemmas) {
    out << "lemma " << to_utf8(lemma.headword) << '\n';
    for (const auto& lx : lemma.lexemes) {
      out << "  lexeme " << lx.name;
      if (!lx.pos.empty()) out << " pos=" << lx.pos;
      if (lx.keep_stress) out << " keep-stress";
      out << '\n';
      for (const auto& m : lx.morphology.lexical)
        out << "    " << to_string(m.kind) << ' ' << to_utf8(morpheme_spelling(m)) << '\n';
      for (const auto& slot : lx.morphology.inflections) {
        out << "    infl "
            << (slot.suffix.letters.empty() ? std::string("0") : to_utf8(morpheme_spelling(slot.suffix)))
            << '@' << stress_tag(slot.stress);
        if (!slot.tags.empty()) out << '/' << slot.tags;
        out << '\n';
      }
      for (const auto& sense : lx.senses) {
        out << "    sense \"";
        for (char c : sense.gloss) {
          if (c == '"' || c == '\\') out << '\\';
          out << c;
        }
        out << '"';
        for (const auto& ref : sense.refs) out << ' ' << relation_key(ref.relation) << '=' << to_utf8(ref.headword);
        out << '\n';
      }
      out << "  end\n";
    }
    out << "end\n";
  }
  return out.str();
}

}  // namespace grlex
