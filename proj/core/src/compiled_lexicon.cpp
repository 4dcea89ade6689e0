#include "grlex/compiled_lexicon.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <ostream>
#include <set>

#include "binary_io.hpp"
#include "grlex/greek_text.hpp"
#include "grlex/speller.hpp"

namespace grlex {
namespace {

constexpr std::array<uint8_t, 4> kMagic{'G', 'L', 'E', 'X'};
constexpr size_t kHeaderSize = 8;
constexpr size_t kTableEntrySize = 16;

constexpr std::string_view kLemmaSection = "LEMS";
constexpr std::string_view kFormSection = "FORM";
constexpr std::string_view kTrieSection = "TRIE";
constexpr std::string_view kPhoneticSection = "PHON";
constexpr std::string_view kHyphenSection = "HYPH";

uint32_t checksum(std::span<const uint8_t> bytes) {
  return static_cast<uint32_t>(
      crc32(crc32(0L, Z_NULL, 0), bytes.data(), static_cast<uInt>(bytes.size())));
}

void put_offsets(detail::ByteWriter& w, const BreakOffsets& offsets) {
  w.varint(offsets.size());
  uint32_t previous = 0;
  for (auto o : offsets) {
    w.varint(o - previous);
    previous = o;
  }
}

BreakOffsets get_offsets(detail::ByteReader& r) {
  const size_t n = r.count(r.remaining());
  BreakOffsets out;
  out.reserve(n);
  uint64_t value = 0;
  for (size_t i = 0; i < n; ++i) {
    const uint64_t delta = r.varint();
    if (delta == 0 || value + delta > UINT32_MAX) r.fail("break offsets not ascending");
    value += delta;
    out.push_back(static_cast<uint32_t>(value));
  }
  return out;
}

template <typename E>
E get_enum(detail::ByteReader& r, uint8_t max) {
  const uint8_t v = r.u8();
  if (v > max) r.fail("enum value out of range");
  return static_cast<E>(v);
}

void put_morpheme(detail::ByteWriter& w, const Morpheme& m) {
  w.u8(static_cast<uint8_t>(m.kind));
  w.ustr(m.letters);
  put_offsets(w, m.hyphen_points);
}

Morpheme get_morpheme(detail::ByteReader& r) {
  Morpheme m;
  m.kind = get_enum<MorphemeKind>(r, 3);
  m.letters = r.ustr();
  m.hyphen_points = get_offsets(r);
  if (!m.hyphen_points.empty() && m.hyphen_points.back() >= m.letters.size())
    r.fail("morpheme hyphen point out of range");
  return m;
}

std::vector<uint8_t> encode_lemmas(const std::vector<Lemma>& lemmas) {
  detail::ByteWriter w;
  w.varint(lemmas.size());
  for (const auto& lemma : lemmas) {
    w.ustr(lemma.headword);
    w.varint(lemma.lexemes.size());
    for (const auto& lx : lemma.lexemes) {
      w.str(lx.name);
      w.str(lx.pos);
      w.u8(lx.keep_stress ? 1 : 0);
      w.varint(lx.morphology.lexical.size());
      for (const auto& m : lx.morphology.lexical) put_morpheme(w, m);
      w.varint(lx.morphology.inflections.size());
      for (const auto& slot : lx.morphology.inflections) {
        put_morpheme(w, slot.suffix);
        w.u8(static_cast<uint8_t>(slot.stress));
        w.str(slot.tags);
      }
      w.varint(lx.senses.size());
      for (const auto& sense : lx.senses) {
        w.str(sense.gloss);
        w.varint(sense.refs.size());
        for (const auto& ref : sense.refs) {
          w.u8(static_cast<uint8_t>(ref.relation));
          w.ustr(ref.headword);
        }
      }
    }
  }
  return std::move(w.bytes());
}

std::vector<Lemma> decode_lemmas(std::span<const uint8_t> bytes) {
  detail::ByteReader r(bytes, "lemma section");
  std::vector<Lemma> lemmas(r.count(bytes.size()));
  for (auto& lemma : lemmas) {
    lemma.headword = r.ustr();
    lemma.lexemes.resize(r.count(r.remaining()));
    for (auto& lx : lemma.lexemes) {
      lx.name = r.str();
      lx.pos = r.str();
      lx.keep_stress = r.u8() != 0;
      lx.morphology.lexical.resize(r.count(r.remaining()));
      for (auto& m : lx.morphology.lexical) m = get_morpheme(r);
      lx.morphology.inflections.resize(r.count(r.remaining()));
      for (auto& slot : lx.morphology.inflections) {
        slot.suffix = get_morpheme(r);
        slot.stress = get_enum<Stress>(r, 2);
        slot.tags = r.str();
      }
      lx.senses.resize(r.count(r.remaining()));
      for (auto& sense : lx.senses) {
        sense.gloss = r.str();
        sense.refs.resize(r.count(r.remaining()));
        for (auto& ref : sense.refs) {
          ref.relation = get_enum<Relation>(r, 3);
          ref.headword = r.ustr();
        }
      }
    }
  }
  if (!r.done()) r.fail("trailing bytes");
  return lemmas;
}

std::vector<uint8_t> encode_forms(const std::vector<WordFormEntry>& forms) {
  detail::ByteWriter w;
  w.varint(forms.size());
  for (const auto& f : forms) {
    w.ustr(f.surface);
    w.u8(static_cast<uint8_t>(f.stress));
    w.str(f.tags);
    w.varint(f.lexeme_id.lemma);
    w.varint(f.lexeme_id.lexeme);
    w.varint(f.segmentation.size());
    for (const auto& s : f.segmentation) {
      w.u8(static_cast<uint8_t>(s.kind));
      w.ustr(s.letters);
    }
    put_offsets(w, f.hyphen_pattern);
  }
  return std::move(w.bytes());
}

std::vector<WordFormEntry> decode_forms(std::span<const uint8_t> bytes,
                                        const std::vector<Lemma>& lemmas) {
  detail::ByteReader r(bytes, "form section");
  std::vector<WordFormEntry> forms(r.count(bytes.size()));
  for (auto& f : forms) {
    f.surface = r.ustr();
    f.stress = get_enum<Stress>(r, 2);
    f.tags = r.str();
    f.lexeme_id.lemma = static_cast<uint32_t>(r.count(UINT32_MAX));
    f.lexeme_id.lexeme = static_cast<uint32_t>(r.count(UINT32_MAX));
    if (f.lexeme_id.lemma >= lemmas.size() ||
        f.lexeme_id.lexeme >= lemmas[f.lexeme_id.lemma].lexemes.size())
      r.fail("form refers to a missing lexeme");
    f.segmentation.resize(r.count(r.remaining()));
    std::u32string letters;
    for (auto& s : f.segmentation) {
      s.kind = get_enum<MorphemeKind>(r, 3);
      s.letters = r.ustr();
      letters += s.letters;
    }
    f.hyphen_pattern = get_offsets(r);
    f.destressed_key = make_key(f.surface);
    if (f.destressed_key != letters) r.fail("form surface disagrees with its segmentation");
    if (!f.hyphen_pattern.empty() && f.hyphen_pattern.back() >= letters.size())
      r.fail("form hyphen pattern out of range");
  }
  if (!r.done()) r.fail("trailing bytes");
  return forms;
}

std::vector<uint8_t> encode_phonetic(const PhoneticIndex& index) {
  detail::ByteWriter w;
  w.varint(index.size());
  for (const auto& [key, ids] : index) {
    w.str(key);
    w.varint(ids.size());
    uint32_t previous = 0;
    for (auto id : ids) {
      w.varint(id - previous);
      previous = id;
    }
  }
  return std::move(w.bytes());
}

PhoneticIndex decode_phonetic(std::span<const uint8_t> bytes, size_t form_count) {
  detail::ByteReader r(bytes, "phonetic section");
  PhoneticIndex index;
  const size_t n = r.count(bytes.size());
  for (size_t i = 0; i < n; ++i) {
    std::string key = r.str();
    std::vector<uint32_t> ids(r.count(r.remaining()));
    uint64_t id = 0;
    for (size_t k = 0; k < ids.size(); ++k) {
      const uint64_t delta = r.varint();
      if (k > 0 && delta == 0) r.fail("phonetic ids not ascending");
      id += delta;
      if (id >= form_count) r.fail("phonetic id out of range");
      ids[k] = static_cast<uint32_t>(id);
    }
    if (!index.emplace(std::move(key), std::move(ids)).second) r.fail("duplicate phonetic key");
  }
  if (!r.done()) r.fail("trailing bytes");
  return index;
}

std::vector<uint8_t> encode_hyphen_rules(const HyphenRuleSet& rules) {
  detail::ByteWriter w;
  w.varint(rules.onsets().size());
  for (const auto& onset : rules.onsets()) w.ustr(onset);
  w.varint(rules.vowel_combinations().size());
  for (const auto& v : rules.vowel_combinations()) {
    w.ustr(v.pair);
    w.u8(static_cast<uint8_t>(v.decision));
    w.u8(static_cast<uint8_t>(v.fallback));
  }
  w.varint(rules.exceptions().size());
  for (const auto& [key, breaks] : rules.exceptions()) {
    w.ustr(key);
    put_offsets(w, breaks);
  }
  return std::move(w.bytes());
}

HyphenRuleSet decode_hyphen_rules(std::span<const uint8_t> bytes) {
  detail::ByteReader r(bytes, "hyphenation section");
  std::set<std::u32string> onsets;
  for (size_t n = r.count(bytes.size()); n > 0; --n) onsets.insert(r.ustr());
  std::vector<VowelCombination> vowels(r.count(bytes.size()));
  for (auto& v : vowels) {
    v.pair = r.ustr();
    if (v.pair.size() != 2) r.fail("vowel combination must be a pair");
    v.decision = get_enum<VowelJoin>(r, 2);
    v.fallback = get_enum<VowelJoin>(r, 1);
  }
  ExceptionTable exceptions;
  for (size_t n = r.count(bytes.size()); n > 0; --n) {
    auto key = r.ustr();
    auto breaks = get_offsets(r);
    if (!breaks.empty() && breaks.back() >= key.size()) r.fail("exception pattern out of range");
    exceptions.emplace(std::move(key), std::move(breaks));
  }
  if (!r.done()) r.fail("trailing bytes");
  return HyphenRuleSet(std::move(onsets), std::move(vowels), std::move(exceptions));
}

}  // namespace

CompileError::CompileError(std::vector<Diagnostic> diagnostics)
    : Error("lexicon has " +
            std::to_string(std::count_if(diagnostics.begin(), diagnostics.end(),
                                         [](const Diagnostic& d) { return d.severity == Severity::error; })) +
            " error(s)"),
      diagnostics_(std::move(diagnostics)) {}

CompiledLexicon::CompiledLexicon() = default;

CompiledLexicon::CompiledLexicon(std::vector<Lemma> lemmas, std::vector<WordFormEntry> forms,
                                 HyphenRuleSet hyphen_rules)
    : lemmas_(std::move(lemmas)), forms_(std::move(forms)), hyphen_rules_(std::move(hyphen_rules)) {
  std::map<std::u32string, std::set<std::u32string>> surfaces;
  for (const auto& f : forms_) surfaces[f.destressed_key].insert(f.surface);

  std::vector<std::pair<std::u32string, PayloadRecord>> pairs;
  pairs.reserve(forms_.size());
  for (size_t id = 0; id < forms_.size(); ++id) {
    const auto& f = forms_[id];
    uint8_t flags = 0;
    const auto& lx = lemmas_.at(f.lexeme_id.lemma).lexemes.at(f.lexeme_id.lexeme);
    if (lx.keep_stress) flags |= payload_flags::keep_stress;
    if (surfaces[f.destressed_key].size() > 1) flags |= payload_flags::homograph;
    pairs.emplace_back(f.destressed_key, PayloadRecord{static_cast<uint32_t>(id), f.stress, flags});
    phonetic_[phonetic_key(f.destressed_key)].push_back(static_cast<uint32_t>(id));
  }
  trie_ = CompressedTrie::build(std::move(pairs));
}

std::vector<const WordFormEntry*> CompiledLexicon::forms_for_key(std::u32string_view key) const {
  std::vector<const WordFormEntry*> out;
  for (const auto& p : trie_.lookup(key)) out.push_back(&forms_[p.form_id]);
  return out;
}

std::span<const uint32_t> CompiledLexicon::phonetic_matches(std::string_view phonetic_key) const {
  auto it = phonetic_.find(std::string(phonetic_key));
  if (it == phonetic_.end()) return {};
  return it->second;
}

int64_t CompiledLexicon::find_lemma(std::u32string_view headword) const {
  const auto folded = fold_case(to_nfc(headword));
  for (size_t i = 0; i < lemmas_.size(); ++i)
    if (fold_case(lemmas_[i].headword) == folded) return static_cast<int64_t>(i);
  // Unaccented input: accept it when exactly one headword matches.
  const auto key = destress(folded);
  int64_t found = -1;
  for (size_t i = 0; i < lemmas_.size(); ++i) {
    if (make_key(lemmas_[i].headword) != key) continue;
    if (found >= 0) return -1;
    found = static_cast<int64_t>(i);
  }
  return found;
}

std::vector<uint32_t> CompiledLexicon::forms_of_lemma(size_t lemma_index) const {
  std::vector<uint32_t> out;
  for (size_t id = 0; id < forms_.size(); ++id)
    if (forms_[id].lexeme_id.lemma == lemma_index) out.push_back(static_cast<uint32_t>(id));
  return out;
}

CompiledLexicon compile(const LdlDocument& doc) {
  auto diagnostics = validate(doc);
  if (has_errors(diagnostics)) throw CompileError(std::move(diagnostics));

  std::vector<WordFormEntry> forms;
  const auto& handcrafted = HyphenRuleSet::handcrafted();
  for (size_t i = 0; i < doc.lemmas.size(); ++i) {
    const auto& lemma = doc.lemmas[i];
    for (size_t j = 0; j < lemma.lexemes.size(); ++j) {
      auto generated = generate_word_forms(
          lemma.lexemes[j], {static_cast<uint32_t>(i), static_cast<uint32_t>(j)}, handcrafted);
      std::move(generated.begin(), generated.end(), std::back_inserter(forms));
    }
  }
  auto derived = derive_vowel_rules(forms, handcrafted);
  return CompiledLexicon(doc.lemmas, std::move(forms), std::move(derived.rules));
}

std::vector<uint8_t> write_binary(const CompiledLexicon& lexicon) {
  const std::vector<std::pair<std::string_view, std::vector<uint8_t>>> sections = {
      {kLemmaSection, encode_lemmas(lexicon.lemmas())},
      {kFormSection, encode_forms(lexicon.forms())},
      {kTrieSection, lexicon.trie().serialize()},
      {kPhoneticSection, encode_phonetic(lexicon.phonetic_index())},
      {kHyphenSection, encode_hyphen_rules(lexicon.hyphen_rules())},
  };

  detail::ByteWriter w;
  w.raw(kMagic);
  w.u16(CompiledLexicon::kFormatVersion);
  w.u16(static_cast<uint16_t>(sections.size()));
  size_t offset = kHeaderSize + kTableEntrySize * sections.size();
  for (const auto& [tag, body] : sections) {
    w.raw(tag);
    w.u32(static_cast<uint32_t>(offset));
    w.u32(static_cast<uint32_t>(body.size()));
    w.u32(checksum(body));
    offset += body.size();
  }
  for (const auto& [tag, body] : sections) w.raw(body);
  return std::move(w.bytes());
}

void write_binary(const CompiledLexicon& lexicon, std::ostream& sink) {
  const auto bytes = write_binary(lexicon);
  sink.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::vector<SectionInfo> read_section_table(std::span<const uint8_t> bytes) {
  detail::ByteReader r(bytes, "GLEX header");
  auto magic = r.raw(4);
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) r.fail("bad magic");
  const uint16_t version = r.u16();
  if (version != CompiledLexicon::kFormatVersion)
    throw CorruptFile("GLEX header: unsupported format version " + std::to_string(version));
  const uint16_t count = r.u16();
  std::vector<SectionInfo> table(count);
  for (auto& s : table) {
    auto tag = r.raw(4);
    s.tag.assign(tag.begin(), tag.end());
    s.offset = r.u32();
    s.length = r.u32();
    s.crc32 = r.u32();
    if (static_cast<uint64_t>(s.offset) + s.length > bytes.size() ||
        s.offset < kHeaderSize + kTableEntrySize * count)
      r.fail("section '" + s.tag + "' lies outside the file");
  }
  return table;
}

CompiledLexicon read_binary(std::span<const uint8_t> bytes) {
  const auto table = read_section_table(bytes);
  auto section = [&](std::string_view tag) {
    for (const auto& s : table) {
      if (s.tag != tag) continue;
      auto body = bytes.subspan(s.offset, s.length);
      if (checksum(body) != s.crc32)
        throw CorruptFile("GLEX section '" + s.tag + "' fails its checksum");
      return body;
    }
    throw CorruptFile("GLEX: missing section '" + std::string(tag) + "'");
  };

  CompiledLexicon out;
  out.lemmas_ = decode_lemmas(section(kLemmaSection));
  out.forms_ = decode_forms(section(kFormSection), out.lemmas_);
  out.trie_ = CompressedTrie::deserialize(section(kTrieSection));
  out.phonetic_ = decode_phonetic(section(kPhoneticSection), out.forms_.size());
  out.hyphen_rules_ = decode_hyphen_rules(section(kHyphenSection));

  // Every form must be indexed exactly once, under its own key.
  std::vector<int> seen(out.forms_.size(), 0);
  for (auto entry : out.trie_.walk_prefix(U"")) {
    for (const auto& p : entry.payloads) {
      if (p.form_id >= out.forms_.size() || out.forms_[p.form_id].destressed_key != entry.key)
        throw CorruptFile("GLEX: trie payload does not match the form table");
      ++seen[p.form_id];
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int n) { return n != 1; }))
    throw CorruptFile("GLEX: form table and trie disagree");
  return out;
}

CompiledLexicon read_binary(std::istream& source) {
  std::vector<uint8_t> bytes{std::istreambuf_iterator<char>(source), std::istreambuf_iterator<char>()};
  return read_binary(bytes);
}

CompiledLexicon read_binary_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_binary(in);
}

}  // namespace grlex
