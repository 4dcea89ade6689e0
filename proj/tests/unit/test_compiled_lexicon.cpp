#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "test_support.hpp"

using namespace grlex;
using grlex::test::S;
using grlex::test::U;

namespace {

constexpr std::string_view kKefali =
    "lemma κεφάλι\n"
    "  lexeme noun pos=noun\n"
    "    stem κε-φαλ\n"
    "    infl ι@P/nom.sg+acc.sg+voc.sg ιου@F/gen.sg\n"
    "    infl ια@P/nom.pl+acc.pl+voc.pl ιων@F/gen.pl\n"
    "  end\n"
    "end\n";

void check_same_answers(const CompiledLexicon& a, const CompiledLexicon& b) {
  CHECK(a.forms() == b.forms());
  CHECK(a.lemmas() == b.lemmas());
  for (const auto& key : test::all_keys(a)) {
    const auto x = a.lookup(key);
    const auto y = b.lookup(key);
    CHECK(std::vector(x.begin(), x.end()) == std::vector(y.begin(), y.end()));
  }
}

}  // namespace

TEST_CASE("κεφάλι paradigm compiles to four forms with four keys") {
  const CompiledLexicon lex = test::compile_text(kKefali);
  REQUIRE(lex.forms().size() == 4);
  std::set<std::u32string> keys;
  for (const auto& f : lex.forms()) keys.insert(f.destressed_key);
  CHECK(keys == std::set<std::u32string>{U("κεφαλι"), U("κεφαλιου"), U("κεφαλια"), U("κεφαλιων")});
  CHECK(lex.trie().key_count() == 4);
  CHECK(lex.find_lemma(U("ΚΕΦΑΛΙ")) == 0);
  CHECK(lex.find_lemma(U("κεφαλι")) == 0);
  CHECK(lex.forms_of_lemma(0) == std::vector<uint32_t>{0, 1, 2, 3});
}

TEST_CASE("empty document") {
  const CompiledLexicon lex = compile(LdlDocument{});
  CHECK(lex.forms().empty());
  CHECK(lex.trie().key_count() == 0);
  const auto bytes = write_binary(lex);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "GLEX");
  const CompiledLexicon back = read_binary(bytes);
  CHECK(back.forms().empty());
  CHECK(back == lex);
}

TEST_CASE("compile refuses documents with errors") {
  ParseResult r = parse_ldl("lemma άγχος\n  lexeme a\n    stem αγχ\n    infl ος@A\n  end\nend\n");
  REQUIRE(r.ok());
  try {
    compile(r.document);
    FAIL("expected CompileError");
  } catch (const CompileError& e) {
    REQUIRE(!e.diagnostics().empty());
    CHECK(e.diagnostics()[0].code == "stress-unplaceable");
  }
}

TEST_CASE("sample lexicon: form count equals slots written in the source") {
  const std::string source = test::read_text(GRLEX_SAMPLE_LEXICON);
  const auto& lex = test::sample_lexicon();
  CHECK(lex.forms().size() == test::count_slots_in_source(source));
  CHECK(lex.lemmas().size() >= 120);
  CHECK(lex.forms().size() >= 1000);
}

TEST_CASE("sample lexicon: every form id sits exactly once under its own key") {
  const auto& lex = test::sample_lexicon();
  std::map<uint32_t, size_t> seen;
  for (const auto& entry : lex.trie().walk_prefix(U"")) {
    for (const auto& p : entry.payloads) {
      ++seen[p.form_id];
      REQUIRE(p.form_id < lex.forms().size());
      CHECK(lex.forms()[p.form_id].destressed_key == entry.key);
      CHECK(lex.forms()[p.form_id].stress == p.stress);
    }
  }
  CHECK(seen.size() == lex.forms().size());
  for (const auto& [id, n] : seen) CHECK(n == 1);
}

TEST_CASE("sample lexicon: sense references resolve") {
  const auto& lex = test::sample_lexicon();
  size_t refs = 0;
  for (const auto& lemma : lex.lemmas())
    for (const auto& lx : lemma.lexemes)
      for (const auto& sense : lx.senses)
        for (const auto& ref : sense.refs) {
          ++refs;
          CHECK(lex.find_lemma(ref.headword) >= 0);
        }
  CHECK(refs > 0);
}

TEST_CASE("phonetic index covers every form") {
  const auto& lex = test::sample_lexicon();
  for (uint32_t id = 0; id < lex.forms().size(); ++id) {
    const auto ids = lex.phonetic_matches(phonetic_key(lex.forms()[id].destressed_key));
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }
}

TEST_CASE("binary round trip of the sample lexicon") {
  const auto& lex = test::sample_lexicon();
  const auto bytes = write_binary(lex);
  const CompiledLexicon back = read_binary(bytes);
  CHECK(back == lex);
  check_same_answers(lex, back);
  CHECK(back.hyphen_rules() == lex.hyphen_rules());

  std::stringstream stream;
  write_binary(lex, stream);
  CHECK(stream.str() == std::string(bytes.begin(), bytes.end()));
  CHECK(read_binary(stream) == lex);

  const auto table = read_section_table(bytes);
  std::vector<std::string> tags;
  for (const auto& s : table) tags.push_back(s.tag);
  CHECK(tags == std::vector<std::string>{"LEMS", "FORM", "TRIE", "PHON", "HYPH"});
}

TEST_CASE("compilation is deterministic") {
  const std::string source = test::read_text(GRLEX_SAMPLE_LEXICON);
  const auto a = write_binary(compile(parse_ldl(source).document));
  const auto b = write_binary(compile(parse_ldl(source).document));
  CHECK(a == b);
}

TEST_CASE("corrupt images are rejected") {
  const auto bytes = write_binary(test::compile_text(kKefali));

  SUBCASE("truncated") {
    for (size_t n : {size_t{0}, size_t{3}, size_t{8}, bytes.size() / 2, bytes.size() - 1})
      CHECK_THROWS_AS(read_binary(std::span(bytes.data(), n)), CorruptFile);
  }
  SUBCASE("bad magic") {
    auto copy = bytes;
    copy[0] = 'X';
    CHECK_THROWS_AS(read_binary(copy), CorruptFile);
  }
  SUBCASE("unknown version") {
    auto copy = bytes;
    copy[4] = 99;
    CHECK_THROWS_AS(read_binary(copy), CorruptFile);
  }
  SUBCASE("flipped body byte") {
    auto copy = bytes;
    copy.back() ^= 0x40;
    CHECK_THROWS_AS(read_binary(copy), CorruptFile);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_binary_file("/nonexistent/x.glex"), Error);
  }
}
