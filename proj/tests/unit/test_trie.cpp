#include <doctest.h>

#include <map>
#include <random>

#include "test_support.hpp"

using namespace grlex;
using grlex::test::S;
using grlex::test::U;

namespace {

using Pairs = std::vector<std::pair<std::u32string, PayloadRecord>>;
using Oracle = std::map<std::u32string, std::vector<PayloadRecord>>;

PayloadRecord rec(uint32_t id) { return {id, Stress::penultimate, 0}; }

std::vector<PayloadRecord> ids(std::span<const PayloadRecord> p) { return {p.begin(), p.end()}; }

// Structural check written against the public node vector only.
void check_structure(const CompressedTrie& t) {
  const auto& nodes = t.nodes();
  REQUIRE(!nodes.empty());
  CHECK(t.structure_violation().empty());
  std::vector<int> parents(nodes.size(), 0);
  for (size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    if (i != 0) {
      CHECK(!n.label.empty());
      CHECK((!n.payloads.empty() || n.children.size() >= 2));
    }
    for (size_t c = 0; c < n.children.size(); ++c) {
      ++parents[n.children[c]];
      if (c > 0) CHECK(nodes[n.children[c - 1]].label[0] < nodes[n.children[c]].label[0]);
    }
    CHECK(std::is_sorted(n.payloads.begin(), n.payloads.end()));
    for (char32_t ch : n.label) CHECK(make_key(std::u32string(1, ch)) == std::u32string(1, ch));
  }
  CHECK(parents[0] == 0);
  for (size_t i = 1; i < nodes.size(); ++i) CHECK(parents[i] == 1);
}

Pairs random_pairs(std::mt19937& rng, size_t n, std::u32string_view alphabet, Oracle& oracle) {
  std::uniform_int_distribution<size_t> len(1, 7), pick(0, alphabet.size() - 1);
  Pairs pairs;
  for (uint32_t i = 0; i < n; ++i) {
    std::u32string k;
    for (size_t l = len(rng); l > 0; --l) k.push_back(alphabet[pick(rng)]);
    pairs.emplace_back(k, rec(i));
    oracle[k].push_back(rec(i));
  }
  for (auto& [k, v] : oracle) std::sort(v.begin(), v.end());
  return pairs;
}

}  // namespace

TEST_CASE("single key") {
  const auto t = CompressedTrie::build({{U("κεφαλι"), rec(1)}});
  CHECK(ids(t.lookup(U("κεφαλι"))) == std::vector{rec(1)});
  CHECK(t.lookup(U("κεφαλ")).empty());
  CHECK(t.lookup(U("")).empty());
  CHECK(CompressedTrie::deserialize(t.serialize()) == t);
  check_structure(t);
}

TEST_CASE("κεφάλι paradigm") {
  const std::vector<std::u32string> keys = {U("κεφαλι"), U("κεφαλιου"), U("κεφαλια"), U("κεφαλιων")};
  Pairs pairs;
  for (uint32_t i = 0; i < keys.size(); ++i) pairs.emplace_back(keys[i], rec(i));
  const auto t = CompressedTrie::build(pairs);
  for (uint32_t i = 0; i < keys.size(); ++i) CHECK(ids(t.lookup(keys[i])) == std::vector{rec(i)});
  check_structure(t);

  std::vector<std::u32string> walked;
  for (const auto& e : t.walk_prefix(U("κεφαλ"))) walked.push_back(e.key);
  auto sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  CHECK(walked == sorted);

  size_t walked_all = 0;
  for (const auto& e : t.walk_prefix(U""))
    walked_all += !e.key.empty();
  CHECK(walked_all == 4);
  CHECK(t.walk_prefix(U("ζζζ")).begin() == std::default_sentinel);

  // serialized index vs the bare keys concatenated
  size_t raw = 0;
  for (const auto& k : keys) raw += to_utf8(k).size();
  CHECK(t.serialize().size() < raw);
}

TEST_CASE("keys must be destressed and folded") {
  CHECK_THROWS_AS(CompressedTrie::build({{U("κεφάλι"), rec(0)}}), InvalidKey);
  CHECK_THROWS_AS(CompressedTrie::build({{U("Κεφαλι"), rec(0)}}), InvalidKey);
  CHECK_THROWS_AS(CompressedTrie::build({{U("αγχος"), rec(0)}}), InvalidKey);  // ς is not a key letter
  CHECK_NOTHROW(CompressedTrie::build({{U("αγχοσ"), rec(0)}}));
}

TEST_CASE("duplicate keys merge payloads") {
  const auto t = CompressedTrie::build({{U("νομοσ"), rec(5)}, {U("νομοσ"), rec(2)}, {U("νομοι"), rec(3)}});
  CHECK(ids(t.lookup(U("νομοσ"))) == std::vector{rec(2), rec(5)});
  CHECK(t.key_count() == 2);
  check_structure(t);
}

TEST_CASE("property: random tries agree with a map oracle") {
  std::mt19937 rng(2024);
  for (int round = 0; round < 40; ++round) {
    Oracle oracle;
    const auto pairs = random_pairs(rng, 1 + round * 25, round % 2 ? U"αβγ" : U"αβγδεζηθικλμ", oracle);
    const auto t = CompressedTrie::build(pairs);
    check_structure(t);
    CHECK(t.key_count() == oracle.size());
    for (const auto& [k, v] : oracle) {
      size_t visits = 0;
      CHECK(ids(t.lookup(k, &visits)) == v);
      CHECK(visits <= k.size() + 1);
    }
    std::vector<std::u32string> walked;
    for (const auto& e : t.walk_prefix(U"")) walked.push_back(e.key);
    std::vector<std::u32string> expected;
    for (const auto& [k, v] : oracle) expected.push_back(k);
    CHECK(walked == expected);

    const auto back = CompressedTrie::deserialize(t.serialize());
    CHECK(back == t);
    CHECK(back.serialize() == t.serialize());

    std::uniform_int_distribution<size_t> len(0, 8), pick(0, 23);
    const std::u32string letters = U"αβγδεζηθικλμνξοπρστυφχψω";
    for (int i = 0; i < 200; ++i) {
      std::u32string k;
      for (size_t l = len(rng); l > 0; --l) k.push_back(letters[pick(rng)]);
      const auto it = oracle.find(k);
      size_t visits = 0;
      CHECK(ids(t.lookup(k, &visits)) == (it == oracle.end() ? std::vector<PayloadRecord>{} : it->second));
      CHECK(visits <= k.size() + 1);
    }
  }
}

TEST_CASE("walk_prefix agrees with filtering the sorted key list") {
  const auto& lex = test::sample_lexicon();
  const auto keys = test::all_keys(lex);
  for (std::string_view prefix : {"", "κ", "κεφαλ", "γραψ", "αγαπ", "ξζ"}) {
    const auto p = U(prefix);
    std::vector<std::u32string> expected, walked;
    for (const auto& k : keys)
      if (k.starts_with(p)) expected.push_back(k);
    for (const auto& e : lex.trie().walk_prefix(p)) walked.push_back(e.key);
    CHECK(walked == expected);
  }
}

TEST_CASE("corrupt trie streams") {
  const auto bytes = CompressedTrie::build({{U("κεφαλι"), rec(1)}, {U("κεφαλια"), rec(2)}}).serialize();
  for (size_t n = 0; n < bytes.size(); ++n)
    CHECK_THROWS_AS(CompressedTrie::deserialize(std::span(bytes.data(), n)), CorruptFile);
  auto extra = bytes;
  extra.push_back(0);
  CHECK_THROWS_AS(CompressedTrie::deserialize(extra), CorruptFile);
  const std::vector<uint8_t> junk(64, 0xff);
  CHECK_THROWS_AS(CompressedTrie::deserialize(junk), CorruptFile);
}
