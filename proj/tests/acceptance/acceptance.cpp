// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "grlex_cli/cli.hpp"
#include "test_support.hpp"

using namespace grlex;
using grlex::test::S;
using grlex::test::U;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool has_surface(const std::vector<Suggestion>& s, std::u32string_view surface) {
  return std::any_of(s.begin(), s.end(), [&](const Suggestion& x) { return x.surface == surface; });
}

std::string cli_out(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "grlex");
  std::istringstream in(input);
  std::ostringstream out, err;
  cli::run(args, in, out, err);
  return out.str();
}

// 1 ------------------------------------------------------------------------
Outcome printed_examples(const CompiledLexicon& lex) {
  const auto t0 = Clock::now();
  std::vector<std::string> failures;
  const CheckResult r = check(lex, U("κέφαλι"));
  if (r.verdict != Verdict::stress_error) failures.push_back("κέφαλι verdict");
  const auto k = suggest(lex, U("κέφαλι"));
  if (k.empty() || S(k[0].surface) != "κεφάλι") failures.push_back("κέφαλι top suggestion");
  if (!has_surface(suggest(lex, U("έβρεση")), U("εύρεση"))) failures.push_back("έβρεση");
  if (!has_surface(suggest(lex, U("άνχος")), U("άγχος"))) failures.push_back("άνχος");
  const std::vector<std::pair<std::u32string, std::u32string>> printed = {
      {U("Α"), U("Δ")}, {U("Τ"), U("Γ")}, {U("ΛΛ"), U("Μ")}, {U("α"), U("σ")}};
  if (ConfusionTable::standard().pairs() != printed) failures.push_back("optical pair table");
  const double ms = ms_since(t0);
  if (ms >= 1000) failures.push_back("runtime");
  std::ostringstream d;
  d << ms << " ms";
  for (const auto& f : failures) d << "; failed: " << f;
  return {failures.empty(), d.str()};
}

// 2 ------------------------------------------------------------------------
Outcome round_trip(const CompiledLexicon& compiled) {
  const auto t0 = Clock::now();
  // through the binary container, as a user of the shipped file would see it
  const CompiledLexicon lex = read_binary(write_binary(compiled));
  const LdlDocument& doc = test::sample_document();
  size_t checked = 0, bad = 0;
  for (uint32_t l = 0; l < doc.lemmas.size(); ++l) {
    for (uint32_t x = 0; x < doc.lemmas[l].lexemes.size(); ++x) {
      const Lexeme& lx = doc.lemmas[l].lexemes[x];
      for (const auto& fresh : generate_word_forms(lx, {l, x})) {
        ++checked;
        bool ok = false;
        for (const auto& p : lex.lookup(make_key(fresh.surface))) {
          const WordFormEntry& f = lex.forms()[p.form_id];
          if (f.lexeme_id != fresh.lexeme_id || f.tags != fresh.tags) continue;
          const std::u32string rendered = render_final_sigma(place_stress(
              f.destressed_key, f.hyphen_pattern, p.stress, (p.flags & payload_flags::keep_stress) != 0));
          ok = ok || (to_utf8(rendered) == to_utf8(fresh.surface) && to_utf8(f.surface) == to_utf8(fresh.surface));
        }
        if (!ok) {
          if (bad < 5) std::cerr << "  round trip: " << S(fresh.surface) << '\n';
          ++bad;
        }
      }
    }
  }
  const double ms = ms_since(t0);
  std::ostringstream d;
  d << checked << " forms from " << doc.lemmas.size() << " lemmas, " << bad << " mismatches, " << ms << " ms";
  return {bad == 0 && ms < 5000 && doc.lemmas.size() >= 120 && checked >= 1000, d.str()};
}

// 3 ------------------------------------------------------------------------
Outcome stress_sweep(const CompiledLexicon& lex) {
  size_t probes = 0, skipped = 0, bad = 0;
  for (const auto& f : lex.forms()) {
    if (f.hyphen_pattern.empty()) continue;
    const auto nuclei = syllable_nuclei(f.destressed_key, f.hyphen_pattern);
    std::set<std::u32string> valid;
    for (const auto* other : lex.forms_for_key(f.destressed_key)) valid.insert(other->surface);
    const std::u32string plain = render_final_sigma(f.destressed_key);
    for (size_t n : nuclei) {
      std::u32string wrong = plain;
      wrong[n] = stress_char(wrong[n]);
      if (wrong == f.surface) continue;
      if (valid.contains(wrong)) {
        ++skipped;  // another form of the same spelling is stressed there
        continue;
      }
      ++probes;
      const bool ok = check(lex, wrong).verdict == Verdict::stress_error &&
                      has_surface(suggest(lex, wrong), f.surface);
      if (!ok) {
        if (bad < 5) std::cerr << "  stress sweep: " << S(wrong) << " -> " << S(f.surface) << '\n';
        ++bad;
      }
    }
  }
  std::ostringstream d;
  d << probes << " restressings, " << bad << " failures, " << skipped << " equal to another valid form";
  return {bad == 0 && probes > 0, d.str()};
}

// 4 ------------------------------------------------------------------------
Outcome edit_recall(const CompiledLexicon& lex) {
  std::mt19937 rng(20240611);
  const std::u32string letters = U"αβγδεζηθικλμνξοπρστυφχψω";
  auto below = [&](size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); };

  std::vector<uint32_t> ids(lex.forms().size());
  for (uint32_t i = 0; i < ids.size(); ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  std::set<std::u32string> keys;
  for (const auto& f : lex.forms()) keys.insert(f.destressed_key);

  size_t cases = 0, hits = 0, unexcused = 0, forms = 0;
  for (uint32_t id : ids) {
    if (forms == 200) break;
    const std::u32string& w = lex.forms()[id].surface;
    if (w.size() < 3) continue;
    ++forms;
    std::vector<std::u32string> corrupted;
    {  // deletion
      auto t = w;
      t.erase(below(t.size()), 1);
      corrupted.push_back(t);
    }
    {  // insertion
      auto t = w;
      t.insert(t.begin() + static_cast<std::ptrdiff_t>(below(t.size() + 1)), letters[below(letters.size())]);
      corrupted.push_back(t);
    }
    {  // transposition of two different neighbours
      std::vector<size_t> spots;
      for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] != w[i + 1]) spots.push_back(i);
      auto t = w;
      const size_t i = spots[below(spots.size())];
      std::swap(t[i], t[i + 1]);
      corrupted.push_back(t);
    }
    {  // substitution by a different letter
      auto t = w;
      const size_t i = below(t.size());
      char32_t c;
      do c = letters[below(letters.size())];
      while (make_key(std::u32string(1, c)) == make_key(std::u32string(1, t[i])));
      t[i] = c;
      corrupted.push_back(t);
    }
    for (auto& t : corrupted) {
      t = render_final_sigma(fold_case(t));
      ++cases;
      if (has_surface(suggest(lex, t, 10), w)) {
        ++hits;
      } else if (!keys.contains(make_key(t))) {
        if (unexcused < 5) std::cerr << "  edit recall: " << S(t) << " -> " << S(w) << '\n';
        ++unexcused;
      }
    }
  }
  const double rate = cases ? static_cast<double>(hits) / static_cast<double>(cases) : 0.0;
  std::ostringstream d;
  d << hits << "/" << cases << " recovered in top 10 (" << rate * 100 << "%), " << unexcused
    << " misses not explained by a valid corruption";
  return {cases == 800 && rate >= 0.99 && unexcused == 0, d.str()};
}

// 5 ------------------------------------------------------------------------
Outcome trie_oracle(const CompiledLexicon& lex) {
  std::map<std::u32string, std::vector<uint32_t>> oracle;
  for (uint32_t id = 0; id < lex.forms().size(); ++id) oracle[lex.forms()[id].destressed_key].push_back(id);

  const CompressedTrie& trie = lex.trie();
  const CompressedTrie replay = CompressedTrie::deserialize(trie.serialize());
  size_t bad = 0, visit_violations = 0;
  auto answers = [](std::span<const PayloadRecord> p) {
    std::vector<uint32_t> out;
    for (const auto& r : p) out.push_back(r.form_id);
    return out;
  };
  auto probe = [&](const std::u32string& key, const std::vector<uint32_t>& expected) {
    for (const CompressedTrie* t : {&trie, &replay}) {
      size_t visits = 0;
      if (answers(t->lookup(key, &visits)) != expected) ++bad;
      if (visits > key.size() + 1) ++visit_violations;
    }
  };
  for (const auto& [key, ids] : oracle) probe(key, ids);

  std::mt19937 rng(4242);
  const std::u32string letters = U"αβγδεζηθικλμνξοπρστυφχψωϊϋ";
  std::uniform_int_distribution<size_t> len(1, 12), pick(0, letters.size() - 1);
  size_t absent = 0;
  while (absent < 10000) {
    std::u32string k;
    for (size_t n = len(rng); n > 0; --n) k.push_back(letters[pick(rng)]);
    if (oracle.contains(k)) continue;
    probe(k, {});
    ++absent;
  }

  // full traversal: compression and ordering invariants
  size_t structural = trie.structure_violation().empty() ? 0 : 1;
  const auto& nodes = trie.nodes();
  for (size_t i = 1; i < nodes.size(); ++i)
    if (nodes[i].label.empty() || (nodes[i].payloads.empty() && nodes[i].children.size() < 2)) ++structural;
  for (const auto& n : nodes)
    for (size_t c = 1; c < n.children.size(); ++c)
      if (nodes[n.children[c - 1]].label[0] >= nodes[n.children[c]].label[0]) ++structural;

  const bool identical = replay == trie && replay.serialize() == trie.serialize();
  std::ostringstream d;
  d << oracle.size() << " keys + " << absent << " absent keys, " << bad << " disagreements, "
    << visit_violations << " visit-bound violations, " << structural << " structural faults, replay "
    << (identical ? "identical" : "DIFFERENT");
  return {bad == 0 && visit_violations == 0 && structural == 0 && identical, d.str()};
}

// 6 ------------------------------------------------------------------------
Outcome hyphenation(const CompiledLexicon& lex) {
  size_t replay_bad = 0;
  for (const auto& f : lex.forms())
    if (hyphenate(lex.hyphen_rules(), nullptr, f.surface).breaks != f.hyphen_pattern) ++replay_bad;

  std::istringstream in(test::read_text(test::data_path("hyphenation_gold.txt")));
  size_t gold = 0, gold_bad = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string word, expected;
    fields >> word >> expected;
    ++gold;
    const std::string got = S(hyphenate(HyphenRuleSet::handcrafted(), nullptr, U(word)).text());
    if (got != expected) {
      std::cerr << "  gold: " << word << " -> " << got << ", expected " << expected << '\n';
      ++gold_bad;
    }
  }
  std::ostringstream d;
  d << lex.forms().size() << " forms replayed (" << replay_bad << " mismatches, "
    << lex.hyphen_rules().exceptions().size() << " exceptions); gold " << gold - gold_bad << "/" << gold;
  return {replay_bad == 0 && gold >= 100 && gold_bad == 0, d.str()};
}

// 7 ------------------------------------------------------------------------
Outcome determinism(const CompiledLexicon& lex) {
  const std::string source = test::read_text(GRLEX_SAMPLE_LEXICON);
  const auto a = write_binary(compile(parse_ldl(source, "a").document));
  const auto b = write_binary(compile(parse_ldl(source, "b").document));

  const auto glex = std::filesystem::temp_directory_path() / "grlex_acceptance.glex";
  {
    std::ofstream sink(glex, std::ios::binary);
    write_binary(lex, sink);
  }
  std::string text;
  std::mt19937 rng(3);
  for (const auto& f : lex.forms()) {
    std::u32string w = f.surface;
    if (rng() % 3 == 0) w.erase(rng() % w.size(), 1);
    text += to_utf8(w) + (rng() % 7 == 0 ? ".\n" : " ");
  }
  const std::vector<std::string> args = {"check", glex.string(), "--suggest", "5", "--json"};
  const std::string first = cli_out(args, text);
  const std::string second = cli_out(args, text);
  auto threaded_args = args;
  threaded_args.insert(threaded_args.end(), {"--jobs", "4"});
  const std::string threaded = cli_out(threaded_args, text);

  const bool ok = a == b && !first.empty() && first == second && first == threaded;
  std::ostringstream d;
  d << "GLEX " << a.size() << " bytes " << (a == b ? "identical" : "DIFFERENT") << "; check output "
    << first.size() << " bytes " << (first == second && first == threaded ? "identical" : "DIFFERENT");
  return {ok, d.str()};
}

// 8 ------------------------------------------------------------------------
Outcome compression(const CompiledLexicon& lex) {
  const auto image = write_binary(lex);
  size_t trie_bytes = 0;
  for (const auto& s : read_section_table(image))
    if (s.tag == "TRIE") trie_bytes = s.length;

  auto keys = test::all_keys(lex);
  std::string joined;
  for (const auto& k : keys) joined += (joined.empty() ? "" : "\n") + to_utf8(k);

  const auto glex = std::filesystem::temp_directory_path() / "grlex_acceptance_stats.glex";
  {
    std::ofstream sink(glex, std::ios::binary);
    sink.write(reinterpret_cast<const char*>(image.data()), static_cast<std::streamsize>(image.size()));
  }
  const auto stats = nlohmann::json::parse(cli_out({"stats", glex.string(), "--json"}));
  const double reported = stats["compression_ratio"].get<double>();
  const double measured = static_cast<double>(trie_bytes) / static_cast<double>(joined.size());

  std::ostringstream d;
  d << "trie section " << trie_bytes << " bytes vs key list " << joined.size() << " bytes, ratio "
    << reported;
  return {trie_bytes < joined.size() && reported < 1.0 && std::abs(reported - measured) < 1e-9, d.str()};
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const CompiledLexicon& lex = test::sample_lexicon();
  std::printf("sample lexicon: %zu lemmas, %zu forms, compiled in %.0f ms\n", lex.lemmas().size(),
              lex.forms().size(), ms_since(t0));

  const std::vector<std::pair<std::string, std::function<Outcome(const CompiledLexicon&)>>> criteria = {
      {"printed examples", printed_examples},
      {"round-trip completeness", round_trip},
      {"stress-error sweep", stress_sweep},
      {"edit recall", edit_recall},
      {"trie oracle equivalence", trie_oracle},
      {"hyphenation master property", hyphenation},
      {"determinism", determinism},
      {"compression property", compression},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second(lex);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s [%.0f ms]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), ms_since(start));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
