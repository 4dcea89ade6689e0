#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "grlex/grlex.hpp"
#include "grlex_cli/cli.hpp"

namespace grlex::cli {
namespace {

using nlohmann::json;

// Thrown for problems with the environment (unreadable files, bad lexicon).
struct EnvironmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EnvironmentError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CompiledLexicon load_lexicon(const std::string& path) {
  const std::string bytes = read_file(path);
  try {
    return read_binary(std::span(reinterpret_cast<const uint8_t*>(bytes.data()), bytes.size()));
  } catch (const Error& e) {
    throw EnvironmentError("'" + path + "': " + e.what());
  }
}

std::string default_output(const std::string& input) {
  const auto slash = input.find_last_of('/');
  const auto dot = input.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return input + ".glex";
  return input.substr(0, dot) + ".glex";
}

// ---------------------------------------------------------------- compile

struct CompileOptions {
  std::string input;
  std::string output;
  bool check_only = false;
};

int cmd_compile(const CompileOptions& o, std::ostream& out, std::ostream& err) {
  const std::string source = read_file(o.input);
  ParseResult parsed = parse_ldl(source, o.input);
  std::vector<Diagnostic> diagnostics = parsed.diagnostics;
  if (parsed.ok()) {
    auto more = validate(parsed.document);
    diagnostics.insert(diagnostics.end(), more.begin(), more.end());
  }
  for (const auto& d : diagnostics) err << format_diagnostic(d, o.input) << '\n';
  if (has_errors(diagnostics)) return kFindings;

  const CompiledLexicon lexicon = compile(parsed.document);
  if (o.check_only) {
    out << o.input << ": ok, " << lexicon.lemmas().size() << " lemmas, " << lexicon.forms().size()
        << " forms\n";
    return kClean;
  }
  const std::string path = o.output.empty() ? default_output(o.input) : o.output;
  std::ofstream sink(path, std::ios::binary | std::ios::trunc);
  if (!sink) throw EnvironmentError("cannot write '" + path + "'");
  write_binary(lexicon, sink);
  if (!sink.flush()) throw EnvironmentError("cannot write '" + path + "'");
  out << path << ": " << lexicon.lemmas().size() << " lemmas, " << lexicon.forms().size()
      << " forms\n";
  return kClean;
}

// ------------------------------------------------------------------ check

struct CheckOptions {
  std::string lexicon;
  std::string input;
  size_t suggest = 0;
  bool strict = false;
  bool json = false;
  size_t jobs = 1;
};

struct Finding {
  size_t offset = 0;
  std::string token;
  std::string verdict;
  std::vector<std::string> suggestions;
};

std::vector<Finding> check_tokens(const CompiledLexicon& lexicon, std::span<const Token> tokens,
                                  size_t suggestions) {
  std::vector<Finding> findings;
  for (const auto& t : tokens) {
    const TokenClass cls = classify(t.text);
    if (cls == TokenClass::non_greek) continue;
    Finding f{t.offset, to_utf8(t.text), {}, {}};
    if (cls == TokenClass::mixed) {
      f.verdict = "mixed";
      findings.push_back(std::move(f));
      continue;
    }
    const CheckResult r = check(lexicon, t.text);
    if (r.verdict == Verdict::correct) continue;
    f.verdict = std::string(to_string(r.verdict));
    if (suggestions > 0) {
      for (const auto& s : suggest(lexicon, t.text, suggestions)) f.suggestions.push_back(to_utf8(s.surface));
    } else {
      for (const auto& s : r.correct_surfaces) f.suggestions.push_back(to_utf8(s));
    }
    findings.push_back(std::move(f));
  }
  return findings;
}

int cmd_check(const CheckOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const CompiledLexicon lexicon = load_lexicon(o.lexicon);
  const std::string text = o.input.empty() || o.input == "-" ? read_all(in) : read_file(o.input);
  std::vector<Token> tokens;
  try {
    tokens = tokenize(text);
  } catch (const EncodingError& e) {
    err << "grlex check: " << e.what() << '\n';
    return kFindings;
  }

  // Fixed-size chunks over the shared lexicon; joined in input order.
  const size_t jobs = std::max<size_t>(1, o.jobs);
  const size_t chunk = std::max<size_t>(64, (tokens.size() + jobs - 1) / jobs);
  std::vector<std::future<std::vector<Finding>>> parts;
  for (size_t begin = 0; begin < tokens.size(); begin += chunk) {
    const auto slice = std::span<const Token>(tokens).subspan(begin, std::min(chunk, tokens.size() - begin));
    parts.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                               [&lexicon, slice, &o] { return check_tokens(lexicon, slice, o.suggest); }));
  }

  size_t stress = 0, unknown = 0, mixed = 0;
  for (auto& part : parts) {
    for (const auto& f : part.get()) {
      if (f.verdict == "StressError") ++stress;
      else if (f.verdict == "Unknown") ++unknown;
      else ++mixed;
      if (o.json) {
        out << json{{"offset", f.offset}, {"token", f.token}, {"verdict", f.verdict},
                    {"suggestions", f.suggestions}}.dump()
            << '\n';
      } else {
        out << f.offset << '\t' << f.token << '\t' << f.verdict;
        for (size_t i = 0; i < f.suggestions.size(); ++i)
          out << (i == 0 ? '\t' : ',') << f.suggestions[i];
        out << '\n';
      }
    }
  }
  err << tokens.size() << " tokens: " << stress << " stress errors, " << unknown << " unknown, "
      << mixed << " mixed\n";
  const bool findings = stress + unknown + mixed > 0;
  return findings && o.strict ? kFindings : kClean;
}

// -------------------------------------------------------------- hyphenate

struct HyphenateOptions {
  std::string lexicon;
  std::vector<std::string> words;
  bool strict = false;
};

int cmd_hyphenate(const HyphenateOptions& o, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  std::optional<CompiledLexicon> lexicon;
  if (!o.lexicon.empty()) lexicon = load_lexicon(o.lexicon);
  const HyphenRuleSet& rules = lexicon ? lexicon->hyphen_rules() : HyphenRuleSet::handcrafted();

  std::vector<std::string> words = o.words;
  if (words.empty()) {
    std::istringstream text(read_all(in));
    for (std::string w; text >> w;) words.push_back(w);
  }
  bool failed = false;
  for (const auto& w : words) {
    try {
      const BreakPattern p = hyphenate(rules, lexicon ? &*lexicon : nullptr, decode_nfc(w));
      out << to_utf8(p.text()) << '\n';
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      failed = true;
    }
  }
  return failed && o.strict ? kFindings : kClean;
}

// ------------------------------------------------------------------ forms

struct FormsOptions {
  std::string lexicon;
  std::string headword;
  bool json = false;
};

std::string segmentation_text(const WordFormEntry& f) {
  std::string s;
  for (const auto& seg : f.segmentation) {
    if (!s.empty()) s += '+';
    s += to_utf8(seg.letters);
  }
  return s;
}

int cmd_forms(const FormsOptions& o, std::ostream& out, std::ostream& err) {
  const CompiledLexicon lexicon = load_lexicon(o.lexicon);
  std::u32string headword;
  try {
    headword = decode_nfc(o.headword);
  } catch (const EncodingError& e) {
    err << "grlex forms: " << e.what() << '\n';
    return kFindings;
  }
  const int64_t index = lexicon.find_lemma(headword);
  if (index < 0) {
    err << "grlex forms: '" << o.headword << "' not found\n";
    return kFindings;
  }
  const Lemma& lemma = lexicon.lemmas()[static_cast<size_t>(index)];
  for (uint32_t id : lexicon.forms_of_lemma(static_cast<size_t>(index))) {
    const WordFormEntry& f = lexicon.forms()[id];
    const std::string lexeme = lemma.lexemes[f.lexeme_id.lexeme].name;
    const std::string hyphen = to_utf8(hyphenated(f.surface, f.hyphen_pattern));
    if (o.json) {
      json segments = json::array();
      for (const auto& seg : f.segmentation)
        segments.push_back({{"kind", to_string(seg.kind)}, {"letters", to_utf8(seg.letters)}});
      out << json{{"id", id},
                  {"surface", to_utf8(f.surface)},
                  {"key", to_utf8(f.destressed_key)},
                  {"lexeme", lexeme},
                  {"tags", f.tags},
                  {"stress", to_string(f.stress)},
                  {"segmentation", segments},
                  {"hyphenation", hyphen}}
                 .dump()
          << '\n';
    } else {
      out << to_utf8(f.surface) << '\t' << lexeme << '\t' << f.tags << '\t' << stress_tag(f.stress)
          << '\t' << segmentation_text(f) << '\t' << hyphen << '\n';
    }
  }
  return kClean;
}

// ------------------------------------------------------------------ stats

struct StatsOptions {
  std::string lexicon;
  bool json = false;
};

int cmd_stats(const StatsOptions& o, std::ostream& out) {
  const std::string bytes = read_file(o.lexicon);
  const auto image = std::span(reinterpret_cast<const uint8_t*>(bytes.data()), bytes.size());
  CompiledLexicon lexicon;
  std::vector<SectionInfo> sections;
  try {
    lexicon = read_binary(image);
    sections = read_section_table(image);
  } catch (const Error& e) {
    throw EnvironmentError("'" + o.lexicon + "': " + e.what());
  }

  // Newline-joined sorted distinct keys: the uncompressed baseline.
  size_t raw = 0, keys = 0;
  for (const auto& entry : lexicon.trie().walk_prefix(U"")) {
    raw += to_utf8(entry.key).size() + (keys > 0 ? 1 : 0);
    ++keys;
  }
  size_t trie_bytes = 0;
  for (const auto& s : sections)
    if (s.tag == "TRIE") trie_bytes = s.length;
  const double ratio = raw == 0 ? 0.0 : static_cast<double>(trie_bytes) / static_cast<double>(raw);

  if (o.json) {
    json sec = json::object();
    for (const auto& s : sections) sec[s.tag] = s.length;
    out << json{{"lemmas", lexicon.lemmas().size()},
                {"forms", lexicon.forms().size()},
                {"keys", keys},
                {"trie_nodes", lexicon.trie().node_count()},
                {"sections", sec},
                {"file_bytes", bytes.size()},
                {"raw_key_bytes", raw},
                {"compression_ratio", ratio}}
               .dump()
        << '\n';
    return kClean;
  }
  out << "lemmas\t" << lexicon.lemmas().size() << '\n'
      << "forms\t" << lexicon.forms().size() << '\n'
      << "keys\t" << keys << '\n'
      << "trie nodes\t" << lexicon.trie().node_count() << '\n';
  for (const auto& s : sections) out << "section " << s.tag << '\t' << s.length << '\n';
  std::ostringstream r;
  r.setf(std::ios::fixed);
  r.precision(4);
  r << ratio;
  out << "file bytes\t" << bytes.size() << '\n'
      << "raw key bytes\t" << raw << '\n'
      << "compression ratio\t" << r.str() << '\n';
  return kClean;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Greek lexicon compiler, speller and hyphenator", "grlex"};
  app.require_subcommand(1);

  CompileOptions compile_opts;
  auto* compile = app.add_subcommand("compile", "Compile an LDL source into a GLEX lexicon");
  compile->add_option("input", compile_opts.input, "LDL source")->required();
  compile->add_option("-o,--output", compile_opts.output, "GLEX output (default: input with .glex)");
  compile->add_flag("--check", compile_opts.check_only, "Validate only, write nothing");

  CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "Spell-check text against a lexicon");
  check->add_option("lexicon", check_opts.lexicon, "GLEX lexicon")->required();
  check->add_option("input", check_opts.input, "Text file (default: stdin)");
  check->add_option("--suggest", check_opts.suggest, "Suggestions per finding");
  check->add_flag("--strict", check_opts.strict, "Exit 1 when there are findings");
  check->add_flag("--json", check_opts.json, "Line-delimited JSON records");
  check->add_option("-j,--jobs", check_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);

  HyphenateOptions hyphen_opts;
  auto* hyph = app.add_subcommand("hyphenate", "Hyphenate words from arguments or stdin");
  hyph->add_option("-l,--lexicon", hyphen_opts.lexicon, "GLEX lexicon");
  hyph->add_option("words", hyphen_opts.words, "Words");
  hyph->add_flag("--strict", hyphen_opts.strict, "Exit 1 when a word cannot be hyphenated");

  FormsOptions forms_opts;
  auto* forms = app.add_subcommand("forms", "List every form of a lemma");
  forms->add_option("lexicon", forms_opts.lexicon, "GLEX lexicon")->required();
  forms->add_option("headword", forms_opts.headword, "Lemma headword")->required();
  forms->add_flag("--json", forms_opts.json, "Line-delimited JSON records");

  StatsOptions stats_opts;
  auto* stats = app.add_subcommand("stats", "Lexicon size statistics");
  stats->add_option("lexicon", stats_opts.lexicon, "GLEX lexicon")->required();
  stats->add_flag("--json", stats_opts.json, "JSON output");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kClean : kFindings;
  }

  try {
    if (*compile) return cmd_compile(compile_opts, out, err);
    if (*check) return cmd_check(check_opts, in, out, err);
    if (*hyph) return cmd_hyphenate(hyphen_opts, in, out, err);
    if (*forms) return cmd_forms(forms_opts, out, err);
    if (*stats) return cmd_stats(stats_opts, out);
  } catch (const EnvironmentError& e) {
    err << "grlex: " << e.what() << '\n';
    return kEnvironment;
  } catch (const std::exception& e) {
    err << "grlex: " << e.what() << '\n';
    return kFindings;
  }
  return kFindings;
}

}  // namespace grlex::cli
