#pragma once

#include <string>
#include <string_view>

#include "grlex/grlex.hpp"

namespace grlex::test {

inline std::u32string U(std::string_view utf8) { return to_utf32(utf8); }
inline std::string S(std::u32string_view text) { return to_utf8(text); }

std::string read_text(const std::string& path);
std::string data_path(std::string_view name);

/// The shipped sample lexicon, parsed and compiled once per process.
const LdlDocument& sample_document();
const CompiledLexicon& sample_lexicon();

/// Compiles LDL text; fails the calling test on diagnostics with errors.
CompiledLexicon compile_text(std::string_view ldl);

/// Number of inflection slots written in an LDL document, counted from
/// the source text itself.
size_t count_slots_in_source(std::string_view ldl);

/// Every destressed key of `lexicon`, sorted and unique.
std::vector<std::u32string> all_keys(const CompiledLexicon& lexicon);

}  // namespace grlex::test
