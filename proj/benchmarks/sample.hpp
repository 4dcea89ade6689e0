#pragma once

#include <fstream>
#include <grlex/grlex.hpp>
#include <sstream>
#include <stdexcept>

inline std::string sample_source() {
  std::ifstream in(GRLEX_SAMPLE_LEXICON, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " GRLEX_SAMPLE_LEXICON);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline const grlex::CompiledLexicon& sample_lexicon() {
  static const grlex::CompiledLexicon lex = grlex::compile(grlex::parse_ldl(sample_source()).document);
  return lex;
}
