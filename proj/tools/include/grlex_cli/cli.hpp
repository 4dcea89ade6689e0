#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace grlex::cli {

enum ExitCode : int { kClean = 0, kFindings = 1, kEnvironment = 2 };

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

struct Token {
  /// Byte offset of the token in the UTF-8 input.
  size_t offset = 0;
  /// NFC text of the token.
  std::u32string text;
};

/// Maximal runs of letters and combining marks; everything else separates.
/// Throws EncodingError on malformed UTF-8.
std::vector<Token> tokenize(const std::string& utf8);

}  // namespace grlex::cli
