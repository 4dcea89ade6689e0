#pragma once

#include "grlex/compiled_lexicon.hpp"
#include "grlex/error.hpp"
#include "grlex/greek_text.hpp"
#include "grlex/hyphenator.hpp"
#include "grlex/ldl.hpp"
#include "grlex/lexicon_model.hpp"
#include "grlex/speller.hpp"
#include "grlex/trie.hpp"
#include "grlex/utf8.hpp"
