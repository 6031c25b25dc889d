#pragma once

#include <string>

#include "dbext/words.hpp"

namespace dbext {

/// One character per symbol (digits then lowercase letters) for alphabets of
/// up to 36 symbols; comma-separated decimal integers beyond that.
std::string word_to_string(const Word& w, int alphabet_size);

/// Inverse of word_to_string. Throws std::invalid_argument on bad input or
/// symbols outside the alphabet.
Word parse_word(const std::string& text, int alphabet_size);

}  // namespace dbext
