#include "dbext/text.hpp"

#include <stdexcept>

namespace dbext {

namespace {

constexpr const char* kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

}  // namespace

std::string word_to_string(const Word& w, int alphabet_size) {
  std::string out;
  if (alphabet_size <= 36) {
    out.reserve(w.size());
    for (Symbol s : w) {
      if (s < 0 || s >= alphabet_size)
        throw std::invalid_argument("word_to_string: symbol out of range");
      out.push_back(kDigits[s]);
    }
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] < 0 || w[i] >= alphabet_size)
        throw std::invalid_argument("word_to_string: symbol out of range");
      if (i) out.push_back(',');
      out += std::to_string(w[i]);
    }
  }
  return out;
}

Word parse_word(const std::string& text, int alphabet_size) {
  Word w;
  if (alphabet_size > 36 || text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      const std::string tok = text.substr(pos, next - pos);
      if (tok.empty()) throw std::invalid_argument("parse_word: empty symbol");
      std::size_t used = 0;
      int v;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_word: bad symbol '" + tok + "'");
      }
      if (used != tok.size() || v < 0 || v >= alphabet_size)
        throw std::invalid_argument("parse_word: bad symbol '" + tok + "'");
      w.push_back(v);
      pos = next + 1;
    }
  } else {
    w.reserve(text.size());
    for (char c : text) {
      int v;
      if (c >= '0' && c <= '9')
        v = c - '0';
      else if (c >= 'a' && c <= 'z')
        v = 10 + (c - 'a');
      else
        throw std::invalid_argument(std::string("parse_word: bad character '") + c + "'");
      if (v >= alphabet_size)
        throw std::invalid_argument(std::string("parse_word: symbol '") + c +
                                    "' outside alphabet of size " + std::to_string(alphabet_size));
      w.push_back(v);
    }
  }
  return w;
}

}  // namespace dbext
