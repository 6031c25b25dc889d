#include "dbext/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace dbext {

std::size_t least_rotation_offset(const Word& w) {
  if (w.empty()) throw std::invalid_argument("least_rotation_offset: empty word");
  const std::size_t n = w.size();
  auto at = [&](std::size_t i) { return w[i % n]; };
  std::size_t i = 0, j = 1, len = 0;
  while (i < n && j < n && len < n) {
    const Symbol a = at(i + len), b = at(j + len);
    if (a == b) {
      ++len;
      continue;
    }
    if (a > b)
      i += len + 1;
    else
      j += len + 1;
    if (i == j) ++j;
    len = 0;
  }
  return std::min(i, j);
}

std::size_t word_period(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = w[i] == w[(i + p) % n];
    if (ok) return p;
  }
  return n;
}

Word rotated(const Word& w, std::size_t offset) {
  const std::size_t n = w.size();
  Word out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = w[(i + offset) % n];
  return out;
}

Necklace canonical_rotation(const Word& w) {
  if (w.empty()) throw std::invalid_argument("canonical_rotation: empty word");
  Necklace neck;
  neck.canon = rotated(w, least_rotation_offset(w));
  neck.period = word_period(neck.canon);
  return neck;
}

std::vector<Word> rotations(const Word& w) {
  if (w.empty()) throw std::invalid_argument("rotations: empty word");
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(rotated(w, i));
  return out;
}

std::size_t count_symbol(const Word& w, Symbol sym) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), sym));
}

std::vector<Necklace> necklaces(std::size_t length, int alphabet_size,
                                const CountFilter& top_count_filter) {
  if (length == 0) throw std::invalid_argument("necklaces: length must be >= 1");
  if (alphabet_size < 1) throw std::invalid_argument("necklaces: bad alphabet");
  const Symbol top = alphabet_size - 1;
  std::vector<Necklace> out;
  Word w(length, 0);
  // Odometer over all words in lex order; a word is kept when it is its own
  // least rotation, so the output is automatically sorted.
  for (;;) {
    if (least_rotation_offset(w) == 0 &&
        (!top_count_filter || top_count_filter(count_symbol(w, top)))) {
      out.push_back(Necklace{w, word_period(w)});
    }
    std::size_t i = length;
    while (i > 0 && w[i - 1] == top) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

}  // namespace dbext
