#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace dbext {

using Symbol = int;
using Word = std::vector<Symbol>;

/// Circular word: the lexicographically least rotation plus the number of
/// distinct rotations (the minimal period).
struct Necklace {
  Word canon;
  std::size_t period = 0;

  std::size_t length() const { return canon.size(); }

  friend bool operator==(const Necklace& a, const Necklace& b) {
    return a.canon == b.canon;
  }
  friend bool operator<(const Necklace& a, const Necklace& b) {
    return a.canon < b.canon;
  }
};

/// Booth's least-rotation algorithm, O(L). Word must be nonempty.
std::size_t least_rotation_offset(const Word& w);

/// Smallest p > 0 with rot_p(w) == w; equals the number of distinct rotations.
std::size_t word_period(const Word& w);

Word rotated(const Word& w, std::size_t offset);

Necklace canonical_rotation(const Word& w);

/// All L rotations in offset order 0..L-1, duplicates retained.
std::vector<Word> rotations(const Word& w);

std::size_t count_symbol(const Word& w, Symbol sym);

using CountFilter = std::function<bool(std::size_t)>;

/// All distinct necklaces of the given length, in lexicographic order of the
/// canonical form. The optional filter restricts by the count of the largest
/// symbol (alphabet_size - 1), which is the extension symbol s for an
/// enlarged alphabet.
std::vector<Necklace> necklaces(std::size_t length, int alphabet_size,
                                const CountFilter& top_count_filter = {});

}  // namespace dbext
