#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "dbext/words.hpp"

namespace dbext {

/// Parameters of the implicit de Bruijn graph G(k, m): vertices are length-m
/// words over k symbols, edges are length-(m+1) words. Order-n sequences live
/// in G(k, n-1).
struct GraphParams {
  int k = 2;
  int m = 1;

  std::size_t vertex_count() const;  // k^m
  std::size_t edge_count() const;    // k^(m+1)

  friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

std::size_t ipow(std::size_t base, unsigned exp);

/// Big-endian packing of a word into an integer code.
std::size_t pack_word(const Word& w, int base);
Word unpack_word(std::size_t code, int base, std::size_t length);

/// A pointed Eulerian cycle: start vertex plus the edge labels in traversal
/// order. Encodes an order-(m+1) de Bruijn sequence.
struct EulerianCycle {
  GraphParams params;
  Word start_vertex;  // length m
  Word labels;        // length k^(m+1)
};

Word edge_word(const Word& tail, Symbol label);
Word edge_tail(const Word& edge);  // first m symbols
Word edge_head(const Word& edge);  // last m symbols

struct CheckResult {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Reads a circular sequence as a walk in G(k, m); start vertex is the first
/// m symbols. Throws std::invalid_argument on wrong length, invalid symbols,
/// or a repeated edge (sequence not de Bruijn).
EulerianCycle sequence_to_cycle(const Word& seq, const GraphParams& params);

/// Linear representative beginning at the cycle's start vertex.
/// Inverse of sequence_to_cycle.
Word cycle_to_sequence(const EulerianCycle& cycle);

/// True iff seq has length k^n and every length-n word occurs exactly once
/// circularly. The diagnostic names a duplicated word on failure.
CheckResult is_de_bruijn(const Word& seq, int k, int n);

struct size_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultSizeCap = 10'000'000;

/// Hierholzer generation in G(k, n-1); deterministic, smallest unused label
/// first. Throws size_cap_error when k^n exceeds the cap.
Word generate_de_bruijn(int k, int n, const std::optional<Word>& start = {},
                        std::size_t size_cap = kDefaultSizeCap);

/// Same, but with per-vertex label orders shuffled by the seed. Used to
/// produce varied test inputs.
Word generate_de_bruijn_seeded(int k, int n, std::uint64_t seed,
                               const std::optional<Word>& start = {},
                               std::size_t size_cap = kDefaultSizeCap);

}  // namespace dbext
