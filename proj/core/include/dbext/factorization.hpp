#pragma once

#include <vector>

#include "dbext/graph.hpp"
#include "dbext/words.hpp"

namespace dbext {

/// The simple cycle in G(k, m) whose edges are the distinct rotations of a
/// length-(m+1) necklace, in rotation order from the canonical form.
struct NecklaceCycle {
  Necklace necklace;
  std::vector<Word> edges;
};

/// Edge-disjoint cycles covering all k^(m+1) edges, one per necklace of
/// length m+1, in lexicographic order.
std::vector<NecklaceCycle> necklace_cycles(const GraphParams& params);

/// True iff the edge word (over the enlarged alphabet) contains the new
/// symbol s = k, i.e. the edge is in A(k+1, m) = G(k+1, m) minus G(k, m).
bool is_augmenting_edge(const Word& edge, int k);

/// Adjacency in the graph of circular words: [v] -> [w] iff some rotation of
/// v is a.u and some rotation of w is u.b.
bool cw_adjacent(const Necklace& v, const Necklace& w);

/// Restriction of C(k+1, m+1) to s-containing necklaces. Nodes are listed;
/// adjacency stays an oracle.
struct CircularWordGraph {
  int alphabet_size = 0;
  std::size_t word_length = 0;
  std::vector<Necklace> nodes;  // lexicographic order

  bool adjacent(const Necklace& v, const Necklace& w) const;
  /// Successors of v inside the node set, deduplicated, in lex order.
  std::vector<Necklace> neighbors(const Necklace& v) const;
};

/// Node set = s-containing necklaces of length m+1 over k+1 symbols.
CircularWordGraph restricted_cw_graph(int k, int m);

}  // namespace dbext
