#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "dbext/words.hpp"

namespace dbext {

/// Rooted tree over the s-containing necklaces of length m+1 over k+1
/// symbols, layered by s-count. The subtree under each depth-1 node [v.s]
/// induces the petal for the s-free vertex v.
struct PetalsTree {
  int k = 0;
  int m = 0;

  struct Node {
    Necklace necklace;
    int depth = 0;   // = number of occurrences of s
    int parent = -1;  // -1: child of the root sentinel
    Word entry_vertex;           // length m; node = [entry_vertex . s]
    Word entry_edge;             // entry_vertex . s
    std::vector<int> children;   // sorted by canonical form
  };
  std::vector<Node> nodes;  // lexicographic order of canonical form
  std::map<Word, int> index_by_canon;

  int node_for(const Word& canon) const;
  /// Index of the depth-1 node [anchor . s]; anchor must be s-free.
  int root_for_anchor(const Word& anchor) const;
};

/// Deterministic construction. Parent choice for depth >= 2 nodes: among all
/// candidates (rotation w.s of the node, replacement symbol c' != s, parent
/// [w.c']), prefer the parent whose petal currently holds the most nodes,
/// then the lexicographically greatest parent canonical form, then the
/// lexicographically least entry vertex. Nodes are processed depth by depth
/// in lexicographic order. This reproduces the published petal grouping for
/// k=2, m=2.
PetalsTree build_petals_tree(int k, int m);

/// Closed walk in A(k+1, m) from the anchor back to itself, beginning with
/// the edge anchor.s; covers exactly the cycles of the subtree under
/// [anchor.s].
struct Petal {
  Word anchor;
  std::vector<Word> edges;

  /// Edge labels (last symbol of each edge word) in walk order.
  Word labels() const;
};

Petal petal_for_vertex(const PetalsTree& tree, const Word& anchor);

}  // namespace dbext
