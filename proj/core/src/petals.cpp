#include "dbext/petals.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "dbext/factorization.hpp"

namespace dbext {

int PetalsTree::node_for(const Word& canon) const {
  auto it = index_by_canon.find(canon);
  return it == index_by_canon.end() ? -1 : it->second;
}

int PetalsTree::root_for_anchor(const Word& anchor) const {
  if (anchor.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("root_for_anchor: anchor must have length m");
  for (Symbol s : anchor)
    if (s >= k) throw std::invalid_argument("root_for_anchor: anchor must be s-free");
  Word c = anchor;
  c.push_back(k);
  const int idx = node_for(canonical_rotation(c).canon);
  if (idx < 0) throw std::logic_error("root_for_anchor: missing depth-1 node");
  return idx;
}

PetalsTree build_petals_tree(int k, int m) {
  if (k < 2 || m < 0) throw std::invalid_argument("build_petals_tree: bad parameters");
  const Symbol s = k;
  PetalsTree tree;
  tree.k = k;
  tree.m = m;
  for (Necklace& neck :
       necklaces(static_cast<std::size_t>(m) + 1, k + 1, [](std::size_t c) { return c >= 1; })) {
    PetalsTree::Node node;
    node.depth = static_cast<int>(count_symbol(neck.canon, s));
    node.necklace = std::move(neck);
    tree.index_by_canon.emplace(node.necklace.canon, static_cast<int>(tree.nodes.size()));
    tree.nodes.push_back(std::move(node));
  }

  // petal_of[i] = index of the depth-1 ancestor; petal_size counts the nodes
  // attached so far to each depth-1 subtree.
  std::vector<int> petal_of(tree.nodes.size(), -1);
  std::vector<std::size_t> petal_size(tree.nodes.size(), 0);
  int max_depth = 0;
  for (auto& node : tree.nodes) max_depth = std::max(max_depth, node.depth);

  for (int depth = 1; depth <= max_depth; ++depth) {
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      auto& node = tree.nodes[i];
      if (node.depth != depth) continue;
      // Candidate entries: rotations of the node's canonical form ending in s.
      std::optional<std::pair<int, Word>> best;  // (parent index, entry vertex)
      std::size_t best_size = 0;
      for (std::size_t off = 0; off < node.necklace.length(); ++off) {
        Word rot = rotated(node.necklace.canon, off);
        if (rot.back() != s) continue;
        Word entry(rot.begin(), rot.end() - 1);
        if (depth == 1) {
          // Unique s-ending rotation; the node is [entry . s] for its s-free
          // entry vertex and hangs off the root sentinel.
          node.parent = -1;
          node.entry_vertex = entry;
          petal_of[i] = static_cast<int>(i);
          petal_size[i] = 1;
          break;
        }
        for (Symbol c = 0; c < s; ++c) {
          rot.back() = c;
          const int parent = tree.node_for(canonical_rotation(rot).canon);
          if (parent < 0 || tree.nodes[parent].depth != depth - 1) continue;
          const std::size_t size = petal_size[petal_of[parent]];
          const bool better =
              !best || size > best_size ||
              (size == best_size &&
               (tree.nodes[parent].necklace.canon > tree.nodes[best->first].necklace.canon ||
                (tree.nodes[parent].necklace.canon == tree.nodes[best->first].necklace.canon &&
                 entry < best->second)));
          if (better) {
            best = {parent, entry};
            best_size = size;
          }
        }
        rot.back() = s;
      }
      if (depth >= 2) {
        if (!best) throw std::logic_error("build_petals_tree: no candidate parent");
        node.parent = best->first;
        node.entry_vertex = best->second;
        tree.nodes[best->first].children.push_back(static_cast<int>(i));
        petal_of[i] = petal_of[best->first];
        ++petal_size[petal_of[i]];
      }
      node.entry_edge = node.entry_vertex;
      node.entry_edge.push_back(s);
    }
  }
  // Nodes are created in lex order, so children lists are already sorted.
  return tree;
}

namespace {

void traverse(const PetalsTree& tree, int idx, std::vector<bool>& visited,
              std::vector<Word>& out) {
  visited[static_cast<std::size_t>(idx)] = true;
  const auto& node = tree.nodes[static_cast<std::size_t>(idx)];
  const std::size_t L = node.necklace.length();
  std::size_t off = 0;
  while (rotated(node.necklace.canon, off) != node.entry_edge) ++off;
  for (std::size_t step = 0; step < node.necklace.period; ++step) {
    Word edge = rotated(node.necklace.canon, (off + step) % L);
    const Word head = edge_head(edge);
    out.push_back(std::move(edge));
    // Descend into every untraversed child whose entry vertex is the head we
    // just arrived at; each child's walk is closed at that vertex.
    for (int child : node.children) {
      if (!visited[static_cast<std::size_t>(child)] &&
          tree.nodes[static_cast<std::size_t>(child)].entry_vertex == head)
        traverse(tree, child, visited, out);
    }
  }
}

}  // namespace

Word Petal::labels() const {
  Word out;
  out.reserve(edges.size());
  for (const Word& e : edges) out.push_back(e.back());
  return out;
}

Petal petal_for_vertex(const PetalsTree& tree, const Word& anchor) {
  Petal petal;
  petal.anchor = anchor;
  std::vector<bool> visited(tree.nodes.size(), false);
  traverse(tree, tree.root_for_anchor(anchor), visited, petal.edges);
  return petal;
}

}  // namespace dbext
