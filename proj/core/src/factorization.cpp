#include "dbext/factorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace dbext {

std::vector<NecklaceCycle> necklace_cycles(const GraphParams& params) {
  std::vector<NecklaceCycle> out;
  for (Necklace& neck : necklaces(static_cast<std::size_t>(params.m) + 1, params.k)) {
    NecklaceCycle cycle;
    cycle.edges.reserve(neck.period);
    for (std::size_t i = 0; i < neck.period; ++i) cycle.edges.push_back(rotated(neck.canon, i));
    cycle.necklace = std::move(neck);
    out.push_back(std::move(cycle));
  }
  return out;
}

bool is_augmenting_edge(const Word& edge, int k) {
  return std::find(edge.begin(), edge.end(), Symbol{k}) != edge.end();
}

bool cw_adjacent(const Necklace& v, const Necklace& w) {
  if (v.length() != w.length()) throw std::invalid_argument("cw_adjacent: length mismatch");
  // u ranges over the length-(L-1) suffixes of rotations of v and prefixes of
  // rotations of w; adjacency means the two cycles share the vertex u.
  for (std::size_t i = 0; i < v.length(); ++i) {
    const Word rv = rotated(v.canon, i);
    for (std::size_t j = 0; j < w.length(); ++j) {
      const Word rw = rotated(w.canon, j);
      if (std::equal(rv.begin() + 1, rv.end(), rw.begin(), rw.end() - 1)) return true;
    }
  }
  return false;
}

bool CircularWordGraph::adjacent(const Necklace& v, const Necklace& w) const {
  return cw_adjacent(v, w);
}

std::vector<Necklace> CircularWordGraph::neighbors(const Necklace& v) const {
  std::vector<Necklace> out;
  for (std::size_t i = 0; i < v.length(); ++i) {
    Word u = rotated(v.canon, i + 1);  // drop the leading symbol of rotation i
    for (Symbol b = 0; b < alphabet_size; ++b) {
      u[v.length() - 1] = b;
      Necklace cand = canonical_rotation(u);
      if (std::binary_search(nodes.begin(), nodes.end(), cand)) out.push_back(std::move(cand));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CircularWordGraph restricted_cw_graph(int k, int m) {
  CircularWordGraph g;
  g.alphabet_size = k + 1;
  g.word_length = static_cast<std::size_t>(m) + 1;
  g.nodes = necklaces(g.word_length, k + 1, [](std::size_t c) { return c >= 1; });
  return g;
}

}  // namespace dbext
