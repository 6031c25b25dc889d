#include "dbext/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "dbext/text.hpp"

namespace dbext {

std::size_t ipow(std::size_t base, unsigned exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

std::size_t GraphParams::vertex_count() const {
  return ipow(static_cast<std::size_t>(k), static_cast<unsigned>(m));
}

std::size_t GraphParams::edge_count() const {
  return ipow(static_cast<std::size_t>(k), static_cast<unsigned>(m) + 1);
}

std::size_t pack_word(const Word& w, int base) {
  std::size_t code = 0;
  for (Symbol s : w) code = code * static_cast<std::size_t>(base) + static_cast<std::size_t>(s);
  return code;
}

Word unpack_word(std::size_t code, int base, std::size_t length) {
  Word w(length);
  for (std::size_t i = length; i-- > 0;) {
    w[i] = static_cast<Symbol>(code % static_cast<std::size_t>(base));
    code /= static_cast<std::size_t>(base);
  }
  return w;
}

Word edge_word(const Word& tail, Symbol label) {
  Word e = tail;
  e.push_back(label);
  return e;
}

Word edge_tail(const Word& edge) { return Word(edge.begin(), edge.end() - 1); }

Word edge_head(const Word& edge) { return Word(edge.begin() + 1, edge.end()); }

namespace {

void check_symbols(const Word& w, int alphabet_size, const char* who) {
  for (Symbol s : w) {
    if (s < 0 || s >= alphabet_size)
      throw std::invalid_argument(std::string(who) + ": symbol out of range for alphabet of size " +
                                  std::to_string(alphabet_size));
  }
}

}  // namespace

EulerianCycle sequence_to_cycle(const Word& seq, const GraphParams& params) {
  const std::size_t len = params.edge_count();
  if (seq.size() != len)
    throw std::invalid_argument("sequence_to_cycle: expected length " + std::to_string(len) +
                                ", got " + std::to_string(seq.size()));
  check_symbols(seq, params.k, "sequence_to_cycle");

  const std::size_t m = static_cast<std::size_t>(params.m);
  EulerianCycle cycle;
  cycle.params = params;
  cycle.start_vertex.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(m));
  cycle.labels.resize(len);
  for (std::size_t i = 0; i < len; ++i) cycle.labels[i] = seq[(i + m) % len];

  // Walk the cycle and reject repeated edges.
  std::vector<bool> used(len, false);
  const std::size_t vmod = params.vertex_count() / (m > 0 ? static_cast<std::size_t>(params.k) : 1);
  std::size_t v = pack_word(cycle.start_vertex, params.k);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t edge_code = v * static_cast<std::size_t>(params.k) +
                                  static_cast<std::size_t>(cycle.labels[i]);
    if (used[edge_code])
      throw std::invalid_argument("sequence_to_cycle: repeated edge " +
                                  word_to_string(unpack_word(edge_code, params.k, m + 1), params.k));
    used[edge_code] = true;
    v = (m > 0 ? (v % vmod) * static_cast<std::size_t>(params.k) +
                     static_cast<std::size_t>(cycle.labels[i])
               : 0);
  }
  return cycle;
}

Word cycle_to_sequence(const EulerianCycle& cycle) {
  const std::size_t m = cycle.start_vertex.size();
  Word seq = cycle.start_vertex;
  seq.insert(seq.end(), cycle.labels.begin(),
             cycle.labels.end() - static_cast<std::ptrdiff_t>(m));
  return seq;
}

CheckResult is_de_bruijn(const Word& seq, int k, int n) {
  const std::size_t want = ipow(static_cast<std::size_t>(k), static_cast<unsigned>(n));
  if (seq.size() != want)
    return {false, "wrong length: expected " + std::to_string(want) + ", got " +
                       std::to_string(seq.size())};
  for (Symbol s : seq)
    if (s < 0 || s >= k) return {false, "symbol " + std::to_string(s) + " out of range"};

  const std::size_t mod = want / static_cast<std::size_t>(k);
  std::vector<bool> seen(want, false);
  std::size_t code = 0;
  for (int i = 0; i < n - 1; ++i)
    code = code * static_cast<std::size_t>(k) + static_cast<std::size_t>(seq[i]);
  for (std::size_t i = 0; i < want; ++i) {
    code = (code % mod) * static_cast<std::size_t>(k) +
           static_cast<std::size_t>(seq[(i + static_cast<std::size_t>(n) - 1) % want]);
    if (seen[code])
      return {false, "duplicate length-" + std::to_string(n) + " word " +
                         word_to_string(unpack_word(code, k, static_cast<std::size_t>(n)), k) +
                         " at position " + std::to_string(i)};
    seen[code] = true;
  }
  return {true, ""};
}

namespace {

// Iterative Hierholzer over the implicit graph. label_order[v] lists the k
// labels in the order they are consumed at vertex v.
Word hierholzer(int k, int n, const std::optional<Word>& start, std::size_t size_cap,
                const std::vector<Symbol>& label_order) {
  if (k < 2) throw std::invalid_argument("generate_de_bruijn: k must be >= 2");
  if (n < 1) throw std::invalid_argument("generate_de_bruijn: n must be >= 1");
  const GraphParams params{k, n - 1};
  const std::size_t edges = params.edge_count();
  if (edges > size_cap)
    throw size_cap_error("generate_de_bruijn: k^n = " + std::to_string(edges) +
                         " exceeds size cap " + std::to_string(size_cap));

  const std::size_t m = static_cast<std::size_t>(n - 1);
  const std::size_t nverts = params.vertex_count();
  const std::size_t vmod = (m > 0 ? nverts / static_cast<std::size_t>(k) : 1);

  Word start_vertex(m, 0);
  if (start) {
    if (start->size() != m)
      throw std::invalid_argument("generate_de_bruijn: start vertex must have length n-1");
    check_symbols(*start, k, "generate_de_bruijn");
    start_vertex = *start;
  }

  std::vector<int> next(nverts, 0);
  std::vector<std::pair<std::size_t, Symbol>> stack;
  stack.reserve(edges + 1);
  stack.emplace_back(pack_word(start_vertex, k), Symbol{-1});
  Word out;
  out.reserve(edges);
  while (!stack.empty()) {
    auto& [v, entry] = stack.back();
    if (next[v] < k) {
      const Symbol label = label_order[v * static_cast<std::size_t>(k) +
                                       static_cast<std::size_t>(next[v]++)];
      const std::size_t head =
          (m > 0 ? (v % vmod) * static_cast<std::size_t>(k) + static_cast<std::size_t>(label) : 0);
      stack.emplace_back(head, label);
    } else {
      if (entry >= 0) out.push_back(entry);
      stack.pop_back();
    }
  }
  // The graph is strongly connected, so the circuit covers every edge.
  std::reverse(out.begin(), out.end());

  return cycle_to_sequence(EulerianCycle{params, start_vertex, std::move(out)});
}

}  // namespace

Word generate_de_bruijn(int k, int n, const std::optional<Word>& start, std::size_t size_cap) {
  const std::size_t nverts = ipow(static_cast<std::size_t>(k), static_cast<unsigned>(n - 1));
  if (ipow(static_cast<std::size_t>(k), static_cast<unsigned>(n)) > size_cap)
    throw size_cap_error("generate_de_bruijn: size cap exceeded");
  std::vector<Symbol> order(nverts * static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < nverts; ++v)
    for (int l = 0; l < k; ++l) order[v * static_cast<std::size_t>(k) + static_cast<std::size_t>(l)] = l;
  return hierholzer(k, n, start, size_cap, order);
}

Word generate_de_bruijn_seeded(int k, int n, std::uint64_t seed, const std::optional<Word>& start,
                               std::size_t size_cap) {
  const std::size_t nverts = ipow(static_cast<std::size_t>(k), static_cast<unsigned>(n - 1));
  if (ipow(static_cast<std::size_t>(k), static_cast<unsigned>(n)) > size_cap)
    throw size_cap_error("generate_de_bruijn: size cap exceeded");
  std::mt19937_64 rng(seed);
  std::vector<Symbol> order(nverts * static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < nverts; ++v) {
    auto begin = order.begin() + static_cast<std::ptrdiff_t>(v * static_cast<std::size_t>(k));
    std::iota(begin, begin + k, 0);
    std::shuffle(begin, begin + k, rng);
  }
  return hierholzer(k, n, start, size_cap, order);
}

}  // namespace dbext
