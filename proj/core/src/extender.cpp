#include "dbext/extender.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dbext/graph.hpp"
#include "dbext/petals.hpp"
#include "dbext/text.hpp"

namespace dbext {

namespace {

// Rotates v so its linear representative begins with the requested start
// vertex (a length-(n-1) window of v).
Word align_to_start(const Word& v, const Word& start) {
  const std::size_t m = start.size();
  if (m == 0) return v;
  for (std::size_t off = 0; off < v.size(); ++off) {
    bool match = true;
    for (std::size_t i = 0; i < m && match; ++i) match = v[(off + i) % v.size()] == start[i];
    if (match) return rotated(v, off);
  }
  throw std::invalid_argument("extend: start vertex is not a window of the input");
}

}  // namespace

ExtensionResult extend(const Word& v, int k, int n, const std::optional<Word>& start) {
  const CheckResult order = is_de_bruijn(v, k, n);
  if (!order.ok) throw std::invalid_argument("extend: input is not de Bruijn: " + order.diagnostic);
  const int m = n - 1;

  ExtensionResult result;
  result.k = k;
  result.n = n;
  result.window_bound = static_cast<std::size_t>(n) + 2 * static_cast<std::size_t>(k) - 1;
  if (start) {
    if (start->size() != static_cast<std::size_t>(m))
      throw std::invalid_argument("extend: start vertex must have length n-1");
    result.start_vertex = *start;
  } else {
    result.start_vertex.assign(v.begin(), v.begin() + m);
  }
  result.input = align_to_start(v, result.start_vertex);

  const EulerianCycle cycle = sequence_to_cycle(result.input, GraphParams{k, m});
  const Sectioning sectioning = sections_of(cycle);
  result.matching = perfect_matching(sectioning);
  const PetalsTree tree = build_petals_tree(k, m);

  const std::size_t in_len = cycle.labels.size();
  const std::size_t out_len = ipow(static_cast<std::size_t>(k) + 1, static_cast<unsigned>(n));
  Word out_labels;
  out_labels.reserve(out_len);
  std::vector<std::size_t> input_stream_pos(in_len);
  result.insertions.reserve(result.matching.assignments.size());

  // Single pass over the input edges: emit each label, and right after the
  // matched occurrence of a section splice the full petal of its anchor.
  for (std::size_t i = 0; i < in_len; ++i) {
    input_stream_pos[i] = out_labels.size();
    out_labels.push_back(cycle.labels[i]);
    const std::size_t section = i / static_cast<std::size_t>(k);
    const auto& assignment = result.matching.assignments[section];
    if (assignment.edge_index != i) continue;
    if (sectioning.heads[i] != assignment.vertex)
      throw std::logic_error("extend: matched vertex does not head its edge");
    const Petal petal = petal_for_vertex(tree, assignment.vertex);
    result.insertions.push_back({section, assignment.vertex,
                                 (out_labels.size() + static_cast<std::size_t>(m)) % out_len,
                                 petal.edges.size()});
    for (const Word& e : petal.edges) out_labels.push_back(e.back());
  }
  if (out_labels.size() != out_len)
    throw std::logic_error("extend: petal coverage gap: emitted " +
                           std::to_string(out_labels.size()) + " of " + std::to_string(out_len) +
                           " edges");

  // Walking the spliced labels must traverse every edge of G(k+1, m) once;
  // sequence_to_cycle re-checks that structurally.
  result.output = cycle_to_sequence(EulerianCycle{{k + 1, m}, result.start_vertex, out_labels});
  sequence_to_cycle(result.output, GraphParams{k + 1, m});

  // The linear representatives share the start vertex, so the first m output
  // symbols cover v's first m; the rest are the non-spliced label positions.
  result.embedding.reserve(ipow(static_cast<std::size_t>(k), static_cast<unsigned>(n)));
  for (int i = 0; i < m; ++i) result.embedding.push_back(static_cast<std::size_t>(i));
  for (std::size_t t = 0; t + static_cast<std::size_t>(m) < in_len; ++t)
    result.embedding.push_back(static_cast<std::size_t>(m) + input_stream_pos[t]);

  result.report = verify_extension(result.input, result.output, k, n, result.embedding);
  if (!result.report.pass())
    throw std::logic_error("extend: verification failed on construction output:\n" +
                           result.report.summary());
  return result;
}

std::string insertion_trace(const ExtensionResult& result) {
  const int m = result.n - 1;
  const EulerianCycle cycle = sequence_to_cycle(result.input, GraphParams{result.k, m});
  const PetalsTree tree = build_petals_tree(result.k, m);
  const int alphabet = result.k + 1;

  std::ostringstream os;
  Word tail = result.start_vertex;
  std::size_t next_insertion = 0;
  for (std::size_t i = 0; i < cycle.labels.size(); ++i) {
    const std::size_t section = i / static_cast<std::size_t>(result.k);
    const Word e = edge_word(tail, cycle.labels[i]);
    os << "edge " << i + 1 << ": " << word_to_string(e, alphabet) << " label "
       << word_to_string({cycle.labels[i]}, alphabet) << " section " << section << "\n";
    tail = edge_head(e);
    const auto& assignment = result.matching.assignments[section];
    if (assignment.edge_index == i) {
      const Insertion& ins = result.insertions[next_insertion++];
      os << "enter petal anchor=" << word_to_string(ins.anchor, alphabet) << " section "
         << ins.section << " position " << ins.position << " length " << ins.petal_length << "\n";
      for (const Word& pe : petal_for_vertex(tree, ins.anchor).edges)
        os << "  petal edge " << word_to_string(pe, alphabet) << " label "
           << word_to_string({pe.back()}, alphabet) << "\n";
      os << "exit petal anchor=" << word_to_string(ins.anchor, alphabet) << "\n";
    }
  }
  return os.str();
}

}  // namespace dbext
