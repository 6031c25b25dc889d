#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dbext/matching.hpp"
#include "dbext/verifier.hpp"
#include "dbext/words.hpp"

namespace dbext {

/// One petal splice: right after the matched occurrence in section `section`
/// the petal for `anchor` was inserted at `position` in the output's linear
/// representative.
struct Insertion {
  std::size_t section;
  Word anchor;
  std::size_t position;
  std::size_t petal_length;
};

struct ExtensionResult {
  int k = 0;
  int n = 0;
  Word start_vertex;                   // length n-1
  Word input;                          // linear representative from start
  Word output;                         // length (k+1)^n, over k+1 symbols
  std::vector<std::size_t> embedding;  // k^n positions of input inside output
  std::vector<Insertion> insertions;   // indexed by section
  MatchingResult matching;
  std::size_t window_bound = 0;  // n + 2k - 1
  ExtensionReport report;        // verified before extend() returns
};

/// Extends a de Bruijn sequence of order n over k symbols to one over k+1
/// symbols: splits the Eulerian cycle of v in G(k, n-1) into sections,
/// matches each section to a vertex occurrence by maximum flow, and splices
/// the vertex's petal at the matched occurrence. Fail-closed: the result is
/// verified before it is returned.
///
/// Throws std::invalid_argument when v is not de Bruijn of order n over k
/// symbols or start is not a length-(n-1) window of v; std::logic_error on
/// internal inconsistency (a bug signal, never expected).
ExtensionResult extend(const Word& v, int k, int n, const std::optional<Word>& start = {});

/// Step-by-step listing of emitted edges and petal entries/exits.
std::string insertion_trace(const ExtensionResult& result);

}  // namespace dbext
