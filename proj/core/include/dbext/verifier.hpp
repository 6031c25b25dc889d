#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dbext/graph.hpp"
#include "dbext/words.hpp"

namespace dbext {

/// Same contract as is_de_bruijn.
CheckResult verify_order(const Word& seq, int k, int n);

struct SubseqResult {
  bool ok = false;
  /// Strictly increasing 0-based positions into the doubled word w.w (take
  /// them mod |w| for circular positions) spelling a rotation of v.
  std::vector<std::size_t> positions;
};

/// True iff some rotation of v embeds as a subsequence into w read
/// circularly within one full turn. Greedy scan of each rotation of v
/// against w.w with at most |w| consumed symbols per start.
SubseqResult verify_subsequence(const Word& v, const Word& w);

struct WindowResult {
  bool ok = false;
  std::size_t first_violation_offset = 0;
};

/// True iff every circular window of the given length contains sym.
/// Throws std::invalid_argument when window > |w|.
WindowResult verify_window(const Word& w, Symbol sym, std::size_t window);

/// Combined report for the three extension guarantees. An optional witness
/// embedding (positions of v inside w, aligned linear representatives) is
/// validated first and skips the subsequence search when it checks out.
struct ExtensionReport {
  CheckResult de_bruijn;
  SubseqResult subsequence;
  WindowResult window;
  std::size_t window_bound = 0;

  bool pass() const { return de_bruijn.ok && subsequence.ok && window.ok; }
  std::string summary() const;
};

ExtensionReport verify_extension(const Word& v, const Word& w, int k, int n,
                                 const std::optional<std::vector<std::size_t>>& witness = {});

}  // namespace dbext
