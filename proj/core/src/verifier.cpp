#include "dbext/verifier.hpp"

#include <algorithm>

namespace dbext {

CheckResult verify_order(const Word& seq, int k, int n) { return is_de_bruijn(seq, k, n); }

SubseqResult verify_subsequence(const Word& v, const Word& w) {
  if (v.empty()) return {true, {}};
  if (w.empty()) return {false, {}};
  const std::size_t wn = w.size();

  // next_at[p * A + c]: first position >= p in w.w holding symbol c.
  Symbol max_sym = 0;
  for (Symbol s : w) max_sym = std::max(max_sym, s);
  for (Symbol s : v) max_sym = std::max(max_sym, s);
  const std::size_t alpha = static_cast<std::size_t>(max_sym) + 1;
  const std::size_t dn = 2 * wn;
  std::vector<std::size_t> next_at((dn + 1) * alpha, dn);
  for (std::size_t p = dn; p-- > 0;) {
    for (std::size_t c = 0; c < alpha; ++c) next_at[p * alpha + c] = next_at[(p + 1) * alpha + c];
    next_at[p * alpha + static_cast<std::size_t>(w[p % wn])] = p;
  }

  for (std::size_t rot = 0; rot < v.size(); ++rot) {
    for (std::size_t start = 0; start < wn; ++start) {
      std::vector<std::size_t> positions;
      positions.reserve(v.size());
      std::size_t p = start;
      bool ok = true;
      for (std::size_t t = 0; t < v.size(); ++t) {
        const Symbol c = v[(rot + t) % v.size()];
        const std::size_t q = next_at[p * alpha + static_cast<std::size_t>(c)];
        if (q >= dn || q >= start + wn) {  // one full turn of w at most
          ok = false;
          break;
        }
        positions.push_back(q);
        p = q + 1;
      }
      if (ok) return {true, std::move(positions)};
    }
  }
  return {false, {}};
}

WindowResult verify_window(const Word& w, Symbol sym, std::size_t window) {
  if (window > w.size()) throw std::invalid_argument("verify_window: window exceeds word length");
  if (window == 0) return {false, 0};
  std::size_t count = 0;  // occurrences of sym in the current circular window
  for (std::size_t i = 0; i < window; ++i) count += w[i] == sym;
  for (std::size_t off = 0; off < w.size(); ++off) {
    if (count == 0) return {false, off};
    count -= w[off] == sym;
    count += w[(off + window) % w.size()] == sym;
  }
  return {true, 0};
}

std::string ExtensionReport::summary() const {
  auto line = [](const std::string& name, bool ok, const std::string& detail) {
    std::string s = std::string(ok ? "pass" : "FAIL") + "  " + name;
    if (!ok && !detail.empty()) s += "  (" + detail + ")";
    return s + "\n";
  };
  return line("de-bruijn", de_bruijn.ok, de_bruijn.diagnostic) +
         line("subsequence", subsequence.ok, "no circular embedding found") +
         line("window-" + std::to_string(window_bound), window.ok,
              "window at offset " + std::to_string(window.first_violation_offset) +
                  " lacks the new symbol");
}

ExtensionReport verify_extension(const Word& v, const Word& w, int k, int n,
                                 const std::optional<std::vector<std::size_t>>& witness) {
  ExtensionReport report;
  report.window_bound = static_cast<std::size_t>(n) + 2 * static_cast<std::size_t>(k) - 1;
  report.de_bruijn = verify_order(w, k + 1, n);

  bool witness_ok = false;
  if (witness && witness->size() == v.size()) {
    witness_ok = true;
    std::size_t prev = 0;
    for (std::size_t t = 0; t < witness->size(); ++t) {
      const std::size_t pos = (*witness)[t];
      if (pos >= w.size() || (t > 0 && pos <= prev) || w[pos] != v[t]) {
        witness_ok = false;
        break;
      }
      prev = pos;
    }
    if (witness_ok) report.subsequence = {true, *witness};
  }
  if (!witness_ok) report.subsequence = verify_subsequence(v, w);

  // The bound can exceed |w| only at degenerate sizes (n = 1); a window the
  // size of the whole word is then the strongest checkable claim.
  const std::size_t window = std::min(report.window_bound, w.size());
  report.window = w.empty() ? WindowResult{false, 0} : verify_window(w, k, window);
  return report;
}

}  // namespace dbext
