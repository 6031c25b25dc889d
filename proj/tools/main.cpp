// Command line front end: generation, extension, verification and inspection
// of de Bruijn sequences and of the alphabet-extension pipeline structures.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage/parse error,
// 3 precondition failure (input not de Bruijn).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dbext/extender.hpp"
#include "dbext/factorization.hpp"
#include "dbext/graph.hpp"
#include "dbext/matching.hpp"
#include "dbext/petals.hpp"
#include "dbext/text.hpp"
#include "dbext/verifier.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

std::size_t size_cap_from_env() {
  if (const char* env = std::getenv("DEBRUIJN_SIZE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument("DEBRUIJN_SIZE_CAP is not a number");
    }
  }
  return dbext::kDefaultSizeCap;
}

std::string read_seq_arg(const std::string& arg) {
  if (arg != "-") return arg;
  std::string line;
  std::getline(std::cin, line);
  return line;
}

std::optional<dbext::Word> parse_start(const std::optional<std::string>& text, int alphabet) {
  if (!text) return std::nullopt;
  return dbext::parse_word(*text, alphabet);
}

json report_json(const dbext::ExtensionResult& r) {
  json insertions = json::array();
  for (const auto& ins : r.insertions) {
    insertions.push_back({{"section", ins.section},
                          {"anchor", dbext::word_to_string(ins.anchor, r.k + 1)},
                          {"position", ins.position},
                          {"petal_len", ins.petal_length}});
  }
  json matching = json::array();
  for (const auto& a : r.matching.assignments) {
    matching.push_back({{"section", a.section},
                        {"vertex", dbext::word_to_string(a.vertex, r.k)},
                        {"edge_index", a.edge_index}});
  }
  return json{{"k", r.k},
              {"n", r.n},
              {"start", dbext::word_to_string(r.start_vertex, r.k)},
              {"input", dbext::word_to_string(r.input, r.k)},
              {"output", dbext::word_to_string(r.output, r.k + 1)},
              {"embedding", r.embedding},
              {"insertions", insertions},
              {"matching", matching},
              {"window_bound", r.window_bound},
              {"checks",
               {{"de_bruijn", r.report.de_bruijn.ok},
                {"subsequence", r.report.subsequence.ok},
                {"window", r.report.window.ok}}}};
}

int cmd_generate(int k, int n, const std::optional<std::string>& start_text,
                 const std::optional<std::uint64_t>& seed) {
  const auto start = parse_start(start_text, k);
  const dbext::Word seq = seed ? dbext::generate_de_bruijn_seeded(k, n, *seed, start,
                                                                  size_cap_from_env())
                               : dbext::generate_de_bruijn(k, n, start, size_cap_from_env());
  std::cout << dbext::word_to_string(seq, k) << "\n";
  return kExitOk;
}

int cmd_extend(const std::string& seq_arg, int k, int n,
               const std::optional<std::string>& start_text,
               const std::optional<std::string>& report_path) {
  const dbext::Word v = dbext::parse_word(read_seq_arg(seq_arg), k);
  if (const auto check = dbext::is_de_bruijn(v, k, n); !check.ok) {
    std::cerr << "input is not de Bruijn of order " << n << " over " << k
              << " symbols: " << check.diagnostic << "\n";
    return kExitPrecondition;
  }
  const auto result = dbext::extend(v, k, n, parse_start(start_text, k));
  std::cout << dbext::word_to_string(result.output, k + 1) << "\n";
  if (report_path) {
    std::ofstream out(*report_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write report to " << *report_path << "\n";
      return kExitUsage;
    }
    out << report_json(result).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& seq_arg, int k, int n,
               const std::optional<std::string>& input_text) {
  if (!input_text) {
    const dbext::Word w = dbext::parse_word(read_seq_arg(seq_arg), k);
    const auto check = dbext::verify_order(w, k, n);
    std::cout << (check.ok ? "pass" : "FAIL") << "  de-bruijn order " << n << " over " << k
              << " symbols";
    if (!check.ok) std::cout << "  (" << check.diagnostic << ")";
    std::cout << "\n";
    return check.ok ? kExitOk : kExitVerifyFail;
  }
  const dbext::Word v = dbext::parse_word(*input_text, k);
  const dbext::Word w = dbext::parse_word(read_seq_arg(seq_arg), k + 1);
  const auto report = dbext::verify_extension(v, w, k, n);
  std::cout << report.summary();
  return report.pass() ? kExitOk : kExitVerifyFail;
}

int cmd_inspect(const std::string& what, const std::string& seq_arg, int k, int n,
                const std::optional<std::string>& start_text, bool as_json) {
  const int m = n - 1;
  if (what == "sections" || what == "matching") {
    if (seq_arg.empty()) throw std::invalid_argument("inspect " + what + " requires --seq");
    dbext::Word v = dbext::parse_word(read_seq_arg(seq_arg), k);
    if (const auto check = dbext::is_de_bruijn(v, k, n); !check.ok) {
      std::cerr << "sequence is not de Bruijn: " << check.diagnostic << "\n";
      return kExitPrecondition;
    }
    if (const auto start = parse_start(start_text, k)) {
      std::size_t off = 0;
      for (; off < v.size(); ++off) {
        bool match = true;
        for (std::size_t i = 0; i < start->size() && match; ++i)
          match = v[(off + i) % v.size()] == (*start)[i];
        if (match) break;
      }
      if (off == v.size()) throw std::invalid_argument("start is not a window of the sequence");
      v = dbext::rotated(v, off);
    }
    const auto cycle = dbext::sequence_to_cycle(v, dbext::GraphParams{k, m});
    const auto sectioning = dbext::sections_of(cycle);
    if (what == "sections") {
      json sections = json::array();
      for (std::size_t j = 0; j < sectioning.section_count(); ++j) {
        json heads = json::array();
        std::cout << "section " << j << ":";
        for (const auto& h : sectioning.section(j)) {
          std::cout << " " << dbext::word_to_string(h, k);
          heads.push_back(dbext::word_to_string(h, k));
        }
        std::cout << "\n";
        sections.push_back(heads);
      }
      if (as_json) std::cout << json{{"sections", sections}}.dump(2) << "\n";
      return kExitOk;
    }
    const auto matching = dbext::perfect_matching(sectioning);
    for (const auto& a : matching.assignments)
      std::cout << "section " << a.section << ": vertex " << dbext::word_to_string(a.vertex, k)
                << " edge_index " << a.edge_index << "\n";
    return kExitOk;
  }

  if (what == "petals-tree" || what == "petals") {
    const auto tree = dbext::build_petals_tree(k, m);
    if (what == "petals-tree") {
      if (as_json) {
        json nodes = json::array();
        for (const auto& node : tree.nodes) {
          json children = json::array();
          for (int c : node.children)
            children.push_back(dbext::word_to_string(
                tree.nodes[static_cast<std::size_t>(c)].necklace.canon, k + 1));
          nodes.push_back(
              {{"necklace", dbext::word_to_string(node.necklace.canon, k + 1)},
               {"depth", node.depth},
               {"parent", node.parent < 0
                              ? json(nullptr)
                              : json(dbext::word_to_string(
                                    tree.nodes[static_cast<std::size_t>(node.parent)].necklace.canon,
                                    k + 1))},
               {"entry_vertex", dbext::word_to_string(node.entry_vertex, k + 1)},
               {"entry_edge", dbext::word_to_string(node.entry_edge, k + 1)},
               {"children", children}});
        }
        std::cout << json{{"k", k}, {"n", n}, {"nodes", nodes}}.dump(2) << "\n";
      } else {
        // Indented depth-first dump from the depth-1 nodes.
        auto dump = [&](auto&& self, int idx, int indent) -> void {
          const auto& node = tree.nodes[static_cast<std::size_t>(idx)];
          std::cout << std::string(static_cast<std::size_t>(indent) * 2, ' ') << "["
                    << dbext::word_to_string(node.necklace.canon, k + 1) << "] entry "
                    << dbext::word_to_string(node.entry_vertex, k + 1) << "\n";
          for (int c : node.children) self(self, c, indent + 1);
        };
        for (std::size_t i = 0; i < tree.nodes.size(); ++i)
          if (tree.nodes[i].depth == 1) dump(dump, static_cast<int>(i), 0);
      }
      return kExitOk;
    }
    // petals: one line per s-free anchor, in lexicographic order.
    const std::size_t n_anchors = dbext::ipow(static_cast<std::size_t>(k),
                                              static_cast<unsigned>(m));
    for (std::size_t code = 0; code < n_anchors; ++code) {
      const dbext::Word anchor = dbext::unpack_word(code, k, static_cast<std::size_t>(m));
      const auto petal = dbext::petal_for_vertex(tree, anchor);
      std::cout << "petal " << dbext::word_to_string(anchor, k) << ": labels "
                << dbext::word_to_string(petal.labels(), k + 1) << " (" << petal.edges.size()
                << " edges)\n";
    }
    return kExitOk;
  }
  throw std::invalid_argument("unknown inspect target: " + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"de Bruijn sequence alphabet extension"};
  app.require_subcommand(1);

  int k = 2, n = 1;
  std::string seq;
  std::optional<std::string> start_text, report_path, input_text;
  std::optional<std::uint64_t> seed;
  std::string inspect_what;
  bool as_json = false;

  auto* gen = app.add_subcommand("generate", "Generate a de Bruijn sequence (Hierholzer)");
  gen->add_option("--k", k, "alphabet size")->required();
  gen->add_option("--n", n, "order")->required();
  gen->add_option("--start", start_text, "start vertex (length n-1)");
  gen->add_option("--seed", seed, "randomize label orders with this seed");

  auto* ext = app.add_subcommand("extend", "Extend a de Bruijn sequence to k+1 symbols");
  ext->add_option("--seq", seq, "input sequence ('-' reads stdin)")->required();
  ext->add_option("--k", k, "alphabet size of the input")->required();
  ext->add_option("--n", n, "order")->required();
  ext->add_option("--start", start_text, "start vertex (length n-1 window of the input)");
  ext->add_option("--report", report_path, "write a JSON report to this path");

  auto* ver = app.add_subcommand("verify", "Verify de Bruijn / extension properties");
  ver->add_option("--seq", seq, "sequence to check ('-' reads stdin)")->required();
  ver->add_option("--k", k, "base alphabet size")->required();
  ver->add_option("--n", n, "order")->required();
  ver->add_option("--input", input_text, "original sequence; enables the full extension checks");

  auto* ins = app.add_subcommand("inspect", "Dump pipeline structures");
  ins->add_option("what", inspect_what, "sections | matching | petals-tree | petals")
      ->required()
      ->check(CLI::IsMember({"sections", "matching", "petals-tree", "petals"}));
  ins->add_option("--seq", seq, "sequence (for sections/matching)");
  ins->add_option("--k", k, "alphabet size")->required();
  ins->add_option("--n", n, "order")->required();
  ins->add_option("--start", start_text, "start vertex");
  ins->add_flag("--json", as_json, "machine readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(k, n, start_text, seed);
    if (ext->parsed()) return cmd_extend(seq, k, n, start_text, report_path);
    if (ver->parsed()) return cmd_verify(seq, k, n, input_text);
    return cmd_inspect(inspect_what, seq, k, n, start_text, as_json);
  } catch (const dbext::size_cap_error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
}
