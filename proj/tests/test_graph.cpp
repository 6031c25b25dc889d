#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "dbext/graph.hpp"
#include "dbext/text.hpp"

using namespace dbext;

namespace {
Word w(const std::string& text, int alphabet = 10) { return parse_word(text, alphabet); }
}  // namespace

TEST_CASE("edge words") {
  CHECK(edge_word(w("10"), 2) == w("102"));
  CHECK(edge_word(w("11"), 0) == w("110"));
  CHECK(edge_head(w("102")) == w("02"));
  CHECK(edge_tail(w("102")) == w("10"));
}

TEST_CASE("sequence_to_cycle on the worked order-3 example") {
  const auto cycle = sequence_to_cycle(w("11000101"), GraphParams{2, 2});
  CHECK(cycle.start_vertex == w("11"));
  CHECK(cycle.labels == w("00010111"));

  // Heads along the walk.
  Word vertex = cycle.start_vertex;
  std::vector<Word> heads;
  for (Symbol label : cycle.labels) {
    vertex = edge_head(edge_word(vertex, label));
    heads.push_back(vertex);
  }
  CHECK(heads == std::vector<Word>{w("10"), w("00"), w("00"), w("01"), w("10"), w("01"), w("11"),
                                   w("11")});
}

TEST_CASE("sequence_to_cycle on the order-2 example and error cases") {
  const auto cycle = sequence_to_cycle(w("0011"), GraphParams{2, 1});
  CHECK(cycle.start_vertex == w("0"));
  CHECK(cycle.labels == w("0110"));

  CHECK_THROWS_WITH_AS(sequence_to_cycle(w("11000100"), GraphParams{2, 2}),
                       doctest::Contains("repeated edge"), std::invalid_argument);
  CHECK_THROWS_AS(sequence_to_cycle(w("110"), GraphParams{2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(sequence_to_cycle(w("11000102"), GraphParams{2, 2}), std::invalid_argument);
}

TEST_CASE("cycle round trip is the identity") {
  for (const auto& [seq, params] :
       std::vector<std::pair<Word, GraphParams>>{{w("11000101"), {2, 2}},
                                                 {w("0011"), {2, 1}},
                                                 {generate_de_bruijn(3, 3), {3, 2}}}) {
    const auto cycle = sequence_to_cycle(seq, params);
    CHECK(cycle_to_sequence(cycle) == seq);
  }
}

TEST_CASE("is_de_bruijn examples") {
  CHECK(is_de_bruijn(w("0011"), 2, 2).ok);
  CHECK(is_de_bruijn(w("11000101"), 2, 3).ok);
  const auto bad = is_de_bruijn(w("0101"), 2, 2);
  CHECK_FALSE(bad.ok);
  CHECK(!bad.diagnostic.empty());
  CHECK_FALSE(is_de_bruijn(w("001"), 2, 2).ok);
}

TEST_CASE("generate_de_bruijn small cases") {
  CHECK(is_de_bruijn(generate_de_bruijn(2, 1), 2, 1).ok);
  CHECK(generate_de_bruijn(2, 1).size() == 2);
  CHECK(is_de_bruijn(generate_de_bruijn(2, 2), 2, 2).ok);
  CHECK(is_de_bruijn(generate_de_bruijn(3, 3), 3, 3).ok);
  CHECK(is_de_bruijn(generate_de_bruijn(2, 10), 2, 10).ok);
  CHECK_THROWS_AS(generate_de_bruijn(40, 6), size_cap_error);
}

TEST_CASE("generate is deterministic and honours the start vertex") {
  CHECK(generate_de_bruijn(3, 4) == generate_de_bruijn(3, 4));
  const Word start = w("21", 3);
  const Word seq = generate_de_bruijn(3, 3, start);
  CHECK(Word(seq.begin(), seq.begin() + 2) == start);
  CHECK(is_de_bruijn(seq, 3, 3).ok);
}

TEST_CASE("seeded generation stays valid and varies") {
  std::set<Word> distinct;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Word seq = generate_de_bruijn_seeded(2, 5, seed);
    CHECK(is_de_bruijn(seq, 2, 5).ok);
    CHECK(seq == generate_de_bruijn_seeded(2, 5, seed));
    distinct.insert(seq);
  }
  CHECK(distinct.size() > 1);
}

TEST_CASE("every vertex heads exactly k edges in an Eulerian cycle") {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}}) {
    const auto cycle = sequence_to_cycle(generate_de_bruijn(k, n), GraphParams{k, n - 1});
    std::map<Word, int> head_count;
    Word vertex = cycle.start_vertex;
    for (Symbol label : cycle.labels) {
      vertex = edge_head(edge_word(vertex, label));
      ++head_count[vertex];
    }
    CHECK(head_count.size() == cycle.params.vertex_count());
    for (const auto& [_, count] : head_count) CHECK(count == k);
  }
}
