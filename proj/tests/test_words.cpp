#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dbext/text.hpp"
#include "dbext/words.hpp"

using namespace dbext;

namespace {

Word w(const std::string& text, int alphabet = 10) { return parse_word(text, alphabet); }

// Brute-force necklace oracle: canonicalize all alphabet^L words by trying
// every rotation explicitly.
std::set<Word> brute_necklaces(std::size_t L, int alphabet) {
  std::set<Word> out;
  Word word(L, 0);
  for (;;) {
    Word best = word;
    for (std::size_t i = 1; i < L; ++i) best = std::min(best, rotated(word, i));
    out.insert(best);
    std::size_t i = L;
    while (i > 0 && word[i - 1] == alphabet - 1) word[--i] = 0;
    if (i == 0) break;
    ++word[i - 1];
  }
  return out;
}

std::size_t euler_phi(std::size_t x) {
  std::size_t result = x;
  for (std::size_t p = 2; p * p <= x; ++p) {
    if (x % p) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

std::size_t burnside_count(std::size_t L, std::size_t k) {
  std::size_t total = 0;
  for (std::size_t d = 1; d <= L; ++d) {
    if (L % d) continue;
    std::size_t pw = 1;
    for (std::size_t i = 0; i < L / d; ++i) pw *= k;
    total += euler_phi(d) * pw;
  }
  return total / L;
}

}  // namespace

TEST_CASE("canonical_rotation examples") {
  CHECK(canonical_rotation(w("100")).canon == w("001"));
  CHECK(canonical_rotation(w("100")).period == 3);
  CHECK(canonical_rotation(w("000")).canon == w("000"));
  CHECK(canonical_rotation(w("000")).period == 1);
  CHECK(canonical_rotation(w("202")).canon == w("022"));
  CHECK(canonical_rotation(w("202")).period == 3);
  CHECK_THROWS_AS(canonical_rotation(Word{}), std::invalid_argument);
}

TEST_CASE("rotations examples") {
  CHECK(rotations(w("012")) == std::vector<Word>{w("012"), w("120"), w("201")});
  CHECK(rotations(w("11")) == std::vector<Word>{w("11"), w("11")});
  CHECK(rotations(w("0011")) == std::vector<Word>{w("0011"), w("0110"), w("1100"), w("1001")});
}

TEST_CASE("count_symbol examples") {
  CHECK(count_symbol(w("122"), 2) == 2);
  CHECK(count_symbol(w("000"), 2) == 0);
  CHECK(count_symbol(w("222"), 2) == 3);
}

TEST_CASE("necklace enumeration examples") {
  const auto n22 = necklaces(3, 2);
  REQUIRE(n22.size() == 4);
  CHECK(n22[0].canon == w("000"));
  CHECK(n22[1].canon == w("001"));
  CHECK(n22[2].canon == w("011"));
  CHECK(n22[3].canon == w("111"));

  const auto with_s = necklaces(3, 3, [](std::size_t c) { return c >= 1; });
  std::vector<Word> canons;
  for (const auto& neck : with_s) canons.push_back(neck.canon);
  CHECK(canons == std::vector<Word>{w("002"), w("012"), w("021"), w("022"), w("112"), w("122"),
                                    w("222")});

  CHECK(necklaces(3, 3).size() == 11);
}

TEST_CASE("canonical_rotation is idempotent and rotation invariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t L = 1 + rng() % 10;
    const int alphabet = 2 + static_cast<int>(rng() % 3);
    Word word(L);
    for (auto& s : word) s = static_cast<Symbol>(rng() % static_cast<unsigned>(alphabet));
    const Necklace canon = canonical_rotation(word);
    CHECK(canonical_rotation(canon.canon) == canon);
    for (std::size_t i = 0; i < L; ++i) CHECK(canonical_rotation(rotated(word, i)) == canon);
  }
}

TEST_CASE("necklaces agree with the brute-force oracle and Burnside count") {
  for (int alphabet = 2; alphabet <= 4; ++alphabet) {
    for (std::size_t L = 1; L <= 7; ++L) {
      const auto got = necklaces(L, alphabet);
      const auto want = brute_necklaces(L, alphabet);
      REQUIRE(got.size() == want.size());
      CHECK(got.size() == burnside_count(L, static_cast<std::size_t>(alphabet)));
      std::size_t period_sum = 0;
      auto it = want.begin();
      for (const auto& neck : got) {
        CHECK(neck.canon == *it++);
        period_sum += neck.period;
      }
      // Rotation classes partition all alphabet^L words.
      std::size_t total = 1;
      for (std::size_t i = 0; i < L; ++i) total *= static_cast<std::size_t>(alphabet);
      CHECK(period_sum == total);
    }
  }
}

TEST_CASE("word text round trip") {
  CHECK(word_to_string(w("0a", 36), 36) == "0a");
  CHECK(parse_word("3,17,40", 41) == Word{3, 17, 40});
  CHECK(word_to_string(Word{3, 17, 40}, 41) == "3,17,40");
  CHECK_THROWS_AS(parse_word("12", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x,1", 40), std::invalid_argument);
}
