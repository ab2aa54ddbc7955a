#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "grlie/word.hpp"

using namespace grlie;

TEST_CASE("alphabetical order: prefix is smaller, else first difference") {
  CHECK(compare({1}, {1, 2}) < 0);
  CHECK(compare({1, 2}, {1}) > 0);
  CHECK(compare({1, 3}, {2}) < 0);
  CHECK(compare({2, 1}, {2, 1}) == 0);
  CHECK(Word{1} < Word{1, 1});
}

TEST_CASE("is_lyndon") {
  CHECK(is_lyndon({1}));
  CHECK(is_lyndon({1, 2}));
  CHECK_FALSE(is_lyndon({2, 1}));
  CHECK_FALSE(is_lyndon({1, 2, 1, 2}));  // periodic
  CHECK(is_lyndon({1, 1, 2}));
  CHECK(is_lyndon({1, 2, 2}));
  CHECK_FALSE(is_lyndon({1, 1}));
  CHECK_THROWS_AS((void)is_lyndon({}), std::invalid_argument);
}

TEST_CASE("lyndon_words counts match Witt numbers") {
  auto by_len = lyndon_words(6, 4);
  CHECK(by_len[0].size() == 6);
  CHECK(by_len[1].size() == 15);
  CHECK(by_len[2].size() == 70);
  CHECK(by_len[3].size() == 315);
  auto two = lyndon_words(2, 5);
  CHECK(two[0].size() == 2);
  CHECK(two[1].size() == 1);
  CHECK(two[2].size() == 2);
  CHECK(two[3].size() == 3);
  CHECK(two[4].size() == 6);
}

TEST_CASE("lyndon_words are sorted, Lyndon and complete") {
  auto by_len = lyndon_words(3, 4);
  for (const auto& group : by_len) {
    CHECK(std::is_sorted(group.begin(), group.end()));
    for (const auto& w : group) CHECK(is_lyndon(w));
  }
  // exhaustive cross-check at length 3 over 3 letters
  int count = 0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        Word w = {Letter(a), Letter(b), Letter(c)};
        if (is_lyndon(w)) ++count;
      }
  CHECK(count == (int)by_len[2].size());
}

TEST_CASE("standard factorization picks the least proper suffix") {
  auto [u, v] = standard_factorization({1, 2, 2});
  CHECK(u == Word{1, 2});
  CHECK(v == Word{2});
  auto [u2, v2] = standard_factorization({1, 1, 2});
  CHECK(u2 == Word{1});
  CHECK(v2 == Word{1, 2});
  auto [u3, v3] = standard_factorization({1, 2});
  CHECK(u3 == Word{1});
  CHECK(v3 == Word{2});
  // both parts are Lyndon on every word of length <= 5 over two letters
  for (const auto& group : lyndon_words(2, 5))
    for (const auto& w : group) {
      if (w.size() < 2) continue;
      auto [p, s] = standard_factorization(w);
      CHECK(is_lyndon(p));
      CHECK(is_lyndon(s));
      Word joined = p;
      joined.insert(joined.end(), s.begin(), s.end());
      CHECK(joined == w);
    }
  CHECK_THROWS(standard_factorization({1}));
  CHECK_THROWS(standard_factorization({2, 1}));
}

TEST_CASE("word text round trip") {
  CHECK(word_str({3, 1, 2}) == "x3x1x2");
  CHECK(parse_word("x3x1x2") == Word{3, 1, 2});
  CHECK(parse_word(word_str({6, 6, 1})) == Word{6, 6, 1});
}
