#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "convert.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "parkhopf/pfcore.hpp"

using namespace parkhopf;
using support::vec;
using support::word;

TEST_CASE("parking test agrees with the counting definition on all words") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& v : oracle::words(n, n + 1)) CHECK(is_parking(word(v)) == oracle::is_parking(v));
  }
}

TEST_CASE("enumeration matches brute force") {
  for (int n = 0; n <= 6; ++n) {
    const auto pf = enumerate(WordKind::parking, n);
    CHECK(pf == support::words(oracle::parking(n)));
    CHECK(std::is_sorted(pf.begin(), pf.end()));
    std::vector<Word> prime;
    std::vector<Word> connected;
    for (const auto& v : oracle::parking(n)) {
      if (oracle::is_prime(v)) prime.push_back(word(v));
      if (oracle::is_connected(v)) connected.push_back(word(v));
    }
    CHECK(enumerate(WordKind::prime, n) == prime);
    CHECK(enumerate(WordKind::connected, n) == connected);
  }
}

TEST_CASE("stream and batch enumeration agree") {
  for (WordKind kind : {WordKind::parking, WordKind::prime, WordKind::nondecreasing, WordKind::connected}) {
    WordStream s(kind, 5);
    std::vector<Word> streamed;
    while (auto w = s.next()) streamed.push_back(*w);
    CHECK(streamed == enumerate(kind, 5));
    s.restart();
    CHECK(s.next() == std::optional<Word>(streamed.front()));
  }
}

TEST_CASE("parkization") {
  const Word w = parse_word("3,5,1,1,11,8,8,2");
  CHECK(parkize(w) == parse_word("35118662"));
  CHECK(defect(w) == 6);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& v : oracle::words(n, n + 2)) {
      const Word p = parkize(word(v));
      CHECK(vec(p) == oracle::parkize(v));
      CHECK(is_parking(p));
    }
  }
}

TEST_CASE("parkization of a parking function is the identity") {
  for (const Word& a : enumerate(WordKind::parking, 5)) CHECK(parkize(a) == a);
}

TEST_CASE("parkization extends standardization on distinct letters") {
  CHECK(parkize(Word{5, 2, 9}) == standardize(Word{5, 2, 9}));
  CHECK(standardize(Word{2, 1, 2, 1}) == Word{3, 1, 4, 2});
  CHECK(inverse_permutation(Word{2, 3, 1}) == Word{3, 1, 2});
  CHECK_THROWS_AS(inverse_permutation(Word{1, 1}), std::invalid_argument);
}

TEST_CASE("shifted shuffle matches the oracle") {
  for (const Word& u : enumerate(WordKind::parking, 2)) {
    for (const Word& v : enumerate(WordKind::parking, 2)) {
      auto got = shifted_shuffle(u, v);
      std::vector<Word> want;
      for (const auto& s : oracle::shuffles(vec(u), oracle::shift(vec(v), 2))) want.push_back(word(s));
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }
  CHECK(shifted_concat(Word{1, 2}, Word{1, 1}) == Word{1, 2, 3, 3});
}

TEST_CASE("breakpoints and primes") {
  CHECK(breakpoints(parse_word("41252")) == std::vector<int>{1, 3, 4, 5});
  CHECK(is_prime(Word{1, 1}));
  CHECK_FALSE(is_prime(Word{1, 2}));
  CHECK(prime_type(parse_word("41252")) == Composition{1, 2, 1, 1});
}

TEST_CASE("connected factorization is the unique maximal one") {
  for (int n = 1; n <= 6; ++n) {
    for (const Word& a : enumerate(WordKind::parking, n)) {
      const auto factors = connected_factorization(a);
      Word rebuilt;
      for (const Word& f : factors) {
        CHECK(oracle::is_connected(vec(f)));
        rebuilt = shifted_concat(rebuilt, f);
      }
      CHECK(rebuilt == a);
    }
  }
  CHECK(connected_factorization(parse_word("1243")).size() == 3);
}

TEST_CASE("mirror and anti-connected") {
  CHECK(mirror(Word{1, 2, 3}) == Word{3, 2, 1});
  CHECK(is_anti_connected(Word{1, 2}) == is_connected(Word{2, 1}));
}

TEST_CASE("descent composition and evaluation") {
  CHECK(descent_composition(Word{3, 1, 2, 2, 1}) == Composition{1, 3, 1});
  CHECK(evaluation(Word{1, 1, 3}, 3) == EvaluationVector{2, 0, 1});
  CHECK(evaluation_composition(Word{1, 1, 3}) == Composition{2, 1});
  CHECK_THROWS_AS(evaluation(Word{4}, 3), std::invalid_argument);
}

TEST_CASE("non-crossing partitions") {
  const NonCrossingPartition pi({{1, 3}, {2}, {4, 5}});
  CHECK(word_of_nc(pi) == parse_word("11244"));
  CHECK(nc_of_parking(parse_word("42141")) == pi);
  for (int n = 0; n <= 7; ++n) {
    const auto all = noncrossing_partitions(n);
    CHECK(all.size() == oracle::noncrossing(n).size());
    CHECK(static_cast<long long>(all.size()) == catalan(n));
    std::set<Word> images;
    for (const auto& p : all) {
      const Word w = word_of_nc(p);
      CHECK(is_nondecreasing(w));
      CHECK(nc_of_parking(w) == p);
      images.insert(w);
    }
    CHECK(images.size() == all.size());
  }
  CHECK_THROWS_AS(NonCrossingPartition({{1, 3}, {2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(NonCrossingPartition({{1}, {3}}), std::invalid_argument);
}

TEST_CASE("nc_of_parking depends only on the sorted word") {
  for (const Word& a : enumerate(WordKind::parking, 5)) CHECK(nc_of_parking(a) == nc_of_parking(sorted(a)));
}

TEST_CASE("successor order") {
  auto got = successors(parse_word("113346"));
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<Word>{parse_word("111146"), parse_word("113336"), parse_word("113344")});
  CHECK(successors(Word{1, 1, 1}).empty());
  CHECK(up_set(Word{1, 2, 3}).size() == 4);
  CHECK(order_leq(Word{1, 2, 3}, Word{1, 1, 1}));
  CHECK_FALSE(order_leq(Word{1, 1, 1}, Word{1, 2, 3}));
  CHECK(word_of_evaluation({2, 0, 1}) == Word{1, 1, 3});
}
