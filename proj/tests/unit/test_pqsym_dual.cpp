#include <algorithm>
#include <map>
#include <stdexcept>

#include "convert.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "parkhopf/format.hpp"
#include "parkhopf/pfcore.hpp"
#include "parkhopf/pqsym.hpp"
#include "parkhopf/pqsym_dual.hpp"

using namespace parkhopf;
using support::vec;

TEST_CASE("product example") {
  GElement want;
  for (const char* w : {"1211", "1222", "1233", "1311", "1322", "1411", "1422", "2311", "2411", "3411"}) {
    want.add(parse_word(w), 1);
  }
  CHECK(g_product(parse_word("12"), parse_word("11")) == want);
}

TEST_CASE("product matches the prefix oracle") {
  for (int n = 0; n <= 3; ++n) {
    for (int k = 0; k + n <= 5; ++k) {
      for (const Word& a : enumerate(WordKind::parking, n)) {
        for (const Word& b : enumerate(WordKind::parking, k)) {
          CHECK(g_product(a, b) == support::element<GBasis>(oracle::g_product(vec(a), vec(b))));
          CHECK(convolution(a, b) == convolution_brute(a, b));
        }
      }
    }
  }
}

TEST_CASE("coproduct matches the duality oracle") {
  for (int n = 0; n <= 4; ++n) {
    for (const Word& a : enumerate(WordKind::parking, n)) {
      const auto want = support::tensor<GBasis>(oracle::g_coproduct(vec(a)));
      CHECK(g_coproduct(a) == want);
      CHECK(g_coproduct_unshuffle(a) == want);
    }
  }
}

TEST_CASE("breakpoint coproduct example") {
  GTensor want;
  for (auto [u, v] : {std::pair{"", "41252"}, {"1", "3141"}, {"122", "12"}, {"4122", "1"}, {"41252", ""}}) {
    want.add({parse_word(u), parse_word(v)}, 1);
  }
  CHECK(g_coproduct(parse_word("41252")) == want);
}

TEST_CASE("permutation convolution") {
  const auto c = permutation_convolution(Word{1}, Word{1});
  CHECK(c == std::vector<Word>{Word{1, 2}, Word{2, 1}});
  CHECK(permutation_convolution(Word{1, 2}, Word{1}).size() == 3);
}

TEST_CASE("phi embeds the permutation algebra") {
  for (const Word& s : enumerate(WordKind::parking, 2)) {
    if (!is_permutation(s)) continue;
    for (const Word& t : enumerate(WordKind::parking, 2)) {
      if (!is_permutation(t)) continue;
      CHECK(phi(f_product(s, t)) == g_multiply(phi(s), phi(t)));
    }
  }
  GElement total;
  for (const Word& s : enumerate(WordKind::parking, 3)) {
    if (is_permutation(s)) total += phi(s);
  }
  GElement all;
  for (const Word& a : enumerate(WordKind::parking, 3)) all.add(a, 1);
  CHECK(total == all);
}

TEST_CASE("multiplicative basis of the dual") {
  for (int n = 1; n <= 4; ++n) CHECK_NOTHROW(g_mult_basis_triangularity(n));
  const Word a = parse_word("1243");
  CHECK(g_mult_basis(a).coefficient(mirror(a)) == 1);
}

TEST_CASE("S and T bases") {
  for (int n = 1; n <= 4; ++n) {
    const LieBases b = st_dual_bases(n);
    for (const Word& c : b.labels) {
      for (const Word& d : b.labels) {
        CHECK(dual_pairing(f_mult_basis(c), b.s.at(d)) == (c == d ? 1 : 0));
        CHECK(dual_pairing(b.t.at(c), g_mult_basis(d)) == (c == d ? 1 : 0));
      }
    }
    for (const Word& c : enumerate(WordKind::connected, n)) {
      CHECK(reduced_coproduct(pqsym_dual_bialgebra(), b.s.at(c)).is_zero());
      CHECK(reduced_coproduct(pqsym_bialgebra(), b.t.at(c)).is_zero());
    }
  }
}

TEST_CASE("generating series") {
  const auto c = connected_series(12);
  const long long want[] = {1, 2, 11, 92, 1014, 13795, 223061, 4180785, 89191196, 2135610879, 56749806356LL,
                            1658094051392LL};
  for (std::size_t i = 0; i < 12; ++i) CHECK(c[i] == Integer(std::to_string(want[i])));
  for (int n = 1; n <= 6; ++n) {
    CHECK(Integer(static_cast<long>(enumerate(WordKind::connected, n).size())) == c[static_cast<std::size_t>(n - 1)]);
  }
  const auto lie = lie_generator_series(6);
  const long want_lie[] = {1, 2, 9, 80, 901, 12564};
  for (std::size_t i = 0; i < 6; ++i) CHECK(lie[i] == want_lie[i]);
}

TEST_CASE("eta star") {
  CHECK(eta_star(2) == GElement(Word{1, 1}) + GElement(Word{1, 2}));
}
