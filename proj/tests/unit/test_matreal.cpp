#include <stdexcept>

#include "doctest.h"
#include "parkhopf/matreal.hpp"
#include "parkhopf/pfcore.hpp"

using namespace parkhopf;

TEST_CASE("packed matrix validation") {
  CHECK_NOTHROW(PackedMatrix({{0, 1, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK_THROWS_AS(PackedMatrix({{1, 0}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(PackedMatrix(std::vector<std::vector<int>>{{2}}), std::invalid_argument);
  CHECK_THROWS_AS(PackedMatrix({{1, 0}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PackedMatrix({{1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("parse and print") {
  const PackedMatrix m = parse_matrix("0110/1000/0100");
  CHECK(to_string(m) == "[[0,1,1,0],[1,0,0,0],[0,1,0,0]]");
  CHECK(parse_matrix(to_string(m)) == m);
  CHECK_THROWS_AS(parse_matrix("[[1,0]"), std::invalid_argument);
}

TEST_CASE("reading") {
  const PackedMatrix m({{0, 1, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(reading(m) == parse_word("2312"));
  CHECK(m.ones() == 4);
  const auto f = matrices_of_word(parse_word("122"));
  CHECK(f.size() == 2);
  CHECK(f[0] == PackedMatrix({{1, 0, 0}, {0, 1, 0}, {0, 1, 0}}));
  CHECK(f[1] == PackedMatrix({{1, 1, 0}, {0, 1, 0}}));
  for (const Word& a : enumerate(WordKind::parking, 4)) {
    for (const PackedMatrix& p : matrices_of_word(a)) {
      CHECK(reading(p) == a);
      CHECK(is_parking_type(p));
      bool one_per_column = true;
      for (std::size_t j = 0; j < p.width(); ++j) {
        int ones = 0;
        for (std::size_t i = 0; i < p.height(); ++i) ones += p(i, j);
        one_per_column = one_per_column && ones == 1;
      }
      CHECK(is_word_matrix(p) == one_per_column);
    }
  }
}

TEST_CASE("product and coproduct match the word algebra") {
  for (int n = 0; n <= 3; ++n) {
    for (int k = 0; k + n <= 4; ++k) {
      for (const Word& a : enumerate(WordKind::parking, n)) {
        for (const Word& b : enumerate(WordKind::parking, k)) {
          CHECK(mp_multiply(f_to_matrices(FElement(a)), f_to_matrices(FElement(b))) == f_to_matrices(f_product(a, b)));
        }
      }
    }
  }
  for (int n = 0; n <= 4; ++n) {
    for (const Word& a : enumerate(WordKind::parking, n)) {
      CHECK(mp_coproduct(f_to_matrices(FElement(a))) == f_to_matrices(f_coproduct(a)));
      CHECK(matrices_to_f(f_to_matrices(FElement(a))) == FElement(a));
    }
  }
}

TEST_CASE("augmented shuffle sizes") {
  const PackedMatrix one(std::vector<std::vector<int>>{{1}});
  // [[1]] with [[1]]: two row orders plus one merged row
  CHECK(augmented_shuffle(one, one).size() == 3);
  CHECK(mp_product(one, one).size() == 3);
}

TEST_CASE("defect column is empty") {
  for (int k = 1; k <= 4; ++k) {
    for (const PackedMatrix& m : packed_matrices(k, k + 1)) {
      CHECK(defect_column_is_empty(m));
      CHECK(reading(matrix_parkize(m)) == parkize(reading(m)));
    }
  }
  CHECK(packed_matrices(1, 1).size() == 1);
}
