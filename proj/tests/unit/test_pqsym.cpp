#include <map>
#include <stdexcept>

#include "convert.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "parkhopf/format.hpp"
#include "parkhopf/pfcore.hpp"
#include "parkhopf/pqsym.hpp"

using namespace parkhopf;
using support::vec;

namespace {

FElement sum_of(std::initializer_list<std::pair<int, const char*>> terms) {
  FElement out;
  for (const auto& [c, w] : terms) out.add(parse_word(w), c);
  return out;
}

}  // namespace

TEST_CASE("product example") {
  CHECK(f_product(parse_word("12"), parse_word("11")) ==
        sum_of({{1, "1233"}, {1, "1323"}, {1, "1332"}, {1, "3123"}, {1, "3132"}, {1, "3312"}}));
}

TEST_CASE("product matches the shuffle oracle") {
  for (int n = 0; n <= 3; ++n) {
    for (int k = 0; k <= 3; ++k) {
      for (const Word& a : enumerate(WordKind::parking, n)) {
        for (const Word& b : enumerate(WordKind::parking, k)) {
          CHECK(f_product(a, b) == support::element<FBasis>(oracle::f_product(vec(a), vec(b))));
        }
      }
    }
  }
}

TEST_CASE("coproduct matches the deconcatenation oracle") {
  for (int n = 0; n <= 5; ++n) {
    for (const Word& a : enumerate(WordKind::parking, n)) {
      CHECK(f_coproduct(a) == support::tensor<FBasis>(oracle::f_coproduct(vec(a))));
    }
  }
  FTensor want;
  for (auto [u, v] : {std::pair{"", "3132"}, {"1", "132"}, {"21", "21"}, {"212", "1"}, {"3132", ""}}) {
    want.add({parse_word(u), parse_word(v)}, 1);
  }
  CHECK(f_coproduct(parse_word("3132")) == want);
}

TEST_CASE("antipode formula") {
  CHECK(f_antipode(parse_word("122")) == sum_of({{1, "212"}, {1, "221"}, {-1, "213"}, {-1, "231"}, {-1, "321"}}));
  for (int n = 1; n <= 4; ++n) {
    for (const Word& a : enumerate(WordKind::parking, n)) CHECK(f_antipode(a) == f_antipode_recursive(a));
  }
  // S is an anti-morphism
  const Word a{1, 2};
  const Word b{1, 1};
  CHECK(f_antipode(f_product(a, b)) == f_multiply(f_antipode(b), f_antipode(a)));
  CHECK(f_antipode(Word{}) == FElement(Word{}));
}

TEST_CASE("labels must be parking") {
  CHECK_THROWS_AS(f_basis(Word{2, 2}), std::invalid_argument);
}

TEST_CASE("multiplicative basis is unitriangular") {
  for (int n = 1; n <= 5; ++n) CHECK_NOTHROW(f_mult_basis_triangularity(n));
  CHECK(f_mult_basis(parse_word("1243")) ==
        f_multiply(f_multiply(FElement(Word{1}), FElement(Word{1})), FElement(Word{2, 1})));
}

TEST_CASE("connected generators") {
  GeneratorPolynomial want;
  want.add({Word{1}, Word{1}}, 1);
  want.add({Word{2, 1}}, -1);
  CHECK(connected_decomposition(FElement(Word{1, 2})) == want);
  for (int n = 1; n <= 4; ++n) {
    for (const Word& a : enumerate(WordKind::parking, n)) {
      const auto p = connected_decomposition(FElement(a));
      CHECK(evaluate_generators(p) == FElement(a));
      for (const auto& [m, c] : p) {
        for (const Word& g : m) CHECK(is_connected(g));
      }
    }
  }
  for (int n = 1; n <= 5; ++n) CHECK(Integer(static_cast<long>(connected_monomials(n).size())) == graded_dim(GradedSpace::pqsym, n));
}

TEST_CASE("prime sums") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(ppf_sum(n) == ppf_inclusion_exclusion(n));
    FElement total;
    for (const Composition& c : compositions(n)) {
      total += v_element(c);
      CHECK(v_element(c) == v_element_by_type(c));
    }
    CHECK(total == pf_sum(n));
  }
}

TEST_CASE("eta is multiplicative") {
  for (int n = 1; n <= 3; ++n) {
    for (const Word& a : enumerate(WordKind::parking, n)) {
      for (const Word& b : enumerate(WordKind::parking, 4 - n)) {
        CHECK(eta(f_product(a, b)) == eta(FElement(a)) * eta(FElement(b)));
      }
    }
  }
  CHECK(eta(FElement(parse_word("3132"))) == QSymFunction::F(Composition{1, 2, 1}));
  CHECK(j_embed(3) == FElement(Word{1, 1, 1}));
}
