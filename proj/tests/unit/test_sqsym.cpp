#include <map>
#include <set>
#include <stdexcept>

#include "convert.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "parkhopf/sqsym.hpp"

using namespace parkhopf;
using support::word;

TEST_CASE("key classes coincide with the hypoplactic congruence") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<Word>> want;
    for (const auto& cls : oracle::hypoplactic_classes(n)) want.insert(support::words(cls));
    std::set<std::vector<Word>> got;
    for (const auto& [q, members] : hypo_classes(n)) {
      got.insert(members);
      for (const Word& a : members) CHECK(hypo_key(a) == q);
    }
    CHECK(got == want);
  }
}

TEST_CASE("little Schroeder numbers") {
  const long want[] = {1, 1, 3, 11, 45, 197, 903};
  for (int n = 0; n <= 6; ++n) {
    CHECK(schroder_dim_by_classes(n) == want[n]);
    CHECK(schroder_dim_closed_form(n) == want[n]);
  }
  CHECK(schroder_dim_closed_form(10) == graded_dim(GradedSpace::sqsym, 10));
}

TEST_CASE("keys") {
  const HypoKey q = hypo_key(Word{2, 1, 1});
  CHECK(q.ev == EvaluationVector{2, 1, 0});
  CHECK(q.recoil == Composition{2, 1});
  CHECK(to_string(q) == "{ev:[2,1,0],recoil:[2,1]}");
  CHECK(hypo_key(Word{1, 2, 1}) == q);
  CHECK_FALSE(hypo_key(Word{1, 1, 2}) == q);
}

TEST_CASE("Pq span is a sub-bialgebra") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& [q, members] : hypo_classes(n)) {
      FElement x = pq_expand(q);
      CHECK(x.size() == members.size());
      CHECK(pq_collect(f_coproduct(x)) == pq_coproduct(q));
      for (int k = 1; k + n <= 4; ++k) {
        for (const auto& [r, others] : hypo_classes(k)) {
          const PqElement p = pq_product(q, r);
          CHECK(pq_expand(p) == f_multiply(x, pq_expand(r)));
        }
      }
    }
  }
  CHECK_THROWS_AS(pq_collect(FElement(Word{1, 2, 1})), std::domain_error);
}

TEST_CASE("Q quotient is well defined") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& [q, members] : hypo_classes(n)) {
      for (const Word& a : members) {
        CHECK(project_to_q(g_coproduct(a)) == qq_coproduct(q));
        CHECK(project_to_q(GElement(a)) == QElement(q));
      }
      for (const auto& [r, others] : hypo_classes(4 - n)) {
        for (const Word& a : members) {
          for (const Word& b : others) CHECK(qq_product_of_representatives(a, b) == qq_product(q, r));
        }
      }
    }
  }
}

TEST_CASE("Pq and Q are dual") {
  for (const auto& [q, m1] : hypo_classes(2)) {
    for (const auto& [r, m2] : hypo_classes(1)) {
      const auto p = pq_product(q, r);
      for (const auto& [s, m3] : hypo_classes(3)) CHECK(p.coefficient(s) == qq_coproduct(s).coefficient({q, r}));
    }
  }
}
