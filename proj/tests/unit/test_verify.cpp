#include <string>

#include "doctest.h"
#include "parkhopf/verify.hpp"

using namespace parkhopf;

namespace {

std::string failures(const VerifyReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (!c.passed) out += c.suite + "/" + c.name + ": " + c.detail + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(parse_suite("hopf") == Suite::hopf);
  CHECK(to_string(Suite::paper_examples) == "paper-examples");
  CHECK_FALSE(parse_suite("nope").has_value());
}

TEST_CASE("small suites pass") {
  for (Suite s : {Suite::hopf, Suite::duality, Suite::counts, Suite::equivalences}) {
    const VerifyReport r = run_verify(s, 3);
    INFO(failures(r));
    CHECK(r.passed());
    CHECK_FALSE(r.checks.empty());
  }
}

TEST_CASE("example suite") {
  const VerifyReport r = run_verify(Suite::paper_examples, 6);
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    if (c.passed) continue;
    ++failed;
    CHECK(c.name == "R11224 R113");
    CHECK(c.detail.find("R11224448") != std::string::npos);
  }
  CHECK(failed == 1);
}

TEST_CASE("report notes") {
  const VerifyReport r = run_verify(Suite::equivalences, 4);
  REQUIRE(r.notes.size() == 3);
  CHECK(r.notes[0].find("n=3") != std::string::npos);
  CHECK(lagrange_report(2).find("agrees") != std::string::npos);
}
