#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parkhopf {

struct CheckOutcome {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckOutcome> checks;
  /// Free-form comparison tables; not pass/fail.
  std::vector<std::string> notes;

  bool passed() const;
};

enum class Suite { paper_examples, hopf, duality, counts, equivalences, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite s);

/// Runs one suite (or all); max_degree bounds the exhaustive ranges and is clamped to [1, 6].
VerifyReport run_verify(Suite suite, int max_degree);

/// Text rendering of the comparison between the fixed-point series and the two statistics.
std::string lagrange_report(int n_max);

}  // namespace parkhopf
