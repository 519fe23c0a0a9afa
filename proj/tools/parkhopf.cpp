#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "parkhopf/cqsym.hpp"
#include "parkhopf/format.hpp"
#include "parkhopf/json_io.hpp"
#include "parkhopf/pfcore.hpp"
#include "parkhopf/pqsym.hpp"
#include "parkhopf/pqsym_dual.hpp"
#include "parkhopf/sqsym.hpp"
#include "parkhopf/symfun.hpp"
#include "parkhopf/verify.hpp"

using namespace parkhopf;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitBound = 2;
constexpr int kExitInput = 3;

struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int safety_bound(int fallback) {
  if (const char* env = std::getenv("PARKHOPF_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw InputError("PARKHOPF_MAX_N is not an integer");
    }
  }
  return fallback;
}

void require_bound(int n, int bound, const std::string& what) {
  if (n < 0) throw InputError(what + " must be nonnegative");
  if (n > bound) throw BoundError(what + " = " + std::to_string(n) + " exceeds the bound " + std::to_string(bound));
}

/// Collects text or JSON and writes it once at the end.
struct Output {
  bool json = false;
  std::ostringstream text;
  Json doc = Json::object();
};

// ---------------------------------------------------------------------------

int cmd_enum(Output& out, const std::string& kind_name, int n, bool count_only) {
  const auto kind = parse_word_kind(kind_name);
  if (!kind) throw InputError("unknown kind: " + kind_name);
  require_bound(n, safety_bound(8), "n");
  WordStream stream(*kind, n);
  long count = 0;
  Json words = Json::array();
  while (auto w = stream.next()) {
    ++count;
    if (count_only) continue;
    if (out.json) {
      words.push_back(to_json(*w));
    } else {
      out.text << to_string(*w) << "\n";
    }
  }
  if (out.json) {
    out.doc = {{"kind", std::string(to_string(*kind))}, {"n", n}, {"count", count}};
    if (!count_only) out.doc["words"] = words;
  } else if (count_only) {
    out.text << count << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

Word parse_label_word(const std::string& text) {
  try {
    return parse_word(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Word parking_label(const std::string& text) {
  Word a = parse_label_word(text);
  if (!is_parking(a)) throw InputError("not a parking function: " + text);
  return a;
}

Word catalan_label(const std::string& text) {
  Word a = parse_label_word(text);
  if (!is_parking(a) || !is_nondecreasing(a)) throw InputError("not a nondecreasing parking function: " + text);
  return a;
}

HypoKey hypo_label(const std::string& text) { return hypo_key(parking_label(text)); }

template <class Label, class Tag>
struct AlgebraOps {
  const BasisBialgebra<Label, Tag>& h;
  std::function<Label(const std::string&)> parse;
  std::function<LinComb<Label, Tag>(const Label&)> antipode;
};

template <class Label, class Tag>
int run_algebra(Output& out, const std::string& op, const std::vector<std::string>& args,
                const AlgebraOps<Label, Tag>& ops) {
  using E = LinComb<Label, Tag>;
  std::vector<Label> labels;
  for (const std::string& a : args) labels.push_back(ops.parse(a));
  if (op == "mul") {
    if (labels.empty()) throw InputError("mul needs at least one label");
    E acc(labels.front());
    for (std::size_t i = 1; i < labels.size(); ++i) acc = ops.h.multiply(acc, E(labels[i]));
    if (out.json) {
      out.doc = to_json(acc);
    } else {
      out.text << to_string(acc) << "\n";
    }
    return 0;
  }
  if (labels.size() != 1) throw InputError(op + " takes exactly one label");
  if (op == "comul") {
    const auto t = ops.h.comul(labels.front());
    if (out.json) {
      out.doc = to_json(t);
    } else {
      out.text << to_string(t) << "\n";
    }
    return 0;
  }
  const E s = ops.antipode(labels.front());
  if (out.json) {
    out.doc = to_json(s);
  } else {
    out.text << to_string(s) << "\n";
  }
  return 0;
}

template <class Label, class Tag>
std::function<LinComb<Label, Tag>(const Label&)> recursive_antipode(const BasisBialgebra<Label, Tag>& h) {
  auto memo = std::make_shared<std::map<Label, LinComb<Label, Tag>>>();
  return [&h, memo](const Label& x) { return antipode_by_recursion(h, x, *memo); };
}

int cmd_algebra(Output& out, const std::string& op, const std::string& basis, const std::vector<std::string>& args) {
  if (basis == "F") {
    return run_algebra<Word, FBasis>(out, op, args, {pqsym_bialgebra(), parking_label, [](const Word& a) { return f_antipode(a); }});
  }
  if (basis == "G") {
    return run_algebra<Word, GBasis>(out, op, args,
                                     {pqsym_dual_bialgebra(), parking_label, recursive_antipode(pqsym_dual_bialgebra())});
  }
  if (basis == "P") {
    return run_algebra<Word, PBasis>(out, op, args, {cqsym_bialgebra(), catalan_label, recursive_antipode(cqsym_bialgebra())});
  }
  if (basis == "M") {
    return run_algebra<Word, MBasis>(out, op, args,
                                     {cqsym_dual_bialgebra(), catalan_label, recursive_antipode(cqsym_dual_bialgebra())});
  }
  if (basis == "R") {
    return run_algebra<Word, RBasis>(out, op, args,
                                     {cqsym_ribbon_bialgebra(), catalan_label, recursive_antipode(cqsym_ribbon_bialgebra())});
  }
  if (basis == "Pq") {
    return run_algebra<HypoKey, PqBasis>(out, op, args, {sqsym_bialgebra(), hypo_label, recursive_antipode(sqsym_bialgebra())});
  }
  if (basis == "Q") {
    return run_algebra<HypoKey, QBasis>(out, op, args,
                                        {sqsym_dual_bialgebra(), hypo_label, recursive_antipode(sqsym_dual_bialgebra())});
  }
  throw InputError("unknown basis: " + basis);
}

// ---------------------------------------------------------------------------

void emit_integers(Output& out, const std::string& key, const std::vector<Integer>& values) {
  if (out.json) {
    out.doc = sequence_json(key, values);
    return;
  }
  for (std::size_t i = 0; i < values.size(); ++i) out.text << (i ? " " : "") << values[i].get_str();
  out.text << "\n";
}

int cmd_series(Output& out, const std::string& which, int n) {
  if (which == "connected") {
    require_bound(n, 12, "N");
    emit_integers(out, "connected", connected_series(n));
  } else if (which == "lie") {
    require_bound(n, 12, "N");
    emit_integers(out, "lie", lie_generator_series(n, 6));
  } else if (which == "schroder") {
    require_bound(n, 12, "N");
    std::vector<Integer> s;
    for (int k = 0; k <= n; ++k) s.push_back(schroder_dim_closed_form(k));
    emit_integers(out, "schroder", s);
  } else if (which == "g") {
    require_bound(n, 8, "N");
    const auto g = g_series(n);
    if (out.json) {
      Json arr = Json::array();
      for (int k = 1; k <= n; ++k) arr.push_back(to_json(g[static_cast<std::size_t>(k)]));
      out.doc = {{"g", arr}};
    } else {
      for (int k = 1; k <= n; ++k) out.text << "g" << k << " = " << to_string(g[static_cast<std::size_t>(k)]) << "\n";
    }
  } else {
    throw InputError("unknown series: " + which);
  }
  return 0;
}

// ---------------------------------------------------------------------------

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) throw InputError("empty entry in list");
    try {
      out.push_back(parse_rational(item.substr(first, last - first + 1)));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

int cmd_cumulants(Output& out, const std::string* moments, const std::string* cumulants, bool check) {
  if ((moments == nullptr) == (cumulants == nullptr)) throw InputError("give exactly one of --moments and --cumulants");
  const bool forward = moments != nullptr;
  const auto input = parse_rational_list(forward ? *moments : *cumulants);
  const auto result = forward ? moments_to_cumulants(input) : cumulants_to_moments(input);
  bool ok = true;
  if (check) {
    const auto& m = forward ? input : result;
    const auto& r = forward ? result : input;
    for (std::size_t n = 1; n <= m.size(); ++n) ok = ok && nc_moment_oracle(r, static_cast<int>(n)) == m[n - 1];
  }
  if (out.json) {
    out.doc = sequence_json(forward ? "cumulants" : "moments", result);
    if (check) out.doc["check"] = ok;
  } else {
    for (std::size_t i = 0; i < result.size(); ++i) out.text << (i ? "," : "") << to_string(result[i]);
    out.text << "\n";
    if (check) out.text << "non-crossing check: " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? 0 : kExitFailure;
}

// ---------------------------------------------------------------------------

int cmd_verify(Output& out, const std::string& suite_name, int max_degree) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw InputError("unknown suite: " + suite_name);
  require_bound(max_degree, 6, "max-degree");
  if (max_degree < 1) throw InputError("max-degree must be positive");
  const VerifyReport report = run_verify(*suite, max_degree);
  if (out.json) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    out.doc = {{"suite", suite_name}, {"max_degree", max_degree}, {"passed", report.passed()}, {"checks", checks},
               {"notes", report.notes}};
  } else {
    std::size_t width = 0;
    for (const auto& c : report.checks) width = std::max(width, c.suite.size() + c.name.size() + 3);
    std::size_t failures = 0;
    for (const auto& c : report.checks) {
      const std::string label = c.suite + " / " + c.name;
      out.text << (c.passed ? "PASS  " : "FAIL  ") << label << std::string(width - label.size() + 2, ' ');
      if (!c.passed) ++failures;
      out.text << c.detail << "\n";
    }
    for (const auto& n : report.notes) out.text << "\n" << n << (n.empty() || n.back() == '\n' ? "" : "\n");
    out.text << "\n" << (report.checks.size() - failures) << " passed, " << failures << " failed\n";
  }
  return report.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parking-function Hopf algebras"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string out_file;
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_file, "write the result to a file");

  std::string kind;
  int n = 0;
  bool count_only = false;
  auto* en = app.add_subcommand("enum", "list parking functions of one kind");
  en->add_option("kind", kind, "pf, prime, nondecreasing or connected")->required();
  en->add_option("n", n, "size")->required();
  en->add_flag("--count-only", count_only, "print only the number of words");

  std::string basis = "F";
  std::vector<std::string> labels;
  std::map<std::string, CLI::App*> algebra;
  for (const char* op : {"mul", "comul", "antipode"}) {
    auto* sub = app.add_subcommand(op, std::string(op) + " in a chosen basis");
    sub->add_option("--basis", basis, "F, G, P, M, R, Pq or Q");
    sub->add_option("labels", labels, "basis labels, e.g. 12 11")->required();
    algebra[op] = sub;
  }

  std::string which;
  int series_n = 0;
  auto* se = app.add_subcommand("series", "generating series coefficients");
  se->add_option("which", which, "connected, lie, schroder or g")->required();
  se->add_option("N", series_n, "number of coefficients")->required();

  std::string moments;
  std::string cumulants;
  bool check = false;
  auto* cu = app.add_subcommand("cumulants", "moments <-> free cumulants");
  auto* mo = cu->add_option("--moments", moments, "comma-separated rationals");
  auto* co = cu->add_option("--cumulants", cumulants, "comma-separated rationals");
  cu->add_flag("--check", check, "also run the non-crossing partition sum");

  std::string suite = "all";
  int max_degree = 4;
  auto* ve = app.add_subcommand("verify", "run invariant suites");
  ve->add_option("--suite", suite, "paper-examples, hopf, duality, counts, equivalences or all");
  ve->add_option("--max-degree", max_degree, "largest exhaustive degree (<= 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  Output out;
  out.json = format == "json";
  int code = 0;
  try {
    if (*en) {
      code = cmd_enum(out, kind, n, count_only);
    } else if (*se) {
      code = cmd_series(out, which, series_n);
    } else if (*cu) {
      code = cmd_cumulants(out, *mo ? &moments : nullptr, *co ? &cumulants : nullptr, check);
    } else if (*ve) {
      code = cmd_verify(out, suite, max_degree);
    } else {
      for (const auto& [op, sub] : algebra) {
        if (*sub) code = cmd_algebra(out, op, basis, labels);
      }
    }
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const std::string rendered = out.json ? out.doc.dump(2) + "\n" : out.text.str();
  if (out_file.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream file(out_file);
    if (!file) {
      std::cerr << "error: cannot write " << out_file << "\n";
      return kExitInput;
    }
    file << rendered;
  }
  return code;
}
