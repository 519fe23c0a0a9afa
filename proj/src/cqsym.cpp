#include "parkhopf/cqsym.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "parkhopf/format.hpp"
#include "parkhopf/pfcore.hpp"
#include "parkhopf/pqsym_dual.hpp"

namespace parkhopf {

void require_catalan_label(const Word& pi) {
  if (!is_parking(pi) || !is_nondecreasing(pi)) throw std::invalid_argument("not a Catalan label");
}

PElement p_product(const Word& p1, const Word& p2) {
  require_catalan_label(p1);
  require_catalan_label(p2);
  return PElement(shifted_concat(p1, p2));
}

PElement p_multiply(const PElement& x, const PElement& y) { return extend_bilinear(p_product, x, y); }

FElement p_expand(const Word& pi) {
  require_catalan_label(pi);
  std::vector<Letter> letters = pi.vec();
  FElement out;
  do {
    out.add(Word(letters), 1);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

FElement p_expand(const PElement& x) {
  return extend_linear([](const Word& pi) { return p_expand(pi); }, x);
}

PTensor p_coproduct(const Word& pi) {
  require_catalan_label(pi);
  std::vector<std::pair<Letter, int>> runs;
  for (Letter a : pi) {
    if (runs.empty() || runs.back().first != a) {
      runs.emplace_back(a, 1);
    } else {
      ++runs.back().second;
    }
  }
  PTensor out;
  std::vector<int> take(runs.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == runs.size()) {
      std::vector<Letter> u;
      std::vector<Letter> v;
      for (std::size_t r = 0; r < runs.size(); ++r) {
        u.insert(u.end(), static_cast<std::size_t>(take[r]), runs[r].first);
        v.insert(v.end(), static_cast<std::size_t>(runs[r].second - take[r]), runs[r].first);
      }
      out.add({parkize(Word(std::move(u))), parkize(Word(std::move(v)))}, 1);
      return;
    }
    for (int t = 0; t <= runs[i].second; ++t) {
      take[i] = t;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

PTensor p_coproduct(const PElement& x) {
  return extend_linear([](const Word& pi) { return p_coproduct(pi); }, x);
}

MElement m_product(const Word& p1, const Word& p2) {
  require_catalan_label(p1);
  require_catalan_label(p2);
  MElement out;
  for (const Word& c : convolution(p1, p2)) out.add(sorted(c), 1);
  return out;
}

MElement m_multiply(const MElement& x, const MElement& y) { return extend_bilinear(m_product, x, y); }

MTensor m_coproduct(const Word& pi) {
  require_catalan_label(pi);
  MTensor out;
  const std::size_t n = pi.size();
  for (std::size_t k = 0; k <= n; ++k) {
    bool splits = true;
    for (std::size_t i = k; i < n && splits; ++i) splits = pi[i] > static_cast<Letter>(k);
    if (!splits) continue;
    std::vector<Letter> tail;
    for (std::size_t i = k; i < n; ++i) tail.push_back(pi[i] - static_cast<Letter>(k));
    out.add({pi.slice(0, k), Word(std::move(tail))}, 1);
  }
  return out;
}

Polynomial m_polynomial(const Word& pi, int k) {
  require_catalan_label(pi);
  const int n = static_cast<int>(pi.size());
  if (k < n) throw std::invalid_argument("insufficient variables");
  Polynomial out;
  std::vector<Letter> w(static_cast<std::size_t>(n), 1);
  std::function<void(std::size_t, Letter)> rec = [&](std::size_t i, Letter low) {
    if (i == w.size()) {
      const Word word(w);
      if (parkize(word) == pi) {
        Monomial exponents(static_cast<std::size_t>(k), 0);
        for (Letter x : w) ++exponents[static_cast<std::size_t>(x - 1)];
        out.add(exponents, 1);
      }
      return;
    }
    for (Letter x = low; x <= k; ++x) {
      w[i] = x;
      rec(i + 1, x);
    }
  };
  rec(0, 1);
  return out;
}

Polynomial m_polynomial(const MElement& x, int k) {
  Polynomial out;
  for (const auto& [pi, c] : x) out += c * m_polynomial(pi, k);
  return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      if (ea.size() != eb.size()) throw std::invalid_argument("variable counts differ");
      Monomial e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  return format_terms(p, [](const Monomial& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += "x" + std::to_string(i + 1);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
  });
}

Composition c_of_pi(const Word& pi) {
  std::vector<int> parts;
  for (const Word& f : connected_factorization(pi)) parts.push_back(static_cast<int>(f.size()));
  return Composition(std::move(parts));
}

MElement gamma(const Composition& type) {
  MElement out;
  for (const Word& pi : enumerate(WordKind::nondecreasing, type.weight())) {
    if (evaluation_composition(pi) == type) out.add(pi, 1);
  }
  return out;
}

MElement gamma_by_connected_type(const Composition& type) {
  MElement out;
  for (const Word& pi : enumerate(WordKind::nondecreasing, type.weight())) {
    if (c_of_pi(pi) == type) out.add(pi, 1);
  }
  return out;
}

RElement p_to_ribbon(const Word& pi) {
  require_catalan_label(pi);
  RElement out;
  for (const Word& w : up_set(pi)) out.add(w, 1);
  return out;
}

RElement p_to_ribbon(const PElement& x) {
  RElement out;
  for (const auto& [pi, c] : x) out += c * p_to_ribbon(pi);
  return out;
}

PElement ribbon_to_p(const Word& pi) {
  require_catalan_label(pi);
  std::map<Word, PElement> memo;
  std::function<PElement(const Word&)> rec = [&](const Word& w) -> PElement {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    PElement r(w);
    for (const Word& above : up_set(w)) {
      if (above != w) r -= rec(above);
    }
    memo.emplace(w, r);
    return r;
  };
  return rec(pi);
}

PElement ribbon_to_p(const RElement& x) {
  PElement out;
  for (const auto& [pi, c] : x) out += c * ribbon_to_p(pi);
  return out;
}

Word triangle_concat(const Word& p1, const Word& p2) {
  if (p1.empty()) return p2;
  if (p2.empty()) return p1;
  const Letter top = p1.max_letter();
  const Letter shift_by = static_cast<Letter>(p1.size());
  std::vector<Letter> out = p1.vec();
  for (Letter a : p2) out.push_back(a == 1 ? top : a + shift_by);
  return Word(std::move(out));
}

Word triangle_concat_as_printed(const Word& p1, const Word& p2) {
  if (p1.empty()) return p2;
  const auto [lo, hi] = std::minmax_element(p1.begin(), p1.end());
  std::vector<Letter> out = p1.vec();
  for (Letter a : p2) out.push_back(a + (*hi - *lo));
  return Word(std::move(out));
}

RElement ribbon_product(const Word& p1, const Word& p2) {
  require_catalan_label(p1);
  require_catalan_label(p2);
  if (p1.empty()) return RElement(p2);
  if (p2.empty()) return RElement(p1);
  RElement out(shifted_concat(p1, p2));
  out.add(triangle_concat(p1, p2), 1);
  return out;
}

RElement ribbon_product_as_printed(const Word& p1, const Word& p2) {
  require_catalan_label(p1);
  require_catalan_label(p2);
  if (p1.empty()) return RElement(p2);
  if (p2.empty()) return RElement(p1);
  RElement out(shifted_concat(p1, p2));
  out.add(triangle_concat_as_printed(p1, p2), 1);
  return out;
}

RElement ribbon_product_by_expansion(const Word& p1, const Word& p2) {
  return p_to_ribbon(p_multiply(ribbon_to_p(p1), ribbon_to_p(p2)));
}

RTensor ribbon_coproduct(const Word& pi) {
  RTensor out;
  for (const auto& [pair, c] : p_coproduct(ribbon_to_p(pi))) {
    const RElement left = p_to_ribbon(pair.first);
    const RElement right = p_to_ribbon(pair.second);
    out += c * tensor(left, right);
  }
  return out;
}

const BasisBialgebra<Word, PBasis>& cqsym_bialgebra() {
  static const BasisBialgebra<Word, PBasis> h{
      [](const Word& a, const Word& b) { return p_product(a, b); },
      [](const Word& a) { return p_coproduct(a); },
  };
  return h;
}

const BasisBialgebra<Word, MBasis>& cqsym_dual_bialgebra() {
  static const BasisBialgebra<Word, MBasis> h{
      [](const Word& a, const Word& b) { return m_product(a, b); },
      [](const Word& a) { return m_coproduct(a); },
  };
  return h;
}

const BasisBialgebra<Word, RBasis>& cqsym_ribbon_bialgebra() {
  static const BasisBialgebra<Word, RBasis> h{
      [](const Word& a, const Word& b) { return ribbon_product(a, b); },
      [](const Word& a) { return ribbon_coproduct(a); },
  };
  return h;
}

NSymFunction ch_to_nsym(const Word& pi) {
  require_catalan_label(pi);
  return NSymFunction::S(c_of_pi(pi));
}

NSymFunction ch_to_nsym_by_evaluation(const Word& pi) {
  require_catalan_label(pi);
  return NSymFunction::S(evaluation_composition(pi));
}

std::vector<NSymFunction> g_series(int n_max) {
  if (n_max < 0) return {};
  std::vector<NSymFunction> g{NSymFunction(Rational(1))};
  // powers[k][m]: degree-m part of g^k.
  std::map<std::pair<int, int>, NSymFunction> powers;
  std::function<NSymFunction(int, int)> power_part = [&](int k, int m) -> NSymFunction {
    if (k == 0) return m == 0 ? NSymFunction(Rational(1)) : NSymFunction();
    if (auto it = powers.find({k, m}); it != powers.end()) return it->second;
    NSymFunction acc;
    for (int j = 0; j <= m; ++j) acc += g[static_cast<std::size_t>(j)] * power_part(k - 1, m - j);
    powers.emplace(std::make_pair(k, m), acc);
    return acc;
  };
  for (int n = 1; n <= n_max; ++n) {
    NSymFunction gn;
    for (int k = 1; k <= n; ++k) gn += NSymFunction::S(k) * power_part(k, n - k);
    g.push_back(gn);
  }
  return g;
}

std::vector<LagrangeComparison> lagrange_comparison(int n_max) {
  const auto g = g_series(n_max);
  std::vector<LagrangeComparison> out;
  for (int n = 1; n <= n_max; ++n) {
    LagrangeComparison row;
    row.degree = n;
    row.fixed_point = g[static_cast<std::size_t>(n)];
    for (const Word& pi : enumerate(WordKind::nondecreasing, n)) {
      row.by_connected_type += ch_to_nsym(pi);
      row.by_evaluation += ch_to_nsym_by_evaluation(pi);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace parkhopf
