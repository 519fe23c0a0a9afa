#include "parkhopf/pqsym_dual.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "parkhopf/matrix.hpp"
#include "parkhopf/pfcore.hpp"
#include "parkhopf/series.hpp"

namespace parkhopf {

namespace {

/// Strictly increasing m-subsets of [n] in lexicographic order.
void for_each_subset(int n, int m, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> current;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(current.size()) == m) {
      f(current);
      return;
    }
    for (int x = next; x <= n - (m - static_cast<int>(current.size())) + 1; ++x) {
      current.push_back(x);
      rec(x + 1);
      current.pop_back();
    }
  };
  rec(1);
}

/// Words u over [n] with Park(u) = a: images of a under increasing relabelings of its values.
std::vector<Word> parkization_fibre(const Word& a, int n) {
  std::vector<int> values(a.begin(), a.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Word> out;
  for_each_subset(n, static_cast<int>(values.size()), [&](const std::vector<int>& image) {
    std::vector<Letter> u;
    u.reserve(a.size());
    for (Letter x : a) {
      const auto pos = std::lower_bound(values.begin(), values.end(), x) - values.begin();
      u.push_back(image[static_cast<std::size_t>(pos)]);
    }
    Word w(std::move(u));
    if (parkize(w) == a) out.push_back(std::move(w));
  });
  return out;
}

Word concat_words(const Word& u, const Word& v) {
  std::vector<Letter> c = u.vec();
  c.insert(c.end(), v.begin(), v.end());
  return Word(std::move(c));
}

GElement product_of(const std::vector<Word>& factors) {
  GElement out = GElement::unit();
  for (const Word& w : factors) out = g_multiply(out, GElement(w));
  return out;
}

const std::map<Word, GTensor>& unshuffle_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::map<Word, GTensor>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::map<Word, GTensor> table;
  for (int k = 0; k <= n; ++k) {
    for (const Word& u : enumerate(WordKind::parking, k)) {
      for (const Word& v : enumerate(WordKind::parking, n - k)) {
        for (const Word& c : shifted_shuffle(u, v)) table[c].add({u, v}, 1);
      }
    }
  }
  return cache.emplace(n, std::move(table)).first->second;
}

QMatrix transition_matrix(const std::vector<Word>& rows_labels, const std::vector<Word>& cols,
                          const std::function<std::map<Word, Rational>(const Word&)>& row_of) {
  std::map<Word, std::size_t> col_index;
  for (std::size_t j = 0; j < cols.size(); ++j) col_index.emplace(cols[j], j);
  QMatrix m(rows_labels.size(), cols.size());
  for (std::size_t i = 0; i < rows_labels.size(); ++i) {
    for (const auto& [b, c] : row_of(rows_labels[i])) m(i, col_index.at(b)) = c;
  }
  return m;
}

}  // namespace

GElement g_basis(const Word& a) {
  if (!is_parking(a)) throw std::invalid_argument("not a parking function: " + to_string(a));
  return GElement(a);
}

std::vector<Word> convolution(const Word& a1, const Word& a2) {
  const int n = static_cast<int>(a1.size() + a2.size());
  const auto left = parkization_fibre(a1, n);
  const auto right = parkization_fibre(a2, n);
  std::vector<Word> out;
  for (const Word& u : left) {
    for (const Word& v : right) {
      Word c = concat_words(u, v);
      if (is_parking(c)) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> convolution_brute(const Word& a1, const Word& a2) {
  const std::size_t k = a1.size();
  const int n = static_cast<int>(k + a2.size());
  std::vector<Word> out;
  for (const Word& c : enumerate(WordKind::parking, n)) {
    if (parkize(c.slice(0, k)) == a1 && parkize(c.slice(k, c.size())) == a2) out.push_back(c);
  }
  return out;
}

std::vector<Word> permutation_convolution(const Word& sigma, const Word& tau) {
  if (!is_permutation(sigma) || !is_permutation(tau)) throw std::invalid_argument("not a permutation");
  const int k = static_cast<int>(sigma.size());
  const int n = k + static_cast<int>(tau.size());
  std::vector<Word> out;
  for_each_subset(n, k, [&](const std::vector<int>& prefix_values) {
    std::vector<int> suffix_values;
    for (int x = 1, i = 0; x <= n; ++x) {
      if (i < k && prefix_values[static_cast<std::size_t>(i)] == x) {
        ++i;
      } else {
        suffix_values.push_back(x);
      }
    }
    std::vector<Letter> c;
    for (Letter s : sigma) c.push_back(prefix_values[static_cast<std::size_t>(s - 1)]);
    for (Letter t : tau) c.push_back(suffix_values[static_cast<std::size_t>(t - 1)]);
    out.emplace_back(std::move(c));
  });
  std::sort(out.begin(), out.end());
  return out;
}

GElement g_product(const Word& a1, const Word& a2) {
  GElement out;
  for (const Word& c : convolution(a1, a2)) out.add(c, 1);
  return out;
}

GElement g_multiply(const GElement& x, const GElement& y) { return extend_bilinear(g_product, x, y); }

GTensor g_coproduct(const Word& a) {
  GTensor out;
  std::vector<int> cuts{0};
  if (!a.empty()) {
    const auto b = breakpoints(a);
    cuts.insert(cuts.end(), b.begin(), b.end());
  }
  for (int b : cuts) {
    std::vector<Letter> low;
    std::vector<Letter> high;
    for (Letter x : a) {
      if (x <= b) {
        low.push_back(x);
      } else {
        high.push_back(x - b);
      }
    }
    out.add({parkize(Word(std::move(low))), parkize(Word(std::move(high)))}, 1);
  }
  return out;
}

GTensor g_coproduct(const GElement& x) {
  return extend_linear([](const Word& a) { return g_coproduct(a); }, x);
}

GTensor g_coproduct_unshuffle(const Word& a) {
  const auto& table = unshuffle_table(static_cast<int>(a.size()));
  auto it = table.find(a);
  return it == table.end() ? GTensor{} : it->second;
}

const BasisBialgebra<Word, GBasis>& pqsym_dual_bialgebra() {
  static const BasisBialgebra<Word, GBasis> h{
      [](const Word& a, const Word& b) { return g_product(a, b); },
      [](const Word& a) { return g_coproduct(a); },
  };
  return h;
}

GElement phi(const Word& sigma) {
  if (!is_permutation(sigma)) throw std::invalid_argument("not a permutation: " + to_string(sigma));
  const Word target = inverse_permutation(sigma);
  GElement out;
  for (const Word& a : enumerate(WordKind::parking, static_cast<int>(sigma.size()))) {
    if (standardize(a) == target) out.add(a, 1);
  }
  return out;
}

GElement phi(const FElement& x) {
  return extend_linear([](const Word& s) { return phi(s); }, x);
}

GElement g_mult_basis(const Word& a) {
  auto factors = connected_factorization(a);
  std::reverse(factors.begin(), factors.end());
  for (Word& f : factors) f = mirror(f);
  return product_of(factors);
}

Triangularity g_mult_basis_triangularity(int n) {
  static std::mutex mutex;
  static std::map<int, Triangularity> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  bool lower = true;
  bool upper = true;
  for (const Word& a : enumerate(WordKind::parking, n)) {
    const Word diagonal = mirror(a);
    const GElement row = g_mult_basis(a);
    if (row.coefficient(diagonal) != 1) throw std::logic_error("triangularity violated");
    for (const auto& [b, c] : row) {
      if (b < diagonal) upper = false;
      if (diagonal < b) lower = false;
    }
  }
  if (!lower && !upper) throw std::logic_error("triangularity violated");
  const Triangularity result = upper ? Triangularity::upper : Triangularity::lower;
  cache.emplace(n, result);
  return result;
}

LieBases st_dual_bases(int n) {
  LieBases out;
  out.degree = n;
  out.labels = enumerate(WordKind::parking, n);
  const auto& labels = out.labels;
  const QMatrix a = transition_matrix(labels, labels, [](const Word& w) { return f_mult_basis(w).terms(); });
  const QMatrix b = transition_matrix(labels, labels, [](const Word& w) { return g_mult_basis(w).terms(); });
  const QMatrix x = a.inverse().transpose();
  const QMatrix y = b.inverse().transpose();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    GElement s;
    FElement t;
    for (std::size_t j = 0; j < labels.size(); ++j) {
      s.add(labels[j], x(i, j));
      t.add(labels[j], y(i, j));
    }
    out.s.emplace(labels[i], std::move(s));
    out.t.emplace(labels[i], std::move(t));
  }
  return out;
}

std::vector<Integer> connected_series(int n_max) {
  if (n_max < 1) return {};
  const std::size_t order = static_cast<std::size_t>(n_max) + 1;
  Series<Rational> pf(order);
  for (std::size_t n = 0; n < order; ++n) pf[n] = Rational(graded_dim(GradedSpace::pqsym, static_cast<int>(n)));
  const auto inv = reciprocal(pf);
  std::vector<Integer> out;
  for (std::size_t n = 1; n < order; ++n) {
    const Rational c = -inv[n];
    if (c.get_den() != 1) throw std::logic_error("non-integral connected count");
    out.push_back(c.get_num());
  }
  return out;
}

std::vector<Integer> lie_generator_series(int n_max, int enumerate_up_to) {
  if (n_max < 1) return {};
  const auto closed = connected_series(n_max);
  std::vector<Integer> c(closed);
  for (int n = 1; n <= std::min(n_max, enumerate_up_to); ++n) {
    c[static_cast<std::size_t>(n - 1)] = static_cast<long>(enumerate(WordKind::connected, n).size());
  }
  const std::size_t order = static_cast<std::size_t>(n_max) + 1;
  std::vector<Integer> product(order, 0);
  product[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    const Integer& cn = c[static_cast<std::size_t>(n - 1)];
    // (1 - t^n)^cn truncated; C(cn, k) built incrementally.
    std::vector<Integer> factor(order, 0);
    Integer binom = 1;
    for (int k = 0; static_cast<std::size_t>(n * k) < order; ++k) {
      if (k > 0) binom = binom * (cn - (k - 1)) / k;
      factor[static_cast<std::size_t>(n * k)] = (k % 2 == 0) ? binom : Integer(-binom);
    }
    std::vector<Integer> next(order, 0);
    for (std::size_t i = 0; i < order; ++i) {
      if (product[i] == 0) continue;
      for (std::size_t j = 0; i + j < order; ++j) next[i + j] += product[i] * factor[j];
    }
    product = std::move(next);
  }
  std::vector<Integer> out;
  for (std::size_t n = 1; n < order; ++n) out.push_back(-product[n]);
  return out;
}

GElement eta_star(int n) {
  GElement out;
  for (const Word& a : enumerate(WordKind::nondecreasing, n)) out.add(a, 1);
  return out;
}

}  // namespace parkhopf
