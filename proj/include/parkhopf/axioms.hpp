#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "parkhopf/linmod.hpp"

namespace parkhopf {

struct AxiomResult {
  bool ok = true;
  std::size_t cases = 0;
  std::string failure;

  void fail(std::string what) {
    if (ok) failure = std::move(what);
    ok = false;
  }
};

template <class Label>
using LabelSource = std::function<std::vector<Label>(int)>;

template <class Label>
using LabelText = std::function<std::string(const Label&)>;

namespace detail {

template <class Label, class Tag>
using Triple = LinComb<std::tuple<Label, Label, Label>, Tag>;

template <class Label, class Tag>
Triple<Label, Tag> left_coassociator(const BasisBialgebra<Label, Tag>& h, const Label& x) {
  Triple<Label, Tag> out;
  for (const auto& [p, c] : h.comul(x)) {
    for (const auto& [q, d] : h.comul(p.first)) out.add({q.first, q.second, p.second}, c * d);
  }
  return out;
}

template <class Label, class Tag>
Triple<Label, Tag> right_coassociator(const BasisBialgebra<Label, Tag>& h, const Label& x) {
  Triple<Label, Tag> out;
  for (const auto& [p, c] : h.comul(x)) {
    for (const auto& [q, d] : h.comul(p.second)) out.add({p.first, q.first, q.second}, c * d);
  }
  return out;
}

/// Every tuple of nonempty labels with the given degree vector.
template <class Label>
void for_each_tuple(const LabelSource<Label>& labels, const std::vector<int>& degrees,
                    const std::function<void(const std::vector<Label>&)>& f) {
  std::vector<std::vector<Label>> pools;
  for (int d : degrees) pools.push_back(labels(d));
  std::vector<Label> current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == pools.size()) {
      f(current);
      return;
    }
    for (const Label& a : pools[i]) {
      current.push_back(a);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
}

/// Degree vectors of length k with positive entries summing to at most max_total.
inline std::vector<std::vector<int>> degree_vectors(int k, int min_total, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int used) {
    if (static_cast<int>(current.size()) == k) {
      if (used >= min_total) out.push_back(current);
      return;
    }
    for (int d = 1; used + d + (k - static_cast<int>(current.size()) - 1) <= max_total; ++d) {
      current.push_back(d);
      rec(used + d);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

/// Checks f on every k-tuple of total degree <= exhaustive, then on `samples` random tuples of
/// total degree `sampled` (skipped when sampled <= exhaustive).
template <class Label>
void for_each_case(const LabelSource<Label>& labels, int k, int exhaustive, int sampled, std::size_t samples,
                   const std::function<void(const std::vector<Label>&)>& f) {
  for (const auto& degrees : detail::degree_vectors(k, k, exhaustive)) detail::for_each_tuple(labels, degrees, f);
  if (sampled <= exhaustive || samples == 0) return;
  std::mt19937_64 rng(0x5eed + static_cast<unsigned>(k * 131 + sampled));
  const auto vectors = detail::degree_vectors(k, sampled, sampled);
  if (vectors.empty()) return;
  std::map<int, std::vector<Label>> pools;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& degrees = vectors[std::uniform_int_distribution<std::size_t>(0, vectors.size() - 1)(rng)];
    std::vector<Label> tuple;
    for (int d : degrees) {
      auto& pool = pools[d];
      if (pool.empty()) pool = labels(d);
      tuple.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
    }
    f(tuple);
  }
}

template <class Label, class Tag>
AxiomResult check_associativity(const BasisBialgebra<Label, Tag>& h, const LabelSource<Label>& labels,
                                const LabelText<Label>& text, int exhaustive, int sampled = 0,
                                std::size_t samples = 0) {
  using E = LinComb<Label, Tag>;
  AxiomResult r;
  for_each_case<Label>(labels, 3, exhaustive, sampled, samples, [&](const std::vector<Label>& t) {
    ++r.cases;
    const E left = h.multiply(h.mul(t[0], t[1]), E(t[2]));
    const E right = h.multiply(E(t[0]), h.mul(t[1], t[2]));
    if (!(left == right)) r.fail("(" + text(t[0]) + " " + text(t[1]) + ") " + text(t[2]));
  });
  return r;
}

template <class Label, class Tag>
AxiomResult check_coassociativity(const BasisBialgebra<Label, Tag>& h, const LabelSource<Label>& labels,
                                  const LabelText<Label>& text, int max_degree) {
  AxiomResult r;
  for (int n = 1; n <= max_degree; ++n) {
    for (const Label& x : labels(n)) {
      ++r.cases;
      if (!(detail::left_coassociator(h, x) == detail::right_coassociator(h, x))) r.fail(text(x));
    }
  }
  return r;
}

/// Delta(xy) = Delta(x) Delta(y) and counit laws.
template <class Label, class Tag>
AxiomResult check_compatibility(const BasisBialgebra<Label, Tag>& h, const LabelSource<Label>& labels,
                                const LabelText<Label>& text, int exhaustive, int sampled = 0,
                                std::size_t samples = 0) {
  AxiomResult r;
  for_each_case<Label>(labels, 2, exhaustive, sampled, samples, [&](const std::vector<Label>& t) {
    ++r.cases;
    const auto left = h.coproduct(h.mul(t[0], t[1]));
    const auto right = tensor_product(h.mul, h.comul(t[0]), h.comul(t[1]));
    if (!(left == right)) r.fail(text(t[0]) + " " + text(t[1]));
  });
  for (int n = 1; n <= exhaustive; ++n) {
    for (const Label& x : labels(n)) {
      const auto d = h.comul(x);
      if (d.coefficient({Label{}, x}) != 1 || d.coefficient({x, Label{}}) != 1) r.fail("counit " + text(x));
    }
  }
  return r;
}

/// m(S (x) id) Delta = m(id (x) S) Delta = counit.
template <class Label, class Tag>
AxiomResult check_antipode(const BasisBialgebra<Label, Tag>& h,
                           const std::function<LinComb<Label, Tag>(const Label&)>& antipode,
                           const LabelSource<Label>& labels, const LabelText<Label>& text, int max_degree) {
  using E = LinComb<Label, Tag>;
  AxiomResult r;
  for (int n = 1; n <= max_degree; ++n) {
    for (const Label& x : labels(n)) {
      ++r.cases;
      E left;
      E right;
      for (const auto& [p, c] : h.comul(x)) {
        left += c * h.multiply(antipode(p.first), E(p.second));
        right += c * h.multiply(E(p.first), antipode(p.second));
      }
      if (!left.is_zero() || !right.is_zero()) r.fail(text(x));
    }
  }
  return r;
}

/// <x y, z> = <x (x) y, Delta z> across a pair of dual bases with the same labels.
template <class Label, class TagA, class TagB>
AxiomResult check_adjoint(const BasisBialgebra<Label, TagA>& a, const BasisBialgebra<Label, TagB>& b,
                          const LabelSource<Label>& labels, const LabelText<Label>& text, int max_total) {
  AxiomResult r;
  for (int n = 1; n <= max_total; ++n) {
    const auto targets = labels(n);
    std::map<Label, Tensor<Label, TagB>> cop;
    for (const Label& z : targets) cop.emplace(z, b.comul(z));
    for (int k = 0; k <= n; ++k) {
      for (const Label& x : labels(k)) {
        for (const Label& y : labels(n - k)) {
          ++r.cases;
          const auto product = a.mul(x, y);
          for (const Label& z : targets) {
            if (product.coefficient(z) != cop.at(z).coefficient({x, y})) r.fail(text(x) + " " + text(y) + " / " + text(z));
          }
        }
      }
    }
  }
  return r;
}

}  // namespace parkhopf
