#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string_view>
#include <type_traits>
#include <utility>

#include "parkhopf/rational.hpp"

namespace parkhopf {

template <class A, class B>
std::size_t degree(const std::pair<A, B>& p) {
  return degree(p.first) + degree(p.second);
}

/// Untagged coefficient maps (symmetric-function internals, polynomials).
struct NoBasis {
  static constexpr std::string_view name = "";
  static constexpr std::string_view algebra = "";
};

/// Finite linear combination of basis labels with exact rational coefficients.
/// The Tag names the basis so that, e.g., F- and G-expansions over the same
/// parking-function labels cannot be mixed. Zero coefficients are never stored.
template <class Label, class Tag = NoBasis>
class LinComb {
 public:
  using label_type = Label;
  using tag_type = Tag;
  using map_type = std::map<Label, Rational>;

  LinComb() = default;
  explicit LinComb(const Label& label, const Rational& c = 1) { add(label, c); }

  static LinComb unit() { return LinComb(Label{}); }

  void add(const Label& label, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(label, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Label& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const map_type& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [label, c] : other.terms_) add(label, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [label, c] : other.terms_) add(label, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& q) {
    if (sgn(q) == 0) {
      terms_.clear();
    } else {
      for (auto& [label, c] : terms_) c *= q;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(const Rational& q, LinComb a) { return a *= q; }
  friend LinComb operator*(LinComb a, const Rational& q) { return a *= q; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  /// Sum of all coefficients.
  Rational coefficient_sum() const {
    Rational s = 0;
    for (const auto& [label, c] : terms_) s += c;
    return s;
  }

  /// True iff every label has the given degree (vacuously true for zero).
  bool is_homogeneous(std::size_t d) const {
    for (const auto& [label, c] : terms_) {
      if (degree(label) != d) return false;
    }
    return true;
  }

  /// Part of degree d.
  LinComb component(std::size_t d) const {
    LinComb out;
    for (const auto& [label, c] : terms_) {
      if (degree(label) == d) out.terms_.emplace(label, c);
    }
    return out;
  }

  bool all_coefficients_nonnegative_integers() const {
    for (const auto& [label, c] : terms_) {
      if (sgn(c) < 0 || c.get_den() != 1) return false;
    }
    return true;
  }

 private:
  map_type terms_;
};

template <class Label, class Tag>
using Tensor = LinComb<std::pair<Label, Label>, Tag>;

/// Coefficient of the empty (unit) label.
template <class Label, class Tag>
Rational counit(const LinComb<Label, Tag>& x) {
  return x.coefficient(Label{});
}

/// Linear extension of a map defined on labels.
template <class Label, class Tag, class F>
auto extend_linear(F&& f, const LinComb<Label, Tag>& x) {
  using Result = std::decay_t<decltype(f(std::declval<const Label&>()))>;
  Result out;
  for (const auto& [label, c] : x) out += c * f(label);
  return out;
}

/// sum_{a,b} x_a y_b rule(a, b).
template <class Label, class Tag, class Rule>
auto extend_bilinear(Rule&& rule, const LinComb<Label, Tag>& x, const LinComb<Label, Tag>& y) {
  using Result = std::decay_t<decltype(rule(std::declval<const Label&>(), std::declval<const Label&>()))>;
  Result out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) out += (ca * cb) * rule(a, b);
  }
  return out;
}

/// Outer product x (x) y.
template <class Label, class Tag>
Tensor<Label, Tag> tensor(const LinComb<Label, Tag>& x, const LinComb<Label, Tag>& y) {
  Tensor<Label, Tag> out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) out.add({a, b}, ca * cb);
  }
  return out;
}

/// (f (x) g)(t) for label maps f and g.
template <class Label, class Tag, class F, class G>
auto tensor_map(F&& f, G&& g, const Tensor<Label, Tag>& t) {
  using Out = std::decay_t<decltype(f(std::declval<const Label&>()))>;
  using OutLabel = typename Out::label_type;
  using OutTag = typename Out::tag_type;
  Tensor<OutLabel, OutTag> out;
  for (const auto& [pair, c] : t) {
    auto left = f(pair.first);
    auto right = g(pair.second);
    for (const auto& [a, ca] : left) {
      for (const auto& [b, cb] : right) out.add({a, b}, c * ca * cb);
    }
  }
  return out;
}

/// Componentwise product (a (x) b)(c (x) d) = mul(a, c) (x) mul(b, d).
template <class Label, class Tag, class Mul>
Tensor<Label, Tag> tensor_product(Mul&& mul, const Tensor<Label, Tag>& s, const Tensor<Label, Tag>& t) {
  Tensor<Label, Tag> out;
  for (const auto& [p, cp] : s) {
    for (const auto& [q, cq] : t) {
      const auto left = mul(p.first, q.first);
      const auto right = mul(p.second, q.second);
      for (const auto& [a, ca] : left) {
        for (const auto& [b, cb] : right) out.add({a, b}, cp * cq * ca * cb);
      }
    }
  }
  return out;
}

/// <x, y> = sum_a x_a y_a between a basis and its dual basis.
template <class Label, class TagX, class TagY>
Rational dual_pairing(const LinComb<Label, TagX>& x, const LinComb<Label, TagY>& y) {
  Rational s = 0;
  const auto& small = x.size() <= y.size() ? x.terms() : y.terms();
  const auto& large = x.size() <= y.size() ? y.terms() : x.terms();
  for (const auto& [label, c] : small) {
    auto it = large.find(label);
    if (it != large.end()) s += c * it->second;
  }
  return s;
}

/// Product and coproduct of a graded connected bialgebra, given on basis labels.
/// Label{} must be the unit.
template <class Label, class Tag>
struct BasisBialgebra {
  std::function<LinComb<Label, Tag>(const Label&, const Label&)> mul;
  std::function<Tensor<Label, Tag>(const Label&)> comul;

  LinComb<Label, Tag> multiply(const LinComb<Label, Tag>& x, const LinComb<Label, Tag>& y) const {
    return extend_bilinear(mul, x, y);
  }
  Tensor<Label, Tag> coproduct(const LinComb<Label, Tag>& x) const { return extend_linear(comul, x); }
};

/// Antipode as the convolution inverse of the identity:
/// S(x) = - sum over (x' (x) x'') in Delta(x) with deg x' < deg x of S(x') x''.
/// Results are memoised in the map passed by the caller.
template <class Label, class Tag>
LinComb<Label, Tag> antipode_by_recursion(const BasisBialgebra<Label, Tag>& h, const Label& x,
                                          std::map<Label, LinComb<Label, Tag>>& memo) {
  if (degree(x) == 0) return LinComb<Label, Tag>(x);
  if (auto it = memo.find(x); it != memo.end()) return it->second;
  LinComb<Label, Tag> out;
  for (const auto& [pair, c] : h.comul(x)) {
    if (degree(pair.first) >= degree(x)) continue;
    const auto left = antipode_by_recursion(h, pair.first, memo);
    out -= c * h.multiply(left, LinComb<Label, Tag>(pair.second));
  }
  memo.emplace(x, out);
  return out;
}

/// Delta(x) - 1 (x) x - x (x) 1.
template <class Label, class Tag>
Tensor<Label, Tag> reduced_coproduct(const BasisBialgebra<Label, Tag>& h, const LinComb<Label, Tag>& x) {
  auto out = h.coproduct(x);
  for (const auto& [label, c] : x) {
    out.add({Label{}, label}, -c);
    out.add({label, Label{}}, -c);
  }
  return out;
}

enum class GradedSpace { pqsym, cqsym, sqsym };

/// Dimension of the degree-n component: (n+1)^(n-1), Catalan(n), little Schroeder s_n.
Integer graded_dim(GradedSpace space, int n);

}  // namespace parkhopf
