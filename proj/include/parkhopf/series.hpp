#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace parkhopf {

/// Power series truncated modulo t^order over a commutative ring.
/// Ring needs +, -, *, == and an explicit constructor from int.
template <class Ring>
class Series {
 public:
  explicit Series(std::size_t order) : c_(order, Ring(0)) {}
  Series(std::vector<Ring> coefficients, std::size_t order) : c_(std::move(coefficients)) {
    c_.resize(order, Ring(0));
  }

  static Series monomial(std::size_t k, std::size_t order, Ring value = Ring(1)) {
    Series s(order);
    if (k < order) s.c_[k] = std::move(value);
    return s;
  }

  std::size_t order() const noexcept { return c_.size(); }
  const Ring& operator[](std::size_t i) const { return c_.at(i); }
  Ring& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<Ring>& coefficients() const noexcept { return c_; }

  Series& operator+=(const Series& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  friend Series operator*(const Series& a, const Series& b) {
    a.require_same_order(b);
    const std::size_t n = a.c_.size();
    Series out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c_[i] == Ring(0)) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (b.c_[j] == Ring(0)) continue;
        out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return out;
  }

  friend Series operator*(const Ring& r, Series a) {
    for (auto& x : a.c_) x = r * x;
    return a;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  void require_same_order(const Series& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("series orders differ");
  }

  std::vector<Ring> c_;
};

template <class Ring>
Series<Ring> derivative(const Series<Ring>& f) {
  Series<Ring> d(f.order());
  for (std::size_t i = 1; i < f.order(); ++i) d[i - 1] = Ring(static_cast<int>(i)) * f[i];
  return d;
}

/// 1/a by Newton iteration b <- b(2 - ab). inverse_constant must invert a[0].
template <class Ring>
Series<Ring> reciprocal(const Series<Ring>& a, const Ring& inverse_constant = Ring(1)) {
  const std::size_t n = a.order();
  if (n == 0) return a;
  if (!(a[0] * inverse_constant == Ring(1))) throw std::domain_error("constant term is not invertible");
  Series<Ring> b = Series<Ring>::monomial(0, n, inverse_constant);
  const Series<Ring> two = Series<Ring>::monomial(0, n, Ring(2));
  for (std::size_t precision = 1; precision < n; precision *= 2) b = b * (two - a * b);
  return b;
}

/// f(g) for g without constant term, by Horner.
template <class Ring>
Series<Ring> compose(const Series<Ring>& f, const Series<Ring>& g) {
  if (!(g.order() == 0 || g[0] == Ring(0))) throw std::domain_error("inner series has a constant term");
  const std::size_t n = f.order();
  Series<Ring> out(n);
  for (std::size_t i = n; i-- > 0;) out = out * g + Series<Ring>::monomial(0, n, f[i]);
  return out;
}

/// g with f(g(t)) = t, for f = t + O(t^2); Newton g <- g - (f(g) - t) / f'(g).
template <class Ring>
Series<Ring> compositional_inverse(const Series<Ring>& f) {
  const std::size_t n = f.order();
  if (n < 2 || !(f[0] == Ring(0)) || !(f[1] == Ring(1))) {
    throw std::domain_error("series must be t + O(t^2)");
  }
  const Series<Ring> t = Series<Ring>::monomial(1, n);
  const Series<Ring> df = derivative(f);
  Series<Ring> g = t;
  for (std::size_t precision = 2; precision < 2 * n; precision *= 2) {
    g = g - (compose(f, g) - t) * reciprocal(compose(df, g));
  }
  return g;
}

template <class Ring>
Series<Ring> power(const Series<Ring>& a, unsigned k) {
  Series<Ring> out = Series<Ring>::monomial(0, a.order());
  Series<Ring> base = a;
  while (k) {
    if (k & 1U) out = out * base;
    base = base * base;
    k >>= 1U;
  }
  return out;
}

}  // namespace parkhopf
