#pragma once

#include <string>
#include <vector>

#include "parkhopf/linmod.hpp"
#include "parkhopf/word.hpp"

namespace parkhopf {

using PartitionMap = LinComb<Partition>;
using CompositionMap = LinComb<Composition>;
using CompositionTensor = Tensor<Composition, NoBasis>;

// ---------------------------------------------------------------------------
// Sym

enum class SymBasis { m, e, h };

/// Symmetric function with a basis tag. Arithmetic happens in the h basis
/// (or e when both operands are in e); equality is basis-independent.
class SymFunction {
 public:
  SymFunction() = default;
  explicit SymFunction(int c) : SymFunction(Rational(c)) {}
  explicit SymFunction(const Rational& c);
  SymFunction(SymBasis basis, PartitionMap terms) : basis_(basis), terms_(std::move(terms)) {}

  static SymFunction h(const Partition& lambda) { return {SymBasis::h, PartitionMap(lambda)}; }
  static SymFunction e(const Partition& lambda) { return {SymBasis::e, PartitionMap(lambda)}; }
  static SymFunction m(const Partition& lambda) { return {SymBasis::m, PartitionMap(lambda)}; }
  /// h_n, e_n; zero for n < 0 and 1 for n = 0.
  static SymFunction h(int n);
  static SymFunction e(int n);

  SymBasis basis() const noexcept { return basis_; }
  const PartitionMap& terms() const noexcept { return terms_; }
  Rational coefficient(const Partition& lambda) const { return terms_.coefficient(lambda); }
  bool is_zero() const noexcept { return terms_.is_zero(); }

  SymFunction in(SymBasis target) const;

  SymFunction& operator+=(const SymFunction& o);
  SymFunction& operator-=(const SymFunction& o);
  friend SymFunction operator+(SymFunction a, const SymFunction& b) { return a += b; }
  friend SymFunction operator-(SymFunction a, const SymFunction& b) { return a -= b; }
  friend SymFunction operator-(const SymFunction& a) { return SymFunction(a.basis_, -a.terms_); }
  friend SymFunction operator*(const SymFunction& a, const SymFunction& b);
  friend SymFunction operator*(const Rational& q, const SymFunction& a) { return {a.basis_, q * a.terms_}; }
  friend bool operator==(const SymFunction& a, const SymFunction& b);

 private:
  SymBasis basis_ = SymBasis::h;
  PartitionMap terms_;
};

std::string to_string(const SymFunction& x);

/// Ring involution exchanging e_n and h_n.
SymFunction omega(const SymFunction& x);

/// Hall inner product, <h_lambda, m_mu> = delta.
Rational hall_pairing(const SymFunction& x, const SymFunction& y);

/// Coefficient of m_mu in h_lambda: nonnegative integer matrices with row sums lambda, column sums mu.
Integer h_to_m_coefficient(const Partition& lambda, const Partition& mu);

/// h_n^* read off the compositional inverse of u = tH(t); t = uH^*(u).
SymFunction h_star(int n);
/// (1/(n+1)) [t^n] E(-t)^(n+1), with E(t) = sum e_k t^k.
SymFunction h_star_lagrange(int n);
/// Image of e_n under the star map.
SymFunction e_star(int n);

/// Ring endomorphism h_n -> h_n^*.
SymFunction star(const SymFunction& x);

/// -e_n^* = (1/(n-1)) sum_lambda C(n-1, l) l!/prod m_i! e_lambda, n >= 2.
SymFunction minus_e_star_closed_form(int n);

/// f_n = omega(-e_n^*) with f_1 = h_1; via the star map.
SymFunction f_n(int n);
/// The same from the closed form.
SymFunction f_n_closed_form(int n);

/// f_{i_1} ... f_{i_r}.
SymFunction ch_ppf(const Composition& type);
/// sum_{I |= n} f^I.
SymFunction ch_pf(int n);
/// Sums of h_{lambda(Ev)} over nondecreasing representatives (one per orbit).
SymFunction ch_ppf_combinatorial(const Composition& type);
SymFunction ch_pf_combinatorial(int n);

/// (1/(n-1)) C(n-1, l(lambda)) l(lambda)! / prod m_i!, n = |lambda| >= 2:
/// the number of S_n-orbits of prime parking functions with evaluation partition lambda.
Integer prime_eval_count(const Partition& lambda);
/// prime_eval_count(lambda) * n! / prod lambda_i!: number of such words.
Integer prime_eval_word_count(const Partition& lambda);

/// r_J = sum over coarsenings K of J of (-1)^(l(J)-l(K)) h_K.
SymFunction ribbon_r(const Composition& j);

/// Specialization h_k -> moments[k-1].
Rational specialize(const SymFunction& x, const std::vector<Rational>& moments);

// ---------------------------------------------------------------------------
// QSym

enum class QSymBasis { M, F };

class QSymFunction {
 public:
  QSymFunction() = default;
  QSymFunction(QSymBasis basis, CompositionMap terms) : basis_(basis), terms_(std::move(terms)) {}
  static QSymFunction M(const Composition& c) { return {QSymBasis::M, CompositionMap(c)}; }
  static QSymFunction F(const Composition& c) { return {QSymBasis::F, CompositionMap(c)}; }

  QSymBasis basis() const noexcept { return basis_; }
  const CompositionMap& terms() const noexcept { return terms_; }
  QSymFunction in(QSymBasis target) const;

  QSymFunction& operator+=(const QSymFunction& o);
  QSymFunction& operator-=(const QSymFunction& o);
  friend QSymFunction operator+(QSymFunction a, const QSymFunction& b) { return a += b; }
  friend QSymFunction operator-(QSymFunction a, const QSymFunction& b) { return a -= b; }
  friend QSymFunction operator*(const Rational& q, const QSymFunction& a) { return {a.basis_, q * a.terms_}; }
  /// Product in the M basis by quasi-shuffle; the result is in M.
  friend QSymFunction operator*(const QSymFunction& a, const QSymFunction& b);
  friend bool operator==(const QSymFunction& a, const QSymFunction& b);

 private:
  QSymBasis basis_ = QSymBasis::M;
  CompositionMap terms_;
};

std::string to_string(const QSymFunction& x);

/// M_I M_J as a combination of M_K.
CompositionMap quasi_shuffle(const Composition& i, const Composition& j);

/// Coproduct in M (x) M: Delta M_I = sum_{I = J K} M_J (x) M_K.
CompositionTensor qsym_coproduct(const QSymFunction& x);

/// m_lambda -> sum of M_I over distinct rearrangements I of lambda.
QSymFunction sym_to_qsym(const SymFunction& x);

// ---------------------------------------------------------------------------
// NSym

enum class NSymBasis { S, R };

class NSymFunction {
 public:
  NSymFunction() = default;
  explicit NSymFunction(const Rational& c) : terms_(Composition{}, c) {}
  NSymFunction(NSymBasis basis, CompositionMap terms) : basis_(basis), terms_(std::move(terms)) {}
  static NSymFunction S(const Composition& c) { return {NSymBasis::S, CompositionMap(c)}; }
  static NSymFunction R(const Composition& c) { return {NSymBasis::R, CompositionMap(c)}; }
  /// S_n; 1 for n = 0.
  static NSymFunction S(int n);

  NSymBasis basis() const noexcept { return basis_; }
  const CompositionMap& terms() const noexcept { return terms_; }
  Rational coefficient(const Composition& c) const { return terms_.coefficient(c); }
  NSymFunction in(NSymBasis target) const;
  NSymFunction component(int degree) const { return {basis_, terms_.component(static_cast<std::size_t>(degree))}; }

  NSymFunction& operator+=(const NSymFunction& o);
  NSymFunction& operator-=(const NSymFunction& o);
  friend NSymFunction operator+(NSymFunction a, const NSymFunction& b) { return a += b; }
  friend NSymFunction operator-(NSymFunction a, const NSymFunction& b) { return a -= b; }
  friend NSymFunction operator*(const Rational& q, const NSymFunction& a) { return {a.basis_, q * a.terms_}; }
  /// S^I S^J = S^{IJ}; the result is in S.
  friend NSymFunction operator*(const NSymFunction& a, const NSymFunction& b);
  friend bool operator==(const NSymFunction& a, const NSymFunction& b);

 private:
  NSymBasis basis_ = NSymBasis::S;
  CompositionMap terms_;
};

std::string to_string(const NSymFunction& x);

/// S_n -> h_n.
SymFunction commutative_image(const NSymFunction& x);

// ---------------------------------------------------------------------------
// Moments and free cumulants

/// Compositional inversion of G(z) = 1/z + sum M_n z^(-n-1).
std::vector<Rational> moments_to_cumulants(const std::vector<Rational>& moments);
std::vector<Rational> cumulants_to_moments(const std::vector<Rational>& cumulants);

/// R_n = (-1)^n e_n^* specialised at h_k -> M_k.
std::vector<Rational> moments_to_cumulants_by_specialization(const std::vector<Rational>& moments);

/// sum over non-crossing partitions of [n] of prod_B R_{|B|}.
Rational nc_moment_oracle(const std::vector<Rational>& cumulants, int n);

}  // namespace parkhopf
