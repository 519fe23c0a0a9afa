#include "parkhopf/symfun.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "parkhopf/format.hpp"
#include "parkhopf/matrix.hpp"
#include "parkhopf/pfcore.hpp"
#include "parkhopf/series.hpp"

namespace parkhopf {

namespace {

PartitionMap multiply_partition_maps(const PartitionMap& a, const PartitionMap& b) {
  PartitionMap out;
  for (const auto& [la, ca] : a) {
    for (const auto& [lb, cb] : b) out.add(merge(la, lb), ca * cb);
  }
  return out;
}

PartitionMap one_partition_map() { return PartitionMap(Partition{}); }

/// X_n in the Y basis from sum_k (-1)^k X_k Y_{n-k} = 0, for (X, Y) = (e, h) or (h, e).
const PartitionMap& dual_generator(int n) {
  static std::mutex mutex;
  static std::vector<PartitionMap> cache{one_partition_map()};
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    PartitionMap xm;
    for (int k = 0; k < m; ++k) {
      const Rational sign = ((m - k - 1) % 2 == 0) ? 1 : -1;
      xm += sign * multiply_partition_maps(cache[static_cast<std::size_t>(k)], PartitionMap(Partition{m - k}));
    }
    cache.push_back(std::move(xm));
  }
  return cache[static_cast<std::size_t>(n)];
}

PartitionMap swap_generators(const PartitionMap& x) {
  PartitionMap out;
  for (const auto& [lambda, c] : x) {
    PartitionMap term = one_partition_map();
    for (int part : lambda) term = multiply_partition_maps(term, dual_generator(part));
    out += c * term;
  }
  return out;
}

struct MonomialTables {
  std::vector<Partition> shapes;
  std::map<Partition, std::size_t> index;
  QMatrix h_to_m;  // row lambda: h_lambda = sum_mu A(lambda, mu) m_mu
  QMatrix m_to_h;
};

const MonomialTables& monomial_tables(int n) {
  static std::mutex mutex;
  static std::map<int, MonomialTables> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  MonomialTables t;
  t.shapes = partitions(n);
  for (std::size_t i = 0; i < t.shapes.size(); ++i) t.index.emplace(t.shapes[i], i);
  const std::size_t p = t.shapes.size();
  t.h_to_m = QMatrix(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) t.h_to_m(i, j) = Rational(h_to_m_coefficient(t.shapes[i], t.shapes[j]));
  }
  t.m_to_h = t.h_to_m.inverse();
  return cache.emplace(n, std::move(t)).first->second;
}

PartitionMap to_h(const SymFunction& x) {
  switch (x.basis()) {
    case SymBasis::h:
      return x.terms();
    case SymBasis::e:
      return swap_generators(x.terms());
    case SymBasis::m: {
      PartitionMap out;
      for (const auto& [mu, c] : x.terms()) {
        const auto& t = monomial_tables(mu.weight());
        const std::size_t row = t.index.at(mu);
        for (std::size_t j = 0; j < t.shapes.size(); ++j) out.add(t.shapes[j], c * t.m_to_h(row, j));
      }
      return out;
    }
  }
  throw std::logic_error("unknown basis");
}

PartitionMap from_h(const PartitionMap& x, SymBasis target) {
  switch (target) {
    case SymBasis::h:
      return x;
    case SymBasis::e:
      return swap_generators(x);
    case SymBasis::m: {
      PartitionMap out;
      for (const auto& [lambda, c] : x) {
        const auto& t = monomial_tables(lambda.weight());
        const std::size_t row = t.index.at(lambda);
        for (std::size_t j = 0; j < t.shapes.size(); ++j) out.add(t.shapes[j], c * t.h_to_m(row, j));
      }
      return out;
    }
  }
  throw std::logic_error("unknown basis");
}

std::string basis_name(SymBasis b) {
  switch (b) {
    case SymBasis::m: return "m";
    case SymBasis::e: return "e";
    case SymBasis::h: return "h";
  }
  return "?";
}

Rational sign_of(long k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

// ---------------------------------------------------------------------------
// Sym

SymFunction::SymFunction(const Rational& c) : basis_(SymBasis::h), terms_(Partition{}, c) {}

SymFunction SymFunction::h(int n) {
  if (n < 0) return {};
  return h(n == 0 ? Partition{} : Partition{n});
}

SymFunction SymFunction::e(int n) {
  if (n < 0) return {};
  return e(n == 0 ? Partition{} : Partition{n});
}

SymFunction SymFunction::in(SymBasis target) const {
  if (target == basis_) return *this;
  return {target, from_h(to_h(*this), target)};
}

SymFunction& SymFunction::operator+=(const SymFunction& o) {
  if (o.basis_ == basis_) {
    terms_ += o.terms_;
  } else {
    terms_ = to_h(*this) + to_h(o);
    basis_ = SymBasis::h;
  }
  return *this;
}

SymFunction& SymFunction::operator-=(const SymFunction& o) { return *this += -o; }

SymFunction operator*(const SymFunction& a, const SymFunction& b) {
  if (a.basis_ == SymBasis::e && b.basis_ == SymBasis::e) {
    return {SymBasis::e, multiply_partition_maps(a.terms_, b.terms_)};
  }
  return {SymBasis::h, multiply_partition_maps(to_h(a), to_h(b))};
}

bool operator==(const SymFunction& a, const SymFunction& b) {
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return to_h(a) == to_h(b);
}

std::string to_string(const SymFunction& x) {
  const std::string prefix = basis_name(x.basis());
  return format_terms(x.terms(), [&](const Partition& p) { return p.empty() ? std::string() : prefix + to_string(p); });
}

SymFunction omega(const SymFunction& x) {
  switch (x.basis()) {
    case SymBasis::h: return {SymBasis::e, x.terms()};
    case SymBasis::e: return {SymBasis::h, x.terms()};
    case SymBasis::m: return {SymBasis::e, to_h(x)};
  }
  throw std::logic_error("unknown basis");
}

Rational hall_pairing(const SymFunction& x, const SymFunction& y) {
  return dual_pairing(to_h(x), from_h(to_h(y), SymBasis::m));
}

Integer h_to_m_coefficient(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return 0;
  std::vector<int> columns = mu.parts();
  const auto& rows = lambda.parts();
  std::function<Integer(std::size_t, std::size_t, int)> fill = [&](std::size_t row, std::size_t col,
                                                                   int left) -> Integer {
    if (row == rows.size()) return 1;
    if (col + 1 == columns.size()) {
      if (left > columns[col]) return 0;
      columns[col] -= left;
      Integer r = fill(row + 1, 0, row + 1 < rows.size() ? rows[row + 1] : 0);
      columns[col] += left;
      return r;
    }
    Integer total = 0;
    for (int take = 0; take <= std::min(left, columns[col]); ++take) {
      columns[col] -= take;
      total += fill(row, col + 1, left - take);
      columns[col] += take;
    }
    return total;
  };
  if (rows.empty()) return 1;
  return fill(0, 0, rows[0]);
}

SymFunction h_star(int n) {
  if (n < 0) return {};
  static std::mutex mutex;
  static std::vector<SymFunction> cache;
  std::lock_guard lock(mutex);
  if (static_cast<int>(cache.size()) <= n) {
    const std::size_t order = static_cast<std::size_t>(n) + 2;
    Series<SymFunction> phi(order);
    phi[1] = SymFunction(1);
    for (std::size_t k = 1; k + 1 < order; ++k) phi[k + 1] = SymFunction::h(static_cast<int>(k));
    const auto psi = compositional_inverse(phi);
    cache.clear();
    for (std::size_t k = 0; k + 1 < order; ++k) cache.push_back(psi[k + 1].in(SymBasis::h));
  }
  return cache[static_cast<std::size_t>(n)];
}

SymFunction h_star_lagrange(int n) {
  if (n < 0) return {};
  const std::size_t order = static_cast<std::size_t>(n) + 1;
  Series<SymFunction> e_minus(order);
  for (std::size_t k = 0; k < order; ++k) {
    e_minus[k] = sign_of(static_cast<long>(k)) * SymFunction::e(static_cast<int>(k));
  }
  const auto p = power(e_minus, static_cast<unsigned>(n + 1));
  return (fraction(1, n + 1) * p[static_cast<std::size_t>(n)]).in(SymBasis::h);
}

SymFunction star(const SymFunction& x) {
  SymFunction out(SymBasis::h, {});
  for (const auto& [lambda, c] : to_h(x)) {
    SymFunction term(1);
    for (int part : lambda) term = term * h_star(part);
    out += c * term;
  }
  return out;
}

SymFunction e_star(int n) { return star(SymFunction::e(n)); }

SymFunction minus_e_star_closed_form(int n) {
  if (n < 2) throw std::invalid_argument("closed form needs n >= 2");
  PartitionMap out;
  for (const Partition& lambda : partitions(n)) {
    const long l = static_cast<long>(lambda.length());
    Integer multinomial = factorial(l);
    const auto mult = lambda.multiplicities();
    for (int m : mult) multinomial /= factorial(m);
    out.add(lambda, fraction(binomial(n - 1, l) * multinomial, n - 1));
  }
  return {SymBasis::e, out};
}

SymFunction f_n(int n) {
  if (n < 1) throw std::invalid_argument("f_n needs n >= 1");
  if (n == 1) return SymFunction::h(1);
  return omega((-e_star(n)).in(SymBasis::e)).in(SymBasis::h);
}

SymFunction f_n_closed_form(int n) {
  if (n == 1) return SymFunction::h(1);
  return omega(minus_e_star_closed_form(n));
}

SymFunction ch_ppf(const Composition& type) {
  SymFunction out(1);
  for (int part : type) out = out * f_n(part);
  return out;
}

SymFunction ch_pf(int n) {
  SymFunction out(SymBasis::h, {});
  for (const Composition& c : compositions(n)) out += ch_ppf(c);
  return out;
}

SymFunction ch_ppf_combinatorial(const Composition& type) {
  PartitionMap out;
  for (const Word& w : enumerate(WordKind::nondecreasing, type.weight())) {
    if (prime_type(w) == type) out.add(shape(evaluation_composition(w)), 1);
  }
  return {SymBasis::h, out};
}

SymFunction ch_pf_combinatorial(int n) {
  PartitionMap out;
  for (const Word& w : enumerate(WordKind::nondecreasing, n)) out.add(shape(evaluation_composition(w)), 1);
  return {SymBasis::h, out};
}

Integer prime_eval_count(const Partition& lambda) {
  const int n = lambda.weight();
  if (n < 2) throw std::invalid_argument("prime_eval_count needs |lambda| >= 2");
  const long l = static_cast<long>(lambda.length());
  Integer numerator = binomial(n - 1, l) * factorial(l);
  for (int m : lambda.multiplicities()) numerator /= factorial(m);
  if (numerator % (n - 1) != 0) throw std::logic_error("non-integral orbit count");
  return numerator / (n - 1);
}

Integer prime_eval_word_count(const Partition& lambda) {
  Integer orbit = factorial(lambda.weight());
  for (int part : lambda) orbit /= factorial(part);
  return prime_eval_count(lambda) * orbit;
}

SymFunction ribbon_r(const Composition& j) {
  PartitionMap out;
  for (const Composition& k : coarsenings(j)) {
    out.add(shape(k), sign_of(static_cast<long>(j.length() - k.length())));
  }
  return {SymBasis::h, out};
}

Rational specialize(const SymFunction& x, const std::vector<Rational>& moments) {
  Rational total = 0;
  for (const auto& [lambda, c] : to_h(x)) {
    Rational term = c;
    for (int part : lambda) {
      if (static_cast<std::size_t>(part) > moments.size()) throw std::out_of_range("not enough moments");
      term *= moments[static_cast<std::size_t>(part) - 1];
    }
    total += term;
  }
  return total;
}

// ---------------------------------------------------------------------------
// QSym

QSymFunction QSymFunction::in(QSymBasis target) const {
  if (target == basis_) return *this;
  CompositionMap out;
  for (const auto& [c, q] : terms_) {
    for (const Composition& r : refinements(c)) {
      const Rational coefficient =
          target == QSymBasis::M ? q : q * sign_of(static_cast<long>(r.length() - c.length()));
      out.add(r, coefficient);
    }
  }
  return {target, out};
}

QSymFunction& QSymFunction::operator+=(const QSymFunction& o) {
  if (o.basis_ == basis_) {
    terms_ += o.terms_;
  } else {
    terms_ = in(QSymBasis::M).terms_ + o.in(QSymBasis::M).terms_;
    basis_ = QSymBasis::M;
  }
  return *this;
}

QSymFunction& QSymFunction::operator-=(const QSymFunction& o) { return *this += Rational(-1) * o; }

CompositionMap quasi_shuffle(const Composition& i, const Composition& j) {
  if (i.empty()) return CompositionMap(j);
  if (j.empty()) return CompositionMap(i);
  const Composition i_rest(std::vector<int>(i.begin() + 1, i.end()));
  const Composition j_rest(std::vector<int>(j.begin() + 1, j.end()));
  CompositionMap out;
  auto prepend = [&](int part, const CompositionMap& tail) {
    for (const auto& [c, q] : tail) out.add(concat(Composition{part}, c), q);
  };
  prepend(i[0], quasi_shuffle(i_rest, j));
  prepend(j[0], quasi_shuffle(i, j_rest));
  prepend(i[0] + j[0], quasi_shuffle(i_rest, j_rest));
  return out;
}

QSymFunction operator*(const QSymFunction& a, const QSymFunction& b) {
  return {QSymBasis::M, extend_bilinear(quasi_shuffle, a.in(QSymBasis::M).terms_, b.in(QSymBasis::M).terms_)};
}

bool operator==(const QSymFunction& a, const QSymFunction& b) {
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return a.in(QSymBasis::M).terms_ == b.in(QSymBasis::M).terms_;
}

std::string to_string(const QSymFunction& x) {
  const std::string prefix = x.basis() == QSymBasis::M ? "M" : "F";
  return format_terms(x.terms(), [&](const Composition& c) { return c.empty() ? std::string() : prefix + to_string(c); });
}

CompositionTensor qsym_coproduct(const QSymFunction& x) {
  CompositionTensor out;
  const QSymFunction in_m = x.in(QSymBasis::M);
  for (const auto& [c, q] : in_m.terms()) {
    const auto& parts = c.parts();
    for (std::size_t k = 0; k <= parts.size(); ++k) {
      out.add({Composition(std::vector<int>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(k))),
               Composition(std::vector<int>(parts.begin() + static_cast<std::ptrdiff_t>(k), parts.end()))},
              q);
    }
  }
  return out;
}

QSymFunction sym_to_qsym(const SymFunction& x) {
  CompositionMap out;
  const SymFunction in_m = x.in(SymBasis::m);
  for (const auto& [lambda, q] : in_m.terms()) {
    std::vector<int> parts = lambda.parts();
    std::sort(parts.begin(), parts.end());
    do {
      out.add(Composition(parts), q);
    } while (std::next_permutation(parts.begin(), parts.end()));
  }
  return {QSymBasis::M, out};
}

// ---------------------------------------------------------------------------
// NSym

NSymFunction NSymFunction::S(int n) {
  if (n < 0) return {};
  return S(n == 0 ? Composition{} : Composition{n});
}

NSymFunction NSymFunction::in(NSymBasis target) const {
  if (target == basis_) return *this;
  CompositionMap out;
  for (const auto& [c, q] : terms_) {
    for (const Composition& k : coarsenings(c)) {
      const Rational coefficient =
          target == NSymBasis::R ? q : q * sign_of(static_cast<long>(c.length() - k.length()));
      out.add(k, coefficient);
    }
  }
  return {target, out};
}

NSymFunction& NSymFunction::operator+=(const NSymFunction& o) {
  if (o.basis_ == basis_) {
    terms_ += o.terms_;
  } else {
    terms_ = in(NSymBasis::S).terms_ + o.in(NSymBasis::S).terms_;
    basis_ = NSymBasis::S;
  }
  return *this;
}

NSymFunction& NSymFunction::operator-=(const NSymFunction& o) { return *this += Rational(-1) * o; }

NSymFunction operator*(const NSymFunction& a, const NSymFunction& b) {
  CompositionMap out;
  const NSymFunction left = a.in(NSymBasis::S);
  const NSymFunction right = b.in(NSymBasis::S);
  for (const auto& [i, p] : left.terms_) {
    for (const auto& [j, q] : right.terms_) out.add(concat(i, j), p * q);
  }
  return {NSymBasis::S, out};
}

bool operator==(const NSymFunction& a, const NSymFunction& b) {
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return a.in(NSymBasis::S).terms_ == b.in(NSymBasis::S).terms_;
}

std::string to_string(const NSymFunction& x) {
  const std::string prefix = x.basis() == NSymBasis::S ? "S" : "R";
  return format_terms(x.terms(), [&](const Composition& c) { return c.empty() ? std::string() : prefix + to_string(c); });
}

SymFunction commutative_image(const NSymFunction& x) {
  PartitionMap out;
  const NSymFunction in_s = x.in(NSymBasis::S);
  for (const auto& [c, q] : in_s.terms()) out.add(shape(c), q);
  return {SymBasis::h, out};
}

// ---------------------------------------------------------------------------
// Moments and free cumulants

std::vector<Rational> moments_to_cumulants(const std::vector<Rational>& moments) {
  const std::size_t n = moments.size();
  if (n == 0) return {};
  Series<Rational> phi(n + 2);
  phi[1] = 1;
  for (std::size_t k = 1; k <= n; ++k) phi[k + 1] = moments[k - 1];
  const auto psi = compositional_inverse(phi);
  Series<Rational> h_star_series(n + 1);
  for (std::size_t k = 0; k <= n; ++k) h_star_series[k] = psi[k + 1];
  const auto inverse = reciprocal(h_star_series);
  return {inverse.coefficients().begin() + 1, inverse.coefficients().end()};
}

std::vector<Rational> cumulants_to_moments(const std::vector<Rational>& cumulants) {
  const std::size_t n = cumulants.size();
  if (n == 0) return {};
  Series<Rational> k_series(n + 1);
  k_series[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) k_series[k] = cumulants[k - 1];
  const auto h_star_series = reciprocal(k_series);
  Series<Rational> psi(n + 2);
  for (std::size_t k = 0; k <= n; ++k) psi[k + 1] = h_star_series[k];
  const auto phi = compositional_inverse(psi);
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(phi[k + 1]);
  return out;
}

std::vector<Rational> moments_to_cumulants_by_specialization(const std::vector<Rational>& moments) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= moments.size(); ++k) {
    out.push_back(sign_of(static_cast<long>(k)) * specialize(e_star(static_cast<int>(k)), moments));
  }
  return out;
}

Rational nc_moment_oracle(const std::vector<Rational>& cumulants, int n) {
  Rational total = 0;
  for (const NonCrossingPartition& pi : noncrossing_partitions(n)) {
    Rational term = 1;
    for (const auto& block : pi.blocks()) {
      if (block.size() > cumulants.size()) throw std::out_of_range("not enough cumulants");
      term *= cumulants[block.size() - 1];
    }
    total += term;
  }
  return total;
}

}  // namespace parkhopf
