#include "parkhopf/pqsym.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "parkhopf/format.hpp"
#include "parkhopf/pfcore.hpp"

namespace parkhopf {

namespace {

void require_parking(const Word& a) {
  if (!is_parking(a)) throw std::invalid_argument("not a parking function: " + to_string(a));
}

FElement product_of(const std::vector<Word>& factors) {
  FElement out = FElement::unit();
  for (const Word& w : factors) out = f_multiply(out, FElement(w));
  return out;
}

}  // namespace

FElement f_basis(const Word& a) {
  require_parking(a);
  return FElement(a);
}

FElement f_product(const Word& a, const Word& b) {
  FElement out;
  for (const Word& c : shifted_shuffle(a, b)) out.add(c, 1);
  return out;
}

FElement f_multiply(const FElement& x, const FElement& y) { return extend_bilinear(f_product, x, y); }

FTensor f_coproduct(const Word& a) {
  FTensor out;
  for (std::size_t k = 0; k <= a.size(); ++k) out.add({parkize(a.slice(0, k)), parkize(a.slice(k, a.size()))}, 1);
  return out;
}

FTensor f_coproduct(const FElement& x) {
  return extend_linear([](const Word& a) { return f_coproduct(a); }, x);
}

FElement f_antipode(const Word& a) {
  const std::size_t n = a.size();
  if (n == 0) return FElement::unit();
  FElement out;
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    std::vector<Word> blocks;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i == n || (mask & (1UL << (i - 1)))) {
        blocks.push_back(parkize(a.slice(start, i)));
        start = i;
      }
    }
    const Rational sign = blocks.size() % 2 == 0 ? 1 : -1;
    out += sign * product_of(blocks);
  }
  return out;
}

FElement f_antipode(const FElement& x) {
  return extend_linear([](const Word& a) { return f_antipode(a); }, x);
}

const BasisBialgebra<Word, FBasis>& pqsym_bialgebra() {
  static const BasisBialgebra<Word, FBasis> h{
      [](const Word& a, const Word& b) { return f_product(a, b); },
      [](const Word& a) { return f_coproduct(a); },
  };
  return h;
}

FElement f_antipode_recursive(const Word& a) {
  std::map<Word, FElement> memo;
  return antipode_by_recursion(pqsym_bialgebra(), a, memo);
}

FElement f_mult_basis(const Word& a) { return product_of(connected_factorization(a)); }

Triangularity f_mult_basis_triangularity(int n) {
  static std::mutex mutex;
  static std::map<int, Triangularity> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  bool lower = true;
  bool upper = true;
  for (const Word& a : enumerate(WordKind::parking, n)) {
    const FElement row = f_mult_basis(a);
    if (row.coefficient(a) != 1) throw std::logic_error("triangularity violated");
    for (const auto& [b, c] : row) {
      if (b < a) upper = false;
      if (a < b) lower = false;
    }
  }
  if (!lower && !upper) throw std::logic_error("triangularity violated");
  const Triangularity result = upper ? Triangularity::upper : Triangularity::lower;
  cache.emplace(n, result);
  return result;
}

std::size_t degree(const GeneratorMonomial& m) {
  std::size_t d = 0;
  for (const Word& w : m) d += w.size();
  return d;
}

std::string to_string(const GeneratorPolynomial& p) {
  return format_terms(p, [](const GeneratorMonomial& m) {
    std::string out;
    for (const Word& w : m) {
      if (!out.empty()) out += "*";
      out += "F" + to_string(w);
    }
    return out;
  });
}

GeneratorPolynomial connected_decomposition(const FElement& x) {
  GeneratorPolynomial out;
  FElement rest = x;
  while (!rest.is_zero()) {
    const int n = static_cast<int>(rest.begin()->first.size());
    const bool upper = f_mult_basis_triangularity(n) == Triangularity::upper;
    // The extreme label of the lowest degree is the leading term of exactly one F^a.
    Word lead;
    Rational c;
    if (upper) {
      lead = rest.begin()->first;
      c = rest.begin()->second;
    } else {
      const FElement part = rest.component(static_cast<std::size_t>(n));
      lead = part.terms().rbegin()->first;
      c = part.terms().rbegin()->second;
    }
    rest -= c * f_mult_basis(lead);
    if (sgn(rest.coefficient(lead)) != 0) throw std::logic_error("triangularity violated");
    out.add(connected_factorization(lead), c);
  }
  return out;
}

FElement evaluate_generators(const GeneratorPolynomial& p) {
  FElement out;
  for (const auto& [m, c] : p) out += c * product_of(m);
  return out;
}

std::vector<GeneratorMonomial> connected_monomials(int n) {
  std::vector<GeneratorMonomial> out;
  for (const Composition& type : compositions(n)) {
    std::vector<GeneratorMonomial> acc{{}};
    for (int part : type) {
      const auto generators = enumerate(WordKind::connected, part);
      std::vector<GeneratorMonomial> next;
      for (const auto& prefix : acc) {
        for (const Word& g : generators) {
          auto m = prefix;
          m.push_back(g);
          next.push_back(std::move(m));
        }
      }
      acc = std::move(next);
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return out;
}

FElement v_element(const Composition& type) {
  FElement out = FElement::unit();
  for (int part : type) out = f_multiply(out, ppf_sum(part));
  return out;
}

FElement v_element_by_type(const Composition& type) {
  FElement out;
  for (const Word& a : enumerate(WordKind::parking, type.weight())) {
    if (prime_type(a) == type) out.add(a, 1);
  }
  return out;
}

FElement pf_sum(int n) {
  FElement out;
  for (const Word& a : enumerate(WordKind::parking, n)) out.add(a, 1);
  return out;
}

FElement ppf_sum(int n) {
  FElement out;
  for (const Word& a : enumerate(WordKind::prime, n)) out.add(a, 1);
  return out;
}

FElement ppf_inclusion_exclusion(int n) {
  FElement out;
  for (const Composition& type : compositions(n)) {
    FElement term = FElement::unit();
    for (int part : type) term = f_multiply(term, pf_sum(part));
    const Rational sign = (type.length() - 1) % 2 == 0 ? 1 : -1;
    out += sign * term;
  }
  return out;
}

QSymFunction eta(const FElement& x) {
  CompositionMap out;
  for (const auto& [a, c] : x) out.add(a.empty() ? Composition{} : descent_composition(a), c);
  return {QSymBasis::F, out};
}

FElement j_embed(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  return FElement(Word(std::vector<Letter>(static_cast<std::size_t>(n), 1)));
}

}  // namespace parkhopf
