#include "parkhopf/sqsym.hpp"

#include <mutex>
#include <stdexcept>

#include "parkhopf/format.hpp"

namespace parkhopf {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string key_label(std::string_view basis, const HypoKey& q) {
  if (q.recoil.empty()) return "";
  return std::string(basis) + to_string(q);
}

template <class Tag>
std::string format_keys(const LinComb<HypoKey, Tag>& x) {
  return format_terms(x, [](const HypoKey& q) { return key_label(Tag::name, q); });
}

template <class Tag>
std::string format_key_tensor(const Tensor<HypoKey, Tag>& x) {
  auto side = [](const HypoKey& q) { return q.recoil.empty() ? std::string("1") : key_label(Tag::name, q); };
  return format_terms(x, [&](const std::pair<HypoKey, HypoKey>& p) { return side(p.first) + " ⊗ " + side(p.second); });
}

const Word& representative(const HypoKey& q) {
  const auto& classes = hypo_classes(q.recoil.weight());
  auto it = classes.find(q);
  if (it == classes.end()) throw std::invalid_argument("empty class");
  return it->second.front();
}

}  // namespace

std::string to_string(const HypoKey& q) { return "{ev:[" + join(q.ev) + "],recoil:" + to_string(q.recoil) + "}"; }

HypoKey hypo_key(const Word& w) {
  const int n = std::max(static_cast<int>(w.size()), w.max_letter());
  HypoKey q;
  q.ev = evaluation(w, n);
  q.recoil = w.empty() ? Composition{} : descent_composition(inverse_permutation(standardize(w)));
  return q;
}

std::string to_string(const PqElement& x) { return format_keys(x); }
std::string to_string(const PqTensor& x) { return format_key_tensor(x); }
std::string to_string(const QElement& x) { return format_keys(x); }
std::string to_string(const QTensor& x) { return format_key_tensor(x); }

const std::map<HypoKey, std::vector<Word>>& hypo_classes(int n) {
  static std::mutex mutex;
  static std::map<int, std::map<HypoKey, std::vector<Word>>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::map<HypoKey, std::vector<Word>> classes;
  for (const Word& a : enumerate(WordKind::parking, n)) classes[hypo_key(a)].push_back(a);
  return cache.emplace(n, std::move(classes)).first->second;
}

FElement pq_expand(const HypoKey& q) {
  const auto& classes = hypo_classes(q.recoil.weight());
  auto it = classes.find(q);
  if (it == classes.end()) throw std::invalid_argument("empty class");
  FElement out;
  for (const Word& a : it->second) out.add(a, 1);
  return out;
}

FElement pq_expand(const PqElement& x) {
  return extend_linear([](const HypoKey& q) { return pq_expand(q); }, x);
}

PqElement pq_collect(const FElement& x) {
  PqElement out;
  for (const auto& [a, c] : x) {
    const HypoKey q = hypo_key(a);
    if (representative(q) == a) out.add(q, c);
  }
  if (!(pq_expand(out) == x)) throw std::domain_error("not in the SQSym span");
  return out;
}

PqTensor pq_collect(const FTensor& t) {
  PqTensor out;
  for (const auto& [pair, c] : t) {
    const HypoKey q1 = hypo_key(pair.first);
    const HypoKey q2 = hypo_key(pair.second);
    if (representative(q1) == pair.first && representative(q2) == pair.second) out.add({q1, q2}, c);
  }
  FTensor expanded;
  for (const auto& [pair, c] : out) expanded += c * tensor(pq_expand(pair.first), pq_expand(pair.second));
  if (!(expanded == t)) throw std::domain_error("not in the SQSym span");
  return out;
}

PqElement pq_product(const HypoKey& q1, const HypoKey& q2) {
  return pq_collect(f_multiply(pq_expand(q1), pq_expand(q2)));
}

PqTensor pq_coproduct(const HypoKey& q) { return pq_collect(f_coproduct(pq_expand(q))); }

QElement project_to_q(const GElement& x) {
  QElement out;
  for (const auto& [a, c] : x) out.add(hypo_key(a), c);
  return out;
}

QTensor project_to_q(const GTensor& t) {
  QTensor out;
  for (const auto& [pair, c] : t) out.add({hypo_key(pair.first), hypo_key(pair.second)}, c);
  return out;
}

QElement qq_product(const HypoKey& q1, const HypoKey& q2) {
  return qq_product_of_representatives(representative(q1), representative(q2));
}

QElement qq_product_of_representatives(const Word& a1, const Word& a2) {
  return project_to_q(g_product(a1, a2));
}

QTensor qq_coproduct(const HypoKey& q) { return project_to_q(g_coproduct(representative(q))); }

const BasisBialgebra<HypoKey, PqBasis>& sqsym_bialgebra() {
  static const BasisBialgebra<HypoKey, PqBasis> h{
      [](const HypoKey& a, const HypoKey& b) { return pq_product(a, b); },
      [](const HypoKey& a) { return pq_coproduct(a); },
  };
  return h;
}

const BasisBialgebra<HypoKey, QBasis>& sqsym_dual_bialgebra() {
  static const BasisBialgebra<HypoKey, QBasis> h{
      [](const HypoKey& a, const HypoKey& b) { return qq_product(a, b); },
      [](const HypoKey& a) { return qq_coproduct(a); },
  };
  return h;
}

Integer schroder_dim_by_classes(int n) { return static_cast<long>(hypo_classes(n).size()); }

Integer schroder_dim_closed_form(int n) { return graded_dim(GradedSpace::sqsym, n); }

}  // namespace parkhopf
