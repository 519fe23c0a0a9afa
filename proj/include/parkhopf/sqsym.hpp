#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "parkhopf/linmod.hpp"
#include "parkhopf/pfcore.hpp"
#include "parkhopf/pqsym.hpp"
#include "parkhopf/pqsym_dual.hpp"

namespace parkhopf {

/// Complete invariant of the hypoplactic class: evaluation plus recoil composition.
struct HypoKey {
  EvaluationVector ev;
  Composition recoil;

  friend bool operator==(const HypoKey&, const HypoKey&) = default;
  friend auto operator<=>(const HypoKey& a, const HypoKey& b) {
    if (auto c = a.recoil.weight() <=> b.recoil.weight(); c != 0) return c;
    if (auto c = a.ev <=> b.ev; c != 0) return c;
    return a.recoil <=> b.recoil;
  }
};

inline std::size_t degree(const HypoKey& q) { return static_cast<std::size_t>(q.recoil.weight()); }
std::string to_string(const HypoKey& q);

/// (Ev(w), C(Std(w)^{-1})), with Ev over [max(|w|, max letter)].
HypoKey hypo_key(const Word& w);

struct PqBasis {
  static constexpr std::string_view name = "Pq";
  static constexpr std::string_view algebra = "SQSym";
};
struct QBasis {
  static constexpr std::string_view name = "Q";
  static constexpr std::string_view algebra = "SQSym*";
};

using PqElement = LinComb<HypoKey, PqBasis>;
using PqTensor = Tensor<HypoKey, PqBasis>;
using QElement = LinComb<HypoKey, QBasis>;
using QTensor = Tensor<HypoKey, QBasis>;

std::string to_string(const PqElement& x);
std::string to_string(const PqTensor& x);
std::string to_string(const QElement& x);
std::string to_string(const QTensor& x);

/// Classes of PF_n keyed by HypoKey, members in lexicographic order.
const std::map<HypoKey, std::vector<Word>>& hypo_classes(int n);

/// Sum of F_a over the class; throws std::invalid_argument("empty class") for an unrealised key.
FElement pq_expand(const HypoKey& q);
FElement pq_expand(const PqElement& x);

/// Rewrites an element of the P_q span; throws std::domain_error("not in the SQSym span") otherwise.
PqElement pq_collect(const FElement& x);
PqTensor pq_collect(const FTensor& t);

PqElement pq_product(const HypoKey& q1, const HypoKey& q2);
PqTensor pq_coproduct(const HypoKey& q);

/// G_a -> Q_{key(a)}.
QElement project_to_q(const GElement& x);
QTensor project_to_q(const GTensor& t);

/// Projection of G_{a1} G_{a2} for the first representatives of the classes.
QElement qq_product(const HypoKey& q1, const HypoKey& q2);
/// The same for given representatives.
QElement qq_product_of_representatives(const Word& a1, const Word& a2);
/// Projection of Delta G_a for the first representative.
QTensor qq_coproduct(const HypoKey& q);

const BasisBialgebra<HypoKey, PqBasis>& sqsym_bialgebra();
const BasisBialgebra<HypoKey, QBasis>& sqsym_dual_bialgebra();

Integer schroder_dim_by_classes(int n);
Integer schroder_dim_closed_form(int n);

}  // namespace parkhopf
