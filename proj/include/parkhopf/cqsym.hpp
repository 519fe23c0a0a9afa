#pragma once

#include <string_view>
#include <vector>

#include "parkhopf/linmod.hpp"
#include "parkhopf/pqsym.hpp"
#include "parkhopf/symfun.hpp"
#include "parkhopf/word.hpp"

namespace parkhopf {

struct PBasis {
  static constexpr std::string_view name = "P";
  static constexpr std::string_view algebra = "CQSym";
};
struct RBasis {
  static constexpr std::string_view name = "R";
  static constexpr std::string_view algebra = "CQSym";
};
struct MBasis {
  static constexpr std::string_view name = "M";
  static constexpr std::string_view algebra = "CQSym*";
};

using PElement = LinComb<Word, PBasis>;
using PTensor = Tensor<Word, PBasis>;
using RElement = LinComb<Word, RBasis>;
using MElement = LinComb<Word, MBasis>;

/// Throws std::invalid_argument("not a Catalan label") unless pi is a nondecreasing parking function.
void require_catalan_label(const Word& pi);

/// P^{pi'} P^{pi''} = P^{pi' . pi''}.
PElement p_product(const Word& p1, const Word& p2);
PElement p_multiply(const PElement& x, const PElement& y);

/// Sum of F_a over the distinct rearrangements a of pi.
FElement p_expand(const Word& pi);
FElement p_expand(const PElement& x);

/// Sum over complementary sub-multisets (u, v) of pi of P^{Park u} (x) P^{Park v}.
PTensor p_coproduct(const Word& pi);
PTensor p_coproduct(const PElement& x);

/// Sum of M over the sorted members of the convolution of pi' and pi''.
MElement m_product(const Word& p1, const Word& p2);
MElement m_multiply(const MElement& x, const MElement& y);

using MTensor = Tensor<Word, MBasis>;
using RTensor = Tensor<Word, RBasis>;

/// Sum over splittings pi = pi' . pi'' (shifted concatenation) of M_{pi'} (x) M_{pi''}.
MTensor m_coproduct(const Word& pi);

/// Exponent vector over x_1..x_k.
using Monomial = std::vector<int>;
using Polynomial = LinComb<Monomial>;

/// Sum of x^{Ev(w)} over nondecreasing words w on [k] with Park(w) = pi.
/// Throws std::invalid_argument("insufficient variables") when k < |pi|.
Polynomial m_polynomial(const Word& pi, int k);
Polynomial m_polynomial(const MElement& x, int k);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
std::string to_string(const Polynomial& p);

/// Lengths of the connected factors of pi.
Composition c_of_pi(const Word& pi);

/// Sum of M_pi over nondecreasing pi whose nonzero evaluation entries read I.
/// This is the statistic under which QSym embeds multiplicatively.
MElement gamma(const Composition& type);
/// Sum of M_pi over pi with c(pi) = I.
MElement gamma_by_connected_type(const Composition& type);

/// P^pi = sum over pi' >= pi of R_{pi'}.
RElement p_to_ribbon(const Word& pi);
RElement p_to_ribbon(const PElement& x);
/// R_pi in the P basis, by recursion down the successor order.
PElement ribbon_to_p(const Word& pi);
PElement ribbon_to_p(const RElement& x);

/// pi' followed by pi''[|pi'|], except that the ones of pi'' become max(pi').
/// In evaluation vectors: concatenate, then merge the last nonzero entry of Ev(pi')
/// with the first entry of Ev(pi'').
Word triangle_concat(const Word& p1, const Word& p2);
/// pi'' shifted by max(pi') - min(pi') and appended to pi'. Kept for comparison:
/// with this rule the two-term law fails (already for R_1 R_12).
Word triangle_concat_as_printed(const Word& p1, const Word& p2);

/// R_{pi'} R_{pi''} = R_{pi' . pi''} + R_{pi' |> pi''}.
RElement ribbon_product(const Word& p1, const Word& p2);
RElement ribbon_product_as_printed(const Word& p1, const Word& p2);
/// The product computed through the P basis.
RElement ribbon_product_by_expansion(const Word& p1, const Word& p2);

/// Coproduct of R_pi, re-expressed through the P basis.
RTensor ribbon_coproduct(const Word& pi);

const BasisBialgebra<Word, PBasis>& cqsym_bialgebra();
const BasisBialgebra<Word, MBasis>& cqsym_dual_bialgebra();
const BasisBialgebra<Word, RBasis>& cqsym_ribbon_bialgebra();

/// S^{c(pi)}.
NSymFunction ch_to_nsym(const Word& pi);
/// S^{I} with I the nonzero entries of Ev(pi).
NSymFunction ch_to_nsym_by_evaluation(const Word& pi);

/// g_0..g_N with g = sum_n S_n g^n.
std::vector<NSymFunction> g_series(int n_max);

struct LagrangeComparison {
  int degree = 0;
  NSymFunction fixed_point;
  NSymFunction by_connected_type;  // sum over nondecreasing pi of S^{c(pi)}
  NSymFunction by_evaluation;      // sum over nondecreasing pi of S^{Ev(pi)}
};

std::vector<LagrangeComparison> lagrange_comparison(int n_max);

}  // namespace parkhopf
