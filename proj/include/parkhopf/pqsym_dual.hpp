#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "parkhopf/linmod.hpp"
#include "parkhopf/pqsym.hpp"
#include "parkhopf/word.hpp"

namespace parkhopf {

struct GBasis {
  static constexpr std::string_view name = "G";
  static constexpr std::string_view algebra = "PQSym*";
};

using GElement = LinComb<Word, GBasis>;
using GTensor = Tensor<Word, GBasis>;

/// G_a; throws std::invalid_argument unless a is a parking function.
GElement g_basis(const Word& a);

/// Parking functions c = u.v with |u| = |a1|, Park(u) = a1, Park(v) = a2, in lexicographic order.
/// Built from the parkization fibres of a1 and a2 inside the alphabet [n].
std::vector<Word> convolution(const Word& a1, const Word& a2);
/// Same set by scanning every deconcatenation of every c in PF_n.
std::vector<Word> convolution_brute(const Word& a1, const Word& a2);

/// Classic convolution of permutations: u.v with Std(u) = sigma, Std(v) = tau.
std::vector<Word> permutation_convolution(const Word& sigma, const Word& tau);

GElement g_product(const Word& a1, const Word& a2);
GElement g_multiply(const GElement& x, const GElement& y);

/// Breakpoint form: one term per b in {0} u breakpoints(a).
GTensor g_coproduct(const Word& a);
GTensor g_coproduct(const GElement& x);
/// Sum of G_u (x) G_v over parking functions u, v with a in u shifted-shuffle v.
GTensor g_coproduct_unshuffle(const Word& a);

const BasisBialgebra<Word, GBasis>& pqsym_dual_bialgebra();

/// Sum of G_a over a in PF_n with Std(a) = sigma^{-1}.
GElement phi(const Word& sigma);
GElement phi(const FElement& x);

/// G_{mirror(a_r)} ... G_{mirror(a_1)} over the connected factors of a; its leading label is mirror(a).
GElement g_mult_basis(const Word& a);

/// Rows ordered by mirror(a); throws std::logic_error("triangularity violated") when not unitriangular.
Triangularity g_mult_basis_triangularity(int n);

/// Dual bases of F^a (S_a, in G) and of G^{mirror a} (T_a, in F) in degree n.
struct LieBases {
  int degree = 0;
  std::vector<Word> labels;
  std::map<Word, GElement> s;
  std::map<Word, FElement> t;
};

LieBases st_dual_bases(int n);

/// c_1..c_N from 1 - (sum (n+1)^(n-1) t^n)^(-1).
std::vector<Integer> connected_series(int n_max);

/// Coefficients 1..N of 1 - prod (1 - t^n)^(c_n); c_n by enumeration up to enumerate_up_to.
std::vector<Integer> lie_generator_series(int n_max, int enumerate_up_to = 6);

/// Sum of G_a over nondecreasing parking functions of size n.
GElement eta_star(int n);

}  // namespace parkhopf
