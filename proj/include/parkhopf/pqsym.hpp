#pragma once

#include <string_view>
#include <vector>

#include "parkhopf/linmod.hpp"
#include "parkhopf/symfun.hpp"
#include "parkhopf/word.hpp"

namespace parkhopf {

struct FBasis {
  static constexpr std::string_view name = "F";
  static constexpr std::string_view algebra = "PQSym";
};

using FElement = LinComb<Word, FBasis>;
using FTensor = Tensor<Word, FBasis>;

/// F_a; throws std::invalid_argument unless a is a parking function.
FElement f_basis(const Word& a);

/// Sum of F_c over the shifted shuffle of a and b.
FElement f_product(const Word& a, const Word& b);
FElement f_multiply(const FElement& x, const FElement& y);

/// Sum over the n+1 cuts a = u.v of F_Park(u) (x) F_Park(v).
FTensor f_coproduct(const Word& a);
FTensor f_coproduct(const FElement& x);

/// Sum over factorizations a = u_1...u_r into nonempty blocks of (-1)^r F_Park(u_1) ... F_Park(u_r).
FElement f_antipode(const Word& a);
FElement f_antipode(const FElement& x);
/// Convolution inverse of the identity computed recursively from the coproduct.
FElement f_antipode_recursive(const Word& a);

const BasisBialgebra<Word, FBasis>& pqsym_bialgebra();

/// F^a = F_{a_1} ... F_{a_r} over the connected factors of a.
FElement f_mult_basis(const Word& a);

enum class Triangularity { lower, upper };

/// Orders PF_n lexicographically and checks the F^a -> F transition matrix.
/// Throws std::logic_error("triangularity violated") when it is not unitriangular.
Triangularity f_mult_basis_triangularity(int n);

/// Noncommutative monomial in the generators F_c, c connected, read left to right.
using GeneratorMonomial = std::vector<Word>;
using GeneratorPolynomial = LinComb<GeneratorMonomial>;

std::size_t degree(const GeneratorMonomial& m);
std::string to_string(const GeneratorPolynomial& p);

/// Unique polynomial in the connected generators equal to x.
GeneratorPolynomial connected_decomposition(const FElement& x);
FElement evaluate_generators(const GeneratorPolynomial& p);

/// All monomials of degree n in the connected generators.
std::vector<GeneratorMonomial> connected_monomials(int n);

/// V_{i_1} ... V_{i_r} with V_n the sum of F_a over prime a of size n.
FElement v_element(const Composition& type);
/// Sum of F_a over parking functions of the given prime type.
FElement v_element_by_type(const Composition& type);

FElement pf_sum(int n);
FElement ppf_sum(int n);
/// sum_{I |= n} (-1)^(n - l(I)) F_PF_{i_1} ... F_PF_{i_r}.
FElement ppf_inclusion_exclusion(int n);

/// F_a -> F_{C(a)} in QSym.
QSymFunction eta(const FElement& x);

/// Image of S_n: F_{1...1}.
FElement j_embed(int n);

}  // namespace parkhopf
