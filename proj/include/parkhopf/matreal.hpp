#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "parkhopf/linmod.hpp"
#include "parkhopf/pqsym.hpp"
#include "parkhopf/word.hpp"

namespace parkhopf {

/// (0,1)-matrix without zero rows. Width is max(#ones, largest used column);
/// interior columns may be empty.
class PackedMatrix {
 public:
  PackedMatrix() = default;
  /// Throws std::invalid_argument on ragged rows, entries other than 0/1, zero rows or a nonstandard width.
  explicit PackedMatrix(std::vector<std::vector<int>> rows);

  std::size_t height() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }
  std::size_t ones() const noexcept;
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  friend bool operator==(const PackedMatrix&, const PackedMatrix&) = default;
  friend auto operator<=>(const PackedMatrix& a, const PackedMatrix& b) {
    if (auto c = a.ones() <=> b.ones(); c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<std::vector<int>> rows_;
};

inline std::size_t degree(const PackedMatrix& m) { return m.ones(); }
/// "[[0,1,1,0],[1,0,0,0]]", "[]" for the empty matrix.
std::string to_string(const PackedMatrix& m);
/// Accepts the to_string form and also "0110/1000" (rows separated by '/').
PackedMatrix parse_matrix(std::string_view text);

struct MatrixBasis {
  static constexpr std::string_view name = "M";
  static constexpr std::string_view algebra = "MQSym";
};
using MatrixElement = LinComb<PackedMatrix, MatrixBasis>;
using MatrixTensor = Tensor<PackedMatrix, MatrixBasis>;

std::string to_string(const MatrixElement& x);
std::string to_string(const MatrixTensor& x);

/// Column indices of the ones, row by row, left to right.
Word reading(const PackedMatrix& m);

/// Matrices with the given reading: cuttings of a into strictly increasing blocks.
std::vector<PackedMatrix> matrices_of_word(const Word& a);

bool is_parking_type(const PackedMatrix& m);
bool is_word_matrix(const PackedMatrix& m);

/// All matrices whose rows are shuffled from P and Q (possibly merged), Q's columns to the right.
std::vector<PackedMatrix> augmented_shuffle(const PackedMatrix& p, const PackedMatrix& q);

/// Whether column d(reading(m)) is all zero; true for parking-type m.
bool defect_column_is_empty(const PackedMatrix& m);

/// Deletes the defect column until the reading parks, then trims the width.
/// Throws std::logic_error if a deleted column is not empty.
PackedMatrix matrix_parkize(const PackedMatrix& m);

MatrixElement mp_product(const PackedMatrix& p, const PackedMatrix& q);
MatrixElement mp_multiply(const MatrixElement& x, const MatrixElement& y);

enum class MatrixSplit { rows, columns };

/// Sum over top/bottom row blocks (or left/right column blocks) of the parkized pieces.
MatrixTensor mp_coproduct(const PackedMatrix& p, MatrixSplit split = MatrixSplit::rows);
MatrixTensor mp_coproduct(const MatrixElement& x, MatrixSplit split = MatrixSplit::rows);

/// F_a -> sum of M_P over reading(P) = a.
MatrixElement f_to_matrices(const FElement& x);
MatrixTensor f_to_matrices(const FTensor& t);

/// Inverse of f_to_matrices; throws std::domain_error when x is not a sum of full fibres.
FElement matrices_to_f(const MatrixElement& x);
FTensor matrices_to_f(const MatrixTensor& t);

/// Packed matrices with k ones and columns in [1, max_column], in increasing order.
std::vector<PackedMatrix> packed_matrices(int k, int max_column);

}  // namespace parkhopf
