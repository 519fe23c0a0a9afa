#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "parkhopf/word.hpp"

namespace parkhopf {

/// Letter-multiplicity vector (v_1, ..., v_n) with v_i = #{j : w_j = i}.
using EvaluationVector = std::vector<int>;

/// True iff the nondecreasing rearrangement a' of w satisfies a'_i <= i.
bool is_parking(const Word& w);

/// d(w) = min { i >= 1 : #{j : w_j <= i} < i }, or n + 1 when w is a parking function.
int defect(const Word& w);

/// Iteratively decrements every letter above the defect until the word parks.
Word parkize(const Word& w);

/// Permutation order-isomorphic to w, equal letters numbered left to right.
Word standardize(const Word& w);

/// Inverse of a permutation given in one-line notation.
Word inverse_permutation(const Word& sigma);
bool is_permutation(const Word& w);

/// w[k]: every letter shifted up by k.
Word shift(const Word& w, int k);

/// u . v[|u|].
Word shifted_concat(const Word& u, const Word& v);

/// All interleavings of u and v[|u|]; binomial(|u|+|v|, |u|) distinct words,
/// enumerated by choosing the positions of u's letters in lexicographic order.
std::vector<Word> shifted_shuffle(const Word& u, const Word& v);

/// All interleavings of u and v (no shift). Results may repeat when the alphabets meet.
std::vector<Word> shuffle(const Word& u, const Word& v);

/// { b in [n] : #{i : a_i <= b} = b }.
std::vector<int> breakpoints(const Word& a);

/// A parking function whose only breakpoint is n.
bool is_prime(const Word& a);

/// Shifted-concatenation factors w = w_1 . w_2 . ... . w_r, each connected.
/// A split after position k is valid iff every later letter exceeds k.
std::vector<Word> connected_factorization(const Word& w);
bool is_connected(const Word& w);

Word sorted(const Word& w);
Word mirror(const Word& w);
bool is_anti_connected(const Word& w);

/// Lengths of the maximal shifted-concatenation factors of the sorted word;
/// equivalently the gaps in {0} u breakpoints(a).
Composition prime_type(const Word& a);

/// Composition of n with descent set {i : w_i > w_{i+1}}. Throws on the empty word.
Composition descent_composition(const Word& w);

/// Counts per letter value 1..n. Throws when a letter exceeds n.
EvaluationVector evaluation(const Word& w, int n);

/// Nonzero entries of Ev(w), read left to right.
Composition evaluation_composition(const Word& w);

enum class WordKind { parking, prime, nondecreasing, connected };

std::optional<WordKind> parse_word_kind(std::string_view name);
std::string_view to_string(WordKind kind);

/// Restartable lexicographic stream over one class of parking functions of size n.
class WordStream {
 public:
  WordStream(WordKind kind, int n);

  /// Next word in lexicographic order, or nullopt once exhausted.
  std::optional<Word> next();
  void restart();

 private:
  bool advance();
  bool accepts(const std::vector<Letter>& w) const;
  bool completable(std::size_t filled) const;

  WordKind kind_;
  int n_;
  std::vector<Letter> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Materialised stream.
std::vector<Word> enumerate(WordKind kind, int n);

/// All words of length n over [k], lexicographic.
std::vector<Word> all_words(int n, int k);

// ---------------------------------------------------------------------------
// Non-crossing partitions.

/// Blocks are sorted internally and ordered by their minima. Construction rejects
/// anything that is not a non-crossing set partition of [n].
class NonCrossingPartition {
 public:
  NonCrossingPartition() = default;
  explicit NonCrossingPartition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  int size() const noexcept { return n_; }

  friend bool operator==(const NonCrossingPartition&, const NonCrossingPartition&) = default;
  friend auto operator<=>(const NonCrossingPartition&, const NonCrossingPartition&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
  int n_ = 0;
};

std::string to_string(const NonCrossingPartition& pi);

/// The non-crossing partition whose block minima (with multiplicity) sort to a.
NonCrossingPartition nc_of_parking(const Word& a);

/// Sorted word of block minima, each repeated block-size times.
Word word_of_nc(const NonCrossingPartition& pi);

/// All non-crossing partitions of [n], via the nondecreasing parking functions.
std::vector<NonCrossingPartition> noncrossing_partitions(int n);

// ---------------------------------------------------------------------------
// Successor order on nondecreasing parking functions.

bool is_nondecreasing(const Word& w);

/// Word with evaluation ev (letters 1..ev.size()).
Word word_of_evaluation(const EvaluationVector& ev);

/// Merge every pair of nonzero evaluation entries separated only by zeros into the left one.
/// Returned sorted and duplicate-free.
std::vector<Word> successors(const Word& pi);

/// All pi' with pi <= pi' (including pi itself), sorted.
std::vector<Word> up_set(const Word& pi);

/// pi <= pi' in the reflexive-transitive closure of the successor relation.
bool order_leq(const Word& pi, const Word& other);

// ---------------------------------------------------------------------------
// Closed-form counts.

long long catalan(int n);

}  // namespace parkhopf
