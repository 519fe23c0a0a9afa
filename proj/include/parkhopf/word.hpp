#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace parkhopf {

using Letter = int;

/// A finite word over the positive integers. Words are ordered by length first,
/// then lexicographically, which is the canonical term order of every basis
/// indexed by words.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const std::vector<Letter>& vec() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Letter max_letter() const noexcept;

  /// Subword on positions [from, to).
  Word slice(std::size_t from, std::size_t to) const;
  void push_back(Letter a);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

inline std::size_t degree(const Word& w) { return w.size(); }

/// Paper-style rendering: "41252" when every letter is a digit, "[10,2,1]" otherwise,
/// and "()" for the empty word.
std::string to_string(const Word& w);

/// Accepts "41252", "10,2,1", "[10,2,1]", "()" and "" (empty word).
/// Throws std::invalid_argument on anything else, including nonpositive letters.
Word parse_word(std::string_view text);

/// A composition (i_1, ..., i_r) of its weight. Ordered by weight, then lexicographically.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  std::size_t length() const noexcept { return parts_.size(); }
  int weight() const noexcept { return weight_; }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

inline std::size_t degree(const Composition& c) { return static_cast<std::size_t>(c.weight()); }
std::string to_string(const Composition& c);

/// Concatenation I·J.
Composition concat(const Composition& a, const Composition& b);

/// All compositions of n in lexicographic order.
std::vector<Composition> compositions(int n);

/// All compositions J refining I (each part of I split into a composition of itself).
std::vector<Composition> refinements(const Composition& c);

/// All compositions K coarsening I (adjacent parts of I merged).
std::vector<Composition> coarsenings(const Composition& c);

/// Composition of n encoding a subset of {1, ..., n-1}.
Composition composition_from_set(int n, const std::vector<int>& subset);
std::vector<int> composition_to_set(const Composition& c);

/// An integer partition. Within a weight, partitions are ordered reverse-lexicographically:
/// (3) < (2,1) < (1,1,1).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Sorts the parts into weakly decreasing order.
  explicit Partition(std::vector<int> parts);

  std::size_t length() const noexcept { return parts_.size(); }
  int weight() const noexcept { return weight_; }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  /// m_i: number of parts equal to i, for i = 1..weight (index 0 unused).
  std::vector<int> multiplicities() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

inline std::size_t degree(const Partition& p) { return static_cast<std::size_t>(p.weight()); }
std::string to_string(const Partition& p);

/// Union of parts.
Partition merge(const Partition& a, const Partition& b);

/// All partitions of n in the canonical (reverse-lex) order.
std::vector<Partition> partitions(int n);

/// Sorted parts of a composition.
Partition shape(const Composition& c);

}  // namespace parkhopf
