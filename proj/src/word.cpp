#include "parkhopf/word.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace parkhopf {

namespace {

void require_positive(const std::vector<int>& values, const char* what) {
  for (int v : values) {
    if (v < 1) throw std::invalid_argument(std::string(what) + " must be positive");
  }
}

std::string join_ints(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "]";
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  require_positive(letters_, "letters");
}

Letter Word::max_letter() const noexcept {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::slice(std::size_t from, std::size_t to) const {
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                    letters_.begin() + static_cast<std::ptrdiff_t>(to));
  return w;
}

void Word::push_back(Letter a) {
  if (a < 1) throw std::invalid_argument("letters must be positive");
  letters_.push_back(a);
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.letters_ <=> b.letters_;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "()";
  if (w.max_letter() <= 9) {
    std::string out;
    for (Letter a : w) out += static_cast<char>('0' + a);
    return out;
  }
  return join_ints(w.vec());
}

Word parse_word(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "()" || text.empty() || text == "[]") return Word{};
  if (text.front() == '[' || text.front() == '(') {
    const char close = text.front() == '[' ? ']' : ')';
    if (text.size() < 2 || text.back() != close) throw std::invalid_argument("malformed word");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<Letter> letters;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("malformed word");
      letters.push_back(ch - '0');
    }
    return Word(std::move(letters));
  }
  while (true) {
    const auto comma = text.find(',');
    auto piece = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size() || value < 1) {
      throw std::invalid_argument("malformed word");
    }
    letters.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Word(std::move(letters));
}

// ---------------------------------------------------------------------------

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_positive(parts_, "composition parts");
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return a.parts_ <=> b.parts_;
}

std::string to_string(const Composition& c) { return join_ints(c.parts()); }

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.begin(), b.end());
  return Composition(std::move(parts));
}

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  if (n < 0) return out;
  if (n == 0) return {Composition{}};
  // Subsets of {1..n-1} in an order that yields lexicographic compositions.
  std::vector<int> current;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      current.push_back(p);
      rec(remaining - p);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<Composition> refinements(const Composition& c) {
  std::vector<std::vector<int>> acc{{}};
  for (int part : c) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : acc) {
      for (const Composition& piece : compositions(part)) {
        auto extended = prefix;
        extended.insert(extended.end(), piece.begin(), piece.end());
        next.push_back(std::move(extended));
      }
    }
    acc = std::move(next);
  }
  std::vector<Composition> out;
  out.reserve(acc.size());
  for (auto& parts : acc) out.emplace_back(std::move(parts));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> coarsenings(const Composition& c) {
  std::vector<Composition> out;
  if (c.empty()) return {Composition{}};
  const std::size_t gaps = c.length() - 1;
  for (unsigned long mask = 0; mask < (1UL << gaps); ++mask) {
    std::vector<int> parts{c[0]};
    for (std::size_t g = 0; g < gaps; ++g) {
      if (mask & (1UL << g)) {
        parts.back() += c[g + 1];
      } else {
        parts.push_back(c[g + 1]);
      }
    }
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Composition composition_from_set(int n, const std::vector<int>& subset) {
  std::vector<int> cuts = subset;
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> parts;
  int previous = 0;
  for (int s : cuts) {
    if (s <= previous || s >= n) throw std::invalid_argument("invalid descent set");
    parts.push_back(s - previous);
    previous = s;
  }
  if (n > 0) parts.push_back(n - previous);
  return Composition(std::move(parts));
}

std::vector<int> composition_to_set(const Composition& c) {
  std::vector<int> out;
  int partial = 0;
  for (std::size_t i = 0; i + 1 < c.length(); ++i) {
    partial += c[i];
    out.push_back(partial);
  }
  return out;
}

// ---------------------------------------------------------------------------

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_positive(parts_, "partition parts");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(weight_) + 1, 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return b.parts_ <=> a.parts_;
}

std::string to_string(const Partition& p) { return join_ints(p.parts()); }

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.begin(), b.end());
  return Partition(std::move(parts));
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition shape(const Composition& c) { return Partition(c.parts()); }

}  // namespace parkhopf
