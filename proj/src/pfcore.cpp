#include "parkhopf/pfcore.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace parkhopf {

namespace {

// counts[i] = #{j : w_j <= i} for i = 0..n.
std::vector<int> cumulative_counts(std::span<const Letter> w, std::size_t n) {
  std::vector<int> counts(n + 1, 0);
  for (Letter a : w) {
    if (static_cast<std::size_t>(a) <= n) ++counts[static_cast<std::size_t>(a)];
  }
  for (std::size_t i = 1; i <= n; ++i) counts[i] += counts[i - 1];
  return counts;
}

}  // namespace

bool is_parking(const Word& w) { return defect(w) == static_cast<int>(w.size()) + 1; }

int defect(const Word& w) {
  const std::size_t n = w.size();
  const auto counts = cumulative_counts(w.letters(), n);
  for (std::size_t i = 1; i <= n; ++i) {
    if (counts[i] < static_cast<int>(i)) return static_cast<int>(i);
  }
  return static_cast<int>(n) + 1;
}

Word parkize(const Word& w) {
  std::vector<Letter> letters = w.vec();
  const int n = static_cast<int>(letters.size());
  while (true) {
    const int d = defect(Word(letters));
    if (d == n + 1) return Word(std::move(letters));
    for (Letter& a : letters) {
      if (a > d) --a;
    }
  }
}

Word standardize(const Word& w) {
  std::vector<std::size_t> order(w.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return w[i] < w[j]; });
  std::vector<Letter> out(w.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) out[order[rank]] = static_cast<Letter>(rank + 1);
  return Word(std::move(out));
}

bool is_permutation(const Word& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (Letter a : w) {
    if (static_cast<std::size_t>(a) > w.size() || seen[static_cast<std::size_t>(a)]) return false;
    seen[static_cast<std::size_t>(a)] = true;
  }
  return true;
}

Word inverse_permutation(const Word& sigma) {
  if (!is_permutation(sigma)) throw std::invalid_argument("not a permutation");
  std::vector<Letter> out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[static_cast<std::size_t>(sigma[i] - 1)] = static_cast<Letter>(i + 1);
  return Word(std::move(out));
}

Word shift(const Word& w, int k) {
  std::vector<Letter> out = w.vec();
  for (Letter& a : out) a += k;
  return Word(std::move(out));
}

Word shifted_concat(const Word& u, const Word& v) {
  std::vector<Letter> out = u.vec();
  const int k = static_cast<int>(u.size());
  for (Letter a : v) out.push_back(a + k);
  return Word(std::move(out));
}

std::vector<Word> shuffle(const Word& u, const Word& v) {
  std::vector<Word> out;
  std::vector<Letter> current;
  current.reserve(u.size() + v.size());
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == u.size() && j == v.size()) {
      out.emplace_back(current);
      return;
    }
    if (i < u.size()) {
      current.push_back(u[i]);
      rec(i + 1, j);
      current.pop_back();
    }
    if (j < v.size()) {
      current.push_back(v[j]);
      rec(i, j + 1);
      current.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Word> shifted_shuffle(const Word& u, const Word& v) {
  auto out = shuffle(u, shift(v, static_cast<int>(u.size())));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> breakpoints(const Word& a) {
  const std::size_t n = a.size();
  const auto counts = cumulative_counts(a.letters(), n);
  std::vector<int> out;
  for (std::size_t b = 1; b <= n; ++b) {
    if (counts[b] == static_cast<int>(b)) out.push_back(static_cast<int>(b));
  }
  return out;
}

bool is_prime(const Word& a) {
  if (a.empty() || !is_parking(a)) return false;
  return breakpoints(a).size() == 1;
}

std::vector<Word> connected_factorization(const Word& w) {
  const std::size_t n = w.size();
  std::vector<Letter> suffix_min(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    suffix_min[i] = (i + 1 == n) ? w[i] : std::min(w[i], suffix_min[i + 1]);
  }
  std::vector<Word> factors;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == n || suffix_min[k] > static_cast<Letter>(k)) {
      factors.push_back(shift(w.slice(start, k), -static_cast<int>(start)));
      start = k;
    }
  }
  return factors;
}

bool is_connected(const Word& w) { return connected_factorization(w).size() == 1; }

Word sorted(const Word& w) {
  std::vector<Letter> out = w.vec();
  std::sort(out.begin(), out.end());
  return Word(std::move(out));
}

Word mirror(const Word& w) {
  std::vector<Letter> out(w.vec().rbegin(), w.vec().rend());
  return Word(std::move(out));
}

bool is_anti_connected(const Word& w) { return is_connected(mirror(w)); }

Composition prime_type(const Word& a) {
  if (!is_parking(a)) throw std::invalid_argument("not a parking function");
  std::vector<int> parts;
  int previous = 0;
  for (int b : breakpoints(a)) {
    parts.push_back(b - previous);
    previous = b;
  }
  return Composition(std::move(parts));
}

Composition descent_composition(const Word& w) {
  if (w.empty()) throw std::invalid_argument("undefined for empty word");
  std::vector<int> descents;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) descents.push_back(static_cast<int>(i + 1));
  }
  return composition_from_set(static_cast<int>(w.size()), descents);
}

EvaluationVector evaluation(const Word& w, int n) {
  EvaluationVector ev(static_cast<std::size_t>(std::max(n, 0)), 0);
  for (Letter a : w) {
    if (a > n) throw std::invalid_argument("letter exceeds evaluation range");
    ++ev[static_cast<std::size_t>(a - 1)];
  }
  return ev;
}

Composition evaluation_composition(const Word& w) {
  std::vector<int> parts;
  for (int v : evaluation(w, w.max_letter())) {
    if (v != 0) parts.push_back(v);
  }
  return Composition(std::move(parts));
}

std::optional<WordKind> parse_word_kind(std::string_view name) {
  if (name == "pf" || name == "parking") return WordKind::parking;
  if (name == "prime") return WordKind::prime;
  if (name == "nondecreasing") return WordKind::nondecreasing;
  if (name == "connected") return WordKind::connected;
  return std::nullopt;
}

std::string_view to_string(WordKind kind) {
  switch (kind) {
    case WordKind::parking: return "pf";
    case WordKind::prime: return "prime";
    case WordKind::nondecreasing: return "nondecreasing";
    case WordKind::connected: return "connected";
  }
  return "?";
}

// ---------------------------------------------------------------------------

WordStream::WordStream(WordKind kind, int n) : kind_(kind), n_(n) {
  if (n < 0) throw std::invalid_argument("negative size");
}

void WordStream::restart() {
  started_ = false;
  done_ = false;
  current_.clear();
}

bool WordStream::completable(std::size_t filled) const {
  const auto n = static_cast<std::size_t>(n_);
  const auto counts = cumulative_counts(std::span<const Letter>(current_.data(), filled), n);
  const int remaining = static_cast<int>(n - filled);
  for (std::size_t j = 1; j <= n; ++j) {
    if (counts[j] + remaining < static_cast<int>(j)) return false;
  }
  return true;
}

bool WordStream::accepts(const std::vector<Letter>& w) const {
  switch (kind_) {
    case WordKind::parking:
    case WordKind::nondecreasing: return true;
    case WordKind::prime: return is_prime(Word(w));
    case WordKind::connected: return is_connected(Word(w));
  }
  return false;
}

bool WordStream::advance() {
  const auto n = static_cast<std::size_t>(n_);
  if (!started_) {
    started_ = true;
    current_.assign(n, 1);
    return true;
  }
  if (kind_ == WordKind::nondecreasing) {
    for (std::size_t i = n; i-- > 0;) {
      if (current_[i] < static_cast<Letter>(i + 1)) {
        ++current_[i];
        for (std::size_t j = i + 1; j < n; ++j) current_[j] = current_[i];
        return true;
      }
    }
    return false;
  }
  for (std::size_t i = n; i-- > 0;) {
    while (current_[i] < n_) {
      ++current_[i];
      if (completable(i + 1)) {
        for (std::size_t j = i + 1; j < n; ++j) current_[j] = 1;
        return true;
      }
    }
  }
  return false;
}

std::optional<Word> WordStream::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    if (accepts(current_)) return Word(current_);
  }
  return std::nullopt;
}

std::vector<Word> enumerate(WordKind kind, int n) {
  std::vector<Word> out;
  WordStream stream(kind, n);
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

std::vector<Word> all_words(int n, int k) {
  std::vector<Word> out;
  if (n == 0) return {Word{}};
  if (k < 1) return out;
  std::vector<Letter> current(static_cast<std::size_t>(n), 1);
  while (true) {
    out.emplace_back(current);
    std::size_t i = current.size();
    while (i > 0 && current[i - 1] == k) {
      current[i - 1] = 1;
      --i;
    }
    if (i == 0) break;
    ++current[i - 1];
  }
  return out;
}

// ---------------------------------------------------------------------------

NonCrossingPartition::NonCrossingPartition(std::vector<std::vector<int>> blocks) {
  int total = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("empty block");
    std::sort(block.begin(), block.end());
    total += static_cast<int>(block.size());
  }
  std::sort(blocks.begin(), blocks.end());
  std::vector<int> owner(static_cast<std::size_t>(total) + 1, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) {
      if (x < 1 || x > total || owner[static_cast<std::size_t>(x)] != -1) {
        throw std::invalid_argument("blocks do not partition [n]");
      }
      owner[static_cast<std::size_t>(x)] = static_cast<int>(b);
    }
  }
  // A crossing is a < b < c < d with a, c in one block and b, d in another.
  for (int a = 1; a <= total; ++a) {
    for (int b = a + 1; b <= total; ++b) {
      if (owner[static_cast<std::size_t>(a)] == owner[static_cast<std::size_t>(b)]) continue;
      for (int c = b + 1; c <= total; ++c) {
        if (owner[static_cast<std::size_t>(c)] != owner[static_cast<std::size_t>(a)]) continue;
        for (int d = c + 1; d <= total; ++d) {
          if (owner[static_cast<std::size_t>(d)] == owner[static_cast<std::size_t>(b)]) {
            throw std::invalid_argument("not non-crossing");
          }
        }
      }
    }
  }
  blocks_ = std::move(blocks);
  n_ = total;
}

std::string to_string(const NonCrossingPartition& pi) {
  std::string out;
  for (std::size_t b = 0; b < pi.blocks().size(); ++b) {
    if (b) out += '|';
    for (std::size_t i = 0; i < pi.blocks()[b].size(); ++i) {
      if (i && pi.size() > 9) out += ',';
      out += std::to_string(pi.blocks()[b][i]);
    }
  }
  return out;
}

NonCrossingPartition nc_of_parking(const Word& a) {
  if (!is_parking(a)) throw std::invalid_argument("not a parking function");
  const int n = static_cast<int>(a.size());
  const auto ev = evaluation(a, n);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> blocks;
  for (int v = n; v >= 1; --v) {
    int m = ev[static_cast<std::size_t>(v - 1)];
    if (m == 0) continue;
    std::vector<int> block{v};
    used[static_cast<std::size_t>(v)] = true;
    for (int p = v + 1; p <= n && static_cast<int>(block.size()) < m; ++p) {
      if (!used[static_cast<std::size_t>(p)]) {
        used[static_cast<std::size_t>(p)] = true;
        block.push_back(p);
      }
    }
    if (static_cast<int>(block.size()) != m) throw std::logic_error("block reconstruction ran out of positions");
    blocks.push_back(std::move(block));
  }
  return NonCrossingPartition(std::move(blocks));
}

Word word_of_nc(const NonCrossingPartition& pi) {
  std::vector<Letter> out;
  for (const auto& block : pi.blocks()) out.insert(out.end(), block.size(), block.front());
  std::sort(out.begin(), out.end());
  return Word(std::move(out));
}

std::vector<NonCrossingPartition> noncrossing_partitions(int n) {
  std::vector<NonCrossingPartition> out;
  for (const Word& w : enumerate(WordKind::nondecreasing, n)) out.push_back(nc_of_parking(w));
  return out;
}

// ---------------------------------------------------------------------------

bool is_nondecreasing(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

Word word_of_evaluation(const EvaluationVector& ev) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < ev.size(); ++i) out.insert(out.end(), static_cast<std::size_t>(ev[i]), static_cast<Letter>(i + 1));
  return Word(std::move(out));
}

std::vector<Word> successors(const Word& pi) {
  if (!is_nondecreasing(pi) || !is_parking(pi)) throw std::invalid_argument("not a Catalan label");
  const auto ev = evaluation(pi, static_cast<int>(pi.size()));
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (ev[i] != 0) nonzero.push_back(i);
  }
  std::set<Word> out;
  for (std::size_t k = 0; k + 1 < nonzero.size(); ++k) {
    auto merged = ev;
    merged[nonzero[k]] += merged[nonzero[k + 1]];
    merged[nonzero[k + 1]] = 0;
    out.insert(word_of_evaluation(merged));
  }
  return {out.begin(), out.end()};
}

std::vector<Word> up_set(const Word& pi) {
  std::set<Word> seen{pi};
  std::queue<Word> frontier;
  frontier.push(pi);
  while (!frontier.empty()) {
    Word current = frontier.front();
    frontier.pop();
    for (Word& s : successors(current)) {
      if (seen.insert(s).second) frontier.push(std::move(s));
    }
  }
  return {seen.begin(), seen.end()};
}

bool order_leq(const Word& pi, const Word& other) {
  if (pi.size() != other.size()) return false;
  const auto ups = up_set(pi);
  return std::binary_search(ups.begin(), ups.end(), other);
}

long long catalan(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace parkhopf
