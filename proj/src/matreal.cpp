#include "parkhopf/matreal.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "parkhopf/format.hpp"
#include "parkhopf/pfcore.hpp"

namespace parkhopf {

namespace {

std::size_t packed_width(std::size_t ones, int max_column) {
  return std::max(ones, static_cast<std::size_t>(std::max(max_column, 0)));
}

/// Rows as sorted column lists (1-based) into a matrix of the standard width.
PackedMatrix from_supports(const std::vector<std::vector<int>>& supports) {
  std::size_t ones = 0;
  int max_column = 0;
  for (const auto& s : supports) {
    ones += s.size();
    for (int j : s) max_column = std::max(max_column, j);
  }
  const std::size_t w = packed_width(ones, max_column);
  std::vector<std::vector<int>> rows;
  for (const auto& s : supports) {
    if (s.empty()) continue;
    std::vector<int> row(w, 0);
    for (int j : s) row[static_cast<std::size_t>(j - 1)] = 1;
    rows.push_back(std::move(row));
  }
  return PackedMatrix(std::move(rows));
}

std::vector<std::vector<int>> supports(const PackedMatrix& m) {
  std::vector<std::vector<int>> out;
  for (const auto& row : m.rows()) {
    std::vector<int> s;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j]) s.push_back(static_cast<int>(j + 1));
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Restriction to a range of rows and columns; zero rows dropped, columns renumbered from 1.
PackedMatrix block(const PackedMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  std::vector<std::vector<int>> s;
  for (std::size_t i = r0; i < r1; ++i) {
    std::vector<int> row;
    for (std::size_t j = c0; j < c1; ++j) {
      if (m(i, j)) row.push_back(static_cast<int>(j - c0 + 1));
    }
    s.push_back(std::move(row));
  }
  return from_supports(s);
}

}  // namespace

PackedMatrix::PackedMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.size() != rows_.front().size()) throw std::invalid_argument("ragged matrix");
    bool nonzero = false;
    for (int x : row) {
      if (x != 0 && x != 1) throw std::invalid_argument("matrix entries must be 0 or 1");
      nonzero = nonzero || x == 1;
    }
    if (!nonzero) throw std::invalid_argument("zero row in packed matrix");
  }
  std::size_t last = 0;
  for (const auto& row : rows_) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j]) last = std::max(last, j + 1);
    }
  }
  if (width() != std::max(ones(), last)) throw std::invalid_argument("width must be max(#ones, last used column)");
}

std::size_t PackedMatrix::ones() const noexcept {
  std::size_t n = 0;
  for (const auto& row : rows_) n += static_cast<std::size_t>(std::count(row.begin(), row.end(), 1));
  return n;
}

std::string to_string(const PackedMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.height(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < m.width(); ++j) {
      if (j) out += ",";
      out += std::to_string(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

PackedMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> row;
  int depth = 0;
  const bool bracketed = !text.empty() && text.front() == '[';
  for (char ch : text) {
    if (ch == '0' || ch == '1') {
      row.push_back(ch - '0');
    } else if (bracketed && ch == '[') {
      ++depth;
    } else if (bracketed && ch == ']') {
      if (depth == 2) {
        rows.push_back(std::move(row));
        row.clear();
      }
      --depth;
    } else if (!bracketed && ch == '/') {
      rows.push_back(std::move(row));
      row.clear();
    } else if (ch != ',' && ch != ' ') {
      throw std::invalid_argument("malformed matrix: " + std::string(text));
    }
  }
  if (bracketed && depth != 0) throw std::invalid_argument("malformed matrix: " + std::string(text));
  if (!bracketed && !row.empty()) rows.push_back(std::move(row));
  if (bracketed && !row.empty()) throw std::invalid_argument("malformed matrix: " + std::string(text));
  return PackedMatrix(std::move(rows));
}

std::string to_string(const MatrixElement& x) {
  return format_terms(x, [](const PackedMatrix& m) { return m.height() == 0 ? std::string() : "M" + to_string(m); });
}

std::string to_string(const MatrixTensor& x) {
  auto side = [](const PackedMatrix& m) { return m.height() == 0 ? std::string("1") : "M" + to_string(m); };
  return format_terms(x, [&](const std::pair<PackedMatrix, PackedMatrix>& p) {
    return side(p.first) + " ⊗ " + side(p.second);
  });
}

Word reading(const PackedMatrix& m) {
  std::vector<Letter> out;
  for (const auto& s : supports(m)) out.insert(out.end(), s.begin(), s.end());
  return Word(std::move(out));
}

std::vector<PackedMatrix> matrices_of_word(const Word& a) {
  const std::size_t n = a.size();
  if (n == 0) return {PackedMatrix()};
  std::vector<PackedMatrix> out;
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    std::vector<std::vector<int>> rows{{a[0]}};
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) {
      if (mask & (1UL << (i - 1))) {
        rows.push_back({a[i]});
      } else if (a[i] > rows.back().back()) {
        rows.back().push_back(a[i]);
      } else {
        ok = false;
      }
    }
    if (ok) out.push_back(from_supports(rows));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_parking_type(const PackedMatrix& m) { return is_parking(reading(m)); }

bool is_word_matrix(const PackedMatrix& m) {
  for (std::size_t j = 0; j < m.width(); ++j) {
    int sum = 0;
    for (std::size_t i = 0; i < m.height(); ++i) sum += m(i, j);
    if (sum != 1) return false;
  }
  return true;
}

std::vector<PackedMatrix> augmented_shuffle(const PackedMatrix& p, const PackedMatrix& q) {
  const auto sp = supports(p);
  auto sq = supports(q);
  const int shift_by = static_cast<int>(p.width());
  for (auto& s : sq) {
    for (int& j : s) j += shift_by;
  }
  const std::size_t hp = sp.size();
  const std::size_t hq = sq.size();
  std::set<PackedMatrix> out;
  // Walk the row slots; each slot takes the next row of P, of Q, or both.
  std::vector<std::vector<int>> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == hp && j == hq) {
      out.insert(from_supports(current));
      return;
    }
    if (i < hp) {
      current.push_back(sp[i]);
      rec(i + 1, j);
      current.pop_back();
    }
    if (j < hq) {
      current.push_back(sq[j]);
      rec(i, j + 1);
      current.pop_back();
    }
    if (i < hp && j < hq) {
      auto merged = sp[i];
      merged.insert(merged.end(), sq[j].begin(), sq[j].end());
      current.push_back(std::move(merged));
      rec(i + 1, j + 1);
      current.pop_back();
    }
  };
  rec(0, 0);
  return {out.begin(), out.end()};
}

bool defect_column_is_empty(const PackedMatrix& m) {
  const Word r = reading(m);
  const int d = defect(r);
  if (d > static_cast<int>(r.size())) return true;
  if (static_cast<std::size_t>(d) > m.width()) return true;
  for (std::size_t i = 0; i < m.height(); ++i) {
    if (m(i, static_cast<std::size_t>(d - 1))) return false;
  }
  return true;
}

PackedMatrix matrix_parkize(const PackedMatrix& m) {
  auto s = supports(m);
  for (;;) {
    std::vector<Letter> r;
    for (const auto& row : s) r.insert(r.end(), row.begin(), row.end());
    const Word w(std::move(r));
    if (is_parking(w)) break;
    const int d = defect(w);
    for (auto& row : s) {
      for (int& j : row) {
        if (j == d) throw std::logic_error("defect column is not empty");
        if (j > d) --j;
      }
    }
  }
  return from_supports(s);
}

MatrixElement mp_product(const PackedMatrix& p, const PackedMatrix& q) {
  MatrixElement out;
  for (const PackedMatrix& m : augmented_shuffle(p, q)) out.add(m, 1);
  return out;
}

MatrixElement mp_multiply(const MatrixElement& x, const MatrixElement& y) { return extend_bilinear(mp_product, x, y); }

MatrixTensor mp_coproduct(const PackedMatrix& p, MatrixSplit split) {
  MatrixTensor out;
  const std::size_t h = p.height();
  const std::size_t w = p.width();
  if (split == MatrixSplit::rows) {
    for (std::size_t k = 0; k <= h; ++k) {
      out.add({matrix_parkize(block(p, 0, k, 0, w)), matrix_parkize(block(p, k, h, 0, w))}, 1);
    }
  } else {
    for (std::size_t k = 0; k <= w; ++k) {
      out.add({matrix_parkize(block(p, 0, h, 0, k)), matrix_parkize(block(p, 0, h, k, w))}, 1);
    }
  }
  return out;
}

MatrixTensor mp_coproduct(const MatrixElement& x, MatrixSplit split) {
  return extend_linear([split](const PackedMatrix& p) { return mp_coproduct(p, split); }, x);
}

MatrixElement f_to_matrices(const FElement& x) {
  MatrixElement out;
  for (const auto& [a, c] : x) {
    for (const PackedMatrix& m : matrices_of_word(a)) out.add(m, c);
  }
  return out;
}

MatrixTensor f_to_matrices(const FTensor& t) {
  MatrixTensor out;
  for (const auto& [pair, c] : t) {
    const auto left = matrices_of_word(pair.first);
    const auto right = matrices_of_word(pair.second);
    for (const PackedMatrix& l : left) {
      for (const PackedMatrix& r : right) out.add({l, r}, c);
    }
  }
  return out;
}

FElement matrices_to_f(const MatrixElement& x) {
  FElement out;
  for (const auto& [m, c] : x) {
    const Word a = reading(m);
    if (matrices_of_word(a).front() == m) out.add(a, c);
  }
  if (!(f_to_matrices(out) == x)) throw std::domain_error("not a sum of reading fibres");
  return out;
}

FTensor matrices_to_f(const MatrixTensor& t) {
  FTensor out;
  for (const auto& [pair, c] : t) {
    const Word a = reading(pair.first);
    const Word b = reading(pair.second);
    if (matrices_of_word(a).front() == pair.first && matrices_of_word(b).front() == pair.second) out.add({a, b}, c);
  }
  if (!(f_to_matrices(out) == t)) throw std::domain_error("not a sum of reading fibres");
  return out;
}

std::vector<PackedMatrix> packed_matrices(int k, int max_column) {
  std::set<PackedMatrix> out;
  if (k == 0) return {PackedMatrix()};
  std::vector<Letter> w(static_cast<std::size_t>(k), 1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == w.size()) {
      for (PackedMatrix& m : matrices_of_word(Word(w))) out.insert(std::move(m));
      return;
    }
    for (Letter x = 1; x <= max_column; ++x) {
      w[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return {out.begin(), out.end()};
}

}  // namespace parkhopf
