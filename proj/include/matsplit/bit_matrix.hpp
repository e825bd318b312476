// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATSPLIT_BIT_MATRIX_HPP_
#define MATSPLIT_BIT_MATRIX_HPP_

#include <cstdint>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace matsplit {

/// Thrown when a textual input (matrix or graph file) is malformed.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense matrix over GF(2). One 64-bit word per row, so at most 64 columns;
/// plenty for the matroids this library works with.
class BitMatrix {
 public:
  BitMatrix() = default;

  BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (cols > 64) throw std::invalid_argument("BitMatrix: more than 64 columns");
    words_.assign(rows, 0);
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  /// Builds a matrix from rows written as strings of '0'/'1', e.g.
  /// BitMatrix::of({"101", "011"}).
  static BitMatrix of(const std::vector<std::string>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols)
        throw std::invalid_argument("BitMatrix::of: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) {
        char ch = rows[r][c];
        if (ch != '0' && ch != '1')
          throw std::invalid_argument("BitMatrix::of: expected '0' or '1'");
        m.set(r, c, ch == '1');
      }
    }
    return m;
  }

  std::size_t row_count() const { return rows_; }
  std::size_t col_count() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    check(r, c);
    return (words_[r] >> c) & 1u;
  }

  void set(std::size_t r, std::size_t c, bool v) {
    check(r, c);
    if (v)
      words_[r] |= (std::uint64_t{1} << c);
    else
      words_[r] &= ~(std::uint64_t{1} << c);
  }

  /// Row r as a bit word; bit c corresponds to column c.
  std::uint64_t row_bits(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("BitMatrix: row out of range");
    return words_[r];
  }

  void set_row_bits(std::size_t r, std::uint64_t bits) {
    if (r >= rows_) throw std::out_of_range("BitMatrix: row out of range");
    if (cols_ < 64) bits &= (std::uint64_t{1} << cols_) - 1;
    words_[r] = bits;
  }

  void xor_row_into(std::size_t src, std::size_t dst) {
    words_[dst] ^= words_[src];
  }

  void swap_rows(std::size_t a, std::size_t b) { std::swap(words_[a], words_[b]); }

  void append_row(std::uint64_t bits = 0) {
    if (cols_ < 64) bits &= (std::uint64_t{1} << cols_) - 1;
    words_.push_back(bits);
    ++rows_;
  }

  void erase_row(std::size_t r) {
    if (r >= rows_) throw std::out_of_range("BitMatrix: row out of range");
    words_.erase(words_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  /// Removes column c, shifting higher columns down by one.
  void erase_column(std::size_t c) {
    if (c >= cols_) throw std::out_of_range("BitMatrix: column out of range");
    const std::uint64_t low = (std::uint64_t{1} << c) - 1;
    for (auto& w : words_) {
      std::uint64_t lo = w & low;
      std::uint64_t hi = (c + 1 < 64) ? (w >> (c + 1)) : 0;
      w = lo | (hi << c);
    }
    --cols_;
  }

  /// Appends a column of zeros on the right.
  void append_zero_column() {
    if (cols_ == 64) throw std::invalid_argument("BitMatrix: more than 64 columns");
    ++cols_;
  }

  /// Column c as a bit word; bit r corresponds to row r. Requires rows <= 64.
  std::uint64_t column_bits(std::size_t c) const {
    if (c >= cols_) throw std::out_of_range("BitMatrix: column out of range");
    if (rows_ > 64) throw std::invalid_argument("BitMatrix: too many rows for column_bits");
    std::uint64_t out = 0;
    for (std::size_t r = 0; r < rows_; ++r)
      out |= static_cast<std::uint64_t>((words_[r] >> c) & 1u) << r;
    return out;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.words_ == b.words_;
  }
  friend bool operator!=(const BitMatrix& a, const BitMatrix& b) { return !(a == b); }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
      throw std::out_of_range("BitMatrix: index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Result of full row reduction: `matrix` is the reduced row-echelon form of
/// the input (same shape, zero rows at the bottom) and `pivot_cols` lists the
/// pivot columns in increasing order.
struct Rref {
  BitMatrix matrix;
  std::vector<std::size_t> pivot_cols;
};

/// Deterministic Gauss-Jordan elimination: scan columns left to right; the
/// pivot for a column is the first not-yet-used row with a 1 there.
inline Rref rref(BitMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < m.col_count() && next_row < m.row_count(); ++c) {
    std::size_t pivot = next_row;
    while (pivot < m.row_count() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.row_count()) continue;
    m.swap_rows(pivot, next_row);
    for (std::size_t r = 0; r < m.row_count(); ++r)
      if (r != next_row && m.get(r, c)) m.xor_row_into(next_row, r);
    pivots.push_back(c);
    ++next_row;
  }
  return Rref{std::move(m), std::move(pivots)};
}

inline std::size_t rank(const BitMatrix& m) { return rref(m).pivot_cols.size(); }

/// A standard (partitioned) representation [I_r | D] of the row space of some
/// matrix, together with the bookkeeping needed to undo the column
/// permutation that produced it.
struct StandardForm {
  BitMatrix matrix;                       ///< r x n, equal to [I_r | D].
  std::vector<std::size_t> basis_columns; ///< original indices of the r pivot columns
  std::vector<std::size_t> column_order;  ///< column_order[j] = original index of column j

  /// Puts the columns back in their original positions. The result has the
  /// same row space as the matrix the standard form was computed from.
  BitMatrix unpermuted() const {
    BitMatrix out(matrix.row_count(), matrix.col_count());
    for (std::size_t j = 0; j < matrix.col_count(); ++j)
      for (std::size_t r = 0; r < matrix.row_count(); ++r)
        if (matrix.get(r, j)) out.set(r, column_order[j], true);
    return out;
  }
};

/// Computes a standard form [I_r | D]: reduce, drop zero rows, then move the
/// pivot columns to the front (pivots keep their relative order, as do the
/// non-pivot columns).
inline StandardForm standard_form(const BitMatrix& m) {
  Rref red = rref(m);
  const std::size_t r = red.pivot_cols.size();
  std::vector<std::size_t> order = red.pivot_cols;
  std::vector<bool> is_pivot(m.col_count(), false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
  for (std::size_t c = 0; c < m.col_count(); ++c)
    if (!is_pivot[c]) order.push_back(c);

  BitMatrix out(r, m.col_count());
  for (std::size_t j = 0; j < order.size(); ++j)
    for (std::size_t i = 0; i < r; ++i)
      if (red.matrix.get(i, order[j])) out.set(i, j, true);
  return StandardForm{std::move(out), red.pivot_cols, std::move(order)};
}

/// True iff the two matrices span the same row space. They must have the same
/// number of columns.
inline bool row_space_equal(const BitMatrix& a, const BitMatrix& b) {
  if (a.col_count() != b.col_count())
    throw std::invalid_argument("row_space_equal: column counts differ");
  std::size_t ra = rank(a);
  std::size_t rb = rank(b);
  if (ra != rb) return false;
  BitMatrix stacked(a.row_count() + b.row_count(), a.col_count());
  for (std::size_t r = 0; r < a.row_count(); ++r)
    stacked.set_row_bits(r, a.row_bits(r));
  for (std::size_t r = 0; r < b.row_count(); ++r)
    stacked.set_row_bits(a.row_count() + r, b.row_bits(r));
  return rank(stacked) == ra;
}

/// A parsed matrix file: the matrix plus its optional column labels.
struct MatrixText {
  BitMatrix matrix;
  std::optional<std::vector<std::string>> labels;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace detail

/// Reads the plain-text matrix format:
///
///   ROWS COLS
///   <ROWS lines of COLS characters, each '0' or '1'>
///   labels: l1 l2 ... lCOLS        (optional)
///
/// Anything else is a ParseError.
inline MatrixText read_matrix_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("matrix: missing header line");
  auto header = detail::split_ws(detail::strip_cr(line));
  if (header.size() != 2)
    throw ParseError("matrix: header must be 'ROWS COLS'");
  std::size_t rows = 0, cols = 0;
  try {
    rows = std::stoul(header[0]);
    cols = std::stoul(header[1]);
  } catch (const std::exception&) {
    throw ParseError("matrix: header must contain two nonnegative integers");
  }
  if (cols > 64) throw ParseError("matrix: more than 64 columns unsupported");

  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!std::getline(in, line))
      throw ParseError("matrix: expected " + std::to_string(rows) + " rows");
    line = detail::strip_cr(line);
    if (line.size() != cols)
      throw ParseError("matrix: row " + std::to_string(r + 1) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (line[c] != '0' && line[c] != '1')
        throw ParseError("matrix: row " + std::to_string(r + 1) +
                         " contains a character other than '0'/'1'");
      if (line[c] == '1') m.set(r, c, true);
    }
  }

  std::optional<std::vector<std::string>> labels;
  while (std::getline(in, line)) {
    line = detail::strip_cr(line);
    if (line.empty()) continue;
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks.front() != "labels:")
      throw ParseError("matrix: unexpected trailing content: " + line);
    if (labels) throw ParseError("matrix: duplicate labels line");
    toks.erase(toks.begin());
    if (toks.size() != cols)
      throw ParseError("matrix: labels line must name every column");
    labels = std::move(toks);
  }
  return MatrixText{std::move(m), std::move(labels)};
}

inline MatrixText read_matrix_text(const std::string& text) {
  std::istringstream in(text);
  return read_matrix_text(in);
}

/// Writes the same format read_matrix_text consumes.
inline void write_matrix_text(std::ostream& out, const BitMatrix& m,
                              const std::vector<std::string>* labels = nullptr) {
  out << m.row_count() << ' ' << m.col_count() << '\n';
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    for (std::size_t c = 0; c < m.col_count(); ++c) out << (m.get(r, c) ? '1' : '0');
    out << '\n';
  }
  if (labels != nullptr) {
    out << "labels:";
    for (const auto& l : *labels) out << ' ' << l;
    out << '\n';
  }
}

inline std::string matrix_to_text(const BitMatrix& m,
                                  const std::vector<std::string>* labels = nullptr) {
  std::ostringstream out;
  write_matrix_text(out, m, labels);
  return out.str();
}

}  // namespace matsplit

#endif  // MATSPLIT_BIT_MATRIX_HPP_
