#pragma once

// Dense matrices over the two-element field.
//
// Convention: column vectors, so a matrix with R rows and C columns maps
// GF(2)^C to GF(2)^R by left multiplication. Rows are packed into 64-bit
// words; bits past the logical column count are kept zero so that whole-word
// comparisons and XORs are exact.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace phcalc {

class Gf2Matrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Gf2Matrix identity(std::size_t n);

  /// Builds a matrix from a row-major list of 0/1 entries. Throws
  /// std::invalid_argument on ragged input or entries other than 0 and 1.
  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c);

  std::span<const Word> row(std::size_t r) const {
    return {data_.data() + r * words_per_row_, words_per_row_};
  }
  std::span<Word> row(std::size_t r) {
    return {data_.data() + r * words_per_row_, words_per_row_};
  }

  bool is_zero() const noexcept;
  std::size_t count_ones() const noexcept;

  /// Rows of '0'/'1' characters separated by newlines; "" for zero rows.
  std::string to_string() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Word> data_;
};

std::ostream& operator<<(std::ostream& os, const Gf2Matrix& m);

/// Product mod 2. Throws std::invalid_argument when a.cols() != b.rows().
Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b);

/// Columns of a followed by columns of b. Throws std::invalid_argument when
/// the row counts differ.
Gf2Matrix hstack(const Gf2Matrix& a, const Gf2Matrix& b);

Gf2Matrix transpose(const Gf2Matrix& a);

/// Rank by Gaussian elimination. Rows are processed top to bottom and each
/// row pivots on its first remaining nonzero column.
std::size_t rank(const Gf2Matrix& a);

/// Basis of the column null space {x : a x = 0}, returned as the columns of
/// an a.cols() x (a.cols() - rank(a)) matrix. One basis vector per free
/// column, in ascending column order; each has a 1 in its own free position
/// and 0 in every other free position.
Gf2Matrix kernel_basis(const Gf2Matrix& a);

}  // namespace phcalc
