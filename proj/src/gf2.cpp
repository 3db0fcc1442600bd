#include "phcalc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace phcalc {

namespace {

using Word = Gf2Matrix::Word;
constexpr std::size_t kBits = Gf2Matrix::kWordBits;
constexpr std::size_t kNoPivot = std::numeric_limits<std::size_t>::max();

std::size_t words_for(std::size_t bits) { return (bits + kBits - 1) / kBits; }

std::string shape(const Gf2Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

std::size_t first_set_bit(std::span<const Word> row) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    if (row[w] != 0) return w * kBits + static_cast<std::size_t>(std::countr_zero(row[w]));
  }
  return kNoPivot;
}

void xor_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

// ORs `count` bits of `src` into `dst` starting at bit `offset` of dst.
void or_bits_at(std::span<Word> dst, std::size_t offset, std::span<const Word> src,
                std::size_t count) {
  const std::size_t shift = offset % kBits;
  const std::size_t base = offset / kBits;
  const std::size_t src_words = words_for(count);
  for (std::size_t w = 0; w < src_words; ++w) {
    const Word v = src[w];
    if (v == 0) continue;
    dst[base + w] |= v << shift;
    if (shift != 0 && base + w + 1 < dst.size()) dst[base + w + 1] |= v >> (kBits - shift);
  }
}

// In-place elimination. With `full` set every pivot column is cleared from all
// other rows (reduced echelon form up to row order); otherwise only from the
// rows below. Returns the pivot column of each row, kNoPivot for zero rows.
std::vector<std::size_t> eliminate(Gf2Matrix& m, bool full) {
  std::vector<std::size_t> pivot_of_row(m.rows(), kNoPivot);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const std::size_t pivot = first_set_bit(m.row(r));
    if (pivot == kNoPivot) continue;
    pivot_of_row[r] = pivot;
    const std::size_t word = pivot / kBits;
    const Word mask = Word{1} << (pivot % kBits);
    // Bits left of the pivot are zero in row r, so XOR can start at its word.
    const auto src = m.row(r).subspan(word);
    for (std::size_t other = full ? 0 : r + 1; other < m.rows(); ++other) {
      if (other == r) continue;
      auto dst = m.row(other);
      if (dst[word] & mask) xor_into(dst.subspan(word), src);
    }
  }
  return pivot_of_row;
}

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)), data_(rows * words_for(cols), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("Gf2Matrix::from_rows: row " + std::to_string(r) + " has " +
                                  std::to_string(rows[r].size()) + " entries, expected " +
                                  std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const int v = rows[r][c];
      if (v != 0 && v != 1) {
        throw std::invalid_argument("Gf2Matrix::from_rows: entry (" + std::to_string(r) + ", " +
                                    std::to_string(c) + ") is not 0 or 1");
      }
      if (v == 1) m.set(r, c);
    }
  }
  return m;
}

void Gf2Matrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("Gf2Matrix: index (" + std::to_string(r) + ", " + std::to_string(c) +
                            ") outside " + shape(*this));
  }
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  check_index(r, c);
  return (data_[r * words_per_row_ + c / kBits] >> (c % kBits)) & 1U;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  check_index(r, c);
  Word& w = data_[r * words_per_row_ + c / kBits];
  const Word mask = Word{1} << (c % kBits);
  w = value ? (w | mask) : (w & ~mask);
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) {
  check_index(r, c);
  data_[r * words_per_row_ + c / kBits] ^= Word{1} << (c % kBits);
}

bool Gf2Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

std::size_t Gf2Matrix::count_ones() const noexcept {
  std::size_t n = 0;
  for (Word w : data_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::string Gf2Matrix::to_string() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Gf2Matrix& m) {
  return os << "Gf2Matrix " << m.rows() << "x" << m.cols() << "\n" << m.to_string();
}

Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("multiply: shape mismatch " + shape(a) + " * " + shape(b));
  }
  Gf2Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    const auto lhs = a.row(i);
    for (std::size_t w = 0; w < lhs.size(); ++w) {
      Word bits = lhs[w];
      while (bits != 0) {
        const std::size_t k = w * kBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        xor_into(dst, b.row(k));
      }
    }
  }
  return out;
}

Gf2Matrix hstack(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("hstack: row mismatch " + shape(a) + " | " + shape(b));
  }
  Gf2Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto dst = out.row(r);
    or_bits_at(dst, 0, a.row(r), a.cols());
    or_bits_at(dst, a.cols(), b.row(r), b.cols());
  }
  return out;
}

Gf2Matrix transpose(const Gf2Matrix& a) {
  Gf2Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto src = a.row(r);
    for (std::size_t w = 0; w < src.size(); ++w) {
      Word bits = src[w];
      while (bits != 0) {
        out.set(w * kBits + static_cast<std::size_t>(std::countr_zero(bits)), r);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

std::size_t rank(const Gf2Matrix& a) {
  Gf2Matrix work = a;
  const auto pivots = eliminate(work, false);
  return static_cast<std::size_t>(
      std::count_if(pivots.begin(), pivots.end(), [](std::size_t p) { return p != kNoPivot; }));
}

Gf2Matrix kernel_basis(const Gf2Matrix& a) {
  Gf2Matrix work = a;
  const auto pivots = eliminate(work, true);

  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : pivots) {
    if (p != kNoPivot) is_pivot[p] = true;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }

  // After full reduction each pivot column is a unit vector, so the pivot
  // variable of row r equals the row's entry in the free column.
  Gf2Matrix basis(a.cols(), free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const std::size_t f = free_cols[t];
    basis.set(f, t);
    for (std::size_t r = 0; r < work.rows(); ++r) {
      if (pivots[r] != kNoPivot && work.get(r, f)) basis.set(pivots[r], t);
    }
  }
  return basis;
}

}  // namespace phcalc
