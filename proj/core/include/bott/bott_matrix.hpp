#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bott {

/// Bit vector over GF(2) of fixed length (at most 64). Bit i is coordinate i.
class ColumnVector {
 public:
  ColumnVector() = default;
  ColumnVector(std::size_t length, std::uint64_t bits);

  std::size_t length() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  bool operator[](std::size_t i) const { return (bits_ >> i) & 1U; }
  bool is_zero() const { return bits_ == 0; }

  ColumnVector& operator+=(const ColumnVector& other);
  friend ColumnVector operator+(ColumnVector a, const ColumnVector& b) { return a += b; }
  friend bool operator==(const ColumnVector&, const ColumnVector&) = default;

  /// "(1,0,0,0)"
  std::string to_string() const;

 private:
  std::size_t length_ = 0;
  std::uint64_t bits_ = 0;
};

/// A strictly upper-triangular (0,1) matrix of size n, the defining data of a
/// real Bott manifold M(A).
///
/// Storage is column-major as machine words: bit i of column word j is the
/// entry in row i, column j. Column equality is a word comparison, which is
/// what the pairing criterion and the census spend their time on.
/// Indices are 0-based throughout the library; user-facing output adds 1.
class BottMatrix {
 public:
  static constexpr std::size_t kMaxSize = 64;

  /// Zero matrix of size n. Throws std::invalid_argument unless 1 <= n <= 64.
  explicit BottMatrix(std::size_t n);

  /// Throws std::invalid_argument if the rows are not square, contain values
  /// other than 0/1, or have a nonzero entry on or below the diagonal.
  static BottMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static BottMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  /// Column words as described above. Throws std::invalid_argument if a word
  /// has a bit on or below the diagonal or beyond the size.
  static BottMatrix from_columns(std::span<const std::uint64_t> columns);

  std::size_t size() const { return columns_.size(); }

  bool operator()(std::size_t row, std::size_t col) const {
    return (columns_[col] >> row) & 1U;
  }
  /// Throws std::out_of_range for indices outside the matrix and
  /// std::invalid_argument for a diagonal or lower-triangular position.
  void set(std::size_t row, std::size_t col, bool value);

  /// A_j as a GF(2) vector; throws std::out_of_range if j >= n.
  ColumnVector column(std::size_t j) const;
  /// Row i as a bit word (bit j set iff A^i_j = 1); throws std::out_of_range.
  std::uint64_t row_bits(std::size_t i) const;

  std::span<const std::uint64_t> column_words() const { return columns_; }
  bool is_zero() const;

  friend bool operator==(const BottMatrix&, const BottMatrix&) = default;

  /// Rows joined by ';', e.g. "0110;0011;0000;0000".
  std::string to_compact_string() const;

 private:
  std::vector<std::uint64_t> columns_;
};

/// Pairing of {0, ..., 2n-1} into n disjoint pairs. Each pair is stored as
/// (first, second) = (j_k, j_{k+n}); the first entry becomes the real part
/// of the k-th complex coordinate.
struct Pairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  friend bool operator==(const Pairing&, const Pairing&) = default;
};

/// True iff the pairs are disjoint, cover 0..size-1, and join equal columns.
bool is_valid_pairing(const BottMatrix& a, const Pairing& pairing);

}  // namespace bott
