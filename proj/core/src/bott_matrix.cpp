#include "bott/bott_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bott {

namespace {

std::uint64_t low_mask(std::size_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

ColumnVector::ColumnVector(std::size_t length, std::uint64_t bits) : length_(length), bits_(bits) {
  if (length > 64) throw std::invalid_argument("ColumnVector: length exceeds 64");
  if ((bits & ~low_mask(length)) != 0) throw std::invalid_argument("ColumnVector: bits beyond length");
}

ColumnVector& ColumnVector::operator+=(const ColumnVector& other) {
  if (length_ != other.length_) throw std::invalid_argument("ColumnVector: length mismatch");
  bits_ ^= other.bits_;
  return *this;
}

std::string ColumnVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < length_; ++i) {
    if (i > 0) out += ',';
    out += (*this)[i] ? '1' : '0';
  }
  out += ')';
  return out;
}

BottMatrix::BottMatrix(std::size_t n) {
  if (n == 0 || n > kMaxSize) {
    throw std::invalid_argument("BottMatrix: size must be in 1.." + std::to_string(kMaxSize));
  }
  columns_.assign(n, 0);
}

BottMatrix BottMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  BottMatrix a(rows.size());
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw std::invalid_argument("BottMatrix: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1) throw std::invalid_argument("BottMatrix: entries must be 0 or 1");
      if (v == 1) a.set(i, j, true);
    }
  }
  return a;
}

BottMatrix BottMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

BottMatrix BottMatrix::from_columns(std::span<const std::uint64_t> columns) {
  BottMatrix a(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if ((columns[j] & ~low_mask(j)) != 0) {
      throw std::invalid_argument("BottMatrix: column " + std::to_string(j + 1) +
                                  " has an entry on or below the diagonal");
    }
    a.columns_[j] = columns[j];
  }
  return a;
}

void BottMatrix::set(std::size_t row, std::size_t col, bool value) {
  if (row >= size() || col >= size()) throw std::out_of_range("BottMatrix::set: index out of range");
  if (row >= col) {
    if (!value) return;
    throw std::invalid_argument("BottMatrix: entry (" + std::to_string(row + 1) + "," +
                                std::to_string(col + 1) + ") is on or below the diagonal");
  }
  const std::uint64_t bit = std::uint64_t{1} << row;
  columns_[col] = value ? (columns_[col] | bit) : (columns_[col] & ~bit);
}

ColumnVector BottMatrix::column(std::size_t j) const {
  if (j >= size()) throw std::out_of_range("BottMatrix::column: index out of range");
  return ColumnVector(size(), columns_[j]);
}

std::uint64_t BottMatrix::row_bits(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("BottMatrix::row_bits: index out of range");
  std::uint64_t row = 0;
  for (std::size_t j = i + 1; j < size(); ++j) {
    if ((*this)(i, j)) row |= std::uint64_t{1} << j;
  }
  return row;
}

bool BottMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](std::uint64_t c) { return c == 0; });
}

std::string BottMatrix::to_compact_string() const {
  std::string out;
  out.reserve(size() * (size() + 1));
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out += ';';
    for (std::size_t j = 0; j < size(); ++j) out += (*this)(i, j) ? '1' : '0';
  }
  return out;
}

bool is_valid_pairing(const BottMatrix& a, const Pairing& pairing) {
  const std::size_t n = a.size();
  if (n % 2 != 0 || pairing.pairs.size() * 2 != n) return false;
  std::vector<bool> seen(n, false);
  const auto cols = a.column_words();
  for (const auto& [j, k] : pairing.pairs) {
    if (j >= n || k >= n || j == k || seen[j] || seen[k]) return false;
    if (cols[j] != cols[k]) return false;
    seen[j] = seen[k] = true;
  }
  return true;
}

}  // namespace bott
