#pragma once

#include "bott/bott_matrix.hpp"

#include <chrono>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

// Exhaustive enumeration of all strictly upper-triangular (0,1) matrices of a
// given size, and the census built on it.
//
// Counter encoding: bit b of the counter fills the b-th strictly-upper slot in
// row-major order, (0,1), (0,2), ..., (0,n-1), (1,2), ... so the family is the
// integer range [0, 2^{n(n-1)/2}) and shards are integer subranges.
namespace bott::enumerate {

/// Largest n whose family fits in a 64-bit counter.
inline constexpr std::size_t kMaxEnumerableSize = 11;

/// 2^{n(n-1)/2}. Throws std::overflow_error above kMaxEnumerableSize and
/// std::invalid_argument for n == 0.
std::uint64_t family_size(std::size_t n);

struct Shard {
  std::size_t index = 0;
  std::size_t count = 1;
};

struct CounterRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

/// Contiguous, disjoint, covering split of [0, family_size(n)). Throws
/// std::invalid_argument if count == 0 or index >= count.
CounterRange shard_range(std::size_t n, Shard shard);

/// Writes the n column words of the matrix with the given counter.
void decode_columns(std::size_t n, std::uint64_t counter, std::span<std::uint64_t> columns);
BottMatrix decode(std::size_t n, std::uint64_t counter);
/// Inverse of decode. Throws std::overflow_error above kMaxEnumerableSize.
std::uint64_t encode(const BottMatrix& a);

/// Forward range over one shard of the family, yielding BottMatrix values.
class FamilyRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = BottMatrix;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::size_t n, std::uint64_t counter) : n_(n), counter_(counter) {}

    BottMatrix operator*() const { return decode(n_, counter_); }
    std::uint64_t counter() const { return counter_; }
    iterator& operator++() {
      ++counter_;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++counter_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.counter_ == b.counter_; }

   private:
    std::size_t n_ = 0;
    std::uint64_t counter_ = 0;
  };

  FamilyRange(std::size_t n, CounterRange range) : n_(n), range_(range) {}

  iterator begin() const { return {n_, range_.begin}; }
  iterator end() const { return {n_, range_.end}; }
  std::uint64_t size() const { return range_.end - range_.begin; }

 private:
  std::size_t n_;
  CounterRange range_;
};

FamilyRange iterate_family(std::size_t n, Shard shard = {});

struct Mismatch {
  std::uint64_t counter = 0;
  std::string matrix;  // compact rows, "0110;0011;0000;0000"
  std::string reason;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct CensusOptions {
  bool use_oracle = false;
  std::size_t workers = 1;
  /// Defaults to 8 without the oracle and 6 with it.
  std::optional<std::size_t> limit;
};

struct CensusReport {
  std::size_t n = 0;
  std::uint64_t total = 0;
  std::uint64_t orientable = 0;
  std::uint64_t symplectic = 0;
  /// Only computed with the oracle.
  std::optional<std::uint64_t> cohomologically_symplectic;
  std::vector<Mismatch> mismatches;
  std::chrono::milliseconds elapsed{0};
};

/// Counts are independent of the worker count: each worker owns one shard
/// and partial results are merged in shard order. Throws
/// std::invalid_argument if n exceeds the limit or workers == 0.
CensusReport census(std::size_t n, const CensusOptions& options = {});

/// Symplectic matrices in counter order. Throws std::invalid_argument above
/// the limit (default 8).
std::vector<BottMatrix> list_symplectic(std::size_t n, bool nonzero_only = false,
                                        std::optional<std::size_t> limit = std::nullopt);

/// Checks is_symplectic against both cohomological oracle modes, and
/// symplectic => orientable, over all of the family. Empty means the
/// equivalence held everywhere. Throws std::invalid_argument for n > 6.
std::vector<Mismatch> cross_validate(std::size_t n);

}  // namespace bott::enumerate
