#include "bott/enumerate.hpp"

#include "bott/cohomology.hpp"
#include "bott/predicates.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>

namespace bott::enumerate {

namespace {

constexpr std::size_t kDefaultLimit = 8;
constexpr std::size_t kDefaultOracleLimit = 6;
constexpr std::size_t kCrossValidateLimit = 6;

std::size_t slot_count(std::size_t n) { return n * (n - 1) / 2; }

void check_size(std::size_t n) {
  if (n == 0) throw std::invalid_argument("enumerate: size must be positive");
  if (n > kMaxEnumerableSize) {
    throw std::overflow_error("enumerate: size " + std::to_string(n) + " overflows the 64-bit counter");
  }
}

void decode_unchecked(std::size_t n, std::uint64_t counter, std::span<std::uint64_t> columns) {
  for (auto& c : columns) c = 0;
  std::size_t bit = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      columns[j] |= ((counter >> bit) & 1U) << i;
    }
  }
}

struct Partial {
  std::uint64_t orientable = 0;
  std::uint64_t symplectic = 0;
  std::uint64_t cohomologically_symplectic = 0;
  std::vector<Mismatch> mismatches;
};

Partial run_shard(std::size_t n, CounterRange range, bool use_oracle) {
  Partial p;
  if (range.begin == range.end) return p;

  // Slot b of the counter lives at (slot_row[b], slot_col[b]).
  std::array<std::uint8_t, 64> slot_row{};
  std::array<std::uint8_t, 64> slot_col{};
  {
    std::size_t bit = 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++bit) {
        slot_row[bit] = static_cast<std::uint8_t>(i);
        slot_col[bit] = static_cast<std::uint8_t>(j);
      }
  }

  std::array<std::uint64_t, kMaxEnumerableSize> buffer{};
  const std::span<std::uint64_t> cols(buffer.data(), n);
  const std::span<const std::uint64_t> view(buffer.data(), n);
  decode_unchecked(n, range.begin, cols);
  for (std::uint64_t c = range.begin;;) {
    const bool orientable = is_orientable(view);
    const bool symplectic = orientable && is_symplectic(view);
    p.orientable += orientable;
    p.symplectic += symplectic;
    if (use_oracle) {
      const BottMatrix a = BottMatrix::from_columns(view);
      const bool cohomological = cohomology::is_cohomologically_symplectic(a);
      p.cohomologically_symplectic += cohomological;
      if (cohomological != symplectic) {
        p.mismatches.push_back({c, a.to_compact_string(),
                                symplectic ? "column pairing exists but no alpha with nonzero top power"
                                           : "alpha with nonzero top power but no column pairing"});
      }
    }
    if (++c == range.end) break;
    // c-1 -> c flips the trailing ones of c-1 and the zero above them, i.e.
    // exactly the bits set in c ^ (c-1).
    for (std::uint64_t flips = c ^ (c - 1); flips != 0; flips &= flips - 1) {
      const auto b = static_cast<std::size_t>(std::countr_zero(flips));
      cols[slot_col[b]] ^= std::uint64_t{1} << slot_row[b];
    }
  }
  return p;
}

}  // namespace

std::uint64_t family_size(std::size_t n) {
  check_size(n);
  return std::uint64_t{1} << slot_count(n);
}

CounterRange shard_range(std::size_t n, Shard shard) {
  if (shard.count == 0 || shard.index >= shard.count) {
    throw std::invalid_argument("shard_range: need 0 <= index < count");
  }
  const std::uint64_t total = family_size(n);
  const std::uint64_t base = total / shard.count;
  const std::uint64_t extra = total % shard.count;
  const std::uint64_t i = shard.index;
  const std::uint64_t begin = i * base + std::min<std::uint64_t>(i, extra);
  return {begin, begin + base + (i < extra ? 1 : 0)};
}

void decode_columns(std::size_t n, std::uint64_t counter, std::span<std::uint64_t> columns) {
  check_size(n);
  if (columns.size() != n) throw std::invalid_argument("decode_columns: buffer size mismatch");
  if (counter >= family_size(n)) throw std::out_of_range("decode_columns: counter out of range");
  decode_unchecked(n, counter, columns);
}

BottMatrix decode(std::size_t n, std::uint64_t counter) {
  std::array<std::uint64_t, kMaxEnumerableSize> buffer{};
  decode_columns(n, counter, std::span<std::uint64_t>(buffer.data(), n));
  return BottMatrix::from_columns(std::span<const std::uint64_t>(buffer.data(), n));
}

std::uint64_t encode(const BottMatrix& a) {
  const std::size_t n = a.size();
  check_size(n);
  std::uint64_t counter = 0;
  std::size_t bit = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (a(i, j)) counter |= std::uint64_t{1} << bit;
    }
  }
  return counter;
}

FamilyRange iterate_family(std::size_t n, Shard shard) { return FamilyRange(n, shard_range(n, shard)); }

CensusReport census(std::size_t n, const CensusOptions& options) {
  const std::size_t limit = options.limit.value_or(options.use_oracle ? kDefaultOracleLimit : kDefaultLimit);
  if (n > limit) {
    throw std::invalid_argument("census: size " + std::to_string(n) + " exceeds the limit " +
                                std::to_string(limit));
  }
  if (options.workers == 0) throw std::invalid_argument("census: need at least one worker");

  const auto start = std::chrono::steady_clock::now();
  std::vector<Partial> partials(options.workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(options.workers);
    for (std::size_t w = 0; w < options.workers; ++w) {
      threads.emplace_back([&, w] {
        partials[w] = run_shard(n, shard_range(n, {w, options.workers}), options.use_oracle);
      });
    }
  }

  CensusReport report;
  report.n = n;
  report.total = family_size(n);
  std::uint64_t cohomological = 0;
  for (auto& p : partials) {
    report.orientable += p.orientable;
    report.symplectic += p.symplectic;
    cohomological += p.cohomologically_symplectic;
    for (auto& m : p.mismatches) report.mismatches.push_back(std::move(m));
  }
  if (options.use_oracle) report.cohomologically_symplectic = cohomological;
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<BottMatrix> list_symplectic(std::size_t n, bool nonzero_only, std::optional<std::size_t> limit) {
  if (n > limit.value_or(kDefaultLimit)) {
    throw std::invalid_argument("list_symplectic: size " + std::to_string(n) + " exceeds the limit");
  }
  std::vector<BottMatrix> out;
  for (const BottMatrix& a : iterate_family(n)) {
    if (nonzero_only && a.is_zero()) continue;
    if (is_symplectic(a)) out.push_back(a);
  }
  return out;
}

std::vector<Mismatch> cross_validate(std::size_t n) {
  if (n > kCrossValidateLimit) {
    throw std::invalid_argument("cross_validate: size " + std::to_string(n) + " exceeds " +
                                std::to_string(kCrossValidateLimit));
  }
  std::vector<Mismatch> out;
  for (auto it = iterate_family(n).begin(), end = iterate_family(n).end(); it != end; ++it) {
    const BottMatrix a = *it;
    const bool symplectic = is_symplectic(a);
    const bool matching = cohomology::is_cohomologically_symplectic(a, cohomology::OracleMode::matching);
    const bool randomized = cohomology::is_cohomologically_symplectic(a, cohomology::OracleMode::randomized);
    auto flag = [](bool b) { return b ? std::string("true") : std::string("false"); };
    if (symplectic != matching || symplectic != randomized) {
      out.push_back({it.counter(), a.to_compact_string(),
                     "pairing=" + flag(symplectic) + " matching_oracle=" + flag(matching) +
                         " randomized_oracle=" + flag(randomized)});
    }
    if (symplectic && !is_orientable(a)) {
      out.push_back({it.counter(), a.to_compact_string(), "symplectic but not orientable"});
    }
  }
  return out;
}

}  // namespace bott::enumerate
