#include "bott/predicates.hpp"

#include <algorithm>
#include <bitset>
#include <map>

namespace bott {

bool is_orientable(std::span<const std::uint64_t> columns) {
  // Bit i of the XOR of all columns is the parity of row i.
  std::uint64_t parity = 0;
  for (std::uint64_t c : columns) parity ^= c;
  return parity == 0;
}

bool is_orientable(const BottMatrix& a) { return is_orientable(a.column_words()); }

bool is_symplectic(std::span<const std::uint64_t> columns) {
  const std::size_t n = columns.size();
  if (n % 2 != 0) return false;
  // Even multiplicities force every row sum to be even.
  if (!is_orientable(columns)) return false;

  // Column j only uses rows < j, so for n <= 9 every value is below 256 and a
  // toggle table decides the multiplicity parities without sorting.
  if (n <= 9) {
    std::bitset<256> odd;
    for (std::uint64_t c : columns) odd.flip(static_cast<std::size_t>(c));
    return odd.none();
  }
  std::vector<std::uint64_t> sorted(columns.begin(), columns.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; i += 2) {
    if (sorted[i] != sorted[i + 1]) return false;
  }
  return true;
}

bool is_symplectic(const BottMatrix& a) { return is_symplectic(a.column_words()); }

std::vector<std::vector<std::size_t>> column_classes(const BottMatrix& a) {
  std::map<std::uint64_t, std::size_t> slot;
  std::vector<std::vector<std::size_t>> classes;
  const auto cols = a.column_words();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto [it, inserted] = slot.try_emplace(cols[j], classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(j);
  }
  return classes;
}

std::vector<std::vector<std::size_t>> odd_column_classes(const BottMatrix& a) {
  auto classes = column_classes(a);
  std::erase_if(classes, [](const auto& c) { return c.size() % 2 == 0; });
  return classes;
}

std::optional<Pairing> find_pairing(const BottMatrix& a) {
  if (!is_symplectic(a)) return std::nullopt;
  Pairing p;
  for (const auto& cls : column_classes(a)) {
    for (std::size_t i = 0; i + 1 < cls.size(); i += 2) p.pairs.emplace_back(cls[i], cls[i + 1]);
  }
  std::sort(p.pairs.begin(), p.pairs.end());
  return p;
}

std::size_t flux_rank(std::span<const std::uint64_t> columns) {
  return static_cast<std::size_t>(std::count(columns.begin(), columns.end(), std::uint64_t{0}));
}

std::size_t flux_rank(const BottMatrix& a) { return flux_rank(a.column_words()); }

}  // namespace bott
