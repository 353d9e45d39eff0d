#pragma once

#include "bott/bott_matrix.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bott {

// Span overloads work directly on column words so the census can run them
// without building a BottMatrix per counter value.

/// Every row sum of A vanishes mod 2.
bool is_orientable(std::span<const std::uint64_t> columns);
bool is_orientable(const BottMatrix& a);

/// The columns split into pairs of equal columns. Equality of columns is an
/// equivalence relation, so this holds iff the size is even and every
/// distinct column value occurs an even number of times.
bool is_symplectic(std::span<const std::uint64_t> columns);
bool is_symplectic(const BottMatrix& a);

/// Equal-column classes, each listed in ascending index order, ordered by
/// their smallest index.
std::vector<std::vector<std::size_t>> column_classes(const BottMatrix& a);

/// Classes of odd size. Empty iff every class can be paired internally.
std::vector<std::vector<std::size_t>> odd_column_classes(const BottMatrix& a);

/// Pairs consecutive indices within each equal-column class; pairs come out
/// sorted by first index. std::nullopt iff !is_symplectic(a).
std::optional<Pairing> find_pairing(const BottMatrix& a);

/// Number of zero columns, which is dim H^1(M(A)).
std::size_t flux_rank(std::span<const std::uint64_t> columns);
std::size_t flux_rank(const BottMatrix& a);

}  // namespace bott
