#pragma once

#include "bott/bott_matrix.hpp"
#include "bott/rational.hpp"

#include <cstdint>
#include <vector>

// The two models of M(A): T^n modulo the involutions a_i, and R^n modulo the
// affine group generated by the s_i.
namespace bott::geometry {

/// Point of R^n, or of T^n in angle coordinates: z_j = exp(2π√-1 u_j) with
/// u_j ∈ [0,1). Angles keep torus computations exact.
using Point = std::vector<Rational>;

/// Reduces every coordinate into [0,1).
Point reduce_mod_one(Point u);

/// a_i(z) = (z_1, ..., -z_i, z_{i+1}(A^i_{i+1}), ..., z_n(A^i_n)), where
/// z(1) is complex conjugation. In angles: u_i + 1/2, and u_j -> -u_j on the
/// conjugation mask.
struct TorusInvolution {
  std::size_t size = 0;
  std::size_t index = 0;
  std::uint64_t conjugation_mask = 0;  // bit j set iff j > index and A^index_j = 1

  Point apply(const Point& angles) const;
};

/// Throws std::out_of_range if i >= n.
TorusInvolution torus_generator(const BottMatrix& a, std::size_t i);

/// u -> D u + t with D diagonal ±1.
struct AffineMap {
  std::vector<int> linear;
  Point translation;

  static AffineMap identity(std::size_t n);
  static AffineMap translation_by(const Point& t);

  std::size_t dimension() const { return linear.size(); }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// s_i: linear part (-1)^{A^i_j} on coordinates j > i, +1 elsewhere;
/// translation e_i / 2. Throws std::out_of_range if i >= n.
AffineMap affine_generator(const BottMatrix& a, std::size_t i);

/// (D1,t1)∘(D2,t2) = (D1 D2, D1 t2 + t1). Throws std::invalid_argument on a
/// dimension mismatch.
AffineMap compose(const AffineMap& g, const AffineMap& h);
Point apply_affine(const AffineMap& g, const Point& u);

/// Checks the 2^n - 1 nontrivial cosets s_1^{ε_1}∘...∘s_n^{ε_n}·Z^n of the
/// lattice: each must have a +1 eigencoordinate with non-integral
/// translation, which rules out fixed points for every lattice translate.
bool verify_free_action(const BottMatrix& a);

}  // namespace bott::geometry
