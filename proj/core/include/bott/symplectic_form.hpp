#pragma once

#include "bott/actions.hpp"
#include "bott/bott_matrix.hpp"
#include "bott/cohomology.hpp"
#include "bott/rational.hpp"
#include "bott/rational_matrix.hpp"

#include <vector>

namespace bott::geometry {

/// Constant-coefficient 2-form ω = Σ_{j<k} c_{j,k} du_j ∧ du_k, held as the
/// skew matrix C with C(j,k) = c_{j,k} = -C(k,j).
class TwoForm {
 public:
  explicit TwoForm(std::size_t size) : matrix_(size, size) {}

  std::size_t size() const { return matrix_.rows(); }
  const Rational& coefficient(std::size_t j, std::size_t k) const { return matrix_(j, k); }
  /// Sets c_{j,k} (and c_{k,j} = -value). Throws std::invalid_argument if
  /// j == k and std::out_of_range outside the form's size.
  void set(std::size_t j, std::size_t k, const Rational& value);

  const RationalMatrix& matrix() const { return matrix_; }
  bool is_zero() const;
  cohomology::ExteriorElement to_exterior() const;

  friend bool operator==(const TwoForm&, const TwoForm&) = default;

 private:
  RationalMatrix matrix_;
};

/// ω = Σ_k du_{j_k} ∧ du_{j_{k+n}} for a valid pairing of A. Throws
/// std::invalid_argument otherwise.
TwoForm build_symplectic_form(const BottMatrix& a, const Pairing& pairing);

/// ω with the given coefficients. Throws std::invalid_argument if any
/// nonzero coefficient joins two different columns.
TwoForm build_symplectic_form(const BottMatrix& a, const cohomology::DegreeTwoCoefficients& coefficients);

/// g*ω: c_{j,k} -> D_jj D_kk c_{j,k}; translations act trivially on constant
/// forms. Throws std::invalid_argument on a dimension mismatch.
TwoForm pullback(const AffineMap& g, const TwoForm& omega);

/// s_i*ω = ω for every generator.
bool verify_invariance(const BottMatrix& a, const TwoForm& omega);

/// ω^{size/2} ≠ 0, via the exterior algebra. Odd sizes are never
/// nondegenerate.
bool nondegenerate(const TwoForm& omega);

/// Columns L of a change of basis on the zero-column coordinates (ascending)
/// such that Lᵀ C L = [[0, I_r], [-I_r, 0]], where C is ω restricted to
/// those coordinates, i.e. ω|_{zero block} = Σ_i dv_i ∧ dv_{i+r}.
/// Symplectic Gram–Schmidt: the pivot is the lowest remaining vector, its
/// partner the lowest one pairing nonzero with it.
/// Throws std::invalid_argument if the restriction is degenerate.
RationalMatrix darboux_basis(const BottMatrix& a, const TwoForm& omega);

/// The zero-column coordinates darboux_basis works on.
std::vector<std::size_t> zero_columns(const BottMatrix& a);

/// [[0, I_r], [-I_r, 0]].
RationalMatrix standard_symplectic_matrix(std::size_t r);

}  // namespace bott::geometry
