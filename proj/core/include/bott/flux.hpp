#pragma once

#include "bott/bott_matrix.hpp"
#include "bott/cohomology.hpp"
#include "bott/rational_matrix.hpp"
#include "bott/symplectic_form.hpp"

#include <optional>
#include <vector>

namespace bott::geometry {

/// Flux of the circle action rotating the zero-column coordinate u_p.
struct FluxGenerator {
  std::size_t coordinate = 0;  // p
  /// i_{∂/∂u_p} ω, a closed invariant 1-form (exact coefficients).
  cohomology::ExteriorElement flux;

  /// [du_q] when the flux is a multiple of a single class.
  std::optional<cohomology::Monomial> direction() const;
};

/// Rank and spanning directions of the flux group Γ_ω ⊂ H^1(M(A)). The
/// isotopy speed is only fixed up to a nonzero constant, so generators are
/// directions, not lattice vectors.
struct FluxData {
  std::size_t rank = 0;
  std::vector<FluxGenerator> generators;
  /// Darboux change on the zero-column block; in those coordinates the flux
  /// of rotating v_p is ±[dv_q] with q = p ± rank/2.
  RationalMatrix darboux;
  bool up_to_scale = true;
};

/// Throws std::invalid_argument if A is not symplectic or ω is not an
/// invariant nondegenerate form on M(A).
FluxData flux_group(const BottMatrix& a, const TwoForm& omega);

/// Rank of the span of the generators' flux classes.
std::size_t flux_span_rank(const FluxData& data, std::size_t n);

}  // namespace bott::geometry
