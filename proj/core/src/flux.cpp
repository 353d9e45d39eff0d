#include "bott/flux.hpp"

#include "bott/predicates.hpp"

#include <stdexcept>

namespace bott::geometry {

std::optional<cohomology::Monomial> FluxGenerator::direction() const {
  if (flux.terms().size() != 1) return std::nullopt;
  return flux.terms().begin()->first;
}

FluxData flux_group(const BottMatrix& a, const TwoForm& omega) {
  if (!is_symplectic(a)) throw std::invalid_argument("flux_group: M(A) is not symplectic");
  if (!verify_invariance(a, omega)) throw std::invalid_argument("flux_group: omega is not G(A)-invariant");
  if (!nondegenerate(omega)) throw std::invalid_argument("flux_group: omega is degenerate");

  FluxData data;
  const auto zeros = zero_columns(a);
  data.rank = zeros.size();
  data.darboux = darboux_basis(a, omega);
  // Rotating u_p has velocity ∂/∂u_p; its flux is [i_{∂/∂u_p} ω] = Σ_k c_{p,k} [du_k].
  for (std::size_t p : zeros) {
    FluxGenerator g{p, {}};
    for (std::size_t k = 0; k < omega.size(); ++k) {
      g.flux.add_term(cohomology::Monomial::of({k}), omega.coefficient(p, k));
    }
    data.generators.push_back(std::move(g));
  }
  return data;
}

std::size_t flux_span_rank(const FluxData& data, std::size_t n) {
  RationalMatrix m(data.generators.size(), n);
  for (std::size_t r = 0; r < data.generators.size(); ++r) {
    for (const auto& [mono, c] : data.generators[r].flux.terms()) m(r, mono.indices().front()) = c;
  }
  return m.rank();
}

}  // namespace bott::geometry
