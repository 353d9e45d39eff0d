#pragma once

#include "bott/bott_matrix.hpp"
#include "bott/rational.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

// De Rham cohomology of T^n as an exterior algebra over the rationals, the
// sign action of G(A) on it, and the invariant subring H*(M(A)).
namespace bott::cohomology {

/// [du_J] for a subset J of {0, ..., n-1}, stored as a bit set.
struct Monomial {
  std::uint64_t bits = 0;

  static Monomial of(std::initializer_list<std::size_t> indices);
  static Monomial of(const std::vector<std::size_t>& indices);

  std::size_t degree() const { return static_cast<std::size_t>(std::popcount(bits)); }
  bool contains(std::size_t j) const { return (bits >> j) & 1U; }
  std::vector<std::size_t> indices() const;

  friend bool operator==(Monomial, Monomial) = default;
};

/// Degree first, then lexicographic on the ascending index lists
/// ({1,4} < {2,3}). Used for every listing and serialization.
struct MonomialOrder {
  bool operator()(Monomial a, Monomial b) const;
};

/// Finite sum of rational multiples of monomials. Zero coefficients are never
/// stored, so an element is zero iff it has no terms.
class ExteriorElement {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  ExteriorElement() = default;
  static ExteriorElement monomial(Monomial m, Rational coefficient = 1);

  void add_term(Monomial m, const Rational& coefficient);
  Rational coefficient(Monomial m) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExteriorElement& operator+=(const ExteriorElement& other);
  ExteriorElement& operator-=(const ExteriorElement& other);
  ExteriorElement& operator*=(const Rational& scalar);
  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  friend ExteriorElement operator*(const Rational& s, ExteriorElement a) { return a *= s; }
  friend bool operator==(const ExteriorElement&, const ExteriorElement&) = default;

  /// e.g. "2 du1^du2^du3^du4 - 1/2 du1", 1-based indices; "0" when empty.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Sign of [du_J]·[du_K] = ±[du_{J∪K}] for disjoint J, K: (-1)^#{(j,k) : j > k}.
int wedge_sign(Monomial j, Monomial k);

/// Bilinear exterior product.
ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y);

/// x^m, with x^0 = 1.
ExteriorElement power(const ExteriorElement& x, std::size_t m);

/// Entry j is -1 if A^i_j = 1 and +1 otherwise: the action of a_i* on [du_j].
/// Throws std::out_of_range if i >= n.
std::vector<int> generator_sign_action(const BottMatrix& a, std::size_t i);

/// [du_J] is G(A)-invariant iff the columns indexed by J sum to zero in GF(2).
bool is_invariant_monomial(const BottMatrix& a, Monomial m);

/// Invariant monomials of degree k in MonomialOrder. Empty if k > n.
std::vector<Monomial> invariant_basis(const BottMatrix& a, std::size_t k);

struct BettiVector {
  std::vector<std::size_t> values;  // b_0, ..., b_n

  long long euler_characteristic() const;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Dimensions of H^k(M(A)) = H^k(T^n)^{G(A)}. Visits all 2^n subsets, so n is
/// capped at 32 (std::invalid_argument beyond).
BettiVector betti(const BottMatrix& a);

struct PoincarePolynomial {
  std::vector<std::size_t> coefficients;  // coefficient of t^k at index k

  /// "1 + 2t + t^2"
  std::string to_string() const;
};

PoincarePolynomial poincare_polynomial(const BottMatrix& a);

/// Coefficients c_{j,k} of a degree-2 class, keyed by the monomial {j,k}.
using DegreeTwoCoefficients = std::vector<std::pair<Monomial, Rational>>;

/// α^m for α = Σ c_{j,k} [du_j ∧ du_k]. Throws std::invalid_argument if a
/// coefficient sits on a monomial that is not degree 2 or not invariant.
ExteriorElement alpha_power(const BottMatrix& a, const DegreeTwoCoefficients& coefficients,
                            std::size_t m);

enum class OracleMode {
  /// Perfect-matching search on the graph whose edges are the invariant
  /// degree-2 monomials. α^n expands to n!·Pf(C)·[du_{1..2n}] and the
  /// Pfaffian terms are distinct monomials in independent c_{j,k}, so α^n
  /// vanishes identically iff that graph has no perfect matching.
  matching,
  /// Evaluates α^n with wedge() for random integer coefficients in
  /// [1, 2^20], three independent trials.
  randomized,
};

/// Whether some α ∈ H^2(M(A)) has α^{n/2} ≠ 0. Odd sizes return false.
/// Deliberately does not consult the column-pairing predicate.
bool is_cohomologically_symplectic(const BottMatrix& a, OracleMode mode = OracleMode::matching,
                                   std::uint64_t seed = 0x5eed'b077ULL);

}  // namespace bott::cohomology
