#include "bott/cohomology.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace bott::cohomology {

Monomial Monomial::of(std::initializer_list<std::size_t> indices) {
  return of(std::vector<std::size_t>(indices));
}

Monomial Monomial::of(const std::vector<std::size_t>& indices) {
  Monomial m;
  for (std::size_t j : indices) {
    if (j >= 64) throw std::out_of_range("Monomial: index exceeds 63");
    const std::uint64_t bit = std::uint64_t{1} << j;
    if (m.bits & bit) throw std::invalid_argument("Monomial: repeated index");
    m.bits |= bit;
  }
  return m;
}

std::vector<std::size_t> Monomial::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

bool MonomialOrder::operator()(Monomial a, Monomial b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  const std::uint64_t diff = a.bits ^ b.bits;
  if (diff == 0) return false;
  // Same size: the first place the sorted index lists differ is the lowest
  // index in the symmetric difference, and the set holding it is smaller.
  return (a.bits & (diff & -diff)) != 0;
}

ExteriorElement ExteriorElement::monomial(Monomial m, Rational coefficient) {
  ExteriorElement e;
  e.add_term(m, coefficient);
  return e;
}

void ExteriorElement::add_term(Monomial m, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ExteriorElement::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ExteriorElement& ExteriorElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

std::string ExteriorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || m.bits == 0) out << mag.str();
    if (m.bits != 0) {
      if (!unit) out << ' ';
      bool first_factor = true;
      for (std::size_t j : m.indices()) {
        if (!first_factor) out << '^';
        first_factor = false;
        out << "du" << (j + 1);
      }
    }
  }
  return out.str();
}

int wedge_sign(Monomial j, Monomial k) {
  // Count pairs (a, b) in J x K with a > b.
  std::size_t inversions = 0;
  for (std::uint64_t rest = k.bits; rest != 0; rest &= rest - 1) {
    const auto b = static_cast<unsigned>(std::countr_zero(rest));
    const std::uint64_t above = b >= 63 ? 0 : ~((std::uint64_t{2} << b) - 1);
    inversions += static_cast<std::size_t>(std::popcount(j.bits & above));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y) {
  ExteriorElement out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      if (mx.bits & my.bits) continue;
      Rational c = cx * cy;
      if (wedge_sign(mx, my) < 0) c = -c;
      out.add_term(Monomial{mx.bits | my.bits}, c);
    }
  }
  return out;
}

ExteriorElement power(const ExteriorElement& x, std::size_t m) {
  ExteriorElement out = ExteriorElement::monomial(Monomial{}, 1);
  for (std::size_t i = 0; i < m; ++i) {
    out = wedge(out, x);
    if (out.is_zero()) break;
  }
  return out;
}

std::vector<int> generator_sign_action(const BottMatrix& a, std::size_t i) {
  const std::uint64_t row = a.row_bits(i);
  std::vector<int> signs(a.size(), 1);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if ((row >> j) & 1U) signs[j] = -1;
  }
  return signs;
}

bool is_invariant_monomial(const BottMatrix& a, Monomial m) {
  const auto cols = a.column_words();
  std::uint64_t sum = 0;
  for (std::size_t j : m.indices()) {
    if (j >= cols.size()) throw std::out_of_range("is_invariant_monomial: index beyond matrix size");
    sum ^= cols[j];
  }
  return sum == 0;
}

namespace {

// k-subsets of {start, ..., n-1} in lexicographic order, filtered by a zero
// column sum.
void collect_invariant(std::span<const std::uint64_t> cols, std::size_t start, std::size_t k,
                       std::uint64_t chosen, std::uint64_t sum, std::vector<Monomial>& out) {
  if (k == 0) {
    if (sum == 0) out.push_back(Monomial{chosen});
    return;
  }
  for (std::size_t j = start; j + k <= cols.size(); ++j) {
    collect_invariant(cols, j + 1, k - 1, chosen | (std::uint64_t{1} << j), sum ^ cols[j], out);
  }
}

bool has_perfect_matching(const std::vector<std::uint64_t>& adjacency, std::uint64_t unmatched) {
  if (unmatched == 0) return true;
  const auto v = static_cast<std::size_t>(std::countr_zero(unmatched));
  const std::uint64_t rest = unmatched & (unmatched - 1);
  for (std::uint64_t cand = adjacency[v] & rest; cand != 0; cand &= cand - 1) {
    const std::uint64_t u = cand & -cand;
    if (has_perfect_matching(adjacency, rest & ~u)) return true;
  }
  return false;
}

std::uint64_t full_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

std::vector<Monomial> invariant_basis(const BottMatrix& a, std::size_t k) {
  std::vector<Monomial> out;
  if (k > a.size()) return out;
  collect_invariant(a.column_words(), 0, k, 0, 0, out);
  return out;
}

long long BettiVector::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(values[k]);
  }
  return chi;
}

BettiVector betti(const BottMatrix& a) {
  const std::size_t n = a.size();
  if (n > 32) throw std::invalid_argument("betti: size above 32 is not supported");
  const auto cols = a.column_words();
  BettiVector b;
  b.values.assign(n + 1, 0);
  // Gray-code walk: each step toggles one index and one column in the sum.
  std::uint64_t subset = 0;
  std::uint64_t sum = 0;
  b.values[0] = 1;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < count; ++i) {
    const auto j = static_cast<std::size_t>(std::countr_zero(i));
    subset ^= std::uint64_t{1} << j;
    sum ^= cols[j];
    if (sum == 0) ++b.values[static_cast<std::size_t>(std::popcount(subset))];
  }
  return b;
}

std::string PoincarePolynomial::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const std::size_t c = coefficients[k];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0 || c != 1) out += std::to_string(c);
    if (k >= 1) out += 't';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

PoincarePolynomial poincare_polynomial(const BottMatrix& a) { return {betti(a).values}; }

ExteriorElement alpha_power(const BottMatrix& a, const DegreeTwoCoefficients& coefficients,
                            std::size_t m) {
  ExteriorElement alpha;
  for (const auto& [mono, c] : coefficients) {
    if (mono.degree() != 2) throw std::invalid_argument("alpha_power: coefficient on a non-degree-2 monomial");
    if (!is_invariant_monomial(a, mono)) {
      const auto idx = mono.indices();
      throw std::invalid_argument("alpha_power: du" + std::to_string(idx[0] + 1) + "^du" +
                                  std::to_string(idx[1] + 1) + " is not G(A)-invariant");
    }
    alpha.add_term(mono, c);
  }
  return power(alpha, m);
}

bool is_cohomologically_symplectic(const BottMatrix& a, OracleMode mode, std::uint64_t seed) {
  const std::size_t n = a.size();
  if (n % 2 != 0) return false;
  const auto basis = invariant_basis(a, 2);

  if (mode == OracleMode::matching) {
    std::vector<std::uint64_t> adjacency(n, 0);
    for (Monomial m : basis) {
      const auto idx = m.indices();
      adjacency[idx[0]] |= std::uint64_t{1} << idx[1];
      adjacency[idx[1]] |= std::uint64_t{1} << idx[0];
    }
    return has_perfect_matching(adjacency, full_mask(n));
  }

  // Seed per matrix so results do not depend on evaluation order.
  std::uint64_t mixed = seed;
  for (std::uint64_t c : a.column_words()) mixed = (mixed ^ c) * 0x9e3779b97f4a7c15ULL + n;
  std::mt19937_64 rng(mixed);
  std::uniform_int_distribution<std::int64_t> draw(1, std::int64_t{1} << 20);
  constexpr int kTrials = 3;
  for (int trial = 0; trial < kTrials; ++trial) {
    ExteriorElement alpha;
    for (Monomial m : basis) alpha.add_term(m, Rational(draw(rng)));
    if (!power(alpha, n / 2).is_zero()) return true;
  }
  return false;
}

}  // namespace bott::cohomology
