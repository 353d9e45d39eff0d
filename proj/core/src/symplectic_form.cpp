#include "bott/symplectic_form.hpp"

#include <stdexcept>
#include <string>

namespace bott::geometry {

void TwoForm::set(std::size_t j, std::size_t k, const Rational& value) {
  if (j >= size() || k >= size()) throw std::out_of_range("TwoForm::set: index out of range");
  if (j == k) throw std::invalid_argument("TwoForm::set: diagonal coefficient");
  matrix_(j, k) = value;
  matrix_(k, j) = -value;
}

bool TwoForm::is_zero() const {
  for (std::size_t j = 0; j < size(); ++j)
    for (std::size_t k = j + 1; k < size(); ++k)
      if (matrix_(j, k) != 0) return false;
  return true;
}

cohomology::ExteriorElement TwoForm::to_exterior() const {
  cohomology::ExteriorElement e;
  for (std::size_t j = 0; j < size(); ++j)
    for (std::size_t k = j + 1; k < size(); ++k)
      e.add_term(cohomology::Monomial::of({j, k}), matrix_(j, k));
  return e;
}

TwoForm build_symplectic_form(const BottMatrix& a, const Pairing& pairing) {
  if (!is_valid_pairing(a, pairing)) {
    throw std::invalid_argument("build_symplectic_form: pairing is not a partition into equal columns");
  }
  TwoForm omega(a.size());
  for (const auto& [j, k] : pairing.pairs) omega.set(j, k, 1);
  return omega;
}

TwoForm build_symplectic_form(const BottMatrix& a, const cohomology::DegreeTwoCoefficients& coefficients) {
  TwoForm omega(a.size());
  const auto cols = a.column_words();
  for (const auto& [mono, c] : coefficients) {
    if (mono.degree() != 2) throw std::invalid_argument("build_symplectic_form: coefficient on a non-pair");
    const auto idx = mono.indices();
    if (idx[1] >= a.size()) throw std::out_of_range("build_symplectic_form: index out of range");
    if (c != 0 && cols[idx[0]] != cols[idx[1]]) {
      throw std::invalid_argument("build_symplectic_form: c[" + std::to_string(idx[0] + 1) + "][" +
                                  std::to_string(idx[1] + 1) + "] joins unequal columns A_" +
                                  std::to_string(idx[0] + 1) + " != A_" + std::to_string(idx[1] + 1));
    }
    omega.set(idx[0], idx[1], omega.coefficient(idx[0], idx[1]) + c);
  }
  return omega;
}

TwoForm pullback(const AffineMap& g, const TwoForm& omega) {
  if (g.dimension() != omega.size()) throw std::invalid_argument("pullback: dimension mismatch");
  TwoForm out(omega.size());
  for (std::size_t j = 0; j < omega.size(); ++j)
    for (std::size_t k = j + 1; k < omega.size(); ++k)
      if (omega.coefficient(j, k) != 0) out.set(j, k, g.linear[j] * g.linear[k] * omega.coefficient(j, k));
  return out;
}

bool verify_invariance(const BottMatrix& a, const TwoForm& omega) {
  if (omega.size() != a.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (pullback(affine_generator(a, i), omega) != omega) return false;
  }
  return true;
}

bool nondegenerate(const TwoForm& omega) {
  if (omega.size() % 2 != 0) return false;
  return !cohomology::power(omega.to_exterior(), omega.size() / 2).is_zero();
}

std::vector<std::size_t> zero_columns(const BottMatrix& a) {
  std::vector<std::size_t> out;
  const auto cols = a.column_words();
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (cols[j] == 0) out.push_back(j);
  return out;
}

RationalMatrix standard_symplectic_matrix(std::size_t r) {
  RationalMatrix j(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    j(i, i + r) = 1;
    j(i + r, i) = -1;
  }
  return j;
}

namespace {

using Vector = std::vector<Rational>;

Rational pair(const RationalMatrix& c, const Vector& x, const Vector& y) {
  Rational s = 0;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < y.size(); ++b)
      if (y[b] != 0) s += x[a] * c(a, b) * y[b];
  }
  return s;
}

}  // namespace

RationalMatrix darboux_basis(const BottMatrix& a, const TwoForm& omega) {
  if (omega.size() != a.size()) throw std::invalid_argument("darboux_basis: dimension mismatch");
  const auto zeros = zero_columns(a);
  const std::size_t m = zeros.size();
  if (m % 2 != 0) throw std::invalid_argument("darboux_basis: odd number of zero columns");

  RationalMatrix c(m, m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) c(x, y) = omega.coefficient(zeros[x], zeros[y]);

  std::vector<Vector> remaining;
  for (std::size_t x = 0; x < m; ++x) {
    Vector v(m);
    v[x] = 1;
    remaining.push_back(std::move(v));
  }

  const std::size_t r = m / 2;
  RationalMatrix l(m, m);
  for (std::size_t step = 0; step < r; ++step) {
    Vector e = remaining.front();
    std::size_t partner = 0;
    Rational w = 0;
    for (std::size_t idx = 1; idx < remaining.size(); ++idx) {
      w = pair(c, e, remaining[idx]);
      if (w != 0) {
        partner = idx;
        break;
      }
    }
    if (partner == 0) {
      throw std::invalid_argument("darboux_basis: omega is degenerate on the zero-column block");
    }
    Vector f = remaining[partner];
    for (auto& x : f) x /= w;

    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(partner));
    remaining.erase(remaining.begin());
    // Project the rest onto the ω-orthogonal complement of span{e, f}.
    for (auto& v : remaining) {
      const Rational ve = pair(c, v, e);
      const Rational vf = pair(c, v, f);
      for (std::size_t x = 0; x < m; ++x) v[x] += ve * f[x] - vf * e[x];
    }
    for (std::size_t x = 0; x < m; ++x) {
      l(x, step) = e[x];
      l(x, step + r) = f[x];
    }
  }
  return l;
}

}  // namespace bott::geometry
