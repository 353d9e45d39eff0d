#include "bott/actions.hpp"

#include <stdexcept>

namespace bott::geometry {

namespace {

Rational frac(const Rational& x) {
  // x - floor(x), exact.
  const Integer& num = boost::multiprecision::numerator(x);
  const Integer& den = boost::multiprecision::denominator(x);
  Integer r = num % den;
  if (r < 0) r += den;
  return Rational(r, den);
}

bool is_integral(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

}  // namespace

Point reduce_mod_one(Point u) {
  for (auto& x : u) x = frac(x);
  return u;
}

Point TorusInvolution::apply(const Point& angles) const {
  if (angles.size() != size) throw std::invalid_argument("TorusInvolution: dimension mismatch");
  Point out = angles;
  out[index] += Rational(1, 2);  // z -> -z
  for (std::size_t j = index + 1; j < size; ++j) {
    if ((conjugation_mask >> j) & 1U) out[j] = -out[j];  // z -> conj(z)
  }
  return reduce_mod_one(std::move(out));
}

TorusInvolution torus_generator(const BottMatrix& a, std::size_t i) {
  if (i >= a.size()) throw std::out_of_range("torus_generator: index out of range");
  return TorusInvolution{a.size(), i, a.row_bits(i)};
}

AffineMap AffineMap::identity(std::size_t n) { return AffineMap{std::vector<int>(n, 1), Point(n)}; }

AffineMap AffineMap::translation_by(const Point& t) {
  return AffineMap{std::vector<int>(t.size(), 1), t};
}

AffineMap affine_generator(const BottMatrix& a, std::size_t i) {
  if (i >= a.size()) throw std::out_of_range("affine_generator: index out of range");
  AffineMap s = AffineMap::identity(a.size());
  const std::uint64_t row = a.row_bits(i);
  for (std::size_t j = i + 1; j < a.size(); ++j) {
    if ((row >> j) & 1U) s.linear[j] = -1;
  }
  s.translation[i] = Rational(1, 2);
  return s;
}

AffineMap compose(const AffineMap& g, const AffineMap& h) {
  if (g.dimension() != h.dimension() || g.translation.size() != h.translation.size()) {
    throw std::invalid_argument("compose: dimension mismatch");
  }
  AffineMap out = g;
  for (std::size_t j = 0; j < g.dimension(); ++j) {
    out.linear[j] = g.linear[j] * h.linear[j];
    out.translation[j] = g.linear[j] * h.translation[j] + g.translation[j];
  }
  return out;
}

Point apply_affine(const AffineMap& g, const Point& u) {
  if (u.size() != g.dimension()) throw std::invalid_argument("apply_affine: dimension mismatch");
  Point out(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) out[j] = g.linear[j] * u[j] + g.translation[j];
  return out;
}

bool verify_free_action(const BottMatrix& a) {
  const std::size_t n = a.size();
  if (n > 30) throw std::invalid_argument("verify_free_action: size above 30 is not supported");
  std::vector<AffineMap> generators;
  generators.reserve(n);
  for (std::size_t i = 0; i < n; ++i) generators.push_back(affine_generator(a, i));

  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t eps = 1; eps < count; ++eps) {
    AffineMap g = AffineMap::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      if ((eps >> i) & 1U) g = compose(g, generators[i]);
    }
    bool witnessed = false;
    for (std::size_t j = 0; j < n && !witnessed; ++j) {
      witnessed = g.linear[j] == 1 && !is_integral(g.translation[j]);
    }
    if (!witnessed) return false;
  }
  return true;
}

}  // namespace bott::geometry
