#include "mukaistab/lattice.hpp"

#include <numeric>
#include <sstream>

namespace mukaistab {

using checked::add;
using checked::mul;
using checked::sub;

SurfaceContext::SurfaceContext(Integer d) : d_(d) {
  if (d < 1) throw MathError("surface half-degree d must be >= 1, got " + std::to_string(d));
}

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
  return {add(a.r, b.r), add(a.n, b.n), add(a.s, b.s)};
}

MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) {
  return {sub(a.r, b.r), sub(a.n, b.n), sub(a.s, b.s)};
}

MukaiVector operator-(const MukaiVector& a) { return MukaiVector{} - a; }

MukaiVector operator*(Integer k, const MukaiVector& v) { return {mul(k, v.r), mul(k, v.n), mul(k, v.s)}; }

std::ostream& operator<<(std::ostream& os, const MukaiVector& v) {
  return os << '[' << v.r << ',' << v.n << ',' << v.s << ']';
}

std::string to_string(const MukaiVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::Spherical: return "SphericalClass";
    case ClassKind::SemiRigid: return "SemiRigidClass";
    case ClassKind::Positive: return "Positive";
    case ClassKind::Other: return "Other";
  }
  return "?";
}

Integer pairing(const MukaiVector& a, const MukaiVector& b, const SurfaceContext& ctx) {
  const Integer nn = mul(mul(2, ctx.d()), mul(a.n, b.n));
  return sub(sub(nn, mul(a.r, b.s)), mul(b.r, a.s));
}

Integer self_square(const MukaiVector& v, const SurfaceContext& ctx) { return pairing(v, v, ctx); }

Integer euler_chi(const MukaiVector& a, const MukaiVector& b, const SurfaceContext& ctx) {
  return checked::neg(pairing(a, b, ctx));
}

ClassKind classify(const MukaiVector& v, const SurfaceContext& ctx) {
  if (v.is_zero()) throw MathError("zero class");
  const Integer sq = self_square(v, ctx);
  if (sq == -2) return ClassKind::Spherical;
  if (sq == 0) return ClassKind::SemiRigid;
  if (sq > 0) return ClassKind::Positive;
  return ClassKind::Other;
}

bool is_spherical(const MukaiVector& v, const SurfaceContext& ctx) { return self_square(v, ctx) == -2; }

MukaiVector vector_line_bundle(Integer m, const SurfaceContext& ctx) {
  return {1, m, add(mul(ctx.d(), mul(m, m)), 1)};
}

MukaiVector vector_skyscraper() { return {0, 0, 1}; }

MukaiVector vector_structure_sheaf() { return {1, 0, 1}; }

MukaiVector spherical_twist(const MukaiVector& v, const MukaiVector& sph, const SurfaceContext& ctx) {
  if (!is_spherical(sph, ctx)) {
    throw MathError("twist centre " + to_string(sph) + " is not spherical (square " +
                    std::to_string(self_square(sph, ctx)) + ")");
  }
  return v + pairing(v, sph, ctx) * sph;
}

MukaiVector iterated_twist(const MukaiVector& v, const MukaiVector& sph, Integer k,
                           const SurfaceContext& ctx) {
  if (k < 1) throw MathError("twist power must be positive");
  MukaiVector out = v;
  for (Integer i = 0; i < k; ++i) out = spherical_twist(out, sph, ctx);
  return out;
}

Rational slope_mu(const MukaiVector& v) {
  if (v.r == 0) throw MathError("infinite slope");
  return make_rational(v.n, v.r);
}

bool gcd_mu_stable(const MukaiVector& v) {
  if (v.r <= 0) throw MathError("gcd criterion needs positive rank");
  return std::gcd(v.r, v.n) == 1;
}

HilbertCoefficients reduced_hilbert(const MukaiVector& v, const SurfaceContext& ctx) {
  if (v.r <= 0) throw MathError("reduced Hilbert polynomial needs positive rank");
  const Rational d(ctx.d());
  return {d, 2 * d * make_rational(v.n, v.r), make_rational(v.s, v.r) + 1};
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "Less";
    case Comparison::Equal: return "Equal";
    case Comparison::Greater: return "Greater";
  }
  return "?";
}

Comparison gieseker_compare(const MukaiVector& a, const MukaiVector& b, const SurfaceContext& ctx) {
  const auto pa = reduced_hilbert(a, ctx);
  const auto pb = reduced_hilbert(b, ctx);
  for (auto [x, y] : {std::pair{&pa.a2, &pb.a2}, std::pair{&pa.a1, &pb.a1}, std::pair{&pa.a0, &pb.a0}}) {
    if (*x < *y) return Comparison::Less;
    if (*x > *y) return Comparison::Greater;
  }
  return Comparison::Equal;
}

}  // namespace mukaistab
