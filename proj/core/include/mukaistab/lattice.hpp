#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "mukaistab/rational.hpp"

namespace mukaistab {

/// Generic K3 of degree L^2 = 2d with NS(X) = Z L. The half-degree d is the
/// only datum every pairing depends on.
class SurfaceContext {
 public:
  explicit SurfaceContext(Integer d);

  Integer d() const noexcept { return d_; }
  /// L^2
  Integer degree() const noexcept { return 2 * d_; }

  friend bool operator==(const SurfaceContext&, const SurfaceContext&) = default;

 private:
  Integer d_;
};

/// Class r + nL + s in the numerical lattice Z + ZL + Z.
struct MukaiVector {
  Integer r = 0;
  Integer n = 0;
  Integer s = 0;

  bool is_zero() const noexcept { return r == 0 && n == 0 && s == 0; }

  friend auto operator<=>(const MukaiVector&, const MukaiVector&) = default;
};

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator-(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator-(const MukaiVector& a);
MukaiVector operator*(Integer k, const MukaiVector& v);

std::ostream& operator<<(std::ostream& os, const MukaiVector& v);
std::string to_string(const MukaiVector& v);

enum class ClassKind { Spherical, SemiRigid, Positive, Other };

std::string to_string(ClassKind kind);

/// <a, b> = 2d n_a n_b - r_a s_b - r_b s_a
Integer pairing(const MukaiVector& a, const MukaiVector& b, const SurfaceContext& ctx);
Integer self_square(const MukaiVector& v, const SurfaceContext& ctx);

/// Riemann-Roch on a K3: chi(A, B) = -<v(A), v(B)>.
Integer euler_chi(const MukaiVector& a, const MukaiVector& b, const SurfaceContext& ctx);

/// Bucket by Mukai square: -2 spherical, 0 semi-rigid, > 0 positive, < -2 other.
/// Throws MathError on the zero class.
ClassKind classify(const MukaiVector& v, const SurfaceContext& ctx);

bool is_spherical(const MukaiVector& v, const SurfaceContext& ctx);

/// v(mL) = (1, m, d m^2 + 1)
MukaiVector vector_line_bundle(Integer m, const SurfaceContext& ctx);
/// v(O_x) = (0, 0, 1)
MukaiVector vector_skyscraper();
/// v(O_X) = (1, 0, 1)
MukaiVector vector_structure_sheaf();

/// v + <v, sph> sph. The centre must be a spherical class; the map is an
/// involutive isometry of the lattice.
MukaiVector spherical_twist(const MukaiVector& v, const MukaiVector& sph, const SurfaceContext& ctx);
MukaiVector iterated_twist(const MukaiVector& v, const MukaiVector& sph, Integer k,
                           const SurfaceContext& ctx);

/// n / r. The positive factor 2dy of the true slope is dropped; comparisons
/// against beta.omega become comparisons against x.
Rational slope_mu(const MukaiVector& v);

/// gcd(r, n) = 1, which forces mu-stability of a Gieseker-semistable sheaf at
/// Picard rank one. Requires r > 0.
bool gcd_mu_stable(const MukaiVector& v);

/// Reduced Hilbert polynomial p(E)(m) = a2 m^2 + a1 m + a0.
struct HilbertCoefficients {
  Rational a2;
  Rational a1;
  Rational a0;

  Rational evaluate(const Rational& m) const { return (a2 * m + a1) * m + a0; }

  friend bool operator==(const HilbertCoefficients&, const HilbertCoefficients&) = default;
};

HilbertCoefficients reduced_hilbert(const MukaiVector& v, const SurfaceContext& ctx);

enum class Comparison { Less, Equal, Greater };

std::string to_string(Comparison c);

/// Eventual comparison of reduced Hilbert polynomials (lexicographic on
/// coefficients from the top degree down).
Comparison gieseker_compare(const MukaiVector& a, const MukaiVector& b, const SurfaceContext& ctx);

}  // namespace mukaistab
