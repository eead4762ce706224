#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mukaistab/lattice.hpp"
#include "mukaistab/rational.hpp"

namespace mukaistab {

/// (beta, omega) = (xL, yL) with t = y^2 > 0. Every decision below depends on
/// y only through t, apart from the positive factor 2dy in Im Z.
class StabilityPoint {
 public:
  StabilityPoint(Rational x, Rational t);

  const Rational& x() const noexcept { return x_; }
  const Rational& t() const noexcept { return t_; }

  friend bool operator==(const StabilityPoint&, const StabilityPoint&) = default;

 private:
  Rational x_;
  Rational t_;
};

/// Z = re + i * 2d * sqrt(t) * lam.
struct CentralCharge {
  Rational re;
  Rational lam;
  Integer d = 1;
  Rational t = 1;

  bool is_zero() const { return re == 0 && lam == 0; }
  double real_part() const;
  double imag_part() const;

  friend bool operator==(const CentralCharge&, const CentralCharge&) = default;
};

enum class PhaseBucket { AxisPos, UpperHalf, AxisNeg, LowerHalf };

std::string to_string(PhaseBucket b);

/// Exact surrogate for a real phase. Base phases live in (-1, 1]:
/// LowerHalf in (-1, 0), AxisPos = 0, UpperHalf in (0, 1), AxisNeg = 1; the
/// integer shift adds to it. Within a half-plane bucket the phase increases
/// with slope = -re / lam. Keys compare as the phases they stand for, so
/// e.g. a LowerHalf key shifted by one equals the UpperHalf key with the same
/// slope.
class PhaseKey {
 public:
  PhaseKey(Integer shift, PhaseBucket bucket, std::optional<Rational> slope = std::nullopt);

  Integer shift() const noexcept { return shift_; }
  PhaseBucket bucket() const noexcept { return bucket_; }
  const std::optional<Rational>& slope() const noexcept { return slope_; }

  friend std::strong_ordering operator<=>(const PhaseKey& a, const PhaseKey& b);
  friend bool operator==(const PhaseKey& a, const PhaseKey& b) { return (a <=> b) == 0; }

 private:
  Integer shift_;
  PhaseBucket bucket_;
  std::optional<Rational> slope_;
};

/// Evaluates <exp(beta + i omega), v>:
///   re  = 2d x n - s - r d x^2 + r d t
///   lam = n - r x
CentralCharge central_charge(const MukaiVector& v, const StabilityPoint& pt, const SurfaceContext& ctx);

/// The same charge through the completed-square form
/// v^2 / 2r + (r/2) (omega + i (Delta/r - beta))^2. Requires r != 0.
CentralCharge central_charge_completed_square(const MukaiVector& v, const StabilityPoint& pt,
                                              const SurfaceContext& ctx);

/// Throws MathError("zero central charge") on Z = 0.
PhaseKey phase_key(const CentralCharge& z);

/// Adds m to the phase (P(phi + m) = P(phi)[m]).
PhaseKey shift_phase(const PhaseKey& k, Integer m);

/// atan2-based phase in (-1, 1]; used only for cross-checks.
double approximate_phase(const CentralCharge& z);

/// N_{A,E} = lam_E Re Z(A) - lam_A Re Z(E). For lam_A, lam_E > 0:
/// N > 0 iff arg Z(A) < arg Z(E).
Rational n_func(const MukaiVector& a, const MukaiVector& e, const StabilityPoint& pt,
                const SurfaceContext& ctx);

/// The unique positive-rank (-2)-class with real central charge at x, if any:
/// x = p/q in lowest terms and q | d p^2 + 1 give delta = (q, p, (dp^2+1)/q).
std::optional<MukaiVector> real_spherical_class(const Rational& x, const SurfaceContext& ctx);

bool in_V(const StabilityPoint& pt, const SurfaceContext& ctx);
/// omega^2 = 2dt > 2
bool in_V_gt2(const StabilityPoint& pt, const SurfaceContext& ctx);
bool is_good(const StabilityPoint& pt, const SurfaceContext& ctx);

/// Gram matrix of (Re exp(beta + i omega), Im exp(beta + i omega)) under the
/// Mukai pairing. Entries involving Im carry a factor y per Im slot; since
/// every entry here has an even number of such slots the result is stated in
/// t. Used by the goodness test: the matrix is diag(2dt, 2dt).
std::array<Rational, 4> exp_gram_matrix(const StabilityPoint& pt, const SurfaceContext& ctx);

enum class HeartSide { TorsionSide, FreeSide };

std::string to_string(HeartSide side);

/// Which half of the tilted torsion pair a mu-semistable sheaf of class v
/// lies in. r = 0 means a torsion sheaf.
HeartSide heart_side(const MukaiVector& v, const StabilityPoint& pt);

// --- GL+(2, R) action on charge rays --------------------------------------

using Plane = std::array<double, 2>;

struct Gl2Matrix {
  double a = 1, b = 0;
  double c = 0, d = 1;

  double determinant() const { return a * d - b * c; }
};

/// Applies g to each (Re, Im) pair. Throws MathError("orientation-reversing")
/// unless det g > 0.
std::vector<Plane> gl2_apply(const Gl2Matrix& g, std::span<const Plane> charges);

/// Indices of the nonzero points sorted by angle, rotated so that the
/// smallest index comes first. Two point sets with the same result have the
/// same cyclic order around the origin.
std::vector<std::size_t> cyclic_order(std::span<const Plane> points);

}  // namespace mukaistab
