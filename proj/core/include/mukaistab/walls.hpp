#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mukaistab/charges.hpp"
#include "mukaistab/lattice.hpp"

namespace mukaistab {

/// N_{A,E}(x, t) written out as quadratic * (x^2 + t) + linear * x + constant.
/// The cubic terms of the raw product cancel and the x^2 and t coefficients
/// coincide, both equal to d * w with w = r_A n_E - r_E n_A.
struct WallPolynomial {
  Integer quadratic = 0;
  Integer linear = 0;
  Integer constant = 0;

  Rational evaluate(const Rational& x, const Rational& t) const;
  Rational evaluate(const StabilityPoint& pt) const { return evaluate(pt.x(), pt.t()); }
};

WallPolynomial wall_polynomial(const MukaiVector& a, const MukaiVector& e, const SurfaceContext& ctx);

enum class WallKind { Circle, VerticalLine, Empty, Everywhere };

std::string to_string(WallKind kind);

/// Zero locus of N_{A,E} in the upper half-plane y > 0.
///   Circle:       (x - center_x)^2 + y^2 = radius_sq, radius_sq > 0
///   VerticalLine: x = x0
///   Empty:        no zeros with y > 0 (center/radius kept when w != 0)
///   Everywhere:   N vanishes identically
struct Wall {
  WallKind kind = WallKind::Empty;
  Integer w = 0;
  std::optional<Rational> center_x;
  std::optional<Rational> radius_sq;
  std::optional<Rational> x0;
  WallPolynomial polynomial;
};

Wall wall_between(const MukaiVector& a, const MukaiVector& e, const SurfaceContext& ctx);

// --- certificates -----------------------------------------------------------

enum class LemmaCase { One, Two };

std::string to_string(LemmaCase c);

enum class VerdictKind { Certified, HypothesisFailed, Refuted };

std::string to_string(VerdictKind v);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Transcript of a proof replay. Checks are appended in proof order; the
/// first failing one explains a non-Certified verdict.
struct Certificate {
  VerdictKind verdict = VerdictKind::HypothesisFailed;
  std::string reason;
  std::optional<StabilityPoint> witness;
  std::vector<CheckResult> checks;

  bool certified() const { return verdict == VerdictKind::Certified; }
};

struct SamplingOptions {
  std::uint64_t seed = 20240531;
  int samples = 50;
};

/// Random exact points of the open region the lemma quantifies over:
/// t > 1/d and x < n_A/r_A (case One) or x > n_A/r_A (case Two).
std::vector<StabilityPoint> sample_lemma_region(const MukaiVector& a, LemmaCase which,
                                                const SurfaceContext& ctx, int count,
                                                std::uint64_t seed);

/// Semi-rigid E (v^2 = 0, 0 < r_E <= sqrt d) against spherical A. Certified
/// means N_{A,E} > 0 on the whole case-One region {x < n_A/r_A < n_E/r_E,
/// t > 1/d} (resp. N < 0 on the mirrored case-Two region), i.e.
/// 0 < arg Z(A) < arg Z(E) < 1 (resp. -1 < arg Z(E) < arg Z(A) < 0).
Certificate lemma46_certify(const MukaiVector& e, const MukaiVector& a, const SurfaceContext& ctx,
                            LemmaCase which, const SamplingOptions& opts = {});

/// Same shape with both classes spherical and r_E <= sqrt d.
Certificate lemma51_certify(const MukaiVector& e, const MukaiVector& a, const SurfaceContext& ctx,
                            LemmaCase which, const SamplingOptions& opts = {});

// --- the destabilizing circle for O_X against E = (r, 1, s), rs = d ---------

struct DestabilizingRegion {
  Wall circle;
  /// Roots of N(x, 1/d) = 0, ascending.
  std::pair<Rational, Rational> endpoints;
  /// Point with x < 0, t > 1/d and N < 0, when one exists.
  std::optional<StabilityPoint> witness;
  std::optional<Rational> witness_value;
};

DestabilizingRegion example53_wall(const MukaiVector& e, const SurfaceContext& ctx);

struct DestabilizingTwist {
  Integer m = 0;
  MukaiVector twisted;
};

/// Smallest m > n_E/r_E whose line-bundle twist of E has nonzero rank. For a
/// torsion class (r_E = 0) the search starts at m = 1.
DestabilizingTwist find_destabilizing_twist(const MukaiVector& e, const SurfaceContext& ctx);

}  // namespace mukaistab
