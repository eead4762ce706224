#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mukaistab/charges.hpp"
#include "mukaistab/lattice.hpp"

namespace mukaistab {

enum class StabilityVerdict { SigmaStable, NotApplicable };

enum class ScopeKind { SinglePoint, AllOfVgt2Side, AllOfUgt2 };

std::string to_string(StabilityVerdict v);
std::string to_string(ScopeKind s);

/// Conditional stability statement. Sheaf-level facts that cannot be read
/// off a Mukai vector (Gieseker stability, local freeness) are supplied by
/// the caller and listed in hypotheses_used next to the checked numerics.
struct StabilityCertificate {
  StabilityVerdict verdict = StabilityVerdict::NotApplicable;
  std::string reason;
  ScopeKind scope = ScopeKind::SinglePoint;
  std::optional<StabilityPoint> point;  // SinglePoint
  std::optional<HeartSide> side;        // AllOfVgt2Side
  std::vector<std::string> hypotheses_used;

  bool stable() const { return verdict == StabilityVerdict::SigmaStable; }
};

enum class SheafHypothesis { GiesekerStable, MuStableLocallyFree };

std::string to_string(SheafHypothesis h);

/// Semi-rigid torsion free E with r^2 <= d at a point of V(X)_{>2}: stable when
/// it is Gieseker stable with beta.omega < mu(E), or mu-stable locally free
/// with mu(E) <= beta.omega.
StabilityCertificate theorem47(const MukaiVector& v, const StabilityPoint& pt, const SurfaceContext& ctx,
                               SheafHypothesis hyp);

/// The same statement over the whole side of V(X)_{>2} selected by hyp.
StabilityCertificate theorem47_region(const MukaiVector& v, const SurfaceContext& ctx, SheafHypothesis hyp);

/// Spherical sheaf with r^2 <= d. Without a point the scope is U(X)_{>2}.
StabilityCertificate prop52(const MukaiVector& v, const std::optional<StabilityPoint>& pt,
                            const SurfaceContext& ctx);

/// mu-stable locally free semi-rigid sheaf with r^2 <= d, over U(X)_{>2}.
StabilityCertificate cor48(const MukaiVector& v, const SurfaceContext& ctx, bool locally_free);

struct ChiPositivity {
  Integer chi = 0;
  /// v(E)^2 <= 0, r_E > 0, v(A)^2 < 0 and r_A > 0 (A a sheaf).
  bool hypotheses_hold = false;
  bool positive = false;
};

ChiPositivity lemma54(const MukaiVector& a, const MukaiVector& e, const SurfaceContext& ctx);

/// (r, s) with r s = d, gcd(r, s) = 1, r <= s, ascending in r. Each pair
/// indexes the Fourier-Mukai partner M_L(r + L + s).
std::vector<std::pair<Integer, Integer>> fm_partners(const SurfaceContext& ctx);

enum class HNStatus { Unstable, Semistable, Stable };

std::string to_string(HNStatus s);

/// One factor vector[shift]^{multiplicity}; phase is the phase of a single
/// copy, already including the shift.
struct HNFactor {
  MukaiVector vector;
  Integer shift = 0;
  Integer multiplicity = 1;
  PhaseKey phase;
};

struct HNResult {
  HNStatus status = HNStatus::Stable;
  /// Mukai vector of the filtered object T_S^k(O_x).
  MukaiVector object;
  /// HN factors (Unstable), JH factors (Semistable) or the object itself
  /// (Stable), in filtration order.
  std::vector<HNFactor> factors;
};

/// Harder-Narasimhan data of T_S^k(O_x) at a point of V(X)_{>2} for a
/// spherical S of rank r, r^2 <= d. The case b < n/r needs r^4 <= d, as does
/// b = n/r with k > 1; otherwise MathError.
HNResult hn_twisted_skyscraper(const MukaiVector& sph, Integer k, const StabilityPoint& pt,
                               const SurfaceContext& ctx);

/// Membership in {sigma in V(X)_{>2} : beta.omega < mu(mL)}.
bool vm_membership(const StabilityPoint& pt, Integer m, const SurfaceContext& ctx);

}  // namespace mukaistab
