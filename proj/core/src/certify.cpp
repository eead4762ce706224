#include "mukaistab/certify.hpp"

#include <numeric>
#include <stdexcept>

namespace mukaistab {

using checked::mul;

std::string to_string(StabilityVerdict v) {
  return v == StabilityVerdict::SigmaStable ? "SigmaStable" : "NotApplicable";
}

std::string to_string(ScopeKind s) {
  switch (s) {
    case ScopeKind::SinglePoint: return "SinglePoint";
    case ScopeKind::AllOfVgt2Side: return "AllOfVgt2Side";
    case ScopeKind::AllOfUgt2: return "AllOfUgt2";
  }
  return "?";
}

std::string to_string(SheafHypothesis h) {
  return h == SheafHypothesis::GiesekerStable ? "GiesekerStable" : "MuStableLocallyFree";
}

std::string to_string(HNStatus s) {
  switch (s) {
    case HNStatus::Unstable: return "Unstable";
    case HNStatus::Semistable: return "Semistable";
    case HNStatus::Stable: return "Stable";
  }
  return "?";
}

namespace {

StabilityCertificate not_applicable(StabilityCertificate cert, std::string reason) {
  cert.verdict = StabilityVerdict::NotApplicable;
  cert.reason = std::move(reason);
  return cert;
}

// Shared numerical gate: square, positive rank, r^2 <= d.
std::optional<std::string> rank_gate(const MukaiVector& v, const SurfaceContext& ctx, Integer square,
                                     StabilityCertificate& cert) {
  const Integer sq = self_square(v, ctx);
  if (sq != square) return square == 0 ? "not semi-rigid" : "not spherical";
  cert.hypotheses_used.push_back("v^2 = " + std::to_string(square));
  if (v.r <= 0) return "nonpositive rank";
  if (mul(v.r, v.r) > ctx.d()) return "rank exceeds √d";
  cert.hypotheses_used.push_back("0 < r, r^2 <= d");
  return std::nullopt;
}

}  // namespace

StabilityCertificate theorem47(const MukaiVector& v, const StabilityPoint& pt, const SurfaceContext& ctx,
                               SheafHypothesis hyp) {
  StabilityCertificate cert;
  cert.scope = ScopeKind::SinglePoint;
  cert.point = pt;
  if (v.is_zero()) return not_applicable(cert, "zero class");
  if (auto failure = rank_gate(v, ctx, 0, cert)) return not_applicable(cert, *failure);
  if (!in_V_gt2(pt, ctx)) return not_applicable(cert, "outside V(X)_{>2}");
  cert.hypotheses_used.push_back("(beta, omega) in V(X)_{>2}");

  const bool torsion_side = slope_mu(v) > pt.x();
  if (hyp == SheafHypothesis::GiesekerStable) {
    if (!torsion_side) return not_applicable(cert, "wrong heart side: βω ≥ μ_ω(E)");
    cert.hypotheses_used.push_back("beta.omega < mu(E)");
    cert.hypotheses_used.push_back("caller: E torsion free and Gieseker stable");
  } else {
    if (torsion_side) return not_applicable(cert, "wrong heart side: μ_ω(E) > βω");
    cert.hypotheses_used.push_back("mu(E) <= beta.omega");
    cert.hypotheses_used.push_back("caller: E mu-stable locally free");
  }
  cert.verdict = StabilityVerdict::SigmaStable;
  return cert;
}

StabilityCertificate theorem47_region(const MukaiVector& v, const SurfaceContext& ctx, SheafHypothesis hyp) {
  StabilityCertificate cert;
  cert.scope = ScopeKind::AllOfVgt2Side;
  cert.side = hyp == SheafHypothesis::GiesekerStable ? HeartSide::TorsionSide : HeartSide::FreeSide;
  if (v.is_zero()) return not_applicable(cert, "zero class");
  if (auto failure = rank_gate(v, ctx, 0, cert)) return not_applicable(cert, *failure);
  cert.hypotheses_used.push_back(hyp == SheafHypothesis::GiesekerStable
                                     ? "caller: E torsion free and Gieseker stable"
                                     : "caller: E mu-stable locally free");
  cert.verdict = StabilityVerdict::SigmaStable;
  return cert;
}

StabilityCertificate prop52(const MukaiVector& v, const std::optional<StabilityPoint>& pt,
                            const SurfaceContext& ctx) {
  StabilityCertificate cert;
  cert.scope = pt ? ScopeKind::SinglePoint : ScopeKind::AllOfUgt2;
  cert.point = pt;
  if (v.is_zero()) return not_applicable(cert, "zero class");
  if (auto failure = rank_gate(v, ctx, -2, cert)) return not_applicable(cert, *failure);
  // A spherical sheaf is automatically mu-stable and locally free, so no
  // caller flags are needed.
  cert.hypotheses_used.push_back("spherical sheaf => mu-stable locally free");
  if (pt) {
    if (!in_V_gt2(*pt, ctx)) return not_applicable(cert, "outside V(X)_{>2}");
    cert.hypotheses_used.push_back("(beta, omega) in V(X)_{>2}");
  } else {
    cert.hypotheses_used.push_back("GL+(2,R)-invariance extends V(X)_{>2} to U(X)_{>2}");
  }
  cert.verdict = StabilityVerdict::SigmaStable;
  return cert;
}

StabilityCertificate cor48(const MukaiVector& v, const SurfaceContext& ctx, bool locally_free) {
  StabilityCertificate cert;
  cert.scope = ScopeKind::AllOfUgt2;
  if (v.is_zero()) return not_applicable(cert, "zero class");
  if (auto failure = rank_gate(v, ctx, 0, cert)) return not_applicable(cert, *failure);
  if (!gcd_mu_stable(v)) return not_applicable(cert, "gcd(r,n) ≠ 1");
  cert.hypotheses_used.push_back("gcd(r, n) = 1 => mu-stable");
  if (!locally_free) return not_applicable(cert, "local freeness not asserted");
  cert.hypotheses_used.push_back("caller: E locally free");
  cert.hypotheses_used.push_back("GL+(2,R)-invariance extends V(X)_{>2} to U(X)_{>2}");
  cert.verdict = StabilityVerdict::SigmaStable;
  return cert;
}

ChiPositivity lemma54(const MukaiVector& a, const MukaiVector& e, const SurfaceContext& ctx) {
  ChiPositivity out;
  out.chi = euler_chi(a, e, ctx);
  // A must be a sheaf, so r_A >= 0; with v(A)^2 < 0 that forces r_A > 0.
  out.hypotheses_hold = self_square(e, ctx) <= 0 && e.r > 0 && self_square(a, ctx) < 0 && a.r > 0;
  out.positive = out.chi > 0;
  return out;
}

std::vector<std::pair<Integer, Integer>> fm_partners(const SurfaceContext& ctx) {
  const Integer d = ctx.d();
  std::vector<std::pair<Integer, Integer>> out;
  for (Integer r = 1; r <= d / r; ++r) {
    if (d % r != 0) continue;
    const Integer s = d / r;
    if (std::gcd(r, s) == 1) out.emplace_back(r, s);
  }
  return out;
}

namespace {

void check_filtration(const HNResult& hn) {
  for (std::size_t i = 1; i < hn.factors.size(); ++i) {
    const auto& prev = hn.factors[i - 1].phase;
    const auto& next = hn.factors[i].phase;
    const bool ok = hn.status == HNStatus::Semistable ? prev == next : prev > next;
    if (!ok) throw std::logic_error("filtration phases out of order");
  }
  MukaiVector total;
  for (const auto& f : hn.factors) {
    const Integer sign = (f.shift % 2 == 0) ? 1 : -1;
    total = total + mul(sign, f.multiplicity) * f.vector;
  }
  if (total != hn.object) throw std::logic_error("filtration does not add up to the object");
}

}  // namespace

HNResult hn_twisted_skyscraper(const MukaiVector& sph, Integer k, const StabilityPoint& pt,
                               const SurfaceContext& ctx) {
  if (!is_spherical(sph, ctx)) throw MathError("S must be spherical");
  if (sph.r <= 0) throw MathError("S must have positive rank");
  const Integer r = sph.r;
  if (mul(r, r) > ctx.d()) throw MathError("rank S exceeds √d");
  if (k < 1) throw MathError("twist power must be positive");
  if (!in_V_gt2(pt, ctx)) throw MathError("point outside V(X)_{>2}");

  const bool small_rank = mul(mul(r, r), mul(r, r)) <= ctx.d();  // r <= d^{1/4}
  const MukaiVector skyscraper = vector_skyscraper();
  const PhaseKey sph_phase = phase_key(central_charge(sph, pt, ctx));

  HNResult hn;
  hn.object = iterated_twist(skyscraper, sph, k, ctx);

  auto sph_factor = [&](Integer shift) {
    return HNFactor{sph, shift, r, shift_phase(sph_phase, shift)};
  };
  // S^{+r}[j] for j = from, from - 1, ..., 2 - k
  auto append_sph_run = [&](Integer from) {
    for (Integer j = from; j >= 2 - k; --j) hn.factors.push_back(sph_factor(j));
  };
  // T_S(O_x) = S~_x[1] with S~_x = ker(S^{+r} -> O_x) in the heart; its
  // phase is that of S~_x plus one.
  auto twisted_factor = [&] {
    const MukaiVector once = spherical_twist(skyscraper, sph, ctx);
    const PhaseKey kernel_phase = phase_key(central_charge(-once, pt, ctx));
    return HNFactor{once, 0, 1, shift_phase(kernel_phase, 1)};
  };

  const Rational mu = slope_mu(sph);
  const Rational& b = pt.x();
  if (b > mu) {
    hn.status = HNStatus::Unstable;
    hn.factors.push_back({skyscraper, 0, 1, phase_key(central_charge(skyscraper, pt, ctx))});
    append_sph_run(1);
  } else if (b == mu && k == 1) {
    hn.status = HNStatus::Semistable;
    hn.factors.push_back({skyscraper, 0, 1, phase_key(central_charge(skyscraper, pt, ctx))});
    hn.factors.push_back(sph_factor(1));
  } else {
    if (!small_rank) {
      throw MathError(b == mu ? "k > 1 at b = n/r needs rank S <= d^{1/4}"
                              : "b < n/r needs rank S <= d^{1/4}");
    }
    hn.factors.push_back(twisted_factor());
    if (k == 1) {
      hn.status = HNStatus::Stable;
    } else {
      hn.status = HNStatus::Unstable;
      append_sph_run(0);
    }
  }
  check_filtration(hn);
  return hn;
}

bool vm_membership(const StabilityPoint& pt, Integer m, const SurfaceContext& ctx) {
  return in_V_gt2(pt, ctx) && pt.x() < Rational(m);
}

}  // namespace mukaistab
