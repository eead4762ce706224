#include "mukaistab/walls.hpp"

#include <random>

namespace mukaistab {

using checked::add;
using checked::mul;
using checked::sub;

Rational WallPolynomial::evaluate(const Rational& x, const Rational& t) const {
  return Rational(quadratic) * (x * x + t) + Rational(linear) * x + Rational(constant);
}

WallPolynomial wall_polynomial(const MukaiVector& a, const MukaiVector& e, const SurfaceContext& ctx) {
  const Integer w = sub(mul(a.r, e.n), mul(e.r, a.n));
  return {mul(ctx.d(), w), sub(mul(e.r, a.s), mul(a.r, e.s)), sub(mul(a.n, e.s), mul(e.n, a.s))};
}

std::string to_string(WallKind kind) {
  switch (kind) {
    case WallKind::Circle: return "Circle";
    case WallKind::VerticalLine: return "VerticalLine";
    case WallKind::Empty: return "Empty";
    case WallKind::Everywhere: return "Everywhere";
  }
  return "?";
}

Wall wall_between(const MukaiVector& a, const MukaiVector& e, const SurfaceContext& ctx) {
  Wall wall;
  wall.polynomial = wall_polynomial(a, e, ctx);
  wall.w = sub(mul(a.r, e.n), mul(e.r, a.n));
  const auto& p = wall.polynomial;

  if (wall.w != 0) {
    const Rational q(p.quadratic);
    const Rational center = Rational(-p.linear) / (2 * q);
    const Rational radius_sq = center * center - Rational(p.constant) / q;
    wall.center_x = center;
    wall.radius_sq = radius_sq;
    wall.kind = radius_sq > 0 ? WallKind::Circle : WallKind::Empty;
    return wall;
  }
  if (p.linear != 0) {
    wall.kind = WallKind::VerticalLine;
    wall.x0 = Rational(-p.constant) / Rational(p.linear);
  } else {
    wall.kind = p.constant == 0 ? WallKind::Everywhere : WallKind::Empty;
  }
  return wall;
}

std::string to_string(LemmaCase c) { return c == LemmaCase::One ? "One" : "Two"; }

std::string to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::Certified: return "Certified";
    case VerdictKind::HypothesisFailed: return "HypothesisFailed";
    case VerdictKind::Refuted: return "Refuted";
  }
  return "?";
}

std::vector<StabilityPoint> sample_lemma_region(const MukaiVector& a, LemmaCase which,
                                                const SurfaceContext& ctx, int count,
                                                std::uint64_t seed) {
  if (a.r <= 0) throw MathError("region sampling needs r_A > 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Integer> coarse_num(1, 400);
  std::uniform_int_distribution<Integer> coarse_den(1, 64);
  std::uniform_int_distribution<Integer> fine_den(1000, 1000000);
  std::bernoulli_distribution near_edge(0.25);

  auto positive_offset = [&] {
    if (near_edge(rng)) return make_rational(1, fine_den(rng));
    return make_rational(coarse_num(rng), coarse_den(rng));
  };

  const Rational anchor = make_rational(a.n, a.r);
  const Rational horizon = make_rational(1, ctx.d());
  std::vector<StabilityPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const Rational dx = positive_offset();
    const Rational x = which == LemmaCase::One ? Rational(anchor - dx) : Rational(anchor + dx);
    out.emplace_back(x, horizon + positive_offset());
  }
  return out;
}

namespace {

enum class Family { SemiRigid, Spherical };

class Replay {
 public:
  explicit Replay(Certificate& cert) : cert_(cert) {}

  // Records a hypothesis; returns false (and fixes the verdict) on failure.
  bool hypothesis(const std::string& name, bool ok, const std::string& reason, std::string detail = {}) {
    cert_.checks.push_back({name, ok, std::move(detail)});
    if (!ok) {
      cert_.verdict = VerdictKind::HypothesisFailed;
      cert_.reason = reason;
    }
    return ok;
  }

  // Records a proof step. A failing step means the argument does not go
  // through for this input, which is reported as a failed hypothesis.
  bool step(const std::string& name, bool ok, std::string detail) {
    return hypothesis(name, ok, "proof step failed: " + name, std::move(detail));
  }

 private:
  Certificate& cert_;
};

std::string show(const Rational& q) { return to_string(q); }

Certificate certify_pair(Family family, const MukaiVector& e, const MukaiVector& a,
                         const SurfaceContext& ctx, LemmaCase which, const SamplingOptions& opts) {
  Certificate cert;
  Replay replay(cert);
  const Integer d = ctx.d();

  // Hypotheses on E.
  const Integer e_sq = self_square(e, ctx);
  if (family == Family::SemiRigid) {
    if (!replay.hypothesis("E semi-rigid", e_sq == 0, "not semi-rigid", "v(E)^2 = " + std::to_string(e_sq)))
      return cert;
  } else {
    if (!replay.hypothesis("E spherical", e_sq == -2, "E not spherical", "v(E)^2 = " + std::to_string(e_sq)))
      return cert;
  }
  if (!replay.hypothesis("E positive rank", e.r > 0, "nonpositive rank", "r_E = " + std::to_string(e.r)))
    return cert;
  if (!replay.hypothesis("rank bound r_E^2 <= d", mul(e.r, e.r) <= d, "rank exceeds √d",
                         "r_E^2 = " + std::to_string(mul(e.r, e.r)) + ", d = " + std::to_string(d)))
    return cert;

  // Hypotheses on A.
  const Integer a_sq = self_square(a, ctx);
  if (!replay.hypothesis("A spherical", a_sq == -2, "A not spherical", "v(A)^2 = " + std::to_string(a_sq)))
    return cert;
  if (!replay.hypothesis("A positive rank", a.r > 0, "A has nonpositive rank", "r_A = " + std::to_string(a.r)))
    return cert;

  // Region: case One needs n_A/r_A < n_E/r_E (w > 0), case Two the reverse.
  const Wall wall = wall_between(a, e, ctx);
  const Integer w = wall.w;
  if (!replay.hypothesis("slopes distinct", w != 0, "boundary: equal slopes", "w = 0")) return cert;
  const int expected = which == LemmaCase::One ? 1 : -1;
  const int w_sign = w > 0 ? 1 : -1;
  if (!replay.hypothesis("slope order matches case", w_sign == expected,
                         "slope order does not match case " + to_string(which),
                         "w = r_A n_E - r_E n_A = " + std::to_string(w)))
    return cert;

  // (iikae) / (tofu): integer form of the inequality that places the circle
  // centre on the far side of n_A/r_A.
  const Integer gap = sub(mul(e.r, a.n), mul(a.r, e.n));  // = -w
  const Integer lhs = mul(d, mul(gap, gap));
  if (family == Family::SemiRigid) {
    if (!replay.step("(r_E n_A - r_A n_E)^2 / r_E^2 >= 1/d", lhs >= mul(e.r, e.r),
                     "d (r_E n_A - r_A n_E)^2 = " + std::to_string(lhs) + " vs r_E^2 = " +
                         std::to_string(mul(e.r, e.r))))
      return cert;
  } else {
    const Integer rhs = sub(mul(e.r, e.r), mul(a.r, a.r));
    if (!replay.step("(r_E n_A - r_A n_E)^2 > (r_E^2 - r_A^2)/d", lhs > rhs,
                     "d (r_E n_A - r_A n_E)^2 = " + std::to_string(lhs) + " vs r_E^2 - r_A^2 = " +
                         std::to_string(rhs)))
      return cert;
  }

  const Rational anchor = make_rational(a.n, a.r);
  const Rational& center = *wall.center_x;
  bool center_ok = false;
  if (family == Family::SemiRigid) {
    center_ok = which == LemmaCase::One ? anchor <= center : center <= anchor;
  } else {
    center_ok = which == LemmaCase::One ? anchor < center : center < anchor;
  }
  if (!replay.step("centre beyond n_A/r_A", center_ok,
                   "n_A/r_A = " + show(anchor) + ", centre = " + show(center)))
    return cert;

  const auto& poly = wall.polynomial;
  if (!replay.step("N strictly monotone in t", (poly.quadratic > 0 ? 1 : -1) == expected,
                   "dN/dt = d w = " + std::to_string(poly.quadratic)))
    return cert;
  // dN/dx = 2 d w (x - centre); on the region side of n_A/r_A the factor
  // (x - centre) has sign -expected, so N moves away from its edge value.
  if (!replay.step("N strictly monotone in x on the region", center_ok && poly.quadratic != 0,
                   "dN/dx = 2 d w (x - centre)"))
    return cert;

  // On the edge x = n_A/r_A we have lam_A = 0, so N = lam_E Re Z(A); check
  // the factorisation at two heights (N is affine in t).
  const Rational horizon = make_rational(1, d);
  const Rational lam_e_edge = Rational(e.n) - Rational(e.r) * anchor;
  auto re_za = [&](const Rational& t) { return Rational(-1) / a.r + Rational(d) * a.r * t; };
  const bool factor_ok = poly.evaluate(anchor, horizon) == lam_e_edge * re_za(horizon) &&
                         poly.evaluate(anchor, horizon + 1) == lam_e_edge * re_za(horizon + 1);
  if (!replay.step("edge value N(n_A/r_A, t) = lam_E Re Z(A)", factor_ok,
                   "lam_E = " + show(lam_e_edge)))
    return cert;

  const Rational corner = poly.evaluate(anchor, horizon);
  const bool corner_ok = which == LemmaCase::One ? corner >= 0 : corner <= 0;
  if (!replay.step("corner value N(n_A/r_A, 1/d)", corner_ok, "N = " + show(corner))) return cert;
  // Re Z(A) = -1/r_A + d r_A t > 0 once t > 1/d.
  if (!replay.step("Re Z(A) > 0 on the edge for t > 1/d", re_za(horizon) >= 0 && a.r > 0,
                   "Re Z(A)(1/d) = " + show(re_za(horizon))))
    return cert;

  // Independent exact spot checks of the conclusion.
  const auto points = sample_lemma_region(a, which, ctx, opts.samples, opts.seed);
  for (const auto& pt : points) {
    const Rational value = n_func(a, e, pt, ctx);
    if ((which == LemmaCase::One && value <= 0) || (which == LemmaCase::Two && value >= 0)) {
      cert.checks.push_back({"sampled interior sign", false,
                             "N(" + show(pt.x()) + ", " + show(pt.t()) + ") = " + show(value)});
      cert.verdict = VerdictKind::Refuted;
      cert.reason = "sampled point violates the claimed sign";
      cert.witness = pt;
      return cert;
    }
  }
  cert.checks.push_back({"sampled interior sign", true, std::to_string(points.size()) + " points"});
  cert.verdict = VerdictKind::Certified;
  return cert;
}

}  // namespace

Certificate lemma46_certify(const MukaiVector& e, const MukaiVector& a, const SurfaceContext& ctx,
                            LemmaCase which, const SamplingOptions& opts) {
  return certify_pair(Family::SemiRigid, e, a, ctx, which, opts);
}

Certificate lemma51_certify(const MukaiVector& e, const MukaiVector& a, const SurfaceContext& ctx,
                            LemmaCase which, const SamplingOptions& opts) {
  return certify_pair(Family::Spherical, e, a, ctx, which, opts);
}

DestabilizingRegion example53_wall(const MukaiVector& e, const SurfaceContext& ctx) {
  if (e.n != 1 || e.r <= 0 || mul(e.r, e.s) != ctx.d()) {
    throw MathError("destabilizing circle needs E = (r, 1, s) with r > 0 and r s = d, got " + to_string(e));
  }
  DestabilizingRegion out;
  out.circle = wall_between(vector_structure_sheaf(), e, ctx);
  const auto& p = out.circle.polynomial;

  // N(x, 1/d) = q x^2 + b x + (c + w) with q = d w.
  const Rational q(p.quadratic);
  const Rational b(p.linear);
  const Rational c = Rational(p.constant) + Rational(out.circle.w);
  const auto root = exact_sqrt(b * b - 4 * q * c);
  if (!root) throw MathError("horizon roots are not rational");
  Rational lo = (-b - *root) / (2 * q);
  Rational hi = (-b + *root) / (2 * q);
  if (hi < lo) std::swap(lo, hi);
  out.endpoints = {lo, hi};

  const Rational horizon = make_rational(1, ctx.d());
  if (out.circle.kind == WallKind::Circle && *out.circle.center_x < 0 && *out.circle.radius_sq > horizon) {
    // Midpoint between the horizon and the top of the circle, at the centre.
    StabilityPoint pt(*out.circle.center_x, (horizon + *out.circle.radius_sq) / 2);
    const Rational value = n_func(vector_structure_sheaf(), e, pt, ctx);
    if (value < 0 && pt.x() < 0 && in_V_gt2(pt, ctx)) {
      out.witness = pt;
      out.witness_value = value;
    }
  }
  return out;
}

DestabilizingTwist find_destabilizing_twist(const MukaiVector& e, const SurfaceContext& ctx) {
  if (e.is_zero()) throw MathError("zero class");
  if (e.r < 0) throw MathError("destabilizing twist needs r_E >= 0");
  if (self_square(e, ctx) > 0) throw MathError("destabilizing twist needs v(E)^2 <= 0");

  Integer m = e.r == 0 ? 1 : add(to_integer(floor_of(make_rational(e.n, e.r))), 1);
  // The twisted rank -r d m^2 + 2 d n m - s is a nonzero polynomial in m of
  // degree <= 2, so it vanishes for at most two consecutive candidates.
  for (int attempt = 0; attempt < 3; ++attempt, m = add(m, 1)) {
    const MukaiVector twisted = spherical_twist(e, vector_line_bundle(m, ctx), ctx);
    if (twisted.r != 0) return {m, twisted};
  }
  throw MathError("no destabilizing twist found for " + to_string(e));
}

}  // namespace mukaistab
