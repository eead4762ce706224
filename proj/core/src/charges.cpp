#include "mukaistab/charges.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace mukaistab {

StabilityPoint::StabilityPoint(Rational x, Rational t) : x_(std::move(x)), t_(std::move(t)) {
  if (t_ <= 0) throw MathError("stability point needs t = y^2 > 0, got t = " + to_string(t_));
}

double CentralCharge::real_part() const { return to_double(re); }

double CentralCharge::imag_part() const {
  return 2.0 * static_cast<double>(d) * std::sqrt(to_double(t)) * to_double(lam);
}

std::string to_string(PhaseBucket b) {
  switch (b) {
    case PhaseBucket::AxisPos: return "AxisPos";
    case PhaseBucket::UpperHalf: return "UpperHalf";
    case PhaseBucket::AxisNeg: return "AxisNeg";
    case PhaseBucket::LowerHalf: return "LowerHalf";
  }
  return "?";
}

PhaseKey::PhaseKey(Integer shift, PhaseBucket bucket, std::optional<Rational> slope)
    : shift_(shift), bucket_(bucket), slope_(std::move(slope)) {
  const bool half = bucket == PhaseBucket::UpperHalf || bucket == PhaseBucket::LowerHalf;
  if (half != slope_.has_value()) {
    throw MathError(half ? "half-plane phase key needs a slope" : "axis phase key carries no slope");
  }
}

namespace {

// Folds a key onto [k, k+1): axis rays sit at k, open half-plane rays in (k, k+1).
struct FoldedPhase {
  Integer floor;
  int open;  // 0 on the real axis, 1 strictly inside a half-plane
};

FoldedPhase fold(const PhaseKey& key) {
  switch (key.bucket()) {
    case PhaseBucket::AxisPos: return {key.shift(), 0};
    case PhaseBucket::UpperHalf: return {key.shift(), 1};
    case PhaseBucket::AxisNeg: return {checked::add(key.shift(), 1), 0};
    case PhaseBucket::LowerHalf: return {checked::sub(key.shift(), 1), 1};
  }
  return {0, 0};
}

}  // namespace

std::strong_ordering operator<=>(const PhaseKey& a, const PhaseKey& b) {
  const FoldedPhase fa = fold(a);
  const FoldedPhase fb = fold(b);
  if (auto c = fa.floor <=> fb.floor; c != 0) return c;
  if (auto c = fa.open <=> fb.open; c != 0) return c;
  if (fa.open == 0) return std::strong_ordering::equal;
  const Rational& sa = *a.slope();
  const Rational& sb = *b.slope();
  if (sa < sb) return std::strong_ordering::less;
  if (sa > sb) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

CentralCharge central_charge(const MukaiVector& v, const StabilityPoint& pt, const SurfaceContext& ctx) {
  const Rational& x = pt.x();
  const Rational& t = pt.t();
  const Rational d(ctx.d());
  const Rational r(v.r), n(v.n), s(v.s);
  CentralCharge z;
  z.re = 2 * d * x * n - s - r * d * x * x + r * d * t;
  z.lam = n - r * x;
  z.d = ctx.d();
  z.t = t;
  return z;
}

CentralCharge central_charge_completed_square(const MukaiVector& v, const StabilityPoint& pt,
                                              const SurfaceContext& ctx) {
  if (v.r == 0) throw MathError("completed-square form needs nonzero rank");
  const Rational d(ctx.d());
  const Rational r(v.r);
  // (omega + i (n/r - x) L)^2 = 2d (t - u^2) + i * 2d * 2 y u with u = n/r - x.
  const Rational u = make_rational(v.n, v.r) - pt.x();
  CentralCharge z;
  z.re = Rational(self_square(v, ctx)) / (2 * r) + r / 2 * (2 * d) * (pt.t() - u * u);
  // Imaginary part (r/2) * 4 d y u = 2 d y (r u).
  z.lam = r * u;
  z.d = ctx.d();
  z.t = pt.t();
  return z;
}

PhaseKey phase_key(const CentralCharge& z) {
  if (z.is_zero()) throw MathError("zero central charge");
  if (z.lam > 0) return PhaseKey(0, PhaseBucket::UpperHalf, Rational(-z.re / z.lam));
  if (z.lam < 0) return PhaseKey(0, PhaseBucket::LowerHalf, Rational(-z.re / z.lam));
  return PhaseKey(0, z.re < 0 ? PhaseBucket::AxisNeg : PhaseBucket::AxisPos);
}

PhaseKey shift_phase(const PhaseKey& k, Integer m) {
  return PhaseKey(checked::add(k.shift(), m), k.bucket(), k.slope());
}

double approximate_phase(const CentralCharge& z) {
  return std::atan2(z.imag_part(), z.real_part()) / std::numbers::pi;
}

Rational n_func(const MukaiVector& a, const MukaiVector& e, const StabilityPoint& pt,
                const SurfaceContext& ctx) {
  const CentralCharge za = central_charge(a, pt, ctx);
  const CentralCharge ze = central_charge(e, pt, ctx);
  return ze.lam * za.re - za.lam * ze.re;
}

namespace {

// Denominator q of x when some positive-rank (-2)-class has lam = 0 at x.
std::optional<BigInt> real_spherical_denominator(const Rational& x, const SurfaceContext& ctx) {
  const BigInt p = numerator_of(x);
  const BigInt q = denominator_of(x);
  if ((BigInt(ctx.d()) * p * p + 1) % q != 0) return std::nullopt;
  return q;
}

// Pairing on rational triples, for the Gram computation.
Rational rational_pairing(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b,
                          const SurfaceContext& ctx) {
  return 2 * Rational(ctx.d()) * a[1] * b[1] - a[0] * b[2] - b[0] * a[2];
}

}  // namespace

std::optional<MukaiVector> real_spherical_class(const Rational& x, const SurfaceContext& ctx) {
  const auto q = real_spherical_denominator(x, ctx);
  if (!q) return std::nullopt;
  const BigInt p = numerator_of(x);
  const BigInt s = (BigInt(ctx.d()) * p * p + 1) / *q;
  return MukaiVector{to_integer(*q), to_integer(p), to_integer(s)};
}

bool in_V(const StabilityPoint& pt, const SurfaceContext& ctx) {
  const auto q = real_spherical_denominator(pt.x(), ctx);
  if (!q) return true;
  // re Z(delta) = -1/q + d q t <= 0  iff  t <= 1 / (d q^2)
  return pt.t() > Rational(BigInt(1), BigInt(ctx.d()) * *q * *q);
}

bool in_V_gt2(const StabilityPoint& pt, const SurfaceContext& ctx) {
  return pt.t() * ctx.d() > 1;
}

bool is_good(const StabilityPoint& pt, const SurfaceContext& ctx) {
  const auto q = real_spherical_denominator(pt.x(), ctx);
  if (!q) return true;
  return pt.t() != Rational(BigInt(1), BigInt(ctx.d()) * *q * *q);
}

std::array<Rational, 4> exp_gram_matrix(const StabilityPoint& pt, const SurfaceContext& ctx) {
  const Rational& x = pt.x();
  const Rational d(ctx.d());
  // exp(beta + i omega) = (1, x + iy, d (x + iy)^2)
  const std::array<Rational, 3> re_part{Rational(1), x, d * (x * x - pt.t())};
  const std::array<Rational, 3> im_over_y{Rational(0), Rational(1), 2 * d * x};
  const Rational rr = rational_pairing(re_part, re_part, ctx);
  const Rational ri = rational_pairing(re_part, im_over_y, ctx);  // times y
  const Rational ii = rational_pairing(im_over_y, im_over_y, ctx) * pt.t();
  return {rr, ri, ri, ii};
}

std::string to_string(HeartSide side) {
  return side == HeartSide::TorsionSide ? "TorsionSide" : "FreeSide";
}

HeartSide heart_side(const MukaiVector& v, const StabilityPoint& pt) {
  if (v.r < 0) throw MathError("heart side is defined for sheaves (rank >= 0)");
  if (v.r == 0) return HeartSide::TorsionSide;
  return slope_mu(v) > pt.x() ? HeartSide::TorsionSide : HeartSide::FreeSide;
}

std::vector<Plane> gl2_apply(const Gl2Matrix& g, std::span<const Plane> charges) {
  if (!(g.determinant() > 0)) throw MathError("orientation-reversing");
  std::vector<Plane> out;
  out.reserve(charges.size());
  for (const auto& [re, im] : charges) out.push_back({g.a * re + g.b * im, g.c * re + g.d * im});
  return out;
}

std::vector<std::size_t> cyclic_order(std::span<const Plane> points) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i][0] != 0.0 || points[i][1] != 0.0) idx.push_back(i);
  }
  std::vector<double> angle(points.size());
  for (auto i : idx) angle[i] = std::atan2(points[i][1], points[i][0]);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return angle[a] < angle[b]; });
  if (!idx.empty()) std::rotate(idx.begin(), std::min_element(idx.begin(), idx.end()), idx.end());
  return idx;
}

}  // namespace mukaistab
