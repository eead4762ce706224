#include <gtest/gtest.h>

#include "mukaistab/walls.hpp"
#include "testkit.hpp"

namespace mukaistab {
namespace {

using testkit::Rng;

const MukaiVector kO{1, 0, 1};

TEST(WallBetween, DestabilizingCircleForDegreeFour) {
  const auto wall = wall_between(kO, {2, 1, 1}, SurfaceContext(2));
  EXPECT_EQ(wall.kind, WallKind::Circle);
  EXPECT_EQ(wall.w, 1);
  EXPECT_EQ(*wall.center_x, Rational(-1, 4));
  EXPECT_EQ(*wall.radius_sq, Rational(9, 16));
  // 2x^2 + x + 2t - 1
  EXPECT_EQ(wall.polynomial.quadratic, 2);
  EXPECT_EQ(wall.polynomial.linear, 1);
  EXPECT_EQ(wall.polynomial.constant, -1);
}

TEST(WallBetween, DegenerateCases) {
  EXPECT_EQ(wall_between({2, 1, 1}, {2, 1, 1}, SurfaceContext(2)).kind, WallKind::Everywhere);
  // (2,0,2) = 2 v(O_X) up to the s term, and re Z(E) = 2 re Z(A): N vanishes.
  const auto w0 = wall_between(kO, {2, 0, 2}, SurfaceContext(2));
  EXPECT_EQ(w0.w, 0);
  EXPECT_EQ(w0.kind, WallKind::Everywhere);
  // Equal slope, different constant: N is a nonzero multiple of lam.
  const auto line = wall_between(kO, {1, 0, 3}, SurfaceContext(2));
  EXPECT_EQ(line.w, 0);
  EXPECT_EQ(line.kind, WallKind::VerticalLine);
  EXPECT_EQ(*line.x0, 0);
  // Both charges real: lam_A = lam_E = 0.
  const auto empty = wall_between({0, 0, 1}, {0, 0, 2}, SurfaceContext(3));
  EXPECT_EQ(empty.kind, WallKind::Everywhere);
}

TEST(WallPolynomialTest, ExpandsN) {
  // Symbolic check of the cubic cancellation: the polynomial equals N at
  // enough points to pin down a cubic in x and a linear form in t.
  Rng rng(testkit::base_seed() + 31);
  for (int i = 0; i < 400; ++i) {
    const Integer d = rng.uniform(1, 25);
    const SurfaceContext ctx(d);
    const auto a = testkit::random_vector(rng, 15);
    const auto e = testkit::random_vector(rng, 15);
    const auto poly = wall_polynomial(a, e, ctx);
    ASSERT_EQ(poly.quadratic, d * (a.r * e.n - e.r * a.n));
    for (int j = 0; j < 6; ++j) {
      const StabilityPoint p(rng.rational(50, 11), Rational(rng.uniform(1, 80)) / rng.uniform(1, 19));
      ASSERT_EQ(poly.evaluate(p), n_func(a, e, p, ctx));
    }
  }
}

TEST(WallBetween, CircleIdentityAndSymmetry) {
  Rng rng(testkit::base_seed() + 32);
  int circles = 0;
  for (int i = 0; i < 600; ++i) {
    const Integer d = rng.uniform(1, 25);
    const SurfaceContext ctx(d);
    const auto a = testkit::random_vector(rng, 10);
    const auto e = testkit::random_vector(rng, 10);
    const auto wall = wall_between(a, e, ctx);
    const auto flipped = wall_between(e, a, ctx);
    ASSERT_EQ(flipped.w, -wall.w);
    ASSERT_EQ(flipped.kind, wall.kind);
    ASSERT_EQ(flipped.center_x, wall.center_x);
    ASSERT_EQ(flipped.radius_sq, wall.radius_sq);
    ASSERT_EQ(flipped.x0, wall.x0);
    if (wall.kind != WallKind::Circle) continue;
    ++circles;
    ASSERT_GT(*wall.radius_sq, 0);
    for (int j = 0; j < 100; ++j) {
      const StabilityPoint p(rng.rational(40, 13), Rational(rng.uniform(1, 60)) / rng.uniform(1, 17));
      const Rational dx = p.x() - *wall.center_x;
      const Rational closed = Rational(d * wall.w) * (dx * dx + p.t() - *wall.radius_sq);
      ASSERT_EQ(n_func(a, e, p, ctx), closed);
    }
  }
  EXPECT_GT(circles, 100);
}

TEST(PhaseInequalityOne, WorkedCertificates) {
  auto cert = lemma46_certify({2, 1, 2}, kO, SurfaceContext(4), LemmaCase::One);
  EXPECT_EQ(cert.verdict, VerdictKind::Certified) << cert.reason;
  for (const auto& c : cert.checks) EXPECT_TRUE(c.passed) << c.name;

  cert = lemma46_certify({2, 1, 1}, kO, SurfaceContext(2), LemmaCase::One);
  EXPECT_EQ(cert.verdict, VerdictKind::HypothesisFailed);
  EXPECT_EQ(cert.reason, "rank exceeds √d");

  cert = lemma46_certify({1, 0, 2}, kO, SurfaceContext(2), LemmaCase::One);
  EXPECT_EQ(cert.reason, "not semi-rigid");

  cert = lemma46_certify({2, 1, 2}, kO, SurfaceContext(4), LemmaCase::Two);
  EXPECT_EQ(cert.verdict, VerdictKind::HypothesisFailed);
  EXPECT_EQ(cert.reason, "slope order does not match case Two");

  cert = lemma46_certify({1, 0, 0}, kO, SurfaceContext(4), LemmaCase::One);
  EXPECT_EQ(cert.reason, "boundary: equal slopes");

  cert = lemma46_certify({2, 1, 2}, {1, 0, 2}, SurfaceContext(4), LemmaCase::One);
  EXPECT_EQ(cert.reason, "A not spherical");
}

TEST(PhaseInequalityTwo, WorkedCertificates) {
  auto cert = lemma51_certify({1, 1, 3}, kO, SurfaceContext(2), LemmaCase::One);
  EXPECT_EQ(cert.verdict, VerdictKind::Certified) << cert.reason;
  cert = lemma51_certify({2, 1, 1}, kO, SurfaceContext(2), LemmaCase::One);
  EXPECT_EQ(cert.verdict, VerdictKind::HypothesisFailed);
  EXPECT_EQ(cert.reason, "E not spherical");
  // Case Two needs n_E/r_E < n_A/r_A; here 1 > 0.
  cert = lemma51_certify({1, 1, 3}, kO, SurfaceContext(2), LemmaCase::Two);
  EXPECT_EQ(cert.verdict, VerdictKind::HypothesisFailed);
  cert = lemma51_certify({1, -1, 3}, kO, SurfaceContext(2), LemmaCase::Two);
  EXPECT_EQ(cert.verdict, VerdictKind::Certified) << cert.reason;
}

// Certified instances: both charges in the upper half plane with
// arg Z(A) < arg Z(E) in case One, the mirror in case Two.
TEST(PhaseInequalityOne, PhaseStatementOnSamples) {
  Rng rng(testkit::base_seed() + 33);
  for (int lemma = 0; lemma < 2; ++lemma) {
    for (int i = 0; i < 150; ++i) {
      const auto inst = testkit::random_lemma_instance(rng, lemma == 1);
      const SurfaceContext ctx(inst.d);
      const auto cert = lemma == 1 ? lemma51_certify(inst.e, inst.a, ctx, inst.which)
                                   : lemma46_certify(inst.e, inst.a, ctx, inst.which);
      ASSERT_TRUE(cert.certified()) << inst.e << " " << inst.a << " d=" << inst.d << ": " << cert.reason;
      for (int j = 0; j < 50; ++j) {
        const auto p = testkit::random_region_point(rng, inst);
        const PhaseKey ka = phase_key(central_charge(inst.a, p, ctx));
        const PhaseKey ke = phase_key(central_charge(inst.e, p, ctx));
        if (inst.which == LemmaCase::One) {
          ASSERT_EQ(ka.bucket(), PhaseBucket::UpperHalf);
          ASSERT_EQ(ke.bucket(), PhaseBucket::UpperHalf);
          ASSERT_LT(ka, ke);
        } else {
          ASSERT_EQ(ka.bucket(), PhaseBucket::LowerHalf);
          ASSERT_EQ(ke.bucket(), PhaseBucket::LowerHalf);
          ASSERT_LT(ke, ka);
        }
      }
    }
  }
}

TEST(PhaseInequalityOne, SamplesAreDeterministic) {
  const SurfaceContext ctx(9);
  const auto a = sample_lemma_region({1, 1, 10}, LemmaCase::One, ctx, 20, 5);
  const auto b = sample_lemma_region({1, 1, 10}, LemmaCase::One, ctx, 20, 5);
  EXPECT_EQ(a, b);
  for (const auto& p : a) {
    EXPECT_LT(p.x(), 1);
    EXPECT_GT(p.t(), Rational(1, 9));
  }
}

TEST(DestabilizingCircle, WorkedRegions) {
  auto reg = example53_wall({2, 1, 1}, SurfaceContext(2));
  EXPECT_EQ(reg.endpoints.first, Rational(-1, 2));
  EXPECT_EQ(reg.endpoints.second, 0);
  ASSERT_TRUE(reg.witness);
  EXPECT_EQ(reg.witness->x(), Rational(-1, 4));
  EXPECT_EQ(reg.witness->t(), Rational(17, 32));
  EXPECT_EQ(*reg.witness_value, Rational(-1, 16));

  reg = example53_wall({1, 1, 2}, SurfaceContext(2));
  EXPECT_EQ(reg.endpoints.first, 0);
  EXPECT_EQ(reg.endpoints.second, Rational(1, 2));
  EXPECT_FALSE(reg.witness);

  reg = example53_wall({3, 1, 2}, SurfaceContext(6));
  EXPECT_EQ(reg.endpoints.first, Rational(-1, 6));
  EXPECT_EQ(reg.endpoints.second, 0);
  EXPECT_TRUE(reg.witness);

  EXPECT_THROW(example53_wall({2, 1, 2}, SurfaceContext(2)), MathError);
  EXPECT_THROW(example53_wall({2, 3, 1}, SurfaceContext(2)), MathError);
}

TEST(DestabilizingCircle, EndpointsForEveryDivisor) {
  for (Integer d = 1; d <= 50; ++d) {
    const SurfaceContext ctx(d);
    for (Integer r = 1; r <= d; ++r) {
      if (d % r != 0) continue;
      const auto reg = example53_wall({r, 1, d / r}, ctx);
      const Rational alpha = Rational(d - r * r) / (r * d);
      ASSERT_EQ(reg.endpoints.first, std::min(alpha, Rational(0)));
      ASSERT_EQ(reg.endpoints.second, std::max(alpha, Rational(0)));
      ASSERT_EQ(reg.witness.has_value(), r * r > d) << d << " " << r;
      if (reg.witness) {
        ASSERT_LT(n_func(kO, {r, 1, d / r}, *reg.witness, ctx), 0);
        ASSERT_LT(reg.witness->x(), 0);
        ASSERT_TRUE(in_V_gt2(*reg.witness, ctx));
      }
    }
  }
}

TEST(DestabilizingTwist, WorkedValues) {
  auto tw = find_destabilizing_twist({2, 1, 1}, SurfaceContext(2));
  EXPECT_EQ(tw.m, 1);
  EXPECT_EQ(tw.twisted, (MukaiVector{-1, -2, -8}));
  tw = find_destabilizing_twist({0, 0, 1}, SurfaceContext(2));
  EXPECT_EQ(tw.m, 1);
  EXPECT_EQ(tw.twisted, (MukaiVector{-1, -1, -2}));
  tw = find_destabilizing_twist({1, 0, 1}, SurfaceContext(1));
  EXPECT_GE(tw.m, 1);
  EXPECT_NE(tw.twisted.r, 0);
  EXPECT_THROW(find_destabilizing_twist({1, 1, 1}, SurfaceContext(2)), MathError);
}

TEST(DestabilizingTwist, SmallestValidM) {
  Rng rng(testkit::base_seed() + 34);
  for (int i = 0; i < 500; ++i) {
    const Integer d = rng.uniform(1, 20);
    const SurfaceContext ctx(d);
    const auto e = rng.coin() ? testkit::random_semi_rigid(rng, d, 6, 6) : testkit::random_spherical(rng, d, 6, 6);
    const auto tw = find_destabilizing_twist(e, ctx);
    ASSERT_GT(Rational(tw.m), Rational(e.n) / e.r);
    ASSERT_EQ(tw.twisted, testkit::twist_oracle(e, vector_line_bundle(tw.m, ctx), d));
    ASSERT_NE(tw.twisted.r, 0);
    for (Integer m = tw.m - 1; Rational(m) > Rational(e.n) / e.r; --m) {
      ASSERT_EQ(testkit::twist_oracle(e, vector_line_bundle(m, ctx), d).r, 0);
    }
  }
}

}  // namespace
}  // namespace mukaistab
