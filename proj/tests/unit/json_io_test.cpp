#include <gtest/gtest.h>

#include "mukaistab/certify.hpp"
#include "mukaistab/json_io.hpp"
#include "testkit.hpp"

namespace mukaistab {
namespace {

using testkit::Rng;

TEST(Json, RationalsAreStrings) {
  EXPECT_EQ(encode(Rational(-3, 4)), Json("-3/4"));
  EXPECT_EQ(encode(Rational(5)), Json("5"));
  EXPECT_EQ(decode_rational(Json("6/8")), Rational(3, 4));
  EXPECT_EQ(decode_rational(Json(7)), Rational(7));
  EXPECT_THROW(decode_rational(Json("1/0")), MathError);
  EXPECT_THROW(decode_rational(Json(true)), MathError);
}

TEST(Json, ParseRationalAcceptsExactDecimals) {
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(parse_rational("+3/9"), Rational(1, 3));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  for (const char* bad : {"", "1/", "/2", "1.2.3", "abc", "1e3", "2/-3"}) {
    EXPECT_THROW(parse_rational(bad), MathError) << bad;
  }
}

TEST(Json, VectorsAndSurfaces) {
  EXPECT_EQ(encode(MukaiVector{2, -1, 3}).dump(), "[2,-1,3]");
  EXPECT_EQ(parse_vector("[2, -1, 3]"), (MukaiVector{2, -1, 3}));
  EXPECT_EQ(encode(SurfaceContext(6)).dump(), R"({"d":6})");
  EXPECT_EQ(decode_surface(Json::parse(R"({"d":6})")), SurfaceContext(6));
  for (const char* bad : {"[1,2]", "[1,2,3,4]", "[1,2,\"x\"]", "{}", "[1,2,3", "[1.5,0,0]"}) {
    EXPECT_THROW(parse_vector(bad), MathError) << bad;
  }
}

TEST(Json, PointAndPhaseRoundTrip) {
  const StabilityPoint p(Rational(-7, 3), Rational(2, 9));
  EXPECT_EQ(encode(p).dump(), R"({"t":"2/9","x":"-7/3"})");
  EXPECT_EQ(decode_point(encode(p)), p);
  for (const PhaseKey& k : {PhaseKey(0, PhaseBucket::AxisNeg), PhaseKey(-2, PhaseBucket::UpperHalf, Rational(5, 3)),
                            PhaseKey(1, PhaseBucket::LowerHalf, Rational(-1))}) {
    const PhaseKey back = decode_phase(encode(k));
    EXPECT_EQ(back.shift(), k.shift());
    EXPECT_EQ(back.bucket(), k.bucket());
    EXPECT_EQ(back.slope(), k.slope());
  }
}

TEST(Json, WallRoundTrip) {
  Rng rng(testkit::base_seed() + 51);
  for (int i = 0; i < 300; ++i) {
    const SurfaceContext ctx(rng.uniform(1, 20));
    const auto wall = wall_between(testkit::random_vector(rng, 6), testkit::random_vector(rng, 6), ctx);
    const Json j = encode(wall);
    const Wall back = decode_wall(Json::parse(j.dump()));
    ASSERT_EQ(back.kind, wall.kind);
    ASSERT_EQ(back.w, wall.w);
    ASSERT_EQ(back.center_x, wall.center_x);
    ASSERT_EQ(back.radius_sq, wall.radius_sq);
    ASSERT_EQ(back.x0, wall.x0);
    ASSERT_EQ(encode(back), j);
  }
  const Json circle = encode(wall_between({1, 0, 1}, {2, 1, 1}, SurfaceContext(2)));
  EXPECT_EQ(circle["kind"], "Circle");
  EXPECT_EQ(circle["center_x"], "-1/4");
  EXPECT_EQ(circle["radius_sq"], "9/16");
  EXPECT_EQ(circle["w"], 1);
}

TEST(Json, CertificatesRoundTrip) {
  const auto cert = lemma46_certify({2, 1, 2}, {1, 0, 1}, SurfaceContext(4), LemmaCase::One);
  const Json j = encode(cert);
  EXPECT_EQ(j["verdict"], "Certified");
  const auto back = decode_certificate(j);
  EXPECT_EQ(back.verdict, cert.verdict);
  EXPECT_EQ(back.checks.size(), cert.checks.size());
  EXPECT_EQ(encode(back), j);

  const auto st = theorem47({2, 1, 2}, StabilityPoint(-1, Rational(1, 2)), SurfaceContext(4),
                            SheafHypothesis::GiesekerStable);
  const Json sj = encode(st);
  EXPECT_EQ(sj["verdict"], "SigmaStable");
  EXPECT_EQ(sj["scope"], "SinglePoint");
  EXPECT_EQ(encode(decode_stability_certificate(sj)), sj);

  const auto region = cor48({2, 1, 2}, SurfaceContext(4), true);
  EXPECT_EQ(encode(decode_stability_certificate(encode(region))), encode(region));
}

TEST(Json, HNRoundTrip) {
  const auto hn = hn_twisted_skyscraper({1, 0, 1}, 3, StabilityPoint(1, 1), SurfaceContext(2));
  const Json j = encode(hn);
  EXPECT_EQ(j["status"], "Unstable");
  EXPECT_EQ(j["factors"].size(), 4u);
  const auto back = decode_hn(Json::parse(j.dump()));
  EXPECT_EQ(back.object, hn.object);
  EXPECT_EQ(encode(back), j);
}

}  // namespace
}  // namespace mukaistab
