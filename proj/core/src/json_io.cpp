#include "mukaistab/json_io.hpp"

#include <map>

namespace mukaistab {

namespace {

template <class Enum>
Enum enum_from(const Json& j, const std::map<std::string, Enum>& table, const char* what) {
  const auto text = j.get<std::string>();
  auto it = table.find(text);
  if (it == table.end()) throw MathError(std::string("unknown ") + what + ": '" + text + "'");
  return it->second;
}

const std::map<std::string, PhaseBucket> kBuckets{{"AxisPos", PhaseBucket::AxisPos},
                                                  {"UpperHalf", PhaseBucket::UpperHalf},
                                                  {"AxisNeg", PhaseBucket::AxisNeg},
                                                  {"LowerHalf", PhaseBucket::LowerHalf}};

const std::map<std::string, WallKind> kWallKinds{{"Circle", WallKind::Circle},
                                                 {"VerticalLine", WallKind::VerticalLine},
                                                 {"Empty", WallKind::Empty},
                                                 {"Everywhere", WallKind::Everywhere}};

const std::map<std::string, VerdictKind> kVerdicts{{"Certified", VerdictKind::Certified},
                                                   {"HypothesisFailed", VerdictKind::HypothesisFailed},
                                                   {"Refuted", VerdictKind::Refuted}};

const std::map<std::string, StabilityVerdict> kStabilityVerdicts{
    {"SigmaStable", StabilityVerdict::SigmaStable}, {"NotApplicable", StabilityVerdict::NotApplicable}};

const std::map<std::string, ScopeKind> kScopes{{"SinglePoint", ScopeKind::SinglePoint},
                                               {"AllOfVgt2Side", ScopeKind::AllOfVgt2Side},
                                               {"AllOfUgt2", ScopeKind::AllOfUgt2}};

const std::map<std::string, HeartSide> kSides{{"TorsionSide", HeartSide::TorsionSide},
                                              {"FreeSide", HeartSide::FreeSide}};

const std::map<std::string, HNStatus> kStatuses{
    {"Unstable", HNStatus::Unstable}, {"Semistable", HNStatus::Semistable}, {"Stable", HNStatus::Stable}};

std::optional<Rational> optional_rational(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return decode_rational(j.at(key));
}

}  // namespace

Json encode(const Rational& q) { return to_string(q); }

Json encode(const SurfaceContext& ctx) { return Json{{"d", ctx.d()}}; }

Json encode(const MukaiVector& v) { return Json::array({v.r, v.n, v.s}); }

Json encode(const StabilityPoint& pt) { return Json{{"x", encode(pt.x())}, {"t", encode(pt.t())}}; }

Json encode(const CentralCharge& z) {
  return Json{{"re", encode(z.re)}, {"lam", encode(z.lam)}, {"d", z.d}, {"t", encode(z.t)}};
}

Json encode(const PhaseKey& key) {
  Json j{{"shift", key.shift()}, {"bucket", to_string(key.bucket())}};
  j["slope"] = key.slope() ? encode(*key.slope()) : Json(nullptr);
  return j;
}

Json encode(const Wall& wall) {
  Json j{{"kind", to_string(wall.kind)}, {"w", wall.w}};
  j["center_x"] = wall.center_x ? encode(*wall.center_x) : Json(nullptr);
  j["radius_sq"] = wall.radius_sq ? encode(*wall.radius_sq) : Json(nullptr);
  if (wall.x0) j["x0"] = encode(*wall.x0);
  j["polynomial"] = Json{{"quadratic", wall.polynomial.quadratic},
                         {"linear", wall.polynomial.linear},
                         {"constant", wall.polynomial.constant}};
  return j;
}

Json encode(const Certificate& cert) {
  Json checks = Json::array();
  for (const auto& c : cert.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json j{{"verdict", to_string(cert.verdict)}, {"reason", cert.reason}, {"checks", checks}};
  j["witness"] = cert.witness ? encode(*cert.witness) : Json(nullptr);
  return j;
}

Json encode(const StabilityCertificate& cert) {
  Json j{{"verdict", to_string(cert.verdict)},
         {"reason", cert.reason},
         {"scope", to_string(cert.scope)},
         {"hypotheses_used", cert.hypotheses_used}};
  j["point"] = cert.point ? encode(*cert.point) : Json(nullptr);
  j["side"] = cert.side ? Json(to_string(*cert.side)) : Json(nullptr);
  return j;
}

Json encode(const HNResult& hn) {
  Json factors = Json::array();
  for (const auto& f : hn.factors) {
    factors.push_back({{"vector", encode(f.vector)},
                       {"shift", f.shift},
                       {"multiplicity", f.multiplicity},
                       {"phase", encode(f.phase)}});
  }
  return Json{{"status", to_string(hn.status)}, {"object", encode(hn.object)}, {"factors", factors}};
}

Json encode(const DestabilizingRegion& region) {
  Json j{{"circle", encode(region.circle)},
         {"endpoints", Json::array({encode(region.endpoints.first), encode(region.endpoints.second)})}};
  j["witness"] = region.witness ? encode(*region.witness) : Json(nullptr);
  j["witness_N"] = region.witness_value ? encode(*region.witness_value) : Json(nullptr);
  return j;
}

Json encode(const DestabilizingTwist& twist) {
  return Json{{"m", twist.m}, {"twisted", encode(twist.twisted)}};
}

Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<Integer>());
  if (!j.is_string()) throw MathError("rational must be a string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

SurfaceContext decode_surface(const Json& j) { return SurfaceContext(j.at("d").get<Integer>()); }

MukaiVector decode_vector(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw MathError("Mukai vector must be [r, n, s], got " + j.dump());
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw MathError("Mukai vector entries must be integers, got " + j.dump());
  }
  return {j[0].get<Integer>(), j[1].get<Integer>(), j[2].get<Integer>()};
}

StabilityPoint decode_point(const Json& j) { return {decode_rational(j.at("x")), decode_rational(j.at("t"))}; }

PhaseKey decode_phase(const Json& j) {
  return PhaseKey(j.at("shift").get<Integer>(), enum_from(j.at("bucket"), kBuckets, "phase bucket"),
                  optional_rational(j, "slope"));
}

Wall decode_wall(const Json& j) {
  Wall wall;
  wall.kind = enum_from(j.at("kind"), kWallKinds, "wall kind");
  wall.w = j.at("w").get<Integer>();
  wall.center_x = optional_rational(j, "center_x");
  wall.radius_sq = optional_rational(j, "radius_sq");
  wall.x0 = optional_rational(j, "x0");
  if (j.contains("polynomial")) {
    const auto& p = j.at("polynomial");
    wall.polynomial = {p.at("quadratic").get<Integer>(), p.at("linear").get<Integer>(),
                       p.at("constant").get<Integer>()};
  }
  return wall;
}

Certificate decode_certificate(const Json& j) {
  Certificate cert;
  cert.verdict = enum_from(j.at("verdict"), kVerdicts, "verdict");
  cert.reason = j.at("reason").get<std::string>();
  for (const auto& c : j.at("checks")) {
    cert.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                           c.at("detail").get<std::string>()});
  }
  if (j.contains("witness") && !j.at("witness").is_null()) cert.witness = decode_point(j.at("witness"));
  return cert;
}

StabilityCertificate decode_stability_certificate(const Json& j) {
  StabilityCertificate cert;
  cert.verdict = enum_from(j.at("verdict"), kStabilityVerdicts, "stability verdict");
  cert.reason = j.at("reason").get<std::string>();
  cert.scope = enum_from(j.at("scope"), kScopes, "scope");
  cert.hypotheses_used = j.at("hypotheses_used").get<std::vector<std::string>>();
  if (j.contains("point") && !j.at("point").is_null()) cert.point = decode_point(j.at("point"));
  if (j.contains("side") && !j.at("side").is_null()) cert.side = enum_from(j.at("side"), kSides, "heart side");
  return cert;
}

HNResult decode_hn(const Json& j) {
  HNResult hn;
  hn.status = enum_from(j.at("status"), kStatuses, "HN status");
  hn.object = decode_vector(j.at("object"));
  for (const auto& f : j.at("factors")) {
    hn.factors.push_back({decode_vector(f.at("vector")), f.at("shift").get<Integer>(),
                          f.at("multiplicity").get<Integer>(), decode_phase(f.at("phase"))});
  }
  return hn;
}

MukaiVector parse_vector(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw MathError("malformed Mukai vector: '" + std::string(text) + "'");
  }
  return decode_vector(j);
}

}  // namespace mukaistab
