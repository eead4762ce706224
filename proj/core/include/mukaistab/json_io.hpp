#pragma once

#include <nlohmann/json.hpp>

#include "mukaistab/certify.hpp"
#include "mukaistab/charges.hpp"
#include "mukaistab/lattice.hpp"
#include "mukaistab/walls.hpp"

// Wire formats. Rationals travel as strings ("p" or "p/q"); Mukai vectors as
// [r, n, s]; surfaces as {"d": d}. See docs/schemas.md.

namespace mukaistab {

using Json = nlohmann::json;

Json encode(const Rational& q);
Json encode(const SurfaceContext& ctx);
Json encode(const MukaiVector& v);
Json encode(const StabilityPoint& pt);
Json encode(const CentralCharge& z);
Json encode(const PhaseKey& key);
Json encode(const Wall& wall);
Json encode(const Certificate& cert);
Json encode(const StabilityCertificate& cert);
Json encode(const HNResult& hn);
Json encode(const DestabilizingRegion& region);
Json encode(const DestabilizingTwist& twist);

Rational decode_rational(const Json& j);
SurfaceContext decode_surface(const Json& j);
MukaiVector decode_vector(const Json& j);
StabilityPoint decode_point(const Json& j);
PhaseKey decode_phase(const Json& j);
Wall decode_wall(const Json& j);
Certificate decode_certificate(const Json& j);
StabilityCertificate decode_stability_certificate(const Json& j);
HNResult decode_hn(const Json& j);

/// Parses "[r,n,s]" (whitespace tolerant).
MukaiVector parse_vector(std::string_view text);

}  // namespace mukaistab
