#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mukaistab {

/// Lattice coordinates. All arithmetic on them goes through the checked
/// helpers below so that overflow surfaces as an exception instead of
/// silently corrupting a certificate.
using Integer = std::int64_t;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Raised for domain violations (zero class, non-spherical twist centre,
/// points outside a required region, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace checked {

Integer add(Integer a, Integer b);
Integer sub(Integer a, Integer b);
Integer mul(Integer a, Integer b);
Integer neg(Integer a);

}  // namespace checked

Rational make_rational(Integer num, Integer den);

/// Accepts "p", "p/q" and plain decimals such as "-1.25"; decimals are
/// converted exactly (never through binary floating point).
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

int sign(const Rational& q);
double to_double(const Rational& q);
BigInt numerator_of(const Rational& q);
BigInt denominator_of(const Rational& q);

/// Largest integer <= q.
BigInt floor_of(const Rational& q);

/// Exact square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

Integer to_integer(const BigInt& z);

}  // namespace mukaistab
