#include "mukaistab/rational.hpp"

#include <cctype>
#include <limits>

namespace mukaistab {

namespace checked {

Integer add(Integer a, Integer b) {
  Integer out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in add");
  return out;
}

Integer sub(Integer a, Integer b) {
  Integer out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in sub");
  return out;
}

Integer mul(Integer a, Integer b) {
  Integer out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in mul");
  return out;
}

Integer neg(Integer a) { return sub(0, a); }

}  // namespace checked

Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw MathError("zero denominator");
  // The two-argument constructor insists on a positive denominator.
  if (den < 0) return Rational(-BigInt(num), -BigInt(den));
  return Rational(BigInt(num), BigInt(den));
}

namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw MathError("malformed rational: '" + std::string(whole) + "'");
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw MathError("malformed rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(text.substr(0, slash), whole);
    BigInt den = parse_digits(text.substr(slash + 1), whole);
    if (den == 0) throw MathError("zero denominator: '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw MathError("malformed rational: '" + std::string(whole) + "'");
    }
    BigInt ip = int_part.empty() ? BigInt(0) : parse_digits(int_part, whole);
    BigInt fp = frac_part.empty() ? BigInt(0) : parse_digits(frac_part, whole);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    value = Rational(ip * scale + fp, scale);
  } else {
    value = Rational(parse_digits(text, whole));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.str(); }

int sign(const Rational& q) { return q.sign(); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }

BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

BigInt floor_of(const Rational& q) {
  const BigInt num = numerator_of(q);
  const BigInt den = denominator_of(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) quot -= 1;
  return quot;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const BigInt num = numerator_of(q);
  const BigInt den = denominator_of(q);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

Integer to_integer(const BigInt& z) {
  if (z > std::numeric_limits<Integer>::max() || z < std::numeric_limits<Integer>::min()) {
    throw std::overflow_error("integer out of 64-bit range");
  }
  return z.convert_to<Integer>();
}

}  // namespace mukaistab
