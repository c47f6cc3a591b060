#ifndef INDICATRIX_SCALAR_HPP
#define INDICATRIX_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace indicatrix {

/// Exact rational number, always kept in canonical reduced form by GMP.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Invalid arguments to an operation (bad arc length, parameter out of range).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed literal text. `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline double floor_of(double x) { return std::floor(x); }
inline Rational floor_of(const Rational& x) {
  Integer num = boost::multiprecision::numerator(x);
  Integer den = boost::multiprecision::denominator(x);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return Rational(q);
}

/// x mod 1, landing in [0,1).
inline double wrap01(double x) {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}
inline Rational wrap01(const Rational& x) { return x - floor_of(x); }

template <class T>
T abs_of(const T& x) {
  return x < T(0) ? T(-x) : x;
}

template <class T>
T min_of(const T& a, const T& b) {
  return b < a ? b : a;
}
template <class T>
T max_of(const T& a, const T& b) {
  return a < b ? b : a;
}

/// Parses `p/q` or `p` (optional leading sign). Decimal and exponent forms
/// are rejected. `offset` is added to error positions.
Rational parse_rational(std::string_view text, std::size_t offset = 0);

/// Canonical `p/q` text; integers print without a denominator.
std::string format_rational(const Rational& r);

/// Shortest decimal text that parses back to the same double.
std::string format_real(double x);

/// Rational approximation n/2^bits of a real (round to nearest).
Rational dyadic_approximation(double x, int bits = 52);

}  // namespace indicatrix

#endif  // INDICATRIX_SCALAR_HPP
