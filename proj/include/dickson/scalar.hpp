#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>

#include "errors.hpp"

namespace dickson {

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator, so equality is structural.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                              boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                            boost::multiprecision::et_off>;
using Complex = std::complex<double>;

enum class FieldTag { exact, real, complex };

template <class T>
constexpr FieldTag field_tag() {
  if constexpr (std::is_same_v<T, Rational>) {
    return FieldTag::exact;
  } else if constexpr (std::is_same_v<T, Complex>) {
    return FieldTag::complex;
  } else {
    return FieldTag::real;
  }
}

inline const char* to_string(FieldTag tag) {
  switch (tag) {
    case FieldTag::exact: return "exact";
    case FieldTag::real: return "real-double";
    case FieldTag::complex: return "complex-double";
  }
  return "?";
}

template <class T>
inline constexpr bool is_complex_v = std::is_same_v<T, Complex>;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

// Magnitude usable for tolerances in any of the three fields.
inline double magnitude(const Rational& q) { return std::abs(to_double(q)); }
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Complex& z) { return std::abs(z); }

namespace detail {
// Decimal digit string (optional sign) to BigInt; leading zeros would select
// octal in the BigInt string constructor.
inline BigInt parse_decimal_int(std::string s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("malformed number '" + s + "'");
  auto nz = s.find_first_not_of('0');
  BigInt v = nz == std::string::npos ? BigInt(0) : BigInt(s.substr(nz));
  return negative ? BigInt(-v) : v;
}
}  // namespace detail

/// Parses "p/q", "p" or a plain decimal like "-0.125" into an exact rational.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num = detail::parse_decimal_int(text.substr(0, slash));
    BigInt den = detail::parse_decimal_int(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  }
  if (text.find_first_of("eE") != std::string::npos)
    throw DomainError("exponent form is not exact: '" + text + "'");
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(detail::parse_decimal_int(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(text.size() - dot - 1));
  return Rational(detail::parse_decimal_int(digits), den);
}

inline std::string to_string(const Rational& q) {
  return q.str();
}

/// Principal square root with arg in (-pi/2, pi/2]; negative reals map to +i.
inline Complex principal_sqrt(Complex z) {
  if (z.imag() == 0.0) z = Complex(z.real(), 0.0);
  return std::sqrt(z);
}

template <class T>
T ipow(T base, unsigned e) {
  T result(1);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

/// Generalized binomial alpha(alpha-1)...(alpha-j+1)/j!.
template <class T>
T general_binomial(const T& alpha, unsigned j) {
  T result(1);
  for (unsigned i = 0; i < j; ++i) {
    result *= (alpha - T(static_cast<int>(i)));
    result /= T(static_cast<int>(i + 1));
  }
  return result;
}

inline Rational half_binomial(const Rational& alpha, unsigned j) {
  return general_binomial<Rational>(alpha, j);
}

/// Ordinary binomial C(n, j) as a value of T; zero when j > n.
template <class T>
T binomial(unsigned n, unsigned j) {
  if (j > n) return T(0);
  if (j > n - j) j = n - j;
  BigInt c = 1;
  for (unsigned i = 0; i < j; ++i) {
    c *= (n - i);
    c /= (i + 1);
  }
  if constexpr (std::is_same_v<T, Rational>) {
    return Rational(c);
  } else {
    return T(c.convert_to<double>());
  }
}

}  // namespace dickson
