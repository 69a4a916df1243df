#pragma once

#include <cstddef>
#include <vector>

#include "poly.hpp"

namespace dickson {

/// Power series truncated at a fixed order: coeffs.size() == order.
template <class T>
struct Series {
  std::vector<T> coeffs;

  Series() = default;
  explicit Series(std::size_t order) : coeffs(order, T(0)) {}
  Series(const Poly<T>& p, std::size_t order) : coeffs(order, T(0)) {
    for (std::size_t i = 0; i < order && i < p.size(); ++i) coeffs[i] = p[i];
  }

  std::size_t order() const noexcept { return coeffs.size(); }
  const T& operator[](std::size_t j) const { return coeffs[j]; }
  T& operator[](std::size_t j) { return coeffs[j]; }

  friend Series operator+(Series s, const Series& t) {
    for (std::size_t i = 0; i < s.order() && i < t.order(); ++i) s[i] += t[i];
    s.coeffs.resize(std::min(s.order(), t.order()));
    return s;
  }
  friend Series operator*(const Series& s, const Series& t) {
    Series out(std::min(s.order(), t.order()));
    for (std::size_t i = 0; i < out.order(); ++i)
      for (std::size_t j = 0; i + j < out.order(); ++j) out[i + j] += s[i] * t[j];
    return out;
  }
  friend Series operator*(Series s, const T& c) {
    for (auto& v : s.coeffs) v *= c;
    return s;
  }
  friend bool operator==(const Series& s, const Series& t) { return s.coeffs == t.coeffs; }
};

namespace detail {
template <class T>
T divide_by_unit(const T& x, const T& d) {
  return x / d;
}
// Polynomial coefficients (series in z with coefficients in x): the constant
// term of the denominator must be a nonzero constant.
template <class T>
Poly<T> divide_by_unit(const Poly<T>& x, const Poly<T>& d) {
  if (d.degree() != 0) throw DomainError("series_of_rational: constant term must be a unit");
  return x / d[0];
}
template <class T>
bool is_zero_scalar(const T& x) {
  return x == T(0);
}
template <class T>
bool is_zero_scalar(const Poly<T>& x) {
  return x.is_zero();
}
}  // namespace detail

/// Expansion of numer/denom around 0 up to `order` terms, via the linear
/// recurrence c_j = (numer_j - sum_{i>=1} denom_i c_{j-i}) / denom_0.
template <class T>
Series<T> series_of_rational(const Poly<T>& numer, const Poly<T>& denom, std::size_t order) {
  if (detail::is_zero_scalar(denom[0])) throw DomainError("series_of_rational: denominator has zero constant term");
  Series<T> out(order);
  const T d0 = denom[0];
  for (std::size_t j = 0; j < order; ++j) {
    T acc = numer[j];
    for (std::size_t i = 1; i <= j && i < denom.size(); ++i) acc -= denom[i] * out[j - i];
    out[j] = detail::divide_by_unit(acc, d0);
  }
  return out;
}

/// Binomial series of (1 + c u)^alpha.
template <class T>
Series<T> binomial_series(const T& alpha, const T& c, std::size_t order) {
  Series<T> out(order);
  T term(1);
  for (std::size_t j = 0; j < order; ++j) {
    out[j] = term;
    term *= (alpha - T(static_cast<int>(j))) * c / T(static_cast<int>(j + 1));
  }
  return out;
}

}  // namespace dickson
