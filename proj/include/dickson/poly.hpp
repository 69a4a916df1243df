#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace dickson {

/// Dense univariate polynomial, coefficient i multiplies x^i.
///
/// The coefficient vector is trimmed of trailing exact zeros after every
/// operation, so the zero polynomial has no coefficients and two canonical
/// polynomials are equal iff their coefficient vectors are equal.
template <class T>
class Poly {
 public:
  using value_type = T;

  Poly() = default;
  explicit Poly(const T& c) : coeffs_{c} { trim(); }
  Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(T c) { return Poly(std::vector<T>{std::move(c)}); }
  static Poly monomial(T c, std::size_t degree) {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(T(1), 1); }

  static constexpr FieldTag field() { return field_tag<T>(); }

  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

  /// Horner evaluation; the argument may live in a larger field (double -> complex).
  template <class U>
  auto operator()(const U& x) const {
    using R = decltype(std::declval<T>() * std::declval<U>());
    R acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + R(*it);
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
  }

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator-(Poly p) {
    for (auto& v : p.coeffs_) v = -v;
    return p;
  }
  friend Poly operator*(Poly p, const T& c) { return p *= c; }
  friend Poly operator*(const T& c, Poly p) { return p *= c; }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<T> out(p.coeffs_.size() + q.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i] == T(0)) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  friend Poly operator/(Poly p, const T& c) {
    for (auto& v : p.coeffs_) v /= c;
    return p;
  }

  friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs_ == q.coeffs_; }
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  Poly derivative(unsigned order = 1) const {
    Poly p = *this;
    for (unsigned r = 0; r < order && !p.is_zero(); ++r) {
      std::vector<T> d;
      for (std::size_t i = 1; i < p.coeffs_.size(); ++i) d.push_back(p.coeffs_[i] * T(static_cast<int>(i)));
      p = Poly(std::move(d));
    }
    return p;
  }

  /// p(c x).
  Poly scaled_argument(const T& c) const {
    std::vector<T> out = coeffs_;
    T f(1);
    for (auto& v : out) {
      v *= f;
      f *= c;
    }
    return Poly(std::move(out));
  }

  /// Divides by x^m; the m lowest coefficients must be exactly zero.
  Poly shift_down(std::size_t m) const {
    if (m >= coeffs_.size()) return Poly();
    return Poly(std::vector<T>(coeffs_.begin() + static_cast<std::ptrdiff_t>(m), coeffs_.end()));
  }

  /// Coefficient-wise conversion into another field.
  template <class U, class F>
  Poly<U> map(F&& f) const {
    std::vector<U> out;
    out.reserve(coeffs_.size());
    for (const auto& v : coeffs_) out.push_back(f(v));
    return Poly<U>(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

enum class PolyOp { add, sub, mul, scale };

/// Ring operation dispatch. For `scale` the scalar is taken from the constant
/// polynomial q.
template <class T>
Poly<T> poly_arith(const Poly<T>& p, const Poly<T>& q, PolyOp op) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
    case PolyOp::scale:
      if (q.degree() > 0) throw DomainError("scale expects a constant polynomial");
      return p * q[0];
  }
  return Poly<T>();
}

template <class T, class U>
auto poly_eval(const Poly<T>& p, const U& x) {
  return p(x);
}

inline Poly<double> to_real(const Poly<Rational>& p) {
  return p.map<double>([](const Rational& q) { return to_double(q); });
}

inline Poly<Complex> to_complex(const Poly<double>& p) {
  return p.map<Complex>([](double v) { return Complex(v, 0.0); });
}

template <class T>
Poly<T> to_field(const Poly<Rational>& p) {
  if constexpr (std::is_same_v<T, Rational>) {
    return p;
  } else {
    return p.template map<T>([](const Rational& q) { return T(to_double(q)); });
  }
}

/// Sum |c_i| |x|^i: the magnitude scale of a Horner evaluation at x.
template <class T, class U>
double abs_eval(const Poly<T>& p, const U& x) {
  double ax = magnitude(x), acc = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * ax + magnitude(*it);
  return acc;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Poly<T>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == T(0)) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << p[i] << ")";
    if (i > 0) os << "x^" << i;
  }
  return os;
}

}  // namespace dickson
