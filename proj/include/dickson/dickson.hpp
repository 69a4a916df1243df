#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "poly.hpp"
#include "roots.hpp"
#include "scalar.hpp"
#include "series.hpp"

namespace dickson {

/// Identifies D_{n,k}(x;a). k is any real; a must be positive.
template <class T>
struct DicksonParams {
  unsigned n = 0;
  T k = T(0);
  T a = T(1);

  DicksonParams() = default;
  DicksonParams(unsigned n_, T k_, T a_) : n(n_), k(std::move(k_)), a(std::move(a_)) {
    if (!(a > T(0))) throw DomainError("DicksonParams: a must be positive");
  }
};

inline DicksonParams<double> to_real(const DicksonParams<Rational>& p) {
  return {p.n, to_double(p.k), to_double(p.a)};
}

/// Coefficients from the weighted binomial sum; the constant 2-k for n = 0.
template <class T>
Poly<T> dickson_coeffs(const DicksonParams<T>& p) {
  if (p.n == 0) return Poly<T>::constant(T(2) - p.k);
  std::vector<T> c(p.n + 1, T(0));
  const T n(static_cast<int>(p.n));
  T minus_a_pow(1);
  for (unsigned j = 0; 2 * j <= p.n; ++j) {
    const T jj(static_cast<int>(j));
    c[p.n - 2 * j] = (n - p.k * jj) / (n - jj) * binomial<T>(p.n - j, j) * minus_a_pow;
    minus_a_pow *= -p.a;
  }
  return Poly<T>(std::move(c));
}

/// D_{m+2} = x D_{m+1} - a D_m from D_0 = 2-k, D_1 = x.
template <class T, class X>
X dickson_eval_recurrence(const DicksonParams<T>& p, const X& x) {
  X prev = X(T(2) - p.k);
  if (p.n == 0) return prev;
  X cur = x;
  const X a = X(p.a);
  for (unsigned m = 1; m < p.n; ++m) {
    X next = x * cur - a * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Even/odd expansions in powers of x^2.
template <class T, class X>
X dickson_eval_parity(const DicksonParams<T>& p, const X& x) {
  const unsigned m = p.n / 2;
  const T mm(static_cast<int>(m));
  const X x2 = x * x;
  std::vector<T> minus_a(m + 1, T(1));
  for (unsigned i = 1; i <= m; ++i) minus_a[i] = minus_a[i - 1] * (-p.a);

  if (p.n % 2 == 0) {
    X acc = X((T(2) - p.k) * minus_a[m]);
    X xp = X(T(1));
    for (unsigned j = 1; j <= m; ++j) {
      xp *= x2;
      const T jj(static_cast<int>(j));
      const T c = ((T(2) - p.k) * mm + p.k * jj) / (jj + mm) * binomial<T>(m + j, 2 * j) * minus_a[m - j];
      acc += X(c) * xp;
    }
    return acc;
  }
  X acc = X(T(0));
  X xp = X(T(1));
  for (unsigned j = 0; j <= m; ++j) {
    const T jj(static_cast<int>(j));
    const T c = ((T(2) - p.k) * mm + p.k * jj + T(1)) / (jj + mm + T(1)) * binomial<T>(m + j + 1, 2 * j + 1) *
                minus_a[m - j];
    acc += X(c) * xp;
    xp *= x2;
  }
  return x * acc;
}

/// Horner evaluation of dickson_coeffs.
template <class T, class X>
X dickson_eval_direct(const DicksonParams<T>& p, const X& x) {
  return dickson_coeffs(p)(x);
}

/// (sqrt a)^n (2-k) cos(n pi/2), with the cosine taken exactly.
template <class T>
T dickson_value_at_zero(const DicksonParams<T>& p) {
  if (p.n % 2 == 1) return T(0);
  T v = (T(2) - p.k) * ipow(p.a, p.n / 2);
  return (p.n / 2) % 2 == 0 ? v : T(-v);
}

/// Delta = sqrt(x^2 - 4a) on the principal branch, -pi/2 < arg <= pi/2.
struct DeltaBranch {
  Complex value;
  Complex source_x;
};

inline DeltaBranch delta_branch(Complex x, double a) { return {principal_sqrt(x * x - 4.0 * a), x}; }

/// Switch radius around x = +-2 sqrt(a) for the closed form.
inline double closed_form_boundary_tol(double a) { return 1e-8 * (1.0 + 2.0 * std::sqrt(a)); }

/// Closed form in the two roots (x +- Delta)/2 of R^2 - xR + a, Delta the
/// principal root of x^2 - 4a. At x = +-2 sqrt(a) the limit value
/// (kn + 2 - k)(+-sqrt a)^n is returned.
inline Complex dickson_eval_closed(const DicksonParams<double>& p, Complex x) {
  const double sa = std::sqrt(p.a);
  const double n = p.n;
  const double tol = closed_form_boundary_tol(p.a);
  if (std::abs(x - 2.0 * sa) < tol) return (p.k * n + 2.0 - p.k) * std::pow(sa, n);
  if (std::abs(x + 2.0 * sa) < tol) return (p.k * n + 2.0 - p.k) * ipow(-sa, p.n);

  const Complex delta = delta_branch(x, p.a).value;
  Complex rp = 0.5 * (x + delta);
  Complex rm = 0.5 * (x - delta);
  // rp * rm == a; take the smaller root from the larger one to avoid cancellation.
  if (std::abs(rp) >= std::abs(rm)) {
    rm = p.a / rp;
  } else {
    rp = p.a / rm;
  }
  const Complex c1 = 1.0 + p.k * rm / delta;
  const Complex c2 = 1.0 - p.k * rp / delta;
  return c1 * ipow(rp, p.n) + c2 * ipow(rm, p.n);
}

/// Throws DomainError if the terminating hypergeometric form is not
/// admissible for (n, k, x).
inline void check_hypergeometric_domain(const DicksonParams<double>& p, Complex x) {
  if (p.n == 0) return;
  if (x == Complex(0.0)) throw DomainError("hypergeometric form requires x != 0; use the parity expansion");
  if (p.k == 0.0) return;
  const double n = p.n;
  for (unsigned j = 1; 2 * j <= p.n; ++j) {
    if (std::abs(p.k * j - n) <= 1e-12 * n)
      throw DomainError("hypergeometric form degenerate: n/k = " + std::to_string(j) + " (lower parameter -n/k hits -" +
                        std::to_string(j - 1) + " before termination)");
  }
}

/// x^n times the terminating 3F2 (2F1 when k = 0) in 4a/x^2, summed by the
/// term-ratio recurrence.
inline Complex dickson_eval_hypergeometric(const DicksonParams<double>& p, Complex x) {
  if (p.n == 0) return {2.0 - p.k, 0.0};
  check_hypergeometric_domain(p, x);
  const double n = p.n;
  const Complex u = p.a / (x * x);
  // kj - n, computed identically for numerator and denominator use.
  auto shifted = [&](unsigned j) { return p.k * static_cast<double>(j) - n; };

  Complex term(1.0), sum(1.0);
  for (unsigned j = 0; 2 * (j + 1) <= p.n; ++j) {
    const double jd = j;
    double ratio;
    if (p.k != 0.0) {
      ratio = (2 * jd - n + 1) * (2 * jd - n) * shifted(j + 1) / ((jd - n + 1) * shifted(j) * (jd + 1));
    } else {
      ratio = 4.0 * (jd + (1 - n) / 2) * (jd - n / 2) / ((jd - n + 1) * (jd + 1));
    }
    term *= ratio * u;
    sum += term;
  }
  return ipow(x, p.n) * sum;
}

/// D_{n,k}(y + a/y) - [y^n + (a/y)^n + k (a y^n - y^2 (a/y)^n)/(y^2 - a)].
template <class T, class Y>
Y dickson_functional_equation_residual(const DicksonParams<T>& p, const Y& y) {
  const Y a = Y(p.a);
  if (y == Y(T(0))) throw DomainError("functional equation requires y != 0");
  if (y * y == a) throw DomainError("functional equation requires y^2 != a (use the limit form)");
  const Y ay = a / y;
  const Y yn = ipow(y, p.n);
  const Y ayn = ipow(ay, p.n);
  const Y rhs = yn + ayn + Y(p.k) * (a * yn - y * y * ayn) / (y * y - a);
  return dickson_eval_recurrence(p, Y(y + ay)) - rhs;
}

/// D_{n,k}(+-2 sqrt a) - (2 + (n-1)k)(+-sqrt a)^n, the y -> +-sqrt(a) limit.
inline double dickson_functional_limit_residual(const DicksonParams<double>& p, int sign) {
  const double s = sign >= 0 ? std::sqrt(p.a) : -std::sqrt(p.a);
  const double lhs = dickson_eval_recurrence(p, 2.0 * s);
  return lhs - (2.0 + (static_cast<double>(p.n) - 1.0) * p.k) * ipow(s, p.n);
}

/// D_{n,k+2} - 2 D_{n,k+1} + D_{n,k}; identically zero.
template <class T>
Poly<T> dickson_k_second_difference(unsigned n, const T& k, const T& a) {
  return dickson_coeffs(DicksonParams<T>{n, k + T(2), a}) - dickson_coeffs(DicksonParams<T>{n, k + T(1), a}) * T(2) +
         dickson_coeffs(DicksonParams<T>{n, k, a});
}

/// Residuals of the second-order ODE, the fourth-order ODE and the mixed
/// relation through D'_{n+1}, each identically zero.
template <class T>
std::array<Poly<T>, 3> dickson_ode_residuals(const DicksonParams<T>& p) {
  const Poly<T> d = dickson_coeffs(p);
  const Poly<T> d1 = d.derivative(1), d2 = d.derivative(2), d3 = d.derivative(3), d4 = d.derivative(4);
  const Poly<T> x = Poly<T>::x();
  const Poly<T> x2 = Poly<T>::monomial(T(1), 2);
  const T n(static_cast<int>(p.n));
  const T& k = p.k;
  const T& a = p.a;
  const Poly<T> q = x2 - Poly<T>::constant(T(4) * a);

  const Poly<T> second =
      q * (x2 * ((k - T(1)) * n) + Poly<T>::constant(a * (k - T(2)) * (k * n - T(2) * n - k))) * d2 +
      x * (x2 * ((k - T(1)) * n) + Poly<T>::constant(a * (T(6) * k + T(4) * n + T(3) * k * k * n - T(4) * k * n -
                                                          T(3) * k * k))) *
          d1 -
      (x2 * ((k - T(1)) * n * n * n) +
       Poly<T>::constant(a * n * (k * n - k - T(2) * n) * (k * n - T(2) * k - T(2) * n))) *
          d;

  const Poly<T> fourth = q * q * d4 + x * q * d3 * T(10) +
                         (x2 * (T(23) - T(2) * n * n) + Poly<T>::constant(T(8) * a * (n * n - T(4)))) * d2 -
                         x * d1 * (T(3) * (T(2) * n * n - T(3))) + d * (n * n * (n * n - T(4)));

  const Poly<T> next1 = dickson_coeffs(DicksonParams<T>{p.n + 1, k, a}).derivative();
  const Poly<T> mixed = q * d2 - next1 * (T(4) * n) + x * d1 * (T(2) * n + T(3)) + d * (n * (n + T(2)));

  return {second, fourth, mixed};
}

/// Series coefficients in z of (2 - k + (k-1) x z) / (a z^2 - x z + 1), each a
/// polynomial in x.
template <class T>
Series<Poly<T>> generating_function_series(const T& k, const T& a, unsigned count) {
  using P = Poly<T>;
  const Poly<P> numer{P::constant(T(2) - k), P::x() * (k - T(1))};
  const Poly<P> denom{P::constant(T(1)), -P::x(), P::constant(a)};
  return series_of_rational(numer, denom, count);
}

/// Radical formulas for 2 <= n <= 5, grouped with multiplicity.
inline std::vector<Root> dickson_zeros_closed(const DicksonParams<double>& p) {
  if (p.n < 2 || p.n > 5) throw DomainError("closed-form zeros exist only for 2 <= n <= 5");
  const Complex sa = std::sqrt(p.a);
  const double k = p.k;
  std::vector<Complex> raw;
  auto pair = [&raw](Complex r) {
    raw.push_back(r);
    raw.push_back(-r);
  };
  switch (p.n) {
    case 2: pair(sa * principal_sqrt(2.0 - k)); break;
    case 3:
      raw.push_back(0.0);
      pair(sa * principal_sqrt(3.0 - k));
      break;
    case 4: {
      const double s = std::sqrt((k - 2) * (k - 2) + 4);
      pair(sa / std::sqrt(2.0) * principal_sqrt(4.0 - k + s));
      pair(sa / std::sqrt(2.0) * principal_sqrt(4.0 - k - s));
      break;
    }
    case 5: {
      const double s = std::sqrt((k - 1) * (k - 1) + 4);
      raw.push_back(0.0);
      pair(sa / std::sqrt(2.0) * principal_sqrt(5.0 - k + s));
      pair(sa / std::sqrt(2.0) * principal_sqrt(5.0 - k - s));
      break;
    }
  }
  return cluster_roots(raw, 1e-6);
}

inline constexpr double kRootClusterRadius = 1e-6;

/// Numeric zeros: exact zero low-order coefficients give the root 0 with
/// its multiplicity, the remaining factor goes through Aberth-Ehrlich.
inline std::vector<Root> dickson_zeros_numeric(const DicksonParams<double>& p, const AberthOptions& opt = {}) {
  const Poly<double> c = dickson_coeffs(p);
  if (c.degree() < 1) return {};
  std::size_t zero_mult = 0;
  while (c[zero_mult] == 0.0) ++zero_mult;
  const Poly<Complex> rest = to_complex(c.shift_down(zero_mult));
  std::vector<Root> roots = cluster_roots(aberth_roots(rest, opt).roots, kRootClusterRadius);
  if (zero_mult > 0) roots.push_back({Complex(0.0), static_cast<unsigned>(zero_mult)});
  sort_roots(roots);
  return roots;
}

enum class ZeroMode { closed, numeric };

inline std::vector<Root> dickson_zeros(const DicksonParams<double>& p, ZeroMode mode) {
  return mode == ZeroMode::closed ? dickson_zeros_closed(p) : dickson_zeros_numeric(p);
}

}  // namespace dickson
