#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "chebyshev.hpp"
#include "moments.hpp"
#include "quadrature.hpp"
#include "scalar.hpp"
#include "series.hpp"

namespace dickson {

namespace detail {

inline void check_cut(Complex z, double half_width, const char* who) {
  if (z.imag() == 0.0 && std::abs(z.real()) <= half_width)
    throw DomainError(std::string(who) + ": z lies on the cut [-" + std::to_string(half_width) + ", " +
                      std::to_string(half_width) + "]");
}

inline void check_pole(Complex denom, double scale, const char* who) {
  if (std::abs(denom) <= 1e-14 * scale) throw DomainError(std::string(who) + ": z hits a pole");
}

// 1 - sqrt(1 - w), evaluated as w / (1 + sqrt(1 - w)) to avoid cancellation
// for small w; the principal root keeps |1 + sqrt| >= 1.
inline Complex one_minus_root(Complex w) { return w / (1.0 + principal_sqrt(1.0 - w)); }

}  // namespace detail

/// S_U(z) = 2z(1 - sqrt(1 - z^-2)).
inline Complex stieltjes_U(Complex z) {
  detail::check_cut(z, 1.0, "stieltjes_U");
  return 2.0 * z * detail::one_minus_root(1.0 / (z * z));
}

/// S(z;k,a) = (z / (2(2-k))) [(k-2) sqrt(1 - 4a z^-2) + k] / [(k-1) z^2 + (k-2)^2 a].
inline Complex stieltjes_dickson(Complex z, double k, double a) {
  if (k == 2.0) throw DomainError("stieltjes_dickson: k = 2 has no Stieltjes transform (L[1] undefined)");
  if (!(a > 0.0)) throw DomainError("stieltjes_dickson: a must be positive");
  detail::check_cut(z, 2.0 * std::sqrt(a), "stieltjes_dickson");
  const Complex z2 = z * z;
  const Complex denom = (k - 1.0) * z2 + (k - 2.0) * (k - 2.0) * a;
  detail::check_pole(denom, std::abs(k - 1.0) * std::norm(z) + (k - 2.0) * (k - 2.0) * a, "stieltjes_dickson");
  // (k-2) sqrt(1-w) + k = 2(k-1) - (k-2)(1 - sqrt(1-w))
  const Complex bracket = 2.0 * (k - 1.0) - (k - 2.0) * detail::one_minus_root(4.0 * a / z2);
  return z / (2.0 * (2.0 - k)) * bracket / denom;
}

/// s(z;k) = (2z/(2-k)) [(k-2) sqrt(1 - z^-2) + k] / [4(k-1) z^2 + (k-2)^2].
inline Complex stieltjes_scaled_dickson(Complex z, double k) {
  if (k == 2.0) throw DomainError("stieltjes_scaled_dickson: k = 2 has no Stieltjes transform");
  detail::check_cut(z, 1.0, "stieltjes_scaled_dickson");
  const Complex z2 = z * z;
  const Complex denom = 4.0 * (k - 1.0) * z2 + (k - 2.0) * (k - 2.0);
  detail::check_pole(denom, 4.0 * std::abs(k - 1.0) * std::norm(z) + (k - 2.0) * (k - 2.0),
                     "stieltjes_scaled_dickson");
  const Complex bracket = 2.0 * (k - 1.0) - (k - 2.0) * detail::one_minus_root(1.0 / z2);
  return 2.0 * z / (2.0 - k) * bracket / denom;
}

enum class TransformKind { uvarov, christoffel, geronimus };

inline const char* to_string(TransformKind t) {
  switch (t) {
    case TransformKind::uvarov: return "uvarov";
    case TransformKind::christoffel: return "christoffel";
    case TransformKind::geronimus: return "geronimus";
  }
  return "?";
}

struct TransformStep {
  TransformKind kind = TransformKind::uvarov;
  double omega = 0.0;
  double mass = 0.0;  // unused by christoffel
  double lambda = 1.0;

  static TransformStep uvarov(double omega, double mass, double lambda = 1.0) {
    return {TransformKind::uvarov, omega, mass, lambda};
  }
  static TransformStep christoffel(double omega, double lambda = 1.0) {
    return {TransformKind::christoffel, omega, 0.0, lambda};
  }
  static TransformStep geronimus(double omega, double mass, double lambda = 1.0) {
    return {TransformKind::geronimus, omega, mass, lambda};
  }
};

enum class StieltjesKind { chebyshev_u, scaled_dickson, dickson, transformed };

/// A Stieltjes transform together with moment access: one of the closed
/// forms, optionally followed by a chain of spectral transformations.
class StieltjesFn {
 public:
  static StieltjesFn chebyshev_u() { return StieltjesFn(StieltjesKind::chebyshev_u, 1.0, 0.25); }
  static StieltjesFn scaled_dickson(double k) { return StieltjesFn(StieltjesKind::scaled_dickson, k, 0.25); }
  static StieltjesFn dickson(double k, double a) { return StieltjesFn(StieltjesKind::dickson, k, a); }

  StieltjesKind kind() const { return chain_.empty() ? base_ : StieltjesKind::transformed; }
  StieltjesKind base_kind() const { return base_; }
  double k() const { return k_; }
  double a() const { return a_; }
  const std::vector<TransformStep>& chain() const { return chain_; }

  /// Appends a step after checking its invariant against the current functional.
  StieltjesFn then(const TransformStep& step) const {
    const unsigned level = static_cast<unsigned>(chain_.size());
    switch (step.kind) {
      case TransformKind::uvarov:
        if (step.mass + moment_at(level, 0) == 0.0) throw DomainError("uvarov requires M + L[1] != 0");
        break;
      case TransformKind::christoffel:
        if (moment_at(level, 1) - step.omega * moment_at(level, 0) == 0.0)
          throw DomainError("christoffel requires L[x - omega] != 0");
        break;
      case TransformKind::geronimus:
        if (in_support_at(level, step.omega)) throw DomainError("geronimus requires omega off the support");
        if (step.mass - eval_at(level, step.omega).real() == 0.0)
          throw DomainError("geronimus requires M - S(omega) != 0");
        break;
    }
    if (step.lambda == 0.0) throw DomainError("transform normalizer must be nonzero");
    StieltjesFn out = *this;
    out.chain_.push_back(step);
    return out;
  }

  Complex operator()(Complex z) const {
    if (in_support(z)) throw DomainError("Stieltjes transform evaluated on the support");
    return eval_at(static_cast<unsigned>(chain_.size()), z);
  }

  double moment(unsigned n) const { return moment_at(static_cast<unsigned>(chain_.size()), n); }
  double total_mass() const { return moment(0); }

  bool in_support(Complex z) const { return in_support_at(static_cast<unsigned>(chain_.size()), z); }

  double cut_half_width() const { return 2.0 * std::sqrt(a_); }

  /// Isolated support points: the masses at +-Omega and transform points.
  std::vector<Complex> point_support() const { return points_at(static_cast<unsigned>(chain_.size())); }

  /// Radius of a disc containing the whole support.
  double support_radius() const {
    double r = cut_half_width();
    for (const auto& p : point_support()) r = std::max(r, std::abs(p));
    return r;
  }

  /// |z S(z) / L[1] - 1| at z = at.
  double asymptotic_deviation(double at = 1e6) const {
    const double m0 = total_mass();
    if (m0 == 0.0) throw DomainError("asymptotic check requires L[1] != 0");
    return std::abs(Complex(at) * (*this)(Complex(at)) / m0 - 1.0);
  }

 private:
  StieltjesFn(StieltjesKind kind, double k, double a) : base_(kind), k_(k), a_(a) {
    if (k == 2.0) throw DomainError("StieltjesFn: k = 2 has no Stieltjes transform");
    if (!(a > 0.0)) throw DomainError("StieltjesFn: a must be positive");
  }

  std::vector<Complex> points_at(unsigned level) const {
    std::vector<Complex> pts;
    if (base_ != StieltjesKind::chebyshev_u && chi(k_) == 1) {
      const Complex om = omega_point(k_, a_);
      pts.push_back(om);
      pts.push_back(-om);
    }
    for (unsigned i = 0; i < level; ++i)
      if (chain_[i].kind != TransformKind::christoffel) pts.emplace_back(chain_[i].omega);
    return pts;
  }

  bool in_support_at(unsigned level, Complex z) const {
    const double w = cut_half_width();
    if (z.imag() == 0.0 && std::abs(z.real()) <= w) return true;
    for (const auto& p : points_at(level))
      if (std::abs(z - p) <= 1e-12 * (1.0 + std::abs(p))) return true;
    return false;
  }

  Complex eval_at(unsigned level, Complex z) const {
    if (level == 0) {
      switch (base_) {
        case StieltjesKind::chebyshev_u: return stieltjes_U(z);
        case StieltjesKind::scaled_dickson: return stieltjes_scaled_dickson(z, k_);
        default: return stieltjes_dickson(z, k_, a_);
      }
    }
    const TransformStep& s = chain_[level - 1];
    const Complex prev = eval_at(level - 1, z);
    switch (s.kind) {
      case TransformKind::uvarov: return s.lambda * (prev + s.mass / (z - s.omega));
      case TransformKind::christoffel: return s.lambda * ((z - s.omega) * prev - moment_at(level - 1, 0));
      case TransformKind::geronimus:
        return s.lambda * (prev - eval_at(level - 1, Complex(s.omega)) + s.mass) / (z - s.omega);
    }
    return {};
  }

  double moment_at(unsigned level, unsigned n) const {
    if (level == 0) {
      switch (base_) {
        case StieltjesKind::chebyshev_u: return moments_closed(1.0, 0.25, n);
        case StieltjesKind::scaled_dickson: return moments_closed(k_, 0.25, n);
        default: return moments_closed(k_, a_, n);
      }
    }
    const TransformStep& s = chain_[level - 1];
    switch (s.kind) {
      case TransformKind::uvarov: return s.lambda * (moment_at(level - 1, n) + s.mass * ipow(s.omega, n));
      case TransformKind::christoffel:
        return s.lambda * (moment_at(level - 1, n + 1) - s.omega * moment_at(level - 1, n));
      case TransformKind::geronimus: {
        // L[(x^n - omega^n)/(x - omega)] with the quotient sum_j omega^{n-1-j} x^j.
        double q = 0.0;
        for (unsigned j = 0; j < n; ++j) q += ipow(s.omega, n - 1 - j) * moment_at(level - 1, j);
        const double s_omega = eval_at(level - 1, Complex(s.omega)).real();
        return s.lambda * (q + (s.mass - s_omega) * ipow(s.omega, n));
      }
    }
    return 0.0;
  }

  StieltjesKind base_;
  double k_;
  double a_;
  std::vector<TransformStep> chain_;
};

struct SplitResult {
  Complex continuous;
  Complex discrete;
  int chi = 0;
  unsigned levels = 0;
  Complex combined() const { return continuous + static_cast<double>(chi) * discrete; }
};

/// s_c by quadrature of (2/pi) int sin^2 / (k^2 - 4(k-1) sin^2) / (z - cos) d theta,
/// s_d = (4k/(2-k)) z / (4(k-1) z^2 + (k-2)^2).
inline SplitResult split_s(Complex z, double k, const QuadratureSpec& q = {}) {
  if (k == 2.0) throw DomainError("split_s: k = 2 has no Stieltjes transform");
  detail::check_cut(z, 1.0, "split_s");
  const Complex denom = 4.0 * (k - 1.0) * z * z + (k - 2.0) * (k - 2.0);
  detail::check_pole(denom, 4.0 * std::abs(k - 1.0) * std::norm(z) + (k - 2.0) * (k - 2.0), "split_s");
  auto integrand = [&](double theta) {
    const double s2 = std::sin(theta) * std::sin(theta);
    const double w = k == 0.0 ? 0.25 : s2 / (k * k - 4.0 * (k - 1.0) * s2);
    return Complex(2.0 / std::numbers::pi * w) / (z - std::cos(theta));
  };
  const auto quad = integrate_theta(integrand, q);
  SplitResult out;
  out.continuous = quad.value;
  out.levels = quad.levels;
  out.discrete = 4.0 * k / (2.0 - k) * z / denom;
  out.chi = chi(k);
  return out;
}

struct RecurrenceValues {
  Complex p;      // P_n(z)
  Complex assoc;  // P*_n(z)
};

/// P_n(z) and P*_n(z) by running the recurrence on values.
template <class T>
RecurrenceValues recurrence_values(const RecurrenceSpec<T>& spec, Complex z, unsigned n) {
  Complex p0(1.0), p1 = z - to_double(spec.beta[0]);
  Complex q0(0.0), q1(1.0);
  if (n == 0) return {p0, q0};
  spec.check_gamma(n - 1);
  for (unsigned m = 1; m < n; ++m) {
    const double b = to_double(spec.beta[m]), g = to_double(spec.gamma[m]);
    const Complex p2 = (z - b) * p1 - g * p0;
    const Complex q2 = (z - b) * q1 - g * q0;
    p0 = p1;
    p1 = p2;
    q0 = q1;
    q1 = q2;
  }
  return {p1, q1};
}

/// L[1] P*_n(z) / P_n(z).
template <class T>
Complex markov_ratio(const RecurrenceSpec<T>& spec, double total_mass, Complex z, unsigned n) {
  const auto v = recurrence_values(spec, z, n);
  if (v.p == Complex(0.0)) throw DomainError("markov_ratio: P_n(z) = 0; use a neighbouring n");
  return total_mass * v.assoc / v.p;
}

/// Markov ratios for n = 1..nmax.
template <class T>
std::vector<Complex> markov_sequence(const RecurrenceSpec<T>& spec, double total_mass, Complex z, unsigned nmax) {
  std::vector<Complex> out;
  for (unsigned n = 1; n <= nmax; ++n) out.push_back(markov_ratio(spec, total_mass, z, n));
  return out;
}

/// S_q(z) = Lq1 [u gamma S_P + (1-u) z + u beta - v] / [(z - v)((1-u) z + u beta - v) + u^2 gamma].
inline Complex corec_transform_value(Complex sp, double u, double v, double beta, double gamma, double lq1, Complex z) {
  const Complex lin = (1.0 - u) * z + u * beta - v;
  const Complex denom = (z - v) * lin + u * u * gamma;
  detail::check_pole(denom, std::abs(z - v) * std::abs(lin) + u * u * std::abs(gamma), "corec_transform");
  return lq1 * (u * gamma * sp + lin) / denom;
}

inline Complex corec_transform(const StieltjesFn& sp, double u, double v, double beta, double gamma, double lq1,
                               Complex z) {
  return corec_transform_value(sp(z), u, v, beta, gamma, lq1, z);
}

/// Constant-coefficient S_P = (z - beta)(1 - sqrt(1 - 4 gamma/(z - beta)^2)) / (2 gamma).
inline Complex stieltjes_constant_recurrence(Complex z, double beta, double gamma) {
  if (!(gamma > 0.0)) throw DomainError("constant recurrence requires gamma > 0");
  detail::check_cut(z - beta, 2.0 * std::sqrt(gamma), "stieltjes_constant_recurrence");
  const Complex w = z - beta;
  return w * detail::one_minus_root(4.0 * gamma / (w * w)) / (2.0 * gamma);
}

/// gamma S_P^2 - (z - beta) S_P + 1.
inline Complex quadratic_form_residual(Complex z, double beta, double gamma) {
  const Complex s = stieltjes_constant_recurrence(z, beta, gamma);
  return gamma * s * s - (z - beta) * s + 1.0;
}

/// L[1/(f(x)(z - x))] for f = (x - w1)(x - w2) through the partial-fraction
/// combination of S at z, w1, w2.
template <class S>
Complex partial_fraction_pairing(S&& stieltjes, Complex w1, Complex w2, Complex z) {
  if (w1 == w2 || z == w1 || z == w2) throw DomainError("partial_fraction_pairing: points must be distinct");
  const Complex f = (z - w1) * (z - w2);
  const Complex s1 = stieltjes(w1), s2 = stieltjes(w2);
  return stieltjes(z) / f + ((s2 - s1) * z + w2 * s1 - w1 * s2) / ((w1 - w2) * f);
}

/// L_U[1/((x^2 - b^2)(z - x))] = 2z (sqrt(1 - b^-2) - sqrt(1 - z^-2)) / (z^2 - b^2).
inline Complex chebyshev_pairing_closed(Complex b, Complex z) {
  detail::check_cut(b, 1.0, "chebyshev_pairing_closed");
  detail::check_cut(z, 1.0, "chebyshev_pairing_closed");
  if (z * z == b * b) throw DomainError("chebyshev_pairing_closed: z = +-b");
  return 2.0 * z * (principal_sqrt(1.0 - 1.0 / (b * b)) - principal_sqrt(1.0 - 1.0 / (z * z))) / (z * z - b * b);
}

/// The b^2 -> 1 limit of chebyshev_pairing_closed: -2 / (z sqrt(1 - z^-2)).
inline Complex chebyshev_pairing_limit(Complex z) {
  detail::check_cut(z, 1.0, "chebyshev_pairing_limit");
  return -2.0 / (z * principal_sqrt(1.0 - 1.0 / (z * z)));
}

/// 1 / (2 z sqrt(1 - z^-2)) = s(z;0), equal to (1/4) L_U[1/((1 - x^2)(z - x))].
inline Complex chebyshev_pairing_unit(Complex z) { return -0.25 * chebyshev_pairing_limit(z); }

/// (2/pi) int_{-1}^{1} (1 - x^2)^{-1/2} dx / (z - x) = 2 / (z sqrt(1 - z^-2)).
inline Complex inverse_weight_transform(Complex z) { return -chebyshev_pairing_limit(z); }

/// The same integral by quadrature in x = cos theta.
inline Complex inverse_weight_transform_quadrature(Complex z, const QuadratureSpec& q = {}) {
  detail::check_cut(z, 1.0, "inverse_weight_transform");
  auto f = [&](double theta) { return Complex(2.0 / std::numbers::pi) / (z - std::cos(theta)); };
  return integrate_theta(f, q).value;
}

/// Exact Laurent coefficients c_j of S(z;k,a) = sum_j c_j z^{-j-1}, j < count,
/// from the binomial series of sqrt(1 - 4a u), u = z^-2.
template <class T>
std::vector<T> laurent_dickson_exact(const T& k, const T& a, unsigned count) {
  if (k == T(2)) throw DomainError("laurent_dickson_exact: k = 2");
  const std::size_t terms = count / 2 + 2;
  const Series<T> root = binomial_series(T(1) / T(2), T(T(-4) * a), terms + 1);
  std::vector<T> num(terms + 1);
  const T scale = T(1) / (T(2) * (T(2) - k));
  for (std::size_t j = 0; j <= terms; ++j) num[j] = ((k - T(2)) * root[j] + (j == 0 ? k : T(0))) * scale;
  Poly<T> numer(std::move(num));
  Poly<T> denom{k - T(1), (k - T(2)) * (k - T(2)) * a};
  if (denom[0] == T(0)) {
    if (numer[0] != T(0)) throw NumericalError("laurent_dickson_exact: pole at infinity");
    numer = numer.shift_down(1);
    denom = denom.shift_down(1);
  }
  const Series<T> even = series_of_rational(numer, denom, terms);
  std::vector<T> out(count, T(0));
  for (unsigned j = 0; j < count; j += 2) out[j] = even[j / 2];
  return out;
}

/// c_j = (1 / 2 pi i) contour integral of S(z) z^j dz on |z| = radius by the
/// trapezoid rule with `samples` nodes.
template <class S>
std::vector<Complex> laurent_numeric(S&& stieltjes, unsigned count, double radius, unsigned samples = 256) {
  std::vector<Complex> values(samples), nodes(samples);
  for (unsigned i = 0; i < samples; ++i) {
    const double t = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / samples;
    nodes[i] = std::polar(1.0, t);
    values[i] = stieltjes(radius * nodes[i]);
  }
  std::vector<Complex> out(count);
  for (unsigned j = 0; j < count; ++j) {
    Complex acc(0.0);
    for (unsigned i = 0; i < samples; ++i) acc += values[i] * ipow(nodes[i], j + 1);
    out[j] = acc * std::pow(radius, static_cast<double>(j + 1)) / static_cast<double>(samples);
  }
  return out;
}

}  // namespace dickson
