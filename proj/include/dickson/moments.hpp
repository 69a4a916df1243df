#pragma once

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "chebyshev.hpp"
#include "dickson.hpp"
#include "quadrature.hpp"
#include "scalar.hpp"

namespace dickson {

/// 0 on the closed interval [0, 2], 1 elsewhere.
template <class T>
int chi(const T& k) {
  return (k >= T(0) && k <= T(2)) ? 0 : 1;
}

/// Omega(k) = sqrt(a) (k-2) i / sqrt(k-1), principal root of the complex k-1.
/// Purely imaginary for k > 1 and real (< -2 sqrt a for k < 1, k != 0) otherwise.
inline Complex omega_point(double k, double a) {
  if (k == 1.0) throw DomainError("omega_point: k = 1 has no mass point");
  const Complex i(0.0, 1.0);
  return std::sqrt(a) * (k - 2.0) * i / principal_sqrt(Complex(k - 1.0));
}

/// omega(k) of the scaled functional; Omega at 2 sqrt(a) = 1.
inline Complex omega_scaled(double k) { return omega_point(k, 0.25); }

/// Lazily extended moment sequence of L_k built by the moment recurrence.
/// Copies share one cache; access is synchronized.
template <class T>
class MomentSeq {
 public:
  MomentSeq(T k, T a) : state_(std::make_shared<State>()) {
    if (k == T(2)) throw DomainError("moments: mu_0 = 1/(2-k) is undefined at k = 2");
    if (!(a > T(0))) throw DomainError("moments: a must be positive");
    state_->k = std::move(k);
    state_->a = std::move(a);
    state_->even.push_back(T(1) / (T(2) - state_->k));
  }

  const T& k() const { return state_->k; }
  const T& a() const { return state_->a; }

  T operator()(unsigned order) const {
    if (order % 2 == 1) return T(0);
    std::lock_guard<std::mutex> lock(state_->mutex);
    extend(order / 2);
    return state_->even[order / 2];
  }

  std::size_t cached_even_count() const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    return state_->even.size();
  }

 private:
  struct State {
    std::mutex mutex;
    T k, a;
    std::vector<T> even;  // mu_0, mu_2, ...
  };

  // mu_{2n} = -sum_{j<n} ((2-k)n + kj)/(j+n) C(n+j, 2j) (-a)^{n-j} mu_{2j}
  void extend(unsigned upto) const {
    auto& s = *state_;
    while (s.even.size() <= upto) {
      const unsigned n = static_cast<unsigned>(s.even.size());
      const T nn(static_cast<int>(n));
      T acc(0);
      T minus_a_pow = ipow(T(-s.a), n);
      for (unsigned j = 0; j < n; ++j) {
        const T jj(static_cast<int>(j));
        acc += ((T(2) - s.k) * nn + s.k * jj) / (jj + nn) * binomial<T>(n + j, 2 * j) * minus_a_pow * s.even[j];
        minus_a_pow /= -s.a;
      }
      s.even.push_back(-acc);
    }
  }

  std::shared_ptr<State> state_;
};

template <class T>
MomentSeq<T> moments_recurrence(const T& k, const T& a, unsigned max_order) {
  MomentSeq<T> seq(k, a);
  (void)seq(max_order - max_order % 2);
  return seq;
}

/// Closed-form even moments: separate formulas at k = 1 and k = 2 (order >= 2),
/// the half-binomial sum otherwise. Odd orders vanish.
template <class T>
T moments_closed(const T& k, const T& a, unsigned order) {
  if (order % 2 == 1) return T(0);
  const unsigned n = order / 2;
  const T half = T(1) / T(2);
  const T minus_a_n = ipow(T(-a), n);
  if (k == T(1)) return ipow(T(2), 2 * n + 1) * general_binomial(half, n + 1) * minus_a_n;
  if (k == T(2)) {
    if (n == 0) throw DomainError("moments_closed: mu_0 is undefined at k = 2");
    return -ipow(T(2), 2 * n - 1) * general_binomial(half, n) * minus_a_n;
  }
  const T ratio = T(4) * (k - T(1)) / ((k - T(2)) * (k - T(2)));
  T sum = k / (k - T(2));
  T ratio_pow(1);
  for (unsigned j = 0; j <= n; ++j) {
    sum += general_binomial(half, j) * ratio_pow;
    ratio_pow *= ratio;
  }
  return -half * ipow(T(k - T(2)), 2 * n) / ipow(T(k - T(1)), n + 1) * minus_a_n * sum;
}

/// Even moments from the first-order difference equation
/// y_{j+1} = c y_j + g_j, y_0 = 1/(2-k), written out as
/// y_n = y_0 c^n + sum_j g_j c^{n-j-1}. Requires k not in {1, 2}.
template <class T>
T moments_first_order(const T& k, const T& a, unsigned order) {
  if (k == T(1) || k == T(2)) throw DomainError("moments_first_order requires k not in {1, 2}");
  if (order % 2 == 1) return T(0);
  const unsigned n = order / 2;
  const T c = -a * (k - T(2)) * (k - T(2)) / (k - T(1));
  const T half = T(1) / T(2);
  T y = T(1) / (T(2) - k) * ipow(c, n);
  for (unsigned j = 0; j < n; ++j) {
    const T g = -ipow(T(T(-4) * a), j + 1) / (T(2) * (k - T(1))) * general_binomial(half, j + 1);
    y += g * ipow(c, n - j - 1);
  }
  return y;
}

/// L_k as a continuous weight on [-2 sqrt a, 2 sqrt a] plus, when chi(k) = 1,
/// equal masses k / (2(k-1)(2-k)) at +-Omega(k).
struct MomentFunctional {
  double k = 1.0;
  double a = 1.0;

  MomentFunctional() = default;
  MomentFunctional(double k_, double a_) : k(k_), a(a_) {
    if (!(a > 0.0)) throw DomainError("MomentFunctional: a must be positive");
  }

  bool has_discrete() const { return chi(k) == 1; }
  double half_width() const { return 2.0 * std::sqrt(a); }
  Complex omega() const { return omega_point(k, a); }
  double mass_factor() const { return k / (2.0 * (k - 1.0) * (2.0 - k)); }

  /// sqrt(4a - t^2) / (2 pi [(k-1)t^2 + (k-2)^2 a]).
  double density(double t) const {
    return std::sqrt(std::max(0.0, 4.0 * a - t * t)) /
           (2.0 * std::numbers::pi * ((k - 1.0) * t * t + (k - 2.0) * (k - 2.0) * a));
  }

  /// The continuous part in theta (t = 2 sqrt(a) cos theta), including dt and
  /// the 1/(2 pi): 4 sin^2 / (k^2 - 4(k-1) sin^2) / (2 pi). Equals 1/(2 pi) at k = 0.
  double theta_weight(double theta) const {
    if (k == 0.0) return 0.5 / std::numbers::pi;
    const double s2 = std::sin(theta) * std::sin(theta);
    return 4.0 * s2 / (k * k - 4.0 * (k - 1.0) * s2) * 0.5 / std::numbers::pi;
  }
};

struct FunctionalValue {
  double value = 0.0;
  double continuous = 0.0;
  double discrete = 0.0;
  unsigned levels = 0;
  double quadrature_error = 0.0;
};

/// L_k[r] for r given as a callable accepting both double and Complex.
template <class R>
FunctionalValue functional_apply_parts(const MomentFunctional& f, R&& r, const QuadratureSpec& q = {}) {
  if (f.k == 2.0) throw DomainError("functional_apply: k = 2 requires functional_apply_k2");
  const double w = f.half_width();
  auto integrand = [&](double theta) { return r(w * std::cos(theta)) * f.theta_weight(theta); };
  const auto quad = integrate_theta(integrand, q);
  FunctionalValue out;
  out.continuous = quad.value;
  out.levels = quad.levels;
  out.quadrature_error = quad.error;
  if (f.has_discrete()) {
    const Complex om = f.omega();
    const Complex sum = r(om) + r(-om);
    const Complex d = f.mass_factor() * sum;
    if (std::abs(d.imag()) > 1e-10 * std::max(1.0, std::abs(d)))
      throw NumericalError("functional_apply: discrete part is not real (imaginary part " +
                           std::to_string(d.imag()) + ")");
    out.discrete = d.real();
  }
  out.value = out.continuous + out.discrete;
  return out;
}

template <class R>
double functional_apply_fn(const MomentFunctional& f, R&& r, const QuadratureSpec& q = {}) {
  return functional_apply_parts(f, std::forward<R>(r), q).value;
}

inline double functional_apply(const MomentFunctional& f, const Poly<double>& r, const QuadratureSpec& q = {}) {
  return functional_apply_fn(f, [&r](auto t) { return r(t); }, q);
}

/// (1/2 pi) int p(t) sqrt(4a - t^2) dt where the caller supplies p = r / t^2.
template <class P>
double functional_apply_k2_reduced(P&& reduced, double a, const QuadratureSpec& q = {}) {
  if (!(a > 0.0)) throw DomainError("functional_apply_k2: a must be positive");
  const double w = 2.0 * std::sqrt(a);
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    return reduced(w * std::cos(theta)) * 4.0 * a * s * s * 0.5 / std::numbers::pi;
  };
  return integrate_theta(integrand, q).value;
}

/// The k = 2 functional, defined on r = x^2 p; t^2 is cancelled exactly.
inline double functional_apply_k2(const Poly<double>& r, double a, const QuadratureSpec& q = {}) {
  if (r[0] != 0.0 || r[1] != 0.0)
    throw DomainError("functional_apply_k2: r must be divisible by x^2 (r(0) = r'(0) = 0)");
  const Poly<double> p = r.shift_down(2);
  return functional_apply_k2_reduced([&p](double t) { return p(t); }, a, q);
}

struct GramResult {
  std::vector<std::vector<double>> g;
  std::vector<double> expected_diagonal;
  double max_deviation = 0.0;
  unsigned max_levels_used = 0;
};

inline double gram_expected_diagonal(double k, double a, unsigned n) {
  return n == 0 ? 2.0 - k : std::pow(a, static_cast<double>(n));
}

/// G[n][m] = L_k[D_n D_m] for n, m <= nmax. At k = 2 row and column 0 are
/// zero and the remaining entries use D_{n,2} = t e_n(t).
inline GramResult gram_matrix(double k, double a, unsigned nmax, const QuadratureSpec& q = {}) {
  GramResult out;
  out.g.assign(nmax + 1, std::vector<double>(nmax + 1, 0.0));
  const MomentFunctional f(k, a);
  for (unsigned n = 0; n <= nmax; ++n) out.expected_diagonal.push_back(gram_expected_diagonal(k, a, n));

  for (unsigned n = 0; n <= nmax; ++n) {
    for (unsigned m = n; m <= nmax; ++m) {
      double v = 0.0;
      if (k == 2.0) {
        if (n == 0) continue;
        // e_n: same recurrence, e_0 = 0, e_1 = 1.
        auto e = [a](unsigned deg, double t) {
          double prev = 0.0, cur = 1.0;
          for (unsigned i = 1; i < deg; ++i) {
            const double next = t * cur - a * prev;
            prev = cur;
            cur = next;
          }
          return cur;
        };
        v = functional_apply_k2_reduced([&](double t) { return e(n, t) * e(m, t); }, a, q);
      } else {
        const DicksonParams<double> pn(n, k, a), pm(m, k, a);
        const auto parts = functional_apply_parts(
            f, [&](auto t) { return dickson_eval_recurrence(pn, t) * dickson_eval_recurrence(pm, t); }, q);
        v = parts.value;
        out.max_levels_used = std::max(out.max_levels_used, parts.levels);
      }
      out.g[n][m] = out.g[m][n] = v;
    }
  }
  for (unsigned n = 0; n <= nmax; ++n)
    for (unsigned m = 0; m <= nmax; ++m) {
      const double target = n == m ? out.expected_diagonal[n] : 0.0;
      out.max_deviation = std::max(out.max_deviation, std::abs(out.g[n][m] - target));
    }
  return out;
}

/// L^(d)_k[D_n D_m] = ((2-k)k/(k-1)) [(1+(-1)^{n+m})/2] (i sqrt(a/(k-1)))^{n+m}.
inline double discrete_part_pairing(unsigned n, unsigned m, double k, double a) {
  if (k == 1.0 || k == 2.0) throw DomainError("discrete_part_pairing requires k not in {1, 2}");
  if ((n + m) % 2 == 1) return 0.0;
  const Complex base = Complex(0.0, 1.0) * principal_sqrt(Complex(a / (k - 1.0)));
  return ((2.0 - k) * k / (k - 1.0) * ipow(base, n + m)).real();
}

/// k [D_n D_m(Omega) + D_n D_m(-Omega)] / (2(k-1)(2-k)), evaluated directly.
/// Runs in long double: D_n(Omega) is the minimal solution of the recurrence,
/// so forward evaluation loses about n log2|r_max / r_min| bits.
inline Complex discrete_part_direct(unsigned n, unsigned m, double k, double a) {
  using LD = long double;
  using LC = std::complex<LD>;
  const MomentFunctional f(k, a);
  const LC om = std::sqrt(LD(a)) * (LD(k) - 2) * LC(0, 1) / std::sqrt(LC(LD(k) - 1));
  const DicksonParams<LD> pn(n, k, a), pm(m, k, a);
  auto prod = [&](LC z) { return dickson_eval_recurrence(pn, z) * dickson_eval_recurrence(pm, z); };
  const LC v = LD(f.mass_factor()) * (prod(om) + prod(-om));
  return Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}

/// (2-k) b^n with b = Omega / (2-k) = -i sqrt(a) / sqrt(k-1), the value of
/// D_{n,k} at Omega. For k > 1 this is (2-k)(-i sqrt(a/(k-1)))^n.
inline Complex dickson_at_omega(unsigned n, double k, double a) {
  if (k == 1.0) throw DomainError("dickson_at_omega: k = 1");
  const Complex b = Complex(0.0, -1.0) * std::sqrt(a) / principal_sqrt(Complex(k - 1.0));
  return (2.0 - k) * ipow(b, n);
}

enum class Determinacy { determinate, inconclusive };

struct CarlemanResult {
  Determinacy verdict = Determinacy::inconclusive;
  double partial_sum = 0.0;
  double bound = 0.0;
  std::size_t horizon = 0;
  std::string certificate;
};

/// Carleman: sum 1/sqrt(gamma_n) = infinity implies determinacy. A sequence
/// with a constant tail diverges linearly; a finite table is declared determinate only when its
/// partial sum up to the horizon exceeds `bound`.
inline CarlemanResult carleman_determinate(const CoefficientSeq<double>& gamma, std::size_t horizon,
                                           double bound = 100.0) {
  CarlemanResult out;
  out.bound = bound;
  if (gamma.has_tail()) {
    const double g = gamma.tail();
    if (!(g > 0.0)) throw DomainError("carleman: gamma must be positive");
    for (std::size_t n = 1; n <= horizon; ++n) {
      if (!(gamma[n] > 0.0)) throw DomainError("carleman: gamma_" + std::to_string(n) + " must be positive");
      out.partial_sum += 1.0 / std::sqrt(gamma[n]);
    }
    out.horizon = horizon;
    out.verdict = Determinacy::determinate;
    out.certificate = "constant tail gamma = " + std::to_string(g) + ": sum_{n<=N} gamma_n^{-1/2} >= c + N / sqrt(gamma), diverges";
    return out;
  }
  const std::size_t last = std::min(horizon, gamma.extent() == 0 ? 0 : gamma.extent() - 1);
  for (std::size_t n = 1; n <= last; ++n) {
    if (!(gamma[n] > 0.0)) throw DomainError("carleman: gamma_" + std::to_string(n) + " must be positive");
    out.partial_sum += 1.0 / std::sqrt(gamma[n]);
  }
  out.horizon = last;
  if (out.partial_sum > bound) {
    out.verdict = Determinacy::determinate;
    out.certificate = "partial sum " + std::to_string(out.partial_sum) + " exceeds bound " + std::to_string(bound);
  } else {
    out.certificate = "partial sum " + std::to_string(out.partial_sum) + " below bound " + std::to_string(bound);
  }
  return out;
}

}  // namespace dickson
