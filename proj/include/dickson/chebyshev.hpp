#pragma once

#include <utility>
#include <optional>
#include <vector>

#include "dickson.hpp"
#include "poly.hpp"

namespace dickson {

/// A recurrence coefficient sequence: one constant, an explicit finite table
/// indexed from 0, or a table followed by a constant tail.
template <class T>
class CoefficientSeq {
 public:
  CoefficientSeq(T constant) : tail_(std::move(constant)) {}  // NOLINT(implicit)
  CoefficientSeq(std::vector<T> table) : table_(std::move(table)) {}  // NOLINT(implicit)
  CoefficientSeq(std::vector<T> prefix, T tail) : table_(std::move(prefix)), tail_(std::move(tail)) {}

  bool is_constant() const { return table_.empty() && tail_.has_value(); }
  bool has_tail() const { return tail_.has_value(); }
  const T& tail() const {
    if (!tail_) throw DomainError("coefficient sequence has no constant tail");
    return *tail_;
  }
  // Number of defined entries; unbounded when a tail is present.
  std::size_t extent() const { return tail_ ? static_cast<std::size_t>(-1) : table_.size(); }
  const T& operator[](std::size_t n) const {
    if (n < table_.size()) return table_[n];
    if (tail_) return *tail_;
    throw DomainError("recurrence coefficient index beyond table");
  }

 private:
  std::vector<T> table_;
  std::optional<T> tail_;
};

/// P_{n+1} = (x - beta_n) P_n - gamma_n P_{n-1}, gamma_n != 0.
template <class T>
struct RecurrenceSpec {
  CoefficientSeq<T> beta;
  CoefficientSeq<T> gamma;

  RecurrenceSpec(CoefficientSeq<T> b, CoefficientSeq<T> g) : beta(std::move(b)), gamma(std::move(g)) {}

  // Checks gamma_1..gamma_upto, the entries used up to P_{upto+1}.
  void check_gamma(std::size_t upto) const {
    for (std::size_t i = 1; i <= upto && i < gamma.extent(); ++i)
      if (gamma[i] == T(0)) throw DomainError("recurrence requires gamma_n != 0");
  }
};

/// beta = 0, gamma = 1/4: the monic Chebyshev polynomials of the second kind.
template <class T = Rational>
RecurrenceSpec<T> chebyshev_u_spec() {
  return {T(0), T(1) / T(4)};
}

/// The monic orthogonal sequence of l_k: beta = 0, gamma_1 = (2-k)/4 and
/// gamma_n = 1/4 otherwise, so P_n = d_n for n >= 1.
template <class T>
RecurrenceSpec<T> scaled_dickson_spec(const T& k) {
  if (k == T(2)) throw DomainError("scaled_dickson_spec: gamma_1 vanishes at k = 2");
  const T q = T(1) / T(4);
  return {T(0), CoefficientSeq<T>(std::vector<T>{q, (T(2) - k) * q}, q)};
}

template <class T>
struct CoRecursiveParams {
  T u = T(1);
  T v = T(0);
};

template <class T>
struct RecurrencePair {
  Poly<T> p;       // P_n from (1, x - beta_0)
  Poly<T> assoc;   // P*_n from (0, 1)
};

namespace detail {
// Runs the three-term recurrence from (y0, y1) up to index n.
template <class T>
Poly<T> run_recurrence(const RecurrenceSpec<T>& spec, Poly<T> y0, Poly<T> y1, unsigned n) {
  if (n == 0) return y0;
  spec.check_gamma(n - 1);
  const Poly<T> x = Poly<T>::x();
  for (unsigned m = 1; m < n; ++m) {
    Poly<T> next = (x - Poly<T>::constant(spec.beta[m])) * y1 - y0 * spec.gamma[m];
    y0 = std::move(y1);
    y1 = std::move(next);
  }
  return y1;
}
}  // namespace detail

template <class T>
RecurrencePair<T> recurrence_solutions(const RecurrenceSpec<T>& spec, unsigned n) {
  const Poly<T> x = Poly<T>::x();
  return {detail::run_recurrence(spec, Poly<T>::constant(T(1)), x - Poly<T>::constant(spec.beta[0]), n),
          detail::run_recurrence(spec, Poly<T>(), Poly<T>::constant(T(1)), n)};
}

/// Monic U_n; U_{-1} = 0.
template <class T = Rational>
Poly<T> monic_chebyshev_U(int n) {
  if (n < -1) throw DomainError("monic_chebyshev_U requires n >= -1");
  if (n == -1) return Poly<T>();
  return recurrence_solutions(chebyshev_u_spec<T>(), static_cast<unsigned>(n)).p;
}

/// q_n = u P_n + [(1-u)x + u beta_0 - v] P*_n.
template <class T>
Poly<T> co_recursive(const RecurrenceSpec<T>& spec, const CoRecursiveParams<T>& cp, unsigned n) {
  const auto [p, assoc] = recurrence_solutions(spec, n);
  const Poly<T> factor{cp.u * spec.beta[0] - cp.v, T(1) - cp.u};
  return p * cp.u + factor * assoc;
}

/// q_n by running the recurrence from q_0 = u, q_1 = x - v.
template <class T>
Poly<T> co_recursive_direct(const RecurrenceSpec<T>& spec, const CoRecursiveParams<T>& cp, unsigned n) {
  return detail::run_recurrence(spec, Poly<T>::constant(cp.u), Poly<T>{-cp.v, T(1)}, n);
}

/// d_n(x;k) = (2 sqrt a)^{-n} D_{n,k}(2 sqrt a x; a), built a-free as the
/// co-recursive sequence of U_n with u = 2-k, v = 0.
template <class T>
Poly<T> scaled_dickson_d(unsigned n, const T& k) {
  return co_recursive(chebyshev_u_spec<T>(), CoRecursiveParams<T>{T(2) - k, T(0)}, n);
}

/// (2 sqrt a)^{-n} D_{n,k}(2 sqrt a x; a) from the Dickson coefficients, with
/// sqrt_a supplied so that exact rationals stay exact.
template <class T>
Poly<T> scaled_dickson_from_dickson(unsigned n, const T& k, const T& sqrt_a) {
  const T two_sa = T(2) * sqrt_a;
  return dickson_coeffs(DicksonParams<T>{n, k, sqrt_a * sqrt_a}).scaled_argument(two_sa) *
         (T(1) / ipow(two_sa, n));
}

/// (2 sqrt a)^n [(2-k) U_n(x/(2 sqrt a)) + (k-1)(x/(2 sqrt a)) U_{n-1}(x/(2 sqrt a))].
template <class T>
Poly<T> dickson_from_chebyshev(unsigned n, const T& k, const T& sqrt_a) {
  const Poly<T> un = to_field<T>(monic_chebyshev_U<Rational>(static_cast<int>(n)));
  const Poly<T> um1 = to_field<T>(monic_chebyshev_U<Rational>(static_cast<int>(n) - 1));
  const T inv = T(1) / (T(2) * sqrt_a);
  const Poly<T> combo = un * (T(2) - k) + Poly<T>::x() * um1 * (k - T(1));
  return combo.scaled_argument(inv) * ipow(T(2) * sqrt_a, n);
}

}  // namespace dickson
