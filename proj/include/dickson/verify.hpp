#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "chebyshev.hpp"
#include "dickson.hpp"
#include "moments.hpp"
#include "stieltjes.hpp"

namespace dickson {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;  // worst deviation, or 0 for exact checks
  double tolerance = 0.0;
  std::string detail;
};

enum class Suite { fast, all };

namespace detail {

inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo * max_den, hi * max_den), den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline CheckResult tolerance_check(std::string name, double measured, double tol) {
  return {std::move(name), measured <= tol, measured, tol, {}};
}

inline CheckResult exact_check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, 0.0, 0.0, std::move(detail)};
}

inline std::vector<double> k_grid() { return {-1.0, 0.0, 0.5, 1.0, 1.5, 3.0, 5.0}; }

}  // namespace detail

inline CheckResult verify_exact_paths(unsigned nmax, unsigned samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    const Rational k = detail::random_rational(rng, -5, 5, 7);
    Rational a = detail::random_rational(rng, 0, 4, 5);
    if (a <= 0) a = Rational(1, 3);
    const Rational x = detail::random_rational(rng, -3, 3, 11);
    for (unsigned n = 0; n <= nmax; ++n) {
      const DicksonParams<Rational> p(n, k, a);
      const Rational d = dickson_eval_direct(p, x);
      if (d != dickson_eval_recurrence(p, x) || d != dickson_eval_parity(p, x))
        return detail::exact_check("exact evaluation paths", false,
                                   "n=" + std::to_string(n) + " k=" + to_string(k) + " a=" + to_string(a));
    }
  }
  return detail::exact_check("exact evaluation paths", true);
}

inline CheckResult verify_identities(unsigned nmax, unsigned samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    const Rational k = detail::random_rational(rng, -5, 5, 7);
    Rational a = detail::random_rational(rng, 0, 4, 5);
    if (a <= 0) a = Rational(2, 3);
    const Rational y = detail::random_rational(rng, 1, 3, 7) + Rational(1, 13);
    for (unsigned n = 0; n <= nmax; ++n) {
      const DicksonParams<Rational> p(n, k, a);
      std::string where = "n=" + std::to_string(n) + " k=" + to_string(k) + " a=" + to_string(a);
      if (!dickson_k_second_difference(n, k, a).is_zero())
        return detail::exact_check("identity suite", false, "k-second difference at " + where);
      const auto r = dickson_ode_residuals(p);
      for (const auto& poly : r)
        if (!poly.is_zero()) return detail::exact_check("identity suite", false, "differential relation at " + where);
      if (y * y != a && dickson_functional_equation_residual(p, y) != 0)
        return detail::exact_check("identity suite", false, "functional equation at " + where);
      const Poly<Rational> c = dickson_coeffs(p);
      for (std::size_t i = 0; i < c.size(); ++i)
        if ((i + n) % 2 == 1 && c[i] != 0) return detail::exact_check("identity suite", false, "parity at " + where);
    }
  }
  return detail::exact_check("identity suite", true);
}

inline CheckResult verify_generating_function(unsigned count, unsigned samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    const Rational k = detail::random_rational(rng, -5, 5, 7);
    Rational a = detail::random_rational(rng, 0, 4, 5);
    if (a <= 0) a = Rational(5, 2);
    const auto g = generating_function_series(k, a, count);
    for (unsigned n = 0; n < count; ++n)
      if (g[n] != dickson_coeffs(DicksonParams<Rational>(n, k, a)))
        return detail::exact_check("generating function", false, "n=" + std::to_string(n));
  }
  return detail::exact_check("generating function", true);
}

inline CheckResult verify_moments(unsigned max_order, unsigned samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> ks = {Rational(0), Rational(1)};
  while (ks.size() < samples + 2) {
    const Rational k = detail::random_rational(rng, -5, 5, 9);
    if (k != 1 && k != 2) ks.push_back(k);
  }
  for (const auto& k : ks) {
    const Rational a = detail::random_rational(rng, 1, 3, 4);
    const auto seq = moments_recurrence(k, a, max_order);
    for (unsigned n = 0; n <= max_order; ++n) {
      const Rational c = moments_closed(k, a, n);
      const bool ok = c == seq(n) && (k == 1 || c == moments_first_order(k, a, n));
      if (!ok)
        return detail::exact_check("moment closed forms", false, "k=" + to_string(k) + " order " + std::to_string(n));
    }
  }
  return detail::exact_check("moment closed forms", true);
}

inline CheckResult verify_gram(const std::vector<std::pair<double, double>>& grid, unsigned nmax, double tol) {
  double worst = 0.0;
  for (const auto& [k, a] : grid) worst = std::max(worst, gram_matrix(k, a, nmax).max_deviation);
  return detail::tolerance_check("orthogonality (Gram matrix)", worst, tol);
}

inline std::vector<Complex> split_test_points() {
  return {{0.0, 2.0},  {1.1, 0.3},  {-2.0, 0.5}, {0.2, 0.1},  {0.0, -0.3}, {1.5, 0.0},  {-1.5, 0.0},
          {3.0, -1.0}, {0.5, 0.8},  {-0.7, -0.4}, {2.0, 2.0}, {-0.1, 1.3}, {0.9, -0.05}, {-3.0, 0.2},
          {0.4, -1.7}, {1.2, 1.2},  {-1.05, 0.0}, {0.0, 0.9}, {6.0, 0.5},  {-0.6, 0.15}};
}

inline CheckResult verify_split(double tol) {
  double worst = 0.0;
  for (double k : detail::k_grid())
    for (const Complex z : split_test_points()) {
      const auto r = split_s(z, k);
      worst = std::max(worst, std::abs(r.combined() - stieltjes_scaled_dickson(z, k)));
    }
  return detail::tolerance_check("Stieltjes splitting", worst, tol);
}

inline CheckResult verify_markov(double tol) {
  double worst = 0.0;
  const auto u = chebyshev_u_spec<double>();
  for (double z : {1.25, 2.0}) worst = std::max(worst, std::abs(markov_ratio(u, 1.0, z, 60) - stieltjes_U(z)));
  const double k = 3.0;
  worst = std::max(worst, std::abs(markov_ratio(scaled_dickson_spec(k), 1.0 / (2.0 - k), 2.0, 60) -
                                   stieltjes_scaled_dickson(2.0, k)));
  return detail::tolerance_check("Markov limit", worst, tol);
}

inline CheckResult verify_laurent(unsigned count, unsigned samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples;) {
    const Rational k = detail::random_rational(rng, -5, 5, 9);
    if (k == 1 || k == 2) continue;
    ++s;
    const Rational a = detail::random_rational(rng, 1, 3, 4);
    const auto c = laurent_dickson_exact(k, a, count);
    for (unsigned j = 0; j < count; ++j)
      if (c[j] != moments_closed(k, a, j))
        return detail::exact_check("Laurent-moment duality", false, "k=" + to_string(k) + " j=" + std::to_string(j));
  }
  return detail::exact_check("Laurent-moment duality", true);
}

inline CheckResult verify_zeros(double tol) {
  for (const auto& [n, k] : {std::pair{3u, 3.0}, std::pair{5u, 2.5}}) {
    const auto roots = dickson_zeros_numeric(DicksonParams<double>(n, k, 1.0));
    const bool triple = std::any_of(roots.begin(), roots.end(),
                                    [](const Root& r) { return r.value == Complex(0.0) && r.multiplicity == 3; });
    if (!triple) return detail::exact_check("zeros", false, "no triple zero for n=" + std::to_string(n));
  }
  double worst = 0.0;
  for (double k : detail::k_grid())
    for (unsigned n = 2; n <= 5; ++n) {
      const DicksonParams<double> p(n, k, 1.0);
      const auto closed = dickson_zeros_closed(p);
      const auto numeric = dickson_zeros_numeric(p);
      for (const auto& r : closed) {
        double best = INFINITY;
        for (const auto& s : numeric) best = std::min(best, std::abs(r.value - s.value));
        worst = std::max(worst, best);
      }
    }
  return detail::tolerance_check("zeros (closed vs numeric)", worst, tol);
}

inline CheckResult verify_transforms(double tol) {
  const auto base = StieltjesFn::chebyshev_u();
  double worst = 0.0;
  for (const auto& step :
       {TransformStep::uvarov(2.0, 1.0), TransformStep::christoffel(2.0), TransformStep::geronimus(2.0, 1.0)}) {
    const auto t = base.then(step);
    const auto c = laurent_numeric(t, 9, 1.5 * t.support_radius() + 0.5);
    for (unsigned j = 0; j < 9; ++j) worst = std::max(worst, std::abs(c[j] - t.moment(j)));
  }
  return detail::tolerance_check("spectral transform duality", worst, tol);
}

inline CheckResult verify_corec(double tol) {
  double worst = 0.0;
  const auto u = StieltjesFn::chebyshev_u();
  for (double k : {-1.0, 0.0, 0.5, 1.5, 3.0, 5.0})
    for (const Complex z : split_test_points()) {
      const Complex lhs = corec_transform(u, 2.0 - k, 0.0, 0.0, 0.25, 1.0 / (2.0 - k), z);
      worst = std::max(worst, std::abs(lhs - stieltjes_scaled_dickson(z, k)));
    }
  return detail::tolerance_check("co-recursive transform", worst, tol);
}

/// |u - v| / max(|u|, |v|); zero when both vanish.
inline double path_deviation(Complex u, Complex v) {
  const double denom = std::max(std::abs(u), std::abs(v));
  return denom == 0.0 ? 0.0 : std::abs(u - v) / denom;
}

inline CheckResult verify_float_paths(unsigned samples, double tol, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> nd(0, 15);
  std::uniform_real_distribution<double> kd(-5.0, 5.0), ad(0.0, 4.0), xd(-3.0, 3.0);
  double worst = 0.0;
  for (unsigned s = 0; s < samples; ++s) {
    const unsigned n = nd(rng);
    double a = ad(rng);
    if (a == 0.0) a = 1.0;
    const DicksonParams<double> p(n, kd(rng), a);
    Complex x(xd(rng), xd(rng));
    while (std::abs(x) > 3.0) x = Complex(xd(rng), xd(rng));
    std::vector<Complex> v = {dickson_eval_direct(p, x), dickson_eval_recurrence(p, x),
                              dickson_eval_parity(p, x), dickson_eval_closed(p, x)};
    try {
      v.push_back(dickson_eval_hypergeometric(p, x));
    } catch (const DomainError&) {
    }
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) worst = std::max(worst, path_deviation(v[i], v[j]));
  }
  return detail::tolerance_check("evaluation path agreement", worst, tol);
}

/// The invariant suites behind `verify`. The fast suite shrinks sample counts
/// and the Gram grid.
inline std::vector<CheckResult> run_suite(Suite suite) {
  const bool all = suite == Suite::all;
  std::vector<CheckResult> out;
  out.push_back(verify_exact_paths(all ? 15 : 8, all ? 10 : 3, 11));
  out.push_back(verify_float_paths(all ? 1000 : 100, 1e-9, 12));
  out.push_back(verify_identities(10, all ? 10 : 2, 13));
  out.push_back(verify_generating_function(15, all ? 5 : 2, 14));
  out.push_back(verify_moments(all ? 50 : 20, all ? 20 : 3, 15));
  std::vector<std::pair<double, double>> grid = {{-1, 1}, {0, 1}, {0.5, 1}, {1, 1}, {1.5, 2}, {3, 1}, {5, 0.25}};
  if (!all) grid = {{3, 1}, {0.5, 1}};
  out.push_back(verify_gram(grid, all ? 10 : 6, 1e-8));
  out.push_back(verify_split(1e-8));
  out.push_back(verify_markov(1e-6));
  out.push_back(verify_laurent(17, all ? 5 : 2, 16));
  out.push_back(verify_zeros(1e-8));
  out.push_back(verify_transforms(1e-10));
  out.push_back(verify_corec(1e-12));
  return out;
}

}  // namespace dickson
