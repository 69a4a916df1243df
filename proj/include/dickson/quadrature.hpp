#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace dickson {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  unsigned max_levels = 16;
};

template <class V>
struct QuadratureResult {
  V value{};
  double error = 0.0;
  unsigned levels = 0;
  std::size_t evaluations = 0;
};

namespace detail {

// Clenshaw-Curtis weights on [-1, 1] for nodes cos(j pi / N), N even.
inline const std::vector<double>& clenshaw_curtis_weights(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<double>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<double> table(n);
  for (std::size_t i = 0; i < n; ++i) table[i] = std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / n);
  std::vector<double> w(n + 1);
  const double nn = static_cast<double>(n);
  w[0] = w[n] = 1.0 / (nn * nn - 1.0);
  for (std::size_t j = 1; j < n; ++j) {
    double v = 1.0;
    for (std::size_t m = 1; m < n / 2; ++m) {
      const double md = static_cast<double>(m);
      v -= 2.0 * table[(m * j) % n] / (4.0 * md * md - 1.0);
    }
    v -= (j % 2 == 0 ? 1.0 : -1.0) / (nn * nn - 1.0);
    w[j] = 2.0 * v / nn;
  }
  return cache.emplace(n, std::move(w)).first->second;
}

}  // namespace detail

/// Integrates f over theta in [0, pi] with nested Clenshaw-Curtis rules,
/// doubling the panel count until successive estimates agree to
/// abs_tol + rel_tol * max(|I|, integral of |f|).
template <class F>
auto integrate_theta(F&& f, const QuadratureSpec& spec) {
  using V = decltype(f(0.0));
  constexpr std::size_t min_panels = 16;
  std::vector<V> values;
  QuadratureResult<V> result;
  V previous{};
  bool have_previous = false;

  for (unsigned level = 1; level <= spec.max_levels; ++level) {
    const std::size_t n = std::size_t{1} << level;
    std::vector<V> next(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j % 2 == 0 && !values.empty()) {
        next[j] = values[j / 2];
        continue;
      }
      const double theta = 0.5 * std::numbers::pi * (1.0 + std::cos(std::numbers::pi * static_cast<double>(j) / n));
      next[j] = f(theta);
      ++result.evaluations;
      if (!std::isfinite(magnitude(next[j])))
        throw NumericalError("quadrature: non-finite integrand at theta = " + std::to_string(theta));
    }
    values = std::move(next);

    const auto& w = detail::clenshaw_curtis_weights(n);
    V sum{};
    double abs_sum = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
      sum += w[j] * values[j];
      abs_sum += std::abs(w[j]) * magnitude(values[j]);
    }
    sum *= 0.5 * std::numbers::pi;
    abs_sum *= 0.5 * std::numbers::pi;

    result.value = sum;
    result.levels = level;
    if (have_previous) {
      result.error = magnitude(sum - previous);
      const double scale = std::max(magnitude(sum), abs_sum);
      if (n >= min_panels && result.error < spec.abs_tol + spec.rel_tol * scale) return result;
    }
    previous = sum;
    have_previous = true;
  }
  throw NumericalError("quadrature did not converge within " + std::to_string(spec.max_levels) +
                       " levels (last error " + std::to_string(result.error) + ")");
}

}  // namespace dickson
