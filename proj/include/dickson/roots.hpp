#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "poly.hpp"

namespace dickson {

struct Root {
  Complex value;
  unsigned multiplicity = 1;
};

struct AberthOptions {
  unsigned max_iterations = 200;
  double tol = 1e-10;
};

struct AberthResult {
  std::vector<Complex> roots;
  unsigned iterations = 0;
  bool converged = false;
};

/// Simultaneous root iteration of Aberth and Ehrlich. Starting points sit on
/// a circle of the Cauchy bound radius. Returns one approximation per root
/// counted with multiplicity.
inline AberthResult aberth_roots(const Poly<Complex>& p, const AberthOptions& opt = {}) {
  AberthResult res;
  const auto n = p.degree();
  if (n < 1) return res;
  const Complex lead = p.leading();
  double bound = 0.0;
  for (std::ptrdiff_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(p[i] / lead));
  bound += 1.0;

  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < z.size(); ++j) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n) + 0.4;
    z[j] = std::polar(bound, angle);
  }
  const Poly<Complex> dp = p.derivative();

  for (unsigned it = 0; it < opt.max_iterations; ++it) {
    bool done = true;
    for (std::size_t j = 0; j < z.size(); ++j) {
      const Complex pv = p(z[j]);
      if (pv == Complex(0.0)) continue;
      Complex dv = dp(z[j]);
      if (dv == Complex(0.0)) dv = Complex(1e-300);
      const Complex ratio = pv / dv;
      Complex repulsion(0.0);
      for (std::size_t l = 0; l < z.size(); ++l) {
        if (l == j) continue;
        Complex diff = z[j] - z[l];
        if (diff == Complex(0.0)) diff = Complex(1e-300);
        repulsion += 1.0 / diff;
      }
      const Complex w = ratio / (1.0 - ratio * repulsion);
      z[j] -= w;
      if (std::abs(w) > opt.tol * (1.0 + std::abs(z[j]))) done = false;
    }
    res.iterations = it + 1;
    if (done) {
      res.converged = true;
      break;
    }
  }
  for (const auto& v : z)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericalError("aberth_roots: iteration diverged");
  res.roots = std::move(z);
  return res;
}

namespace detail {
inline double snap(double v, double scale) { return std::abs(v) <= 1e-12 * scale ? 0.0 : v; }
}  // namespace detail

/// Orders roots by (re, im) after flushing parts below 1e-12 relative to zero.
inline void sort_roots(std::vector<Root>& roots) {
  double scale = 1.0;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r.value));
  for (auto& r : roots) r.value = {detail::snap(r.value.real(), scale), detail::snap(r.value.imag(), scale)};
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
    if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  });
}

/// Single-linkage grouping of approximations closer than `radius`; each group
/// becomes one root at its centroid with multiplicity = group size.
inline std::vector<Root> cluster_roots(const std::vector<Complex>& approx, double radius) {
  std::vector<std::size_t> parent(approx.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < approx.size(); ++i)
    for (std::size_t j = i + 1; j < approx.size(); ++j)
      if (std::abs(approx[i] - approx[j]) < radius) parent[find(i)] = find(j);

  std::vector<Root> out;
  std::vector<std::size_t> slot(approx.size(), approx.size());
  for (std::size_t i = 0; i < approx.size(); ++i) {
    auto r = find(i);
    if (slot[r] == approx.size()) {
      slot[r] = out.size();
      out.push_back({approx[i], 1});
    } else {
      auto& root = out[slot[r]];
      root.value += approx[i];
      ++root.multiplicity;
    }
  }
  for (auto& r : out) r.value /= static_cast<double>(r.multiplicity);
  sort_roots(out);
  return out;
}

}  // namespace dickson
