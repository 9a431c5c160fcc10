#pragma once

// Coefficient expansion in extended precision. Products of up to ~50 linear
// factors with unit-circle roots reach coefficients near 1e10 with heavy
// cancellation; accumulating in long double keeps the rounded result within a
// few ulps of the double coefficients.

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "lune/polynomial.h"

namespace lune::detail {

struct Wide {
  long double re = 0.0L;
  long double im = 0.0L;
};

inline Wide operator+(Wide a, Wide b) { return {a.re + b.re, a.im + b.im}; }
inline Wide operator-(Wide a, Wide b) { return {a.re - b.re, a.im - b.im}; }
inline Wide operator*(Wide a, Wide b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline Wide operator*(long double s, Wide a) { return {s * a.re, s * a.im}; }
inline Wide widen(Complex c) { return {c.real(), c.imag()}; }
inline Complex narrow(Wide w) { return {static_cast<double>(w.re), static_cast<double>(w.im)}; }

// Leja order: each next root maximizes the product of distances to those already
// taken. Partial products then stay close in size to the full product instead of
// growing over a contiguous arc and cancelling later.
inline std::vector<Complex> leja_order(std::span<const Complex> roots) {
  std::vector<Complex> rest(roots.begin(), roots.end());
  std::vector<Complex> out;
  out.reserve(rest.size());
  std::vector<double> logdist(rest.size(), 0.0);
  while (!rest.empty()) {
    std::size_t best = 0;
    if (out.empty()) {
      for (std::size_t i = 1; i < rest.size(); ++i)
        if (std::abs(rest[i]) > std::abs(rest[best])) best = i;
    } else {
      for (std::size_t i = 1; i < rest.size(); ++i)
        if (logdist[i] > logdist[best]) best = i;
    }
    const Complex pick = rest[best];
    out.push_back(pick);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    logdist.erase(logdist.begin() + static_cast<std::ptrdiff_t>(best));
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const double d = std::abs(rest[i] - pick);
      logdist[i] += d > 0.0 ? std::log(d) : -1e300;
    }
  }
  return out;
}

// Lower coefficients of prod (u - r), leading 1 implicit.
inline std::vector<Wide> expand_wide(std::span<const Complex> unordered) {
  const std::vector<Complex> roots = leja_order(unordered);
  std::vector<Wide> c;
  c.reserve(roots.size());
  for (const auto& root : roots) {
    const Wide r = widen(root);
    c.push_back({1.0L, 0.0L});
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = Wide{} - r * c[0];
  }
  return c;
}

inline MonicPolynomial to_monic(const std::vector<Wide>& lower) {
  std::vector<Complex> out(lower.size());
  for (std::size_t k = 0; k < lower.size(); ++k) out[k] = narrow(lower[k]);
  return MonicPolynomial(std::move(out));
}

}  // namespace lune::detail
