#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "lune/lune.h"

namespace support {

using lune::Complex;
inline constexpr double pi = std::numbers::pi;

inline double dist(Complex a, Complex b) { return std::abs(a - b); }

// Relative to max(1, max |c|) of the reference, matching the root-finder scaling.
inline double scaled_difference(const lune::MonicPolynomial& a, const lune::MonicPolynomial& ref) {
  return lune::max_coefficient_difference(a, ref) / ref.coefficient_scale();
}

struct RandomInstance {
  lune::ZeroConfiguration config;
  lune::WeightVector weights;
};

// Distinct sorted angles at least `sep` apart (cyclically), multiplicities in [1, mmax].
inline RandomInstance random_instance(std::mt19937_64& rng, std::size_t n_max, int mmax, double min_weight = 1e-4,
                                      double sep = 1e-3) {
  std::uniform_int_distribution<std::size_t> nd(2, n_max);
  const std::size_t n = nd(rng);
  std::vector<int> mult;
  for (std::size_t left = n; left > 0;) {
    const int m = std::uniform_int_distribution<int>(1, std::min<int>(mmax, static_cast<int>(left)))(rng);
    mult.push_back(m);
    left -= static_cast<std::size_t>(m);
  }
  std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
  std::vector<double> angles(mult.size());
  for (;;) {
    for (auto& a : angles) a = ang(rng);
    std::sort(angles.begin(), angles.end());
    bool ok = true;
    for (std::size_t r = 0; r < angles.size(); ++r) {
      const double next = r + 1 < angles.size() ? angles[r + 1] : angles[0] + 2.0 * pi;
      if (angles.size() > 1 && next - angles[r] < sep) ok = false;
    }
    if (ok) break;
  }
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) total += (x = ex(rng));
  const double free_mass = 1.0 - static_cast<double>(n) * min_weight;
  double head = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) head += (w[j] = min_weight + free_mass * w[j] / total);
  w[n - 1] = 1.0 - head;
  return {lune::ZeroConfiguration(angles, mult), lune::WeightVector(w)};
}

}  // namespace support
