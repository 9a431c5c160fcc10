#include "lune/roots.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <limits>
#include <numbers>
#include <random>

namespace lune {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Evaluation {
  Complex value;
  Complex slope;
  double magnitude_bound;  // sum |a_k| |z|^k, the scale of Horner rounding error
};

Evaluation evaluate_with_derivative(std::span<const Complex> full, Complex z) {
  Complex p = full.back();
  Complex dp{0.0, 0.0};
  double mu = std::abs(full.back());
  const double az = std::abs(z);
  for (std::size_t k = full.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + full[k];
    mu = mu * az + std::abs(full[k]);
  }
  return {p, dp, mu};
}

double start_rotation(std::uint64_t seed, std::size_t degree) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return unit(rng) * kTwoPi / static_cast<double>(degree);
}

bool augment(std::size_t left, const std::vector<std::vector<double>>& dist, double limit,
             std::vector<int>& match_right, std::vector<char>& seen) {
  for (std::size_t r = 0; r < dist.size(); ++r) {
    if (seen[r] || dist[left][r] > limit) continue;
    seen[r] = 1;
    if (match_right[r] < 0 ||
        augment(static_cast<std::size_t>(match_right[r]), dist, limit, match_right, seen)) {
      match_right[r] = static_cast<int>(left);
      return true;
    }
  }
  return false;
}

bool perfect_matching_within(const std::vector<std::vector<double>>& dist, double limit) {
  const std::size_t n = dist.size();
  std::vector<int> match_right(n, -1);
  std::vector<char> seen(n);
  for (std::size_t l = 0; l < n; ++l) {
    std::fill(seen.begin(), seen.end(), 0);
    if (!augment(l, dist, limit, match_right, seen)) return false;
  }
  return true;
}

// Logarithmic derivative P'/P at z, or nullopt when z sits at the rounding
// floor of P (nothing more to gain).
using NewtonRatio = std::function<std::optional<Complex>(Complex)>;

// Gauss-Seidel Aberth-Ehrlich iteration from a rotated circle of starting points.
std::vector<Complex> aberth(std::size_t n, const NewtonRatio& ratio, const RootFinderOptions& options,
                            int& iterations) {
  std::vector<Complex> z(n);
  const double rot = start_rotation(options.seed, n);
  for (std::size_t i = 0; i < n; ++i)
    z[i] = std::polar(options.start_radius, rot + kTwoPi * static_cast<double>(i) / static_cast<double>(n));

  std::vector<char> done(n, 0);
  std::size_t remaining = n;
  int iter = 0;
  for (; iter < options.max_iterations && remaining > 0; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto r = ratio(z[i]);
      if (!r) {
        done[i] = 1;
        --remaining;
        continue;
      }
      Complex repulsion{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && z[j] != z[i]) repulsion += 1.0 / (z[i] - z[j]);
      const Complex denom = *r - repulsion;
      Complex step;
      if (denom == Complex{0.0, 0.0} || !std::isfinite(std::abs(denom)))
        step = Complex{1e-8, 1e-8};
      else
        step = 1.0 / denom;
      z[i] -= step;
      if (std::abs(step) <= options.step_tol * std::max(1.0, std::abs(z[i]))) {
        done[i] = 1;
        --remaining;
      }
    }
  }
  iterations = iter;
  return z;
}

// |Lt_Lambda(w)| from the product form Lt(w) * sum_r Lambda_r / (w - zeta_r).
double product_form_residual(Complex w, std::span<const Complex> zeta, std::span<const double> lambda) {
  Complex sum{0.0, 0.0};
  double prod = 1.0;
  for (std::size_t r = 0; r < zeta.size(); ++r) {
    const Complex d = w - zeta[r];
    if (d == Complex{0.0, 0.0}) {
      double rest = lambda[r];
      for (std::size_t s = 0; s < zeta.size(); ++s)
        if (s != r) rest *= std::abs(w - zeta[s]);
      return rest;
    }
    sum += lambda[r] / d;
    prod *= std::abs(d);
  }
  return prod * std::abs(sum);
}

// Roots of Lt_Lambda = sum_r Lambda_r prod_{s != r}(u - zeta_s) with every
// Lambda_r > 0. P'/P is taken from the partial fractions
//   P'/P = sum_s 1/(u - zeta_s) + f'/f,  f = sum_r Lambda_r / (u - zeta_r),
// which stay accurate where the expanded coefficients have lost digits
// (roots between closely spaced zeros).
RootMultiset find_roots_partial_fraction(const MonicPolynomial& expanded, std::span<const Complex> zeta,
                                         std::span<const double> lambda, const RootFinderOptions& options) {
  const std::size_t n = zeta.size() - 1;
  RootMultiset out;
  out.method = RootMethod::direct;
  const NewtonRatio ratio = [&](Complex u) -> std::optional<Complex> {
    Complex f{0.0, 0.0};
    Complex df{0.0, 0.0};
    Complex poles{0.0, 0.0};
    double mu = 0.0;
    for (std::size_t r = 0; r < zeta.size(); ++r) {
      const Complex d = u - zeta[r];
      if (d == Complex{0.0, 0.0}) return Complex{1e300, 0.0};
      const Complex inv = 1.0 / d;
      f += lambda[r] * inv;
      df -= lambda[r] * inv * inv;
      poles += inv;
      mu += lambda[r] * std::abs(inv);
    }
    if (std::abs(f) <= 4.0 * static_cast<double>(zeta.size()) * kEps * mu) return std::nullopt;
    return poles + df / f;
  };
  if (n == 1) {
    // Lambda_0 (u - zeta_1) + Lambda_1 (u - zeta_0), with Lambda_0 + Lambda_1 = 1.
    out.roots = {lambda[0] * zeta[1] + lambda[1] * zeta[0]};
  } else {
    out.roots = aberth(n, ratio, options, out.iterations);
  }
  const double bound = options.tol_abs * expanded.coefficient_scale();
  bool ok = true;
  for (const auto& w : out.roots) {
    const double r = product_form_residual(w, zeta, lambda);
    out.residuals.push_back(r);
    if (!(r <= bound)) ok = false;
  }
  if (!ok) {
    throw RootFindingError("find_roots: residual bound " + std::to_string(bound) + " not met after " +
                               std::to_string(out.iterations) + " iterations",
                           std::move(out));
  }
  return out;
}

}  // namespace

std::string to_string(RootMethod m) { return m == RootMethod::direct ? "direct" : "factorized"; }

RootMultiset find_roots(const MonicPolynomial& p, const RootFinderOptions& options) {
  const std::size_t degree = p.degree();
  if (degree == 0) throw std::invalid_argument("find_roots: polynomial has degree 0");
  for (const auto& c : p.coefficients())
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("find_roots: non-finite coefficient");

  RootMultiset out;
  out.method = RootMethod::direct;

  // u^k divides p exactly when the k lowest coefficients are exactly zero.
  const auto lower = p.coefficients();
  std::size_t zeros_at_origin = 0;
  while (zeros_at_origin < degree && lower[zeros_at_origin] == Complex{0.0, 0.0}) ++zeros_at_origin;
  out.roots.assign(zeros_at_origin, Complex{0.0, 0.0});
  out.exact_count = zeros_at_origin;

  std::vector<Complex> full(lower.begin() + static_cast<std::ptrdiff_t>(zeros_at_origin), lower.end());
  full.emplace_back(1.0, 0.0);
  const std::size_t n = full.size() - 1;

  std::vector<Complex> z;
  if (n == 1) {
    z = {-full[0]};
  } else if (n > 1) {
    const NewtonRatio ratio = [&](Complex u) -> std::optional<Complex> {
      const Evaluation e = evaluate_with_derivative(full, u);
      // At the rounding floor the iterate is as good as the coefficients allow.
      if (std::abs(e.value) <= 4.0 * static_cast<double>(n) * kEps * e.magnitude_bound) return std::nullopt;
      return e.slope / e.value;
    };
    z = aberth(n, ratio, options, out.iterations);
  }
  out.roots.insert(out.roots.end(), z.begin(), z.end());

  const double scale = p.coefficient_scale();
  const double bound = options.tol_abs * scale;
  bool ok = true;
  out.residuals.reserve(out.roots.size());
  for (const auto& w : out.roots) {
    const double r = std::abs(p(w));
    out.residuals.push_back(r);
    if (!(r <= bound)) ok = false;
  }
  if (!ok) {
    throw RootFindingError("find_roots: residual bound " + std::to_string(bound) +
                               " not met after " + std::to_string(out.iterations) + " iterations",
                           std::move(out));
  }
  return out;
}

RootMultiset roots_of_combination(const ZeroConfiguration& config, const WeightVector& w,
                                  const RootFinderOptions& options) {
  const auto f = multiplicity_factorization(config, w);

  RootMultiset out;
  out.method = RootMethod::factorized;
  for (std::size_t r = 0; r < config.distinct_count(); ++r) {
    const auto extra = static_cast<std::size_t>(config.multiplicity(r) - 1);
    out.roots.insert(out.roots.end(), extra, config.zero(r));
  }
  out.exact_count = out.roots.size();
  out.residuals.assign(out.exact_count, 0.0);

  if (f.reduced_combination.degree() > 0) {
    const auto& lambda = f.grouped_weights;
    const bool positive = std::all_of(lambda.begin(), lambda.end(), [](double x) { return x > 0.0; });
    // A zero Lambda_r leaves zeta_r as a root the partial fractions cannot see.
    RootMultiset tail = positive ? find_roots_partial_fraction(f.reduced_combination, f.reduced.distinct_zeros(),
                                                               lambda, options)
                                 : find_roots(f.reduced_combination, options);
    out.roots.insert(out.roots.end(), tail.roots.begin(), tail.roots.end());
    out.residuals.insert(out.residuals.end(), tail.residuals.begin(), tail.residuals.end());
    out.iterations = tail.iterations;
  }
  return out;
}

double bottleneck_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("bottleneck_distance: multisets differ in size");
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  std::vector<std::vector<double>> dist(n, std::vector<double>(n));
  std::vector<double> candidates;
  candidates.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dist[i][j] = std::abs(a[i] - b[j]);
      candidates.push_back(dist[i][j]);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (perfect_matching_within(dist, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

}  // namespace lune
