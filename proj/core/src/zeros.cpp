#include "lune/zeros.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wide.h"

namespace lune {

namespace {

// Neumaier-compensated sum; weight validation must not depend on summation order.
double accurate_sum(std::span<const double> xs) {
  double sum = 0.0;
  double carry = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      carry += (sum - t) + x;
    else
      carry += (x - t) + sum;
    sum = t;
  }
  return sum + carry;
}

// sum_r weights_r prod_{s != r} (u - points_s), expanded per term.
MonicPolynomial combine_incomplete(std::span<const Complex> points, std::span<const double> weights) {
  const std::size_t n = points.size();
  std::vector<detail::Wide> acc(n == 0 ? 0 : n - 1);
  std::vector<Complex> rest;
  rest.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (weights[j] == 0.0) continue;
    rest.clear();
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) rest.push_back(points[k]);
    const auto c = detail::expand_wide(rest);
    const long double wj = weights[j];
    for (std::size_t k = 0; k < c.size(); ++k) acc[k] = acc[k] + wj * c[k];
  }
  // The leading coefficients sum to sum_j lambda_j = 1, which the monic type fixes exactly.
  return detail::to_monic(acc);
}

}  // namespace

double normalize_angle(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("angle is not finite");
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

Complex unit_point(double theta) { return {std::cos(theta), std::sin(theta)}; }

ZeroConfiguration::ZeroConfiguration(std::vector<double> distinct_angles,
                                     std::vector<int> multiplicities)
    : angles_(std::move(distinct_angles)), multiplicities_(std::move(multiplicities)) {
  if (angles_.size() != multiplicities_.size())
    throw std::invalid_argument("zero configuration: angle and multiplicity lists differ in length");
  if (angles_.empty()) throw std::invalid_argument("zero configuration: no zeros");
  for (std::size_t r = 0; r < angles_.size(); ++r) {
    const double a = angles_[r];
    if (!std::isfinite(a) || a < 0.0 || a >= kTwoPi)
      throw std::invalid_argument("zero configuration: angle " + std::to_string(a) +
                                  " outside [0, 2pi)");
    if (r > 0 && !(a > angles_[r - 1]))
      throw std::invalid_argument("zero configuration: angles must be strictly increasing");
    if (multiplicities_[r] < 1)
      throw std::invalid_argument("zero configuration: multiplicities must be positive");
    degree_ += static_cast<std::size_t>(multiplicities_[r]);
  }
  if (degree_ < 2) throw std::invalid_argument("zero configuration: degree must be at least 2");
  points_.reserve(angles_.size());
  for (double a : angles_) points_.push_back(unit_point(a));
}

ZeroConfiguration ZeroConfiguration::from_expanded(std::span<const double> angles) {
  std::vector<ZeroSpec> specs;
  specs.reserve(angles.size());
  for (double a : angles) specs.push_back({a, 1});
  return canonicalize_zeros(specs).config;
}

std::vector<Complex> ZeroConfiguration::expanded_zeros() const {
  std::vector<Complex> out;
  out.reserve(degree_);
  for (std::size_t r = 0; r < points_.size(); ++r)
    out.insert(out.end(), static_cast<std::size_t>(multiplicities_[r]), points_[r]);
  return out;
}

std::vector<std::size_t> ZeroConfiguration::expanded_owner() const {
  std::vector<std::size_t> out;
  out.reserve(degree_);
  for (std::size_t r = 0; r < points_.size(); ++r)
    out.insert(out.end(), static_cast<std::size_t>(multiplicities_[r]), r);
  return out;
}

ZeroConfiguration ZeroConfiguration::reduced() const {
  if (angles_.size() < 2)
    throw std::invalid_argument("zero configuration: reduced configuration needs two distinct zeros");
  return ZeroConfiguration(angles_, std::vector<int>(angles_.size(), 1));
}

CanonicalZeros canonicalize_zeros(std::span<const ZeroSpec> zeros) {
  struct Slot {
    double angle;
    std::size_t source;
  };
  std::vector<Slot> slots;
  for (const auto& z : zeros) {
    if (z.multiplicity < 1) throw std::invalid_argument("zero multiplicity must be positive");
    const double a = normalize_angle(z.angle);
    for (int k = 0; k < z.multiplicity; ++k) slots.push_back({a, slots.size()});
  }
  std::stable_sort(slots.begin(), slots.end(),
                   [](const Slot& x, const Slot& y) { return x.angle < y.angle; });

  std::vector<std::vector<Slot>> groups;
  for (const auto& s : slots) {
    if (!groups.empty() && s.angle - groups.back().back().angle <= kAngleMergeTolerance)
      groups.back().push_back(s);
    else
      groups.push_back({s});
  }
  if (groups.size() > 1 &&
      groups.front().front().angle + kTwoPi - groups.back().back().angle <= kAngleMergeTolerance) {
    auto& first = groups.front();
    first.insert(first.end(), groups.back().begin(), groups.back().end());
    groups.pop_back();
  }

  std::vector<double> angles;
  std::vector<int> mult;
  std::vector<std::size_t> source;
  for (const auto& g : groups) {
    angles.push_back(g.front().angle);
    mult.push_back(static_cast<int>(g.size()));
    for (const auto& s : g) source.push_back(s.source);
  }
  return {ZeroConfiguration(std::move(angles), std::move(mult)), std::move(source)};
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("weights: empty weight vector");
  bool positive = true;
  for (double x : weights_) {
    if (!std::isfinite(x) || x < 0.0)
      throw std::invalid_argument("weights: entries must be finite and nonnegative");
    if (x == 0.0) positive = false;
  }
  const double total = accurate_sum(weights_);
  if (std::abs(total - 1.0) > kWeightSumTolerance)
    throw std::invalid_argument("weights: sum is not 1 (off by " + std::to_string(total - 1.0) + ")");
  strictly_positive_ = positive;
}

WeightVector WeightVector::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("weights: uniform weights need n >= 1");
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

MonicPolynomial incomplete_polynomial(const ZeroConfiguration& config, std::size_t j) {
  auto zs = config.expanded_zeros();
  if (j >= zs.size())
    throw std::out_of_range("incomplete_polynomial: index " + std::to_string(j) +
                            " out of range for degree " + std::to_string(zs.size()));
  zs.erase(zs.begin() + static_cast<std::ptrdiff_t>(j));
  return expand_from_roots(zs);
}

MonicPolynomial convex_combination(const ZeroConfiguration& config, const WeightVector& w) {
  if (w.size() != config.degree())
    throw std::invalid_argument("convex_combination: " + std::to_string(w.size()) +
                                " weights for degree " + std::to_string(config.degree()));
  const auto zs = config.expanded_zeros();
  return combine_incomplete(zs, w.values());
}

MonicPolynomial zero_polynomial(const ZeroConfiguration& config) {
  const auto zs = config.expanded_zeros();
  return expand_from_roots(zs);
}

std::vector<double> group_weights(const ZeroConfiguration& config, const WeightVector& w) {
  if (w.size() != config.degree())
    throw std::invalid_argument("group_weights: " + std::to_string(w.size()) +
                                " weights for degree " + std::to_string(config.degree()));
  std::vector<double> grouped(config.distinct_count(), 0.0);
  const auto owner = config.expanded_owner();
  for (std::size_t j = 0; j < owner.size(); ++j) grouped[owner[j]] += w[j];
  return grouped;
}

MultiplicityFactorization multiplicity_factorization(const ZeroConfiguration& config,
                                                     const WeightVector& w) {
  auto grouped = group_weights(config, w);

  std::vector<Complex> q_roots;
  for (std::size_t r = 0; r < config.distinct_count(); ++r)
    q_roots.insert(q_roots.end(), static_cast<std::size_t>(config.multiplicity(r) - 1), config.zero(r));
  MonicPolynomial q = expand_from_roots(q_roots);

  // A single distinct zero has no reduced configuration of degree >= 2; Lt_Lambda = 1.
  if (config.distinct_count() == 1)
    return {std::move(q), config, std::move(grouped), MonicPolynomial{}};

  ZeroConfiguration reduced = config.reduced();
  MonicPolynomial lt = combine_incomplete(reduced.distinct_zeros(), grouped);
  return {std::move(q), std::move(reduced), std::move(grouped), std::move(lt)};
}

}  // namespace lune
