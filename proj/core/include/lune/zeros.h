#pragma once

// Unit-circle zero configurations, simplex weights, and the convex combinations
// of incomplete polynomials built from them.

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "lune/polynomial.h"

namespace lune {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Angles closer than this (after reduction to [0, 2pi)) are the same zero.
inline constexpr double kAngleMergeTolerance = 1e-12;

// Weights must sum to 1 within this additive tolerance.
inline constexpr double kWeightSumTolerance = 1e-14;

// Reduces an angle to [0, 2pi).
double normalize_angle(double theta);

// e^{i theta}.
Complex unit_point(double theta);

struct ZeroSpec {
  double angle = 0.0;
  int multiplicity = 1;

  bool operator==(const ZeroSpec&) const = default;
};

/// Multiset of zeros on the unit circle: distinct angles theta_1 < ... < theta_M in
/// [0, 2pi) with multiplicities m_r, degree N = sum m_r >= 2.
///
/// The expanded multiset z_1..z_N is ordered by distinct-zero index, then repetition.
/// Weight vectors are always given in this order.
class ZeroConfiguration {
 public:
  // Validates strictly increasing angles in [0, 2pi), positive multiplicities, N >= 2.
  // Throws std::invalid_argument.
  ZeroConfiguration(std::vector<double> distinct_angles, std::vector<int> multiplicities);

  // One zero per angle; equal angles become multiplicities.
  static ZeroConfiguration from_expanded(std::span<const double> angles);

  std::span<const double> angles() const { return angles_; }
  std::span<const int> multiplicities() const { return multiplicities_; }
  double angle(std::size_t r) const { return angles_[r]; }
  int multiplicity(std::size_t r) const { return multiplicities_[r]; }

  std::size_t distinct_count() const { return angles_.size(); }  // M
  std::size_t degree() const { return degree_; }                 // N
  bool all_simple() const { return degree_ == angles_.size(); }

  // zeta_r = e^{i theta_r}. Every consumer goes through here so equal zeros are bitwise equal.
  Complex zero(std::size_t r) const { return points_[r]; }
  std::span<const Complex> distinct_zeros() const { return points_; }

  // z_1..z_N in canonical order.
  std::vector<Complex> expanded_zeros() const;

  // For each expanded slot j, the index r of its distinct zero.
  std::vector<std::size_t> expanded_owner() const;

  // All multiplicities set to 1.
  ZeroConfiguration reduced() const;

 private:
  std::vector<double> angles_;
  std::vector<int> multiplicities_;
  std::vector<Complex> points_;
  std::size_t degree_ = 0;
};

/// Result of canonicalizing an arbitrary list of zeros: the configuration plus, for
/// every canonical expanded slot, the input expanded slot it came from.
struct CanonicalZeros {
  ZeroConfiguration config;
  std::vector<std::size_t> source_slot;
};

// Normalizes angles to [0, 2pi), sorts them, and merges zeros that coincide within
// kAngleMergeTolerance (including across the 0/2pi seam).
CanonicalZeros canonicalize_zeros(std::span<const ZeroSpec> zeros);

/// Probability vector lambda_1..lambda_N.
class WeightVector {
 public:
  // Throws std::invalid_argument on negative/non-finite entries or a sum off by more
  // than kWeightSumTolerance.
  explicit WeightVector(std::vector<double> weights);

  static WeightVector uniform(std::size_t n);

  std::span<const double> values() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t j) const { return weights_[j]; }
  bool strictly_positive() const { return strictly_positive_; }

 private:
  std::vector<double> weights_;
  bool strictly_positive_ = false;
};

// p_j(u) = L(u)/(u - z_j) for the expanded slot j (0-based), expanded from the
// remaining zeros. Throws std::out_of_range.
MonicPolynomial incomplete_polynomial(const ZeroConfiguration& config, std::size_t j);

// L_lambda = sum_j lambda_j p_j. Always monic of degree N-1.
MonicPolynomial convex_combination(const ZeroConfiguration& config, const WeightVector& w);

// The polynomial L itself.
MonicPolynomial zero_polynomial(const ZeroConfiguration& config);

// Lambda_r = sum of lambda_l over the slots of distinct zero r.
std::vector<double> group_weights(const ZeroConfiguration& config, const WeightVector& w);

/// L_lambda = Q * Lt_Lambda with Q = prod (u - zeta_r)^{m_r - 1} and
/// Lt_Lambda = sum_r Lambda_r Lt(u)/(u - zeta_r) over the reduced configuration.
/// With a single distinct zero, Lt_Lambda = 1 and `reduced` is the input itself
/// (a one-point configuration has degree 1 and is not representable).
struct MultiplicityFactorization {
  MonicPolynomial q;
  ZeroConfiguration reduced;
  std::vector<double> grouped_weights;
  MonicPolynomial reduced_combination;
};

MultiplicityFactorization multiplicity_factorization(const ZeroConfiguration& config,
                                                     const WeightVector& w);

}  // namespace lune
