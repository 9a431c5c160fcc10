#pragma once

// Executable checks of the angle duality and the gap principle for zeros of
// convex combinations of incomplete polynomials, plus the two worked
// counterexamples (vanishing weight, Sendov-type radius).

#include <span>
#include <stdexcept>
#include <vector>

#include "lune/lunegeom.h"
#include "lune/roots.h"
#include "lune/zeros.h"

namespace lune {

// Residual budget for sum_k Theta(w_k) = pi + (N-2) alpha/2 with computed roots.
inline constexpr double kDualityResidualBudget = 1e-8;

// c_0 in N_eps <= c_0 / (eps G).
inline constexpr double kGapConstant = 2.0 * kTwoPi;

/// Per-chord angle sum versus its predicted value pi + (N-2) alpha/2.
struct DualityReport {
  ChordArc chord;
  std::vector<AngleValue> per_root_angles;
  double angle_sum = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

struct GapReport {
  double max_gap = 0.0;         // G
  double epsilon = 0.0;
  std::size_t interior_count = 0;  // N_eps
  double bound = 0.0;           // 4 pi / (eps G)
  bool satisfied = false;       // interior_count <= bound
  // N_eps * delta(eps, G) <= pi - G/2, the inequality the bound is derived from.
  double delta = 0.0;
  double intermediate_lhs = 0.0;
  double intermediate_rhs = 0.0;
  bool intermediate_satisfied = false;
  bool trivial = false;         // single distinct zero
};

/// Signals a configuration with one distinct zero, where consecutive pairs do not exist.
class SingleDistinctZero : public std::invalid_argument {
 public:
  SingleDistinctZero() : std::invalid_argument("configuration has a single distinct zero") {}
};

/// Raised when a verifier's hypothesis is not met (e.g. a vanishing weight).
class HypothesisViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The M chords between cyclically consecutive distinct zeros; the last one wraps with
// theta_plus = theta_1 + 2pi. Throws SingleDistinctZero when M = 1.
std::vector<ChordArc> consecutive_pairs(const ZeroConfiguration& config);

struct MaxGap {
  ChordArc chord;
  double gap;
};

// Largest consecutive gap; ties go to the smallest starting angle.
MaxGap max_gap(const ZeroConfiguration& config);

// Angle sum over an arbitrary root multiset against pi + (N-2) alpha/2. No hypothesis
// checks; this is the shared arithmetic of the verifiers.
DualityReport angle_sum_report(std::span<const Complex> roots, const ChordArc& chord,
                               std::size_t degree);

// Angle duality for one consecutive chord. Refuses weights that are not strictly
// positive (HypothesisViolation); the chord must be one of consecutive_pairs(config).
DualityReport verify_angle_duality(const ZeroConfiguration& config, const WeightVector& w,
                                   const ChordArc& chord, const RootFinderOptions& options = {});

// All chords at once, sharing a single root computation.
std::vector<DualityReport> verify_angle_duality_all(const ZeroConfiguration& config,
                                                    const WeightVector& w,
                                                    const RootFinderOptions& options = {});

// Root-free check of the angle congruence for simple zeros. Evaluates the argument of
// -(lambda_{j+1}/lambda_j) prod_{l != j, j+1} (z+ - z_l)/(z - z_l), subtracts
// pi + (N-2) alpha/2, and reduces to [0, 2pi). A correct identity gives a value
// within 1e-9 of 0 or 2pi.
double duality_congruence_oracle(const ZeroConfiguration& config, const WeightVector& w,
                                 const ChordArc& chord);

// |{w_k : |w_k| < 1 - eps}| counted with multiplicity.
std::size_t count_interior(std::span<const Complex> roots, double epsilon);

GapReport verify_gap_principle(const ZeroConfiguration& config, const WeightVector& w,
                               double epsilon, const RootFinderOptions& options = {});

// Gap report from roots already computed (shared by sweeps over several eps).
GapReport gap_report(const ZeroConfiguration& config, std::span<const Complex> roots,
                     double epsilon);

struct ZeroWeightCounterexample {
  ZeroConfiguration config;
  WeightVector weights;
  std::vector<Complex> roots;
  DualityReport report;
  bool identity_fails = false;
};

// L = (u-1)(u-i)(u+i), lambda = (0, 1/2, 1/2), chord (1, i).
ZeroWeightCounterexample zero_weight_counterexample();

struct SendovDistance {
  Complex zero;
  double distance;
};

// For each distinct zero, the distance to the nearest zero of L_lambda.
std::vector<SendovDistance> sendov_distance(const ZeroConfiguration& config, const WeightVector& w,
                                            const RootFinderOptions& options = {});

}  // namespace lune
