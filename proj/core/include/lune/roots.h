#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lune/polynomial.h"
#include "lune/zeros.h"

namespace lune {

enum class RootMethod { direct, factorized };

std::string to_string(RootMethod m);

/// Zeros w_k of a polynomial, counted with multiplicity.
///
/// The first `exact_count` roots were placed structurally (exact zeros of a known
/// factor) rather than found by iteration; their residual is 0.
struct RootMultiset {
  std::vector<Complex> roots;
  std::vector<double> residuals;
  RootMethod method = RootMethod::direct;
  std::size_t exact_count = 0;
  int iterations = 0;

  std::size_t size() const { return roots.size(); }
};

struct RootFinderOptions {
  double tol_abs = 1e-11;     // residual bound, relative to max(1, max |c_k|)
  double step_tol = 1e-14;    // per-root correction that counts as converged
  int max_iterations = 200;
  double start_radius = 0.9;
  std::uint64_t seed = 0x4c554e45ULL;  // rotation of the starting circle
};

/// Thrown when Aberth iteration ends without every root meeting the residual bound.
/// Carries the best iterate so callers can inspect it.
class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, RootMultiset best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const RootMultiset& best() const { return best_; }

 private:
  RootMultiset best_;
};

// All roots of a monic polynomial of degree >= 1 by Aberth-Ehrlich simultaneous
// iteration. Exact trailing zero coefficients are split off as exact roots at 0.
// Deterministic for identical input and options.
RootMultiset find_roots(const MonicPolynomial& p, const RootFinderOptions& options = {});

// Zeros of L_lambda via the multiplicity factorization: each zeta_r placed exactly
// m_r - 1 times, followed by the roots of Lt_Lambda. With every Lambda_r > 0 the
// Aberth iteration for Lt_Lambda evaluates P'/P from the partial fractions
// sum_r Lambda_r / (u - zeta_r) instead of the expanded coefficients, and the
// reported residuals use the product form of Lt_Lambda.
RootMultiset roots_of_combination(const ZeroConfiguration& config, const WeightVector& w,
                                  const RootFinderOptions& options = {});

// Smallest achievable maximum distance over perfect matchings between two equally
// sized multisets (bottleneck assignment). Throws std::invalid_argument on size mismatch.
double bottleneck_distance(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace lune
