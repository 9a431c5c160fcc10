#include "lune/theorems.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace lune {

namespace {

constexpr double kChordMatchTolerance = 1e-12;

void require_positive(const WeightVector& w, const char* who) {
  if (!w.strictly_positive())
    throw HypothesisViolation(std::string(who) +
                              ": weights must be strictly positive (the identity can fail otherwise)");
}

// Index of the consecutive pair matching `chord`, or throws.
std::size_t locate_chord(const std::vector<ChordArc>& chords, const ChordArc& chord) {
  for (std::size_t r = 0; r < chords.size(); ++r) {
    if (std::abs(chords[r].theta() - chord.theta()) <= kChordMatchTolerance &&
        std::abs(chords[r].alpha() - chord.alpha()) <= kChordMatchTolerance)
      return r;
  }
  throw std::invalid_argument("chord does not join two consecutive distinct zeros");
}

double predicted_sum(std::size_t degree, double alpha) {
  return std::numbers::pi + (static_cast<double>(degree) - 2.0) * alpha / 2.0;
}

}  // namespace

std::vector<ChordArc> consecutive_pairs(const ZeroConfiguration& config) {
  const std::size_t m = config.distinct_count();
  if (m < 2) throw SingleDistinctZero();
  std::vector<ChordArc> out;
  out.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t next = (r + 1) % m;
    const double theta_plus = next == 0 ? config.angle(0) + kTwoPi : config.angle(next);
    out.emplace_back(config.angle(r), theta_plus, config.zero(r), config.zero(next));
  }
  return out;
}

MaxGap max_gap(const ZeroConfiguration& config) {
  const auto chords = consecutive_pairs(config);
  std::size_t best = 0;
  for (std::size_t r = 1; r < chords.size(); ++r)
    if (chords[r].alpha() > chords[best].alpha()) best = r;
  return {chords[best], chords[best].alpha()};
}

DualityReport angle_sum_report(std::span<const Complex> roots, const ChordArc& chord,
                               std::size_t degree) {
  DualityReport rep{chord, {}, 0.0, 0.0, 0.0};
  rep.per_root_angles.reserve(roots.size());
  for (const auto& w : roots) {
    rep.per_root_angles.push_back(subtended_angle(w, chord));
    rep.angle_sum += rep.per_root_angles.back().value;
  }
  rep.rhs = predicted_sum(degree, chord.alpha());
  rep.residual = std::abs(rep.angle_sum - rep.rhs);
  return rep;
}

DualityReport verify_angle_duality(const ZeroConfiguration& config, const WeightVector& w,
                                   const ChordArc& chord, const RootFinderOptions& options) {
  require_positive(w, "verify_angle_duality");
  const auto chords = consecutive_pairs(config);
  const ChordArc& canonical = chords[locate_chord(chords, chord)];
  const RootMultiset roots = roots_of_combination(config, w, options);
  return angle_sum_report(roots.roots, canonical, config.degree());
}

std::vector<DualityReport> verify_angle_duality_all(const ZeroConfiguration& config,
                                                    const WeightVector& w,
                                                    const RootFinderOptions& options) {
  require_positive(w, "verify_angle_duality");
  const auto chords = consecutive_pairs(config);
  const RootMultiset roots = roots_of_combination(config, w, options);
  std::vector<DualityReport> out;
  out.reserve(chords.size());
  for (const auto& c : chords) out.push_back(angle_sum_report(roots.roots, c, config.degree()));
  return out;
}

double duality_congruence_oracle(const ZeroConfiguration& config, const WeightVector& w,
                                 const ChordArc& chord) {
  if (!config.all_simple())
    throw std::invalid_argument("duality_congruence_oracle: only pairwise distinct zeros are supported");
  require_positive(w, "duality_congruence_oracle");
  if (w.size() != config.degree())
    throw std::invalid_argument("duality_congruence_oracle: weight length mismatch");
  const auto chords = consecutive_pairs(config);
  const std::size_t j = locate_chord(chords, chord);
  const std::size_t n = config.degree();
  const std::size_t jp = (j + 1) % n;
  const Complex z = config.zero(j);
  const Complex zp = config.zero(jp);

  // arg of -(lambda_{j+1}/lambda_j): the ratio is positive, so this is pi.
  double total = std::arg(Complex{-(w[jp] / w[j]), 0.0});
  for (std::size_t l = 0; l < n; ++l) {
    if (l == j || l == jp) continue;
    const Complex zl = config.zero(l);
    total += std::arg((zp - zl) / (z - zl));
  }
  return normalize_angle(total - predicted_sum(n, chords[j].alpha()));
}

std::size_t count_interior(std::span<const Complex> roots, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("count_interior: epsilon must lie in (0, 1)");
  const double radius = 1.0 - epsilon;
  return static_cast<std::size_t>(
      std::count_if(roots.begin(), roots.end(), [&](const Complex& w) { return std::abs(w) < radius; }));
}

GapReport gap_report(const ZeroConfiguration& config, std::span<const Complex> roots, double epsilon) {
  GapReport rep;
  rep.epsilon = epsilon;
  rep.interior_count = count_interior(roots, epsilon);
  if (config.distinct_count() == 1) {
    // All zeros of L_lambda sit on the circle; the whole circle is one gap.
    rep.trivial = true;
    rep.max_gap = kTwoPi;
    rep.bound = kGapConstant / (epsilon * rep.max_gap);
    rep.satisfied = static_cast<double>(rep.interior_count) <= rep.bound;
    rep.intermediate_satisfied = rep.interior_count == 0;
    return rep;
  }
  rep.max_gap = max_gap(config).gap;
  rep.bound = kGapConstant / (epsilon * rep.max_gap);
  rep.satisfied = static_cast<double>(rep.interior_count) <= rep.bound;
  rep.delta = angle_gain_delta(epsilon, rep.max_gap);
  rep.intermediate_lhs = static_cast<double>(rep.interior_count) * rep.delta;
  rep.intermediate_rhs = std::numbers::pi - rep.max_gap / 2.0;
  rep.intermediate_satisfied = rep.intermediate_lhs <= rep.intermediate_rhs + 1e-12;
  return rep;
}

GapReport verify_gap_principle(const ZeroConfiguration& config, const WeightVector& w,
                               double epsilon, const RootFinderOptions& options) {
  require_positive(w, "verify_gap_principle");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("verify_gap_principle: epsilon must lie in (0, 1)");
  const RootMultiset roots = roots_of_combination(config, w, options);
  return gap_report(config, roots.roots, epsilon);
}

ZeroWeightCounterexample zero_weight_counterexample() {
  ZeroConfiguration config({0.0, std::numbers::pi / 2.0, 3.0 * std::numbers::pi / 2.0}, {1, 1, 1});
  WeightVector weights({0.0, 0.5, 0.5});
  const RootMultiset roots = roots_of_combination(config, weights);
  const ChordArc chord = consecutive_pairs(config).front();  // (1, i)
  DualityReport report = angle_sum_report(roots.roots, chord, config.degree());
  const bool fails = report.residual > kDualityResidualBudget;
  return {std::move(config), std::move(weights), roots.roots, std::move(report), fails};
}

std::vector<SendovDistance> sendov_distance(const ZeroConfiguration& config, const WeightVector& w,
                                            const RootFinderOptions& options) {
  require_positive(w, "sendov_distance");
  const RootMultiset roots = roots_of_combination(config, w, options);
  std::vector<SendovDistance> out;
  for (const auto& zeta : config.distinct_zeros()) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : roots.roots) best = std::min(best, std::abs(zeta - r));
    out.push_back({zeta, best});
  }
  return out;
}

}  // namespace lune
