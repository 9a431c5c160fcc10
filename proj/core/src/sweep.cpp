#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "lune/harness.h"

namespace lune {

using json = nlohmann::ordered_json;

namespace {

struct InstanceOutcome {
  std::string line;
  std::size_t chords = 0;
  double max_residual = 0.0;
  std::size_t duality_failures = 0;
  std::size_t gap_checks = 0;
  std::size_t gap_violations = 0;
  std::size_t intermediate_violations = 0;
  std::size_t lune_violations = 0;
  std::size_t hull_violations = 0;
  bool error = false;
};

InstanceOutcome verify_one(const SweepConfig& config, std::size_t index) {
  InstanceOutcome out;
  const InstanceSpec spec = generate_instance(config, index);
  json j;
  j["index"] = index;
  j["instance"] = json::parse(instance_to_json(spec));
  try {
    const Instance inst = build_instance(spec);
    const RootMultiset roots = roots_of_combination(inst.config, inst.weights);
    j["degree"] = inst.config.degree();
    j["distinct"] = inst.config.distinct_count();

    if (inst.config.distinct_count() >= 2) {
      const auto chords = consecutive_pairs(inst.config);
      for (const auto& c : chords) {
        const DualityReport rep = angle_sum_report(roots.roots, c, inst.config.degree());
        out.max_residual = std::max(out.max_residual, rep.residual);
        if (!(rep.residual <= kDualityResidualBudget)) ++out.duality_failures;
        for (const auto& w : roots.roots)
          if (!in_lune(w, c)) ++out.lune_violations;
      }
      out.chords = chords.size();
    }
    const auto zeros = inst.config.distinct_zeros();
    for (const auto& w : roots.roots)
      if (!convex_hull_contains(zeros, w)) ++out.hull_violations;

    json gaps = json::array();
    for (double eps : config.epsilons) {
      const GapReport g = gap_report(inst.config, roots.roots, eps);
      ++out.gap_checks;
      if (!g.satisfied) ++out.gap_violations;
      if (!g.intermediate_satisfied) ++out.intermediate_violations;
      gaps.push_back({{"epsilon", eps},
                      {"interior_count", g.interior_count},
                      {"bound", g.bound},
                      {"satisfied", g.satisfied},
                      {"intermediate_satisfied", g.intermediate_satisfied}});
    }
    j["chords"] = out.chords;
    j["max_residual"] = out.max_residual;
    j["duality_ok"] = out.duality_failures == 0;
    j["lune_ok"] = out.lune_violations == 0;
    j["hull_ok"] = out.hull_violations == 0;
    j["max_gap"] = inst.config.distinct_count() >= 2 ? max_gap(inst.config).gap : kTwoPi;
    j["gap"] = std::move(gaps);
  } catch (const std::exception& e) {
    out.error = true;
    j["error"] = e.what();
  }
  out.line = j.dump();
  return out;
}

}  // namespace

SweepSummary run_sweep(const SweepConfig& config, std::ostream& out, unsigned threads) {
  config.validate();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, config.count));

  std::vector<InstanceOutcome> outcomes(config.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < config.count; i = next.fetch_add(1))
      outcomes[i] = verify_one(config, i);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SweepSummary s;
  for (const auto& o : outcomes) {
    out << o.line << '\n';
    ++s.instances;
    s.chords_checked += o.chords;
    s.max_residual = std::max(s.max_residual, o.max_residual);
    s.duality_failures += o.duality_failures;
    s.gap_checks += o.gap_checks;
    s.gap_violations += o.gap_violations;
    s.intermediate_violations += o.intermediate_violations;
    s.lune_violations += o.lune_violations;
    s.hull_violations += o.hull_violations;
    if (o.error) ++s.errors;
  }
  out << sweep_summary_json(s) << '\n';
  return s;
}

}  // namespace lune
