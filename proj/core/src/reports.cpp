#include <json.hpp>

#include "lune/harness.h"

namespace lune {

using json = nlohmann::ordered_json;

std::string duality_report_json(std::string_view instance, std::size_t chord_index,
                                const DualityReport& report) {
  json angles = json::array();
  json endpoint = json::array();
  for (const auto& a : report.per_root_angles) {
    angles.push_back(a.value);
    endpoint.push_back(a.endpoint_case);
  }
  json j;
  j["kind"] = "duality";
  j["instance"] = instance;
  j["chord_index"] = chord_index;
  j["theta"] = report.chord.theta();
  j["theta_plus"] = report.chord.theta_plus();
  j["alpha"] = report.chord.alpha();
  j["angles"] = std::move(angles);
  j["endpoint_case"] = std::move(endpoint);
  j["angle_sum"] = report.angle_sum;
  j["rhs"] = report.rhs;
  j["residual"] = report.residual;
  j["within_budget"] = report.residual <= kDualityResidualBudget;
  return j.dump();
}

std::string gap_report_json(std::string_view instance, const GapReport& report) {
  json j;
  j["kind"] = "gap";
  j["instance"] = instance;
  j["epsilon"] = report.epsilon;
  j["max_gap"] = report.max_gap;
  j["interior_count"] = report.interior_count;
  j["bound"] = report.bound;
  j["satisfied"] = report.satisfied;
  j["delta"] = report.delta;
  j["intermediate_lhs"] = report.intermediate_lhs;
  j["intermediate_rhs"] = report.intermediate_rhs;
  j["intermediate_satisfied"] = report.intermediate_satisfied;
  j["trivial"] = report.trivial;
  return j.dump();
}

std::string sweep_summary_json(const SweepSummary& s) {
  json j;
  j["instances"] = s.instances;
  j["chords_checked"] = s.chords_checked;
  j["max_residual"] = s.max_residual;
  j["duality_failures"] = s.duality_failures;
  j["gap_checks"] = s.gap_checks;
  j["gap_violations"] = s.gap_violations;
  j["intermediate_violations"] = s.intermediate_violations;
  j["lune_violations"] = s.lune_violations;
  j["hull_violations"] = s.hull_violations;
  j["errors"] = s.errors;
  j["clean"] = s.clean();
  json wrap;
  wrap["summary"] = std::move(j);
  return wrap.dump();
}

DualityRun run_duality(const InstanceSpec& spec, std::optional<std::size_t> chord_index) {
  const Instance inst = build_instance(spec);
  DualityRun run;
  auto all = verify_angle_duality_all(inst.config, inst.weights);
  if (chord_index) {
    if (*chord_index >= all.size())
      throw std::out_of_range("chord index " + std::to_string(*chord_index) + " out of range (" +
                              std::to_string(all.size()) + " chords)");
    run.chord_indices.push_back(*chord_index);
    run.reports.push_back(std::move(all[*chord_index]));
  } else {
    for (std::size_t r = 0; r < all.size(); ++r) run.chord_indices.push_back(r);
    run.reports = std::move(all);
  }
  for (const auto& r : run.reports)
    if (!(r.residual <= kDualityResidualBudget)) run.within_budget = false;
  return run;
}

GapRun run_gap(const InstanceSpec& spec, std::span<const double> epsilons) {
  const Instance inst = build_instance(spec);
  if (!inst.weights.strictly_positive())
    throw HypothesisViolation("verify_gap_principle: weights must be strictly positive");
  const RootMultiset roots = roots_of_combination(inst.config, inst.weights);
  GapRun run;
  for (double eps : epsilons) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    run.reports.push_back(gap_report(inst.config, roots.roots, eps));
    if (!run.reports.back().satisfied || !run.reports.back().intermediate_satisfied)
      run.all_satisfied = false;
  }
  return run;
}

}  // namespace lune
