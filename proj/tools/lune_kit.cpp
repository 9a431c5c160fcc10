// lune-kit: verify angle duality and the gap principle for zeros of convex
// combinations of incomplete polynomials, and draw the accompanying figures.
//
// Exit status: 0 all assertions hold, 2 a theorem-level assertion failed,
// 1 usage or I/O error. Errors are reported as a single line
//   lune-kit: error: <category>: <message>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lune/lune.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTheorem = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int fail(const std::string& category, const std::string& message, int code = kExitUsage) {
  std::string flat = message;
  for (auto& c : flat)
    if (c == '\n' || c == '\r') c = ' ';
  std::cerr << "lune-kit: error: " << category << ": " << flat << '\n';
  return code;
}

struct Source {
  std::string instance_path;
  std::string builtin;
  std::optional<std::uint64_t> seed;
  std::size_t index = 0;

  void attach(CLI::App* cmd) {
    auto* inst = cmd->add_option("--instance", instance_path, "Instance file (one JSON object per line)");
    auto* bi = cmd->add_option("--builtin", builtin, "Named instance: fig1, fig2, fig3, zero-weight, sendov");
    auto* sd = cmd->add_option("--seed", seed, "Generate the instance from this sweep seed");
    cmd->add_option("--index", index, "Instance index within the seeded sweep (with --seed)");
    inst->excludes(bi)->excludes(sd);
    bi->excludes(sd);
  }

  std::vector<lune::InstanceSpec> load() const {
    if (!instance_path.empty()) return lune::read_instances(instance_path);
    if (!builtin.empty()) return {lune::builtin_instance(builtin)};
    if (seed) {
      lune::SweepConfig cfg;
      cfg.seed = *seed;
      return {lune::generate_instance(cfg, index)};
    }
    throw UsageError("one of --instance, --builtin or --seed is required");
  }
};

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error(path + ": cannot open for writing");
      path_ = path;
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (file_ && !*file_) throw std::runtime_error(path_ + ": write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

std::string label(const lune::InstanceSpec& spec, std::size_t i) {
  return spec.name.empty() ? "instance-" + std::to_string(i) : spec.name;
}

int cmd_verify_duality(const Source& src, std::optional<std::size_t> chord, const std::string& out_path) {
  const auto specs = src.load();
  Sink sink(out_path);
  bool ok = true;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto run = lune::run_duality(specs[i], chord);
    for (std::size_t k = 0; k < run.reports.size(); ++k)
      sink.stream() << lune::duality_report_json(label(specs[i], i), run.chord_indices[k], run.reports[k]) << '\n';
    ok = ok && run.within_budget;
  }
  sink.finish();
  return ok ? kExitOk : fail("theorem", "angle duality residual above budget", kExitTheorem);
}

int cmd_verify_gap(const Source& src, const std::vector<double>& eps, const std::string& out_path) {
  const auto specs = src.load();
  Sink sink(out_path);
  bool ok = true;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto run = lune::run_gap(specs[i], eps);
    for (const auto& r : run.reports) sink.stream() << lune::gap_report_json(label(specs[i], i), r) << '\n';
    ok = ok && run.all_satisfied;
  }
  sink.finish();
  return ok ? kExitOk : fail("theorem", "gap principle violated", kExitTheorem);
}

int cmd_counterexample(const std::string& which, const std::string& out_path) {
  using json = nlohmann::ordered_json;
  Sink sink(out_path);
  if (which == "zero-weight") {
    const auto cx = lune::zero_weight_counterexample();
    json roots = json::array();
    for (const auto& w : cx.roots) roots.push_back({w.real(), w.imag()});
    json angles = json::array();
    for (const auto& a : cx.report.per_root_angles) angles.push_back(a.value);
    json j;
    j["kind"] = "zero-weight";
    j["weights"] = std::vector<double>(cx.weights.values().begin(), cx.weights.values().end());
    j["roots"] = std::move(roots);
    j["angles"] = std::move(angles);
    j["angle_sum"] = cx.report.angle_sum;
    j["rhs"] = cx.report.rhs;
    j["residual"] = cx.report.residual;
    j["identity_fails"] = cx.identity_fails;
    sink.stream() << j.dump() << '\n';
    sink.finish();
    return cx.identity_fails ? kExitOk
                             : fail("theorem", "zero-weight counterexample did not break the identity", kExitTheorem);
  }
  // sendov
  const lune::Instance inst = lune::build_instance(lune::builtin_instance("sendov"));
  const auto combo = lune::convex_combination(inst.config, inst.weights);
  const auto roots = lune::roots_of_combination(inst.config, inst.weights);
  const auto dist = lune::sendov_distance(inst.config, inst.weights);
  json coeffs = json::array();
  for (std::size_t k = 0; k <= combo.degree(); ++k)
    coeffs.push_back({combo.coefficient(k).real(), combo.coefficient(k).imag()});
  json rj = json::array();
  for (const auto& w : roots.roots) rj.push_back({w.real(), w.imag()});
  json dj = json::array();
  bool exceeds = false;
  for (const auto& d : dist) {
    dj.push_back({{"zero", {d.zero.real(), d.zero.imag()}}, {"distance", d.distance}});
    if (d.distance > 1.0) exceeds = true;
  }
  json j;
  j["kind"] = "sendov";
  j["coefficients"] = std::move(coeffs);
  j["roots"] = std::move(rj);
  j["distances"] = std::move(dj);
  j["radius_one_exceeded"] = exceeds;
  sink.stream() << j.dump() << '\n';
  sink.finish();
  return exceeds ? kExitOk : fail("theorem", "no zero farther than 1 from the roots", kExitTheorem);
}

int cmd_sweep(const lune::SweepConfig& cfg, unsigned threads, const std::string& out_path) {
  Sink sink(out_path);
  const auto summary = lune::run_sweep(cfg, sink.stream(), threads);
  sink.finish();
  if (!out_path.empty()) std::cout << lune::sweep_summary_json(summary) << '\n';
  return summary.clean() ? kExitOk : fail("theorem", "sweep found violations", kExitTheorem);
}

int cmd_figure(const Source& src, std::optional<std::size_t> chord, std::optional<double> eps,
               const std::string& out_path) {
  if (out_path.empty()) throw UsageError("figure needs --out <file.svg>");
  lune::FigureOptions opts;
  if (!src.builtin.empty() && (src.builtin == "fig1" || src.builtin == "fig2" || src.builtin == "fig3"))
    opts = lune::builtin_figure_options(src.builtin);
  if (chord) opts.chord_index = chord;
  if (eps) opts.epsilon = eps;
  const auto specs = src.load();
  const auto files = lune::emit_figure(specs.front(), opts, out_path);
  std::cout << files.svg.string() << '\n' << files.csv.string() << '\n';
  return kExitOk;
}

int cmd_generate(const lune::SweepConfig& cfg, const std::string& out_path) {
  cfg.validate();
  std::vector<lune::InstanceSpec> specs;
  for (std::size_t i = 0; i < cfg.count; ++i) specs.push_back(lune::generate_instance(cfg, i));
  if (out_path.empty()) {
    for (const auto& s : specs) std::cout << lune::instance_to_json(s) << '\n';
  } else {
    lune::write_instances(out_path, specs);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Angle duality and gap principle checks for convex combinations of incomplete polynomials",
               "lune-kit"};
  app.require_subcommand(1);

  std::string out_path;
  std::optional<std::size_t> chord;
  std::vector<double> epsilons;
  std::optional<double> fig_eps;
  std::string which;
  lune::SweepConfig sweep_cfg;
  unsigned threads = 0;

  Source duality_src;
  auto* duality = app.add_subcommand("verify-duality", "Angle sums against pi + (N-2) alpha/2 per chord");
  duality_src.attach(duality);
  duality->add_option("--chord", chord, "Only this chord (0-based index of the consecutive pair)");
  duality->add_option("--out", out_path, "Report file (JSON lines); stdout when omitted");

  Source gap_src;
  auto* gap = app.add_subcommand("verify-gap", "N_eps <= 4 pi / (eps G)");
  gap_src.attach(gap);
  gap->add_option("--epsilon", epsilons, "Comma-separated epsilon values in (0, 1)")->delimiter(',')->required();
  gap->add_option("--out", out_path, "Report file (JSON lines); stdout when omitted");

  auto* counter = app.add_subcommand("counterexample", "Reproduce the zero-weight or Sendov-type counterexample");
  counter->add_option("which", which, "zero-weight | sendov")->required()->check(CLI::IsMember({"zero-weight", "sendov"}));
  counter->add_option("--out", out_path, "Output file; stdout when omitted");

  auto* sweep = app.add_subcommand("sweep", "Verify randomly generated instances");
  sweep->add_option("--count", sweep_cfg.count, "Number of instances")->capture_default_str();
  sweep->add_option("--nmin", sweep_cfg.n_min, "Minimum degree N")->capture_default_str();
  sweep->add_option("--nmax", sweep_cfg.n_max, "Maximum degree N")->capture_default_str();
  sweep->add_option("--mmax", sweep_cfg.multiplicity_max, "Maximum multiplicity")->capture_default_str();
  sweep->add_option("--epsilon", sweep_cfg.epsilons, "Comma-separated epsilon values")->delimiter(',');
  sweep->add_option("--seed", sweep_cfg.seed, "Sweep seed")->capture_default_str();
  sweep->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  sweep->add_option("--out", out_path, "Per-instance report file (JSON lines); stdout when omitted");

  Source fig_src;
  auto* figure = app.add_subcommand("figure", "SVG figure plus CSV of the plotted coordinates");
  fig_src.attach(figure);
  figure->add_option("--chord", chord, "Chord to draw (0-based); default is the max-gap chord");
  figure->add_option("--epsilon", fig_eps, "Draw the circle |u| = 1 - eps");
  figure->add_option("--out", out_path, "SVG path; the CSV goes next to it");

  lune::SweepConfig gen_cfg;
  gen_cfg.count = 10;
  auto* generate = app.add_subcommand("generate", "Write seeded random instances");
  generate->add_option("--count", gen_cfg.count, "Number of instances")->capture_default_str();
  generate->add_option("--nmin", gen_cfg.n_min, "Minimum degree N")->capture_default_str();
  generate->add_option("--nmax", gen_cfg.n_max, "Maximum degree N")->capture_default_str();
  generate->add_option("--mmax", gen_cfg.multiplicity_max, "Maximum multiplicity")->capture_default_str();
  generate->add_option("--seed", gen_cfg.seed, "Seed")->capture_default_str();
  generate->add_option("--out", out_path, "Instance file; stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what());
  }

  try {
    if (*duality) return cmd_verify_duality(duality_src, chord, out_path);
    if (*gap) return cmd_verify_gap(gap_src, epsilons, out_path);
    if (*counter) return cmd_counterexample(which, out_path);
    if (*sweep) return cmd_sweep(sweep_cfg, threads, out_path);
    if (*figure) return cmd_figure(fig_src, chord, fig_eps, out_path);
    if (*generate) return cmd_generate(gen_cfg, out_path);
  } catch (const UsageError& e) {
    return fail("usage", e.what());
  } catch (const lune::HypothesisViolation& e) {
    return fail("hypothesis", e.what());
  } catch (const lune::RootFindingError& e) {
    return fail("root-finding", e.what());
  } catch (const std::invalid_argument& e) {
    return fail("input", e.what());
  } catch (const std::out_of_range& e) {
    return fail("input", e.what());
  } catch (const std::exception& e) {
    return fail("io", e.what());
  }
  return fail("usage", "no subcommand");
}
