#pragma once

// Instance files, seeded instance generation, sweeps, report serialization and
// figure emission. Files are line-delimited JSON: one object per line.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lune/theorems.h"

namespace lune {

/// One instance as it appears on disk. Zeros may be listed in any order and may repeat;
/// weights follow the listed order (each zero's multiplicity slots consecutively).
/// Missing weights mean uniform.
struct InstanceSpec {
  std::string name;
  std::vector<ZeroSpec> zeros;
  std::optional<std::vector<double>> weights;
  std::optional<std::uint64_t> seed;

  bool operator==(const InstanceSpec&) const = default;
};

struct Instance {
  ZeroConfiguration config;
  WeightVector weights;
};

// Canonicalizes the zeros and carries each weight to its canonical slot.
// Throws std::invalid_argument on malformed instances.
Instance build_instance(const InstanceSpec& spec);

std::string instance_to_json(const InstanceSpec& spec);
// Throws std::invalid_argument on malformed input.
InstanceSpec instance_from_json(std::string_view line);

// Blank lines are skipped. Errors carry the path and line number.
std::vector<InstanceSpec> read_instances(const std::filesystem::path& path);
void write_instances(const std::filesystem::path& path, std::span<const InstanceSpec> specs);

// fig1, fig2, fig3, zero-weight, sendov.
InstanceSpec builtin_instance(std::string_view name);
std::vector<std::string> builtin_names();

struct SweepConfig {
  std::size_t count = 10000;
  std::size_t n_min = 2;
  std::size_t n_max = 50;
  std::vector<double> epsilons{0.05, 0.1, 0.25, 0.5};
  int multiplicity_max = 4;
  std::uint64_t seed = 42;
  double min_weight = 1e-4;
  double min_separation = 1e-6;

  // Throws std::invalid_argument.
  void validate() const;
};

// Deterministic in (config.seed, index): angles pairwise separated by at least
// min_separation, weights in the open simplex with every entry >= min_weight.
InstanceSpec generate_instance(const SweepConfig& config, std::size_t index);

// Report lines.
std::string duality_report_json(std::string_view instance, std::size_t chord_index,
                                const DualityReport& report);
std::string gap_report_json(std::string_view instance, const GapReport& report);

struct DualityRun {
  std::vector<std::size_t> chord_indices;
  std::vector<DualityReport> reports;
  bool within_budget = true;
};

// All chords, or only `chord_index`. Hypothesis and root-finding errors propagate.
DualityRun run_duality(const InstanceSpec& spec, std::optional<std::size_t> chord_index = {});

struct GapRun {
  std::vector<GapReport> reports;
  bool all_satisfied = true;
};

GapRun run_gap(const InstanceSpec& spec, std::span<const double> epsilons);

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t chords_checked = 0;
  double max_residual = 0.0;
  std::size_t duality_failures = 0;
  std::size_t gap_checks = 0;
  std::size_t gap_violations = 0;
  std::size_t intermediate_violations = 0;
  std::size_t lune_violations = 0;
  std::size_t hull_violations = 0;
  std::size_t errors = 0;

  bool clean() const {
    return duality_failures == 0 && gap_violations == 0 && intermediate_violations == 0 &&
           lune_violations == 0 && hull_violations == 0 && errors == 0;
  }
};

std::string sweep_summary_json(const SweepSummary& s);

// Verifies every generated instance (duality on all chords, gap for each epsilon, lune
// and hull confinement) and writes one line per instance in index order followed by a
// summary line. Output is byte-identical for a given config regardless of `threads`.
SweepSummary run_sweep(const SweepConfig& config, std::ostream& out, unsigned threads = 0);

struct FigureOptions {
  std::optional<std::size_t> chord_index;  // default: the max-gap chord
  std::optional<double> epsilon;           // draws |u| = 1 - eps
  bool shade_lune = true;
  bool mark_max_gap = false;
};

// Options used for the builtin figures fig1, fig2, fig3.
FigureOptions builtin_figure_options(std::string_view name);

struct FigureFiles {
  std::filesystem::path svg;
  std::filesystem::path csv;
  std::size_t csv_rows = 0;  // data rows, excluding the header
};

// Writes the SVG to `svg_path` and the plotted marker coordinates to the same path with a
// .csv extension. Throws std::runtime_error with the path on I/O failure.
FigureFiles emit_figure(const InstanceSpec& spec, const FigureOptions& options,
                        const std::filesystem::path& svg_path);

}  // namespace lune
