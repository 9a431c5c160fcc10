#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "lune/harness.h"

namespace lune {

using json = nlohmann::ordered_json;

namespace {

constexpr double kPi = std::numbers::pi;

double degrees(double d) { return d * kPi / 180.0; }

InstanceSpec three_point(std::string name, std::optional<std::vector<double>> weights) {
  return {std::move(name), {{0.0, 1}, {kPi / 2.0, 1}, {3.0 * kPi / 2.0, 1}}, std::move(weights), {}};
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Instance build_instance(const InstanceSpec& spec) {
  if (spec.zeros.empty()) throw std::invalid_argument("instance has no zeros");
  CanonicalZeros canon = canonicalize_zeros(spec.zeros);
  const std::size_t n = canon.config.degree();
  if (!spec.weights) return {std::move(canon.config), WeightVector::uniform(n)};
  const auto& given = *spec.weights;
  if (given.size() != n)
    throw std::invalid_argument("instance has " + std::to_string(given.size()) + " weights for " +
                                std::to_string(n) + " zeros");
  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = given[canon.source_slot[j]];
  return {std::move(canon.config), WeightVector(std::move(w))};
}

std::string instance_to_json(const InstanceSpec& spec) {
  json j;
  if (!spec.name.empty()) j["name"] = spec.name;
  json zeros = json::array();
  for (const auto& z : spec.zeros) zeros.push_back({{"angle", z.angle}, {"multiplicity", z.multiplicity}});
  j["zeros"] = std::move(zeros);
  if (spec.weights)
    j["weights"] = *spec.weights;
  else
    j["weights"] = "uniform";
  if (spec.seed) j["seed"] = *spec.seed;
  return j.dump();
}

InstanceSpec instance_from_json(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
  InstanceSpec spec;
  try {
    if (j.contains("name")) spec.name = j.at("name").get<std::string>();
    const auto& zeros = j.at("zeros");
    if (!zeros.is_array() || zeros.empty()) throw std::invalid_argument("\"zeros\" must be a non-empty array");
    for (const auto& z : zeros) {
      ZeroSpec zs;
      zs.angle = z.at("angle").get<double>();
      zs.multiplicity = z.contains("multiplicity") ? z.at("multiplicity").get<int>() : 1;
      if (zs.multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
      spec.zeros.push_back(zs);
    }
    if (j.contains("weights")) {
      const auto& w = j.at("weights");
      if (w.is_string()) {
        if (w.get<std::string>() != "uniform")
          throw std::invalid_argument("\"weights\" must be a number array or \"uniform\"");
      } else {
        spec.weights = w.get<std::vector<double>>();
      }
    }
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad instance field: ") + e.what());
  }
  return spec;
}

std::vector<InstanceSpec> read_instances(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path.string() + ": cannot open for reading");
  std::vector<InstanceSpec> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(instance_from_json(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.empty()) throw std::invalid_argument(path.string() + ": no instances");
  return out;
}

void write_instances(const std::filesystem::path& path, std::span<const InstanceSpec> specs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  for (const auto& s : specs) out << instance_to_json(s) << '\n';
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

InstanceSpec builtin_instance(std::string_view name) {
  if (name == "fig1" || name == "fig2") return three_point(std::string(name), std::nullopt);
  if (name == "fig3") return {"fig3", {{degrees(10.0), 1}, {degrees(115.0), 1}}, std::nullopt, {}};
  if (name == "zero-weight") return three_point("zero-weight", std::vector<double>{0.0, 0.5, 0.5});
  if (name == "sendov")
    return {"sendov", {{0.0, 1}, {2.0 * kPi / 3.0, 1}, {4.0 * kPi / 3.0, 1}},
            std::vector<double>{0.8, 0.1, 0.1}, {}};
  throw std::invalid_argument("unknown builtin instance '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() { return {"fig1", "fig2", "fig3", "zero-weight", "sendov"}; }

void SweepConfig::validate() const {
  if (count == 0) throw std::invalid_argument("sweep: count must be positive");
  if (n_min < 2) throw std::invalid_argument("sweep: minimum degree must be at least 2");
  if (n_max < n_min) throw std::invalid_argument("sweep: maximum degree below minimum");
  if (multiplicity_max < 1) throw std::invalid_argument("sweep: multiplicity bound must be positive");
  if (epsilons.empty()) throw std::invalid_argument("sweep: no epsilon values");
  for (double e : epsilons)
    if (!(e > 0.0 && e < 1.0)) throw std::invalid_argument("sweep: epsilon values must lie in (0, 1)");
  if (!(min_weight > 0.0) || static_cast<double>(n_max) * min_weight >= 1.0)
    throw std::invalid_argument("sweep: weight margin incompatible with maximum degree");
  if (!(min_separation > 0.0) || static_cast<double>(n_max) * min_separation >= kTwoPi)
    throw std::invalid_argument("sweep: angle separation incompatible with maximum degree");
}

InstanceSpec generate_instance(const SweepConfig& config, std::size_t index) {
  config.validate();
  auto rng = instance_rng(config.seed, index);
  std::uniform_int_distribution<std::size_t> degree_dist(config.n_min, config.n_max);
  const std::size_t n = degree_dist(rng);

  std::vector<int> mult;
  for (std::size_t remaining = n; remaining > 0;) {
    const int cap = static_cast<int>(std::min<std::size_t>(remaining, static_cast<std::size_t>(config.multiplicity_max)));
    const int m = std::uniform_int_distribution<int>(1, cap)(rng);
    mult.push_back(m);
    remaining -= static_cast<std::size_t>(m);
  }
  const std::size_t m_count = mult.size();

  std::uniform_real_distribution<double> angle_dist(0.0, kTwoPi);
  std::vector<double> angles(m_count);
  for (;;) {
    for (auto& a : angles) a = angle_dist(rng);
    std::sort(angles.begin(), angles.end());
    bool separated = true;
    for (std::size_t r = 0; r < m_count && separated; ++r) {
      const double next = r + 1 < m_count ? angles[r + 1] : angles[0] + kTwoPi;
      if (m_count > 1 && next - angles[r] < config.min_separation) separated = false;
    }
    if (separated) break;
  }

  // Uniform point of the simplex, shrunk so every weight keeps the margin.
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> raw(n);
  double total = 0.0;
  for (auto& x : raw) {
    x = expo(rng);
    total += x;
  }
  const double free_mass = 1.0 - static_cast<double>(n) * config.min_weight;
  std::vector<double> weights(n);
  double head = 0.0;
  double carry = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    weights[j] = config.min_weight + free_mass * (raw[j] / total);
    const double t = head + weights[j];
    carry += (head - t) + weights[j];
    head = t;
  }
  weights[n - 1] = (1.0 - head) - carry;

  InstanceSpec spec;
  spec.name = "sweep-" + std::to_string(index);
  for (std::size_t r = 0; r < m_count; ++r) spec.zeros.push_back({angles[r], mult[r]});
  spec.weights = std::move(weights);
  spec.seed = config.seed;
  return spec;
}

}  // namespace lune
