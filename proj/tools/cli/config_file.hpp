#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brl/annulus_green.hpp"
#include "brl/vec4.hpp"
#include "cli/json.hpp"

namespace brl::cli {

// Everything a run depends on. Values come from defaults, then an optional
// config file, then command-line flags.
struct ExperimentConfig {
  // [domain]
  double rho_in = 0.5;
  // [series]
  SeriesControl series = default_series_control();
  // [configuration]: explicit points, a ring, or a seeded sample.
  std::vector<Vec4> points;
  std::size_t ring_k = 0;
  double ring_r = 0.0;
  std::size_t sample_k = 0;
  std::uint64_t seed = 0;
  double sep = 0.0;
  // [scan]
  std::size_t k = 2;
  std::size_t grid_points = 512;
  double golden_tol = 1e-10;
  // [threshold]
  double rho_lo = 0.01;
  double rho_hi = 0.99;
  double threshold_tol = 1e-4;
  // [reduce] and [profile]
  std::vector<double> epsilons{0.2, 0.1, 0.05};
  double hessian_step = 1e-4;
  double x1_min = -1.0, x1_max = 1.0, x2_min = -1.0, x2_max = 1.0;
  std::size_t n1 = 101, n2 = 101;
  // [output] and [run]
  std::string out;
  unsigned workers = 0;
};

// Flat "key = value" text grouped in [sections]. Unknown sections or keys
// are rejected so that typos do not silently fall back to defaults.
void apply_config_file(const std::string& path, ExperimentConfig& cfg);

// Comma-separated coordinates, e.g. "0.7,0,0,0".
Vec4 parse_point(const std::string& text);
// Points separated by ';'.
std::vector<Vec4> parse_point_list(const std::string& text);
// Comma-separated numbers.
std::vector<double> parse_number_list(const std::string& text);

// Canonical snapshot used for hashing and sidecars.
json to_json(const ExperimentConfig& cfg);

}  // namespace brl::cli
