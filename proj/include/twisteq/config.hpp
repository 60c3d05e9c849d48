#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "twisteq/types.hpp"

namespace twisteq {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One named model of a run grid.
struct ModelSpec {
  RepParams params;
  std::string name;
};

// Flat key = value grammar, '#' comments. Keys:
//   models         comma list: principal:<+|->:<Im nu>, complementary:<nu>,
//                  discrete:<nonzero integer nu>
//   m_grid         space-separated reals (nonzero)
//   n_max          bound-certificate sweep ceiling
//   growth_range   two ints: low high (weighted-growth sweep)
//   sobolev_orders space-separated reals >= 0
//   truncation     oracle window radius K
//   tol            positive residual tolerance
//   seed           unsigned integer
//   out            output directory
//   support_radius radius of generated data
//   num_g          generated vectors per grid point
//   gap            spectral gap for complementary models
//   threads        0 = library default
struct RunConfig {
  std::vector<ModelSpec> models;
  std::vector<double> m_grid = {0.5, 1.0, 2.7, -1.3};
  int n_max = 1000;
  int growth_lo = 100;
  int growth_hi = 2000;
  std::vector<double> sobolev_orders = {0.0, 1.0, 2.0};
  int truncation = 240;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  std::filesystem::path out = "out";
  int support_radius = 60;
  int num_g = 20;
  double gap = 0.9;
  int threads = 0;

  void validate() const;
};

RunConfig default_config();  // the acceptance-style model grid

RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

// "principal:+:2" etc.; gap applies to complementary models.
ModelSpec parse_model_spec(const std::string& spec, double gap);

}  // namespace twisteq
