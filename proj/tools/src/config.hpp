#pragma once

#include <complex>
#include <optional>
#include <string>

#include <json.hpp>

namespace flopgw::cli {

enum class Format { json, csv, text };

struct RunConfig {
  int r_min = 1;
  int r_max = 3;
  long order = 10;
  int dmax = 10;
  int rmatrix_order = 2;
  int max_m = 7;
  int max_n = 6;
  int dim = 2;
  int cutoff = 3;
  std::complex<double> q1{0.3, 0.0};
  std::complex<double> q2{0.7, 0.0};
  double tolerance = 1e-9;
  double gap_tolerance = 1e-6;
  Format format = Format::json;
  std::string out;
  bool timing = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "a..b" or "a".
std::pair<int, int> parse_range(const std::string& text);
/// "re,im re,im" for q1 and q2.
std::pair<std::complex<double>, std::complex<double>> parse_sample(const std::string& text);
Format parse_format(const std::string& text);
std::string to_string(Format f);

/// Overlays the keys present in a JSON object onto cfg.
void apply_json(RunConfig& cfg, const nlohmann::json& j);
/// Reads the file named by FLOPGW_CONFIG, if set.
std::optional<nlohmann::json> load_env_config();

void validate(const RunConfig& cfg);
nlohmann::json to_json(const RunConfig& cfg);

}  // namespace flopgw::cli
