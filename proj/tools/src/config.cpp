#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace flopgw::cli {

namespace {

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::complex<double> parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("bad sample value '" + s + "'");
  }
}

std::string complex_string(std::complex<double> z) {
  std::ostringstream os;
  os << z.real() << ',' << z.imag();
  return os.str();
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

std::pair<std::complex<double>, std::complex<double>> parse_sample(const std::string& text) {
  std::istringstream is(text);
  std::string a, b, extra;
  if (!(is >> a >> b) || (is >> extra)) throw UsageError("sample needs two points 're,im re,im'");
  return {parse_complex(a), parse_complex(b)};
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw UsageError("format must be json, csv or text");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
    case Format::text:
      return "text";
  }
  return "json";
}

void apply_json(RunConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  try {
    if (j.contains("r")) {
      const auto& v = j["r"];
      const auto [lo, hi] = v.is_number_integer() ? std::pair{v.get<int>(), v.get<int>()} : parse_range(v.get<std::string>());
      cfg.r_min = lo;
      cfg.r_max = hi;
    }
    if (j.contains("order")) cfg.order = j["order"].get<long>();
    if (j.contains("dmax")) cfg.dmax = j["dmax"].get<int>();
    if (j.contains("rmatrix_order")) cfg.rmatrix_order = j["rmatrix_order"].get<int>();
    if (j.contains("max_m")) cfg.max_m = j["max_m"].get<int>();
    if (j.contains("max_n")) cfg.max_n = j["max_n"].get<int>();
    if (j.contains("dim")) cfg.dim = j["dim"].get<int>();
    if (j.contains("cutoff")) cfg.cutoff = j["cutoff"].get<int>();
    if (j.contains("sample")) std::tie(cfg.q1, cfg.q2) = parse_sample(j["sample"].get<std::string>());
    if (j.contains("tolerance")) cfg.tolerance = j["tolerance"].get<double>();
    if (j.contains("gap_tolerance")) cfg.gap_tolerance = j["gap_tolerance"].get<double>();
    if (j.contains("format")) cfg.format = parse_format(j["format"].get<std::string>());
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad config value: ") + e.what());
  }
}

std::optional<nlohmann::json> load_env_config() {
  const char* path = std::getenv("FLOPGW_CONFIG");
  if (path == nullptr || *path == '\0') return std::nullopt;
  std::ifstream in(path);
  if (!in) throw UsageError(std::string("cannot read config file ") + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("config file is not valid JSON: ") + e.what());
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.r_min < 1 || cfg.r_max < cfg.r_min) throw UsageError("r range must satisfy 1 <= min <= max");
  if (cfg.order < 1 || cfg.dmax < 1 || cfg.rmatrix_order < 1 || cfg.max_m < 1 || cfg.max_n < 2)
    throw UsageError("order, dmax, rmatrix-order, max-m must be positive and max-n at least 2");
  if (cfg.dim < 1 || cfg.cutoff < 1) throw UsageError("dim and cutoff must be positive");
  if (!(cfg.tolerance > 0) || !(cfg.gap_tolerance > 0)) throw UsageError("tolerances must be positive");
}

nlohmann::json to_json(const RunConfig& cfg) {
  return {{"r", std::to_string(cfg.r_min) + ".." + std::to_string(cfg.r_max)},
          {"order", cfg.order},
          {"dmax", cfg.dmax},
          {"rmatrix_order", cfg.rmatrix_order},
          {"max_m", cfg.max_m},
          {"max_n", cfg.max_n},
          {"dim", cfg.dim},
          {"cutoff", cfg.cutoff},
          {"sample", complex_string(cfg.q1) + " " + complex_string(cfg.q2)},
          {"tolerance", cfg.tolerance},
          {"gap_tolerance", cfg.gap_tolerance}};
}

}  // namespace flopgw::cli
