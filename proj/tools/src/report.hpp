#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "flopgw/algebra/ratfunc.hpp"

namespace flopgw::cli {

struct Entry {
  std::string id;
  std::string anchor;
  nlohmann::json params;
  bool pass = false;
  std::string residual;
};

struct Report {
  std::string suite;
  nlohmann::json config;
  std::vector<Entry> entries;
  double seconds = 0.0;

  bool all_pass() const;
};

/// Rationals as "p/q", cyclotomics as {"order", "coeffs"}.
nlohmann::json cyc_json(const algebra::CycNumber& c);
nlohmann::json ratfunc_json(const algebra::RatFunc& f);

void emit(const Report& report, Format format, std::ostream& os, bool with_timing = false);

}  // namespace flopgw::cli
