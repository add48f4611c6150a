#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace flopgw::cli {

/// Canonical suite order.
const std::vector<std::string>& suite_names();

std::vector<Entry> appendix_cell(int r, const RunConfig& cfg);
std::vector<Entry> flop_cell(int r, const RunConfig& cfg);
std::vector<Entry> cohomology_cell(int r, const RunConfig& cfg);
std::vector<Entry> batyrev_cell(int r, const RunConfig& cfg);
std::vector<Entry> quantization_cell(const RunConfig& cfg);

/// Runs one suite or "all"; cells run concurrently and merge in canonical order.
Report run_suite(const std::string& suite, const RunConfig& cfg);

void emit_genus1_table(const RunConfig& cfg, std::ostream& os);
void emit_dg_dump(const RunConfig& cfg, std::ostream& os);

}  // namespace flopgw::cli
