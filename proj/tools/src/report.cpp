#include "report.hpp"

#include <algorithm>

namespace flopgw::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string params_string(const nlohmann::json& p) {
  std::string out;
  for (auto it = p.begin(); it != p.end(); ++it) {
    if (!out.empty()) out += ' ';
    out += it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
  }
  return out;
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.pass; });
}

nlohmann::json cyc_json(const algebra::CycNumber& c) {
  if (c.is_rational()) return c.to_rational().to_string();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(x.to_string());
  return {{"order", c.order()}, {"coeffs", coeffs}};
}

nlohmann::json ratfunc_json(const algebra::RatFunc& f) {
  auto poly = [](const algebra::CPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (long k = 0; k <= p.degree(); ++k) out.push_back(cyc_json(p.coeff(static_cast<std::size_t>(k))));
    return out;
  };
  return {{"variable", f.root() == 1 ? "q" : "q^(1/" + std::to_string(f.root()) + ")"},
          {"numerator", poly(f.num())},
          {"denominator", poly(f.den())}};
}

void emit(const Report& report, Format format, std::ostream& os, bool with_timing) {
  switch (format) {
    case Format::json: {
      nlohmann::json entries = nlohmann::json::array();
      int passed = 0;
      for (const auto& e : report.entries) {
        entries.push_back({{"id", e.id},
                           {"anchor", e.anchor},
                           {"params", e.params.is_null() ? nlohmann::json::object() : e.params},
                           {"status", e.pass ? "pass" : "fail"},
                           {"residual", e.residual}});
        passed += e.pass ? 1 : 0;
      }
      nlohmann::json j{{"suite", report.suite}, {"entries", entries}};
      if (!report.config.is_null()) j["config"] = report.config;
      j["summary"] = {{"passed", passed}, {"failed", static_cast<int>(report.entries.size()) - passed}};
      if (with_timing) j["seconds"] = report.seconds;
      os << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << "suite,id,anchor,params,status,residual\n";
      for (const auto& e : report.entries)
        os << csv_field(report.suite) << ',' << csv_field(e.id) << ',' << csv_field(e.anchor) << ','
           << csv_field(params_string(e.params)) << ',' << (e.pass ? "pass" : "fail") << ',' << csv_field(e.residual)
           << '\n';
      break;
    case Format::text:
      for (const auto& e : report.entries) {
        os << (e.pass ? "✓ " : "✗ ") << e.id << " [" << e.anchor << "]";
        const auto p = params_string(e.params);
        if (!p.empty()) os << ' ' << p;
        if (!e.pass) os << " residual: " << e.residual;
        os << '\n';
      }
      if (with_timing) os << "elapsed " << report.seconds << " s\n";
      break;
  }
}

}  // namespace flopgw::cli
