#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "config.hpp"
#include "suites.hpp"

using namespace flopgw::cli;

namespace {

struct FlagValues {
  std::string r, sample, format, out;
  long order = 0;
  int dmax = 0, rmatrix_order = 0, max_m = 0, max_n = 0, dim = 0, cutoff = 0;
  double tolerance = 0.0;
};

void add_common_flags(CLI::App* sub, FlagValues& v) {
  sub->add_option("--r", v.r, "r or a range a..b (default 1..3)");
  sub->add_option("--order", v.order, "series truncation order (default 10)");
  sub->add_option("--dmax", v.dmax, "largest degree d in tables (default 10)");
  sub->add_option("--rmatrix-order", v.rmatrix_order, "R-matrix order N (default 2)");
  sub->add_option("--max-m", v.max_m, "largest derivative order m (default 7)");
  sub->add_option("--max-n", v.max_n, "largest insertion count n (default 6)");
  sub->add_option("--dim", v.dim, "quantization: dimension of H (default 2)");
  sub->add_option("--cutoff", v.cutoff, "quantization: z-exponent cutoff K (default 3)");
  sub->add_option("--sample", v.sample, "q1 and q2 as 're,im re,im' (default '0.3,0 0.7,0')");
  sub->add_option("--tolerance", v.tolerance, "numeric agreement tolerance (default 1e-9)");
  sub->add_option("--format", v.format, "json, csv or text (default json)");
  sub->add_option("--out", v.out, "write to a file instead of stdout");
  sub->add_flag("--timing", "include elapsed time in the report");
}

RunConfig resolve(const CLI::App* sub, const FlagValues& v) {
  RunConfig cfg;
  if (auto file = load_env_config()) apply_json(cfg, *file);
  auto given = [&](const char* name) { return sub->count(name) > 0; };
  if (given("--r")) std::tie(cfg.r_min, cfg.r_max) = parse_range(v.r);
  if (given("--order")) cfg.order = v.order;
  if (given("--dmax")) cfg.dmax = v.dmax;
  if (given("--rmatrix-order")) cfg.rmatrix_order = v.rmatrix_order;
  if (given("--max-m")) cfg.max_m = v.max_m;
  if (given("--max-n")) cfg.max_n = v.max_n;
  if (given("--dim")) cfg.dim = v.dim;
  if (given("--cutoff")) cfg.cutoff = v.cutoff;
  if (given("--sample")) std::tie(cfg.q1, cfg.q2) = parse_sample(v.sample);
  if (given("--tolerance")) cfg.tolerance = v.tolerance;
  if (given("--format")) cfg.format = parse_format(v.format);
  if (given("--out")) cfg.out = v.out;
  cfg.timing = given("--timing");
  validate(cfg);
  return cfg;
}

template <class Fn>
void with_output(const RunConfig& cfg, Fn&& fn) {
  if (cfg.out.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw UsageError("cannot open " + cfg.out + " for writing");
  fn(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of genus-zero and genus-one invariants of local flops"};
  app.require_subcommand(1);

  FlagValues verify_flags, table_flags, dump_flags;
  std::string suite, table_name, dump_name;

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite, "appendix, flop, batyrev, cohomology, quantization or all")
      ->required()
      ->check(CLI::IsMember({"appendix", "flop", "batyrev", "cohomology", "quantization", "all"}));
  add_common_flags(verify, verify_flags);

  auto* table = app.add_subcommand("table", "emit invariant tables");
  table->add_option("name", table_name, "genus1")->required()->check(CLI::IsMember({"genus1"}));
  add_common_flags(table, table_flags);

  auto* dump = app.add_subcommand("dump", "dump computed forms");
  dump->add_option("what", dump_name, "dG")->required()->check(CLI::IsMember({"dG"}));
  add_common_flags(dump, dump_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      const auto cfg = resolve(verify, verify_flags);
      const auto report = run_suite(suite, cfg);
      with_output(cfg, [&](std::ostream& os) { emit(report, cfg.format, os, cfg.timing); });
      for (const auto& e : report.entries)
        if (!e.pass) std::cerr << "FAIL " << e.anchor << ' ' << e.id << ' ' << e.params.dump() << ' ' << e.residual << '\n';
      return report.all_pass() ? 0 : 1;
    }
    if (table->parsed()) {
      const auto cfg = resolve(table, table_flags);
      with_output(cfg, [&](std::ostream& os) { emit_genus1_table(cfg, os); });
      return 0;
    }
    const auto cfg = resolve(dump, dump_flags);
    with_output(cfg, [&](std::ostream& os) { emit_dg_dump(cfg, os); });
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
