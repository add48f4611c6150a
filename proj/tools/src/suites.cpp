#include "suites.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "flopgw/algebra/calculus.hpp"
#include "flopgw/batyrev/eigen.hpp"
#include "flopgw/batyrev/quantum_ring.hpp"
#include "flopgw/cohomology/coh_ring.hpp"
#include "flopgw/error.hpp"
#include "flopgw/flop/g_function.hpp"
#include "flopgw/flop/invariance.hpp"
#include "flopgw/givental/connection.hpp"
#include "flopgw/givental/genus_one.hpp"
#include "flopgw/givental/r_matrix.hpp"
#include "flopgw/quantize/fock.hpp"
#include "flopgw/quantize/loop_space.hpp"

namespace flopgw::cli {

using algebra::Rational;
using nlohmann::json;

namespace {

// The body returns an empty string on success and a residual description otherwise.
Entry check(std::string id, std::string anchor, json params, const std::function<std::string()>& body) {
  Entry e{std::move(id), std::move(anchor), std::move(params), false, ""};
  try {
    e.residual = body();
    e.pass = e.residual.empty();
    if (e.pass) e.residual = "0";
  } catch (const std::exception& ex) {
    e.residual = std::string("error: ") + ex.what();
  }
  return e;
}

std::string pos(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string expect_eq(const Rational& got, const Rational& want) {
  return got == want ? "" : "got " + got.to_string() + ", expected " + want.to_string();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"appendix", "flop", "batyrev", "cohomology", "quantization"};
  return names;
}

std::vector<Entry> appendix_cell(int r, const RunConfig& cfg) {
  using namespace givental;
  const json P{{"r", r}};
  std::vector<Entry> out;
  CanonicalFrame f;
  RatMatrix conn;
  Matrix off;
  std::vector<algebra::EquivScalar> diag;
  out.push_back(check("canonical-frame", "appendix/canonical-frame", P, [&]() -> std::string {
    f = build_frame(r);
    conn = connection_form(f);
    off = r1_offdiagonal(f, conn);
    diag = r1_diagonal(conn, off);
    return "";
  }));
  if (!out.back().pass) return out;
  const int n = r + 1;
  const auto one = algebra::EquivScalar(f.ctx.constant(algebra::CycNumber(1)));

  out.push_back(check("characteristic-polynomial", "appendix/characteristic-polynomial", P, [&]() -> std::string {
    for (int i = 0; i < n; ++i)
      if (!charpoly_residual(f, i).is_zero()) return "root " + std::to_string(i) + ": " + charpoly_residual(f, i).to_string();
    return "";
  }));
  out.push_back(check("charpoly-coefficients", "appendix/charpoly-coefficients", P, [&]() -> std::string {
    const auto e = charpoly_coefficients(f);
    const auto closed = charpoly_coefficients_closed_form(f.ctx);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!(e[k] == closed[k])) return "e_" + std::to_string(k) + " differs: " + (e[k] - closed[k]).to_string();
      for (const auto& c : algebra::fit_polynomial_in(e[k], f.ctx.g(), r + 2))
        if (!c.is_rational()) return "e_" + std::to_string(k) + " has irrational coefficient in G";
    }
    return "";
  }));
  out.push_back(check("pairing-lemmas", "appendix/pairing-lemmas", P, [&]() -> std::string {
    if (!(equiv_pairing(f.ctx, r, 0) == f.ctx.lambda(-(r + 1)))) return "(p^r, 1) = " + equiv_pairing(f.ctx, r, 0).to_string();
    if (!equiv_pairing(f.ctx, r, 1).is_zero()) return "(p^r, p) = " + equiv_pairing(f.ctx, r, 1).to_string();
    for (int k = 0; k < r; ++k)
      if (!lemma_zero_value(f.ctx, k).is_zero()) return "k=" + std::to_string(k) + ": " + lemma_zero_value(f.ctx, k).to_string();
    return "";
  }));
  out.push_back(check("idempotents", "appendix/idempotents", P, [&]() -> std::string {
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      for (int j = 0; j < n; ++j) {
        const auto d = du(f, j, f.epsilon[ui]);
        if (!(d == (i == j ? one : algebra::EquivScalar()))) return "du_" + std::to_string(j) + "(e_" + std::to_string(i) + ") = " + d.to_string();
        const auto e = pair(f.ctx, f.epsilon[ui], f.epsilon[static_cast<std::size_t>(j)]);
        if (i != j && !e.is_zero()) return "(e_i, e_j) at " + pos(i, j) + " = " + e.to_string();
        if (i == j && !(e == epsilon_norm_closed_form(f, i))) return "(e_i, e_i) differs at i=" + std::to_string(i);
      }
    }
    return "";
  }));
  out.push_back(check("delta-product", "appendix/delta-product", P, [&]() -> std::string {
    const auto a = product_delta(f);
    const auto b = product_delta_closed_form(f.ctx);
    return a == b ? "" : (a - b).to_string();
  }));
  out.push_back(check("log-delta-term", "appendix/log-delta-term", P, [&]() -> std::string {
    const auto a = term_log_delta(f);
    const auto b = term_log_delta_closed_form(f.ctx);
    return a == b ? "" : (a - b).to_string();
  }));
  out.push_back(check("c-minus-one-term", "appendix/c-minus-one-term", P, [&]() -> std::string {
    const auto a = term_c_minus_one(f).dt1_limit;
    const auto b = term_c_minus_one_closed_form(f.ctx);
    return a == b ? "" : (a - b).to_string();
  }));
  out.push_back(check("connection-form", "appendix/connection-form", P, [&]() -> std::string {
    const auto closed = connection_closed_form(f.ctx);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
        if (!(conn[ui][uj] + conn[uj][ui]).is_zero()) return "not antisymmetric at " + pos(i, j);
        if (!(conn[ui][uj] + closed[ui][uj]).is_zero()) return "differs from -closed form at " + pos(i, j);
      }
    return "";
  }));
  out.push_back(check("r1-offdiagonal", "appendix/r1-offdiagonal", P, [&]() -> std::string {
    const auto closed = r1_offdiagonal_closed_form(f);
    for (std::size_t i = 0; i < off.size(); ++i)
      for (std::size_t j = 0; j < off.size(); ++j)
        if (i != j && !(off[i][j] + closed[i][j]).is_zero())
          return "differs from -closed form at " + pos(static_cast<int>(i), static_cast<int>(j));
    return "";
  }));
  out.push_back(check("r1-diagonal", "appendix/r1-diagonal", P, [&]() -> std::string {
    const auto closed = r1_diagonal_closed_form(f.ctx);
    for (std::size_t i = 0; i < diag.size(); ++i)
      if (!(diag[i] == closed[i])) return "i=" + std::to_string(i) + ": " + (diag[i] - closed[i]).to_string();
    return "";
  }));
  out.push_back(check("xi-constant", "appendix/xi-constant", P, [&]() -> std::string {
    const auto x = xi_constant(r);
    if (!x.twisted_sum.is_zero()) return "twisted sum " + x.twisted_sum.to_string();
    if (!x.value.is_rational()) return "irrational value " + x.value.to_string();
    return expect_eq(x.value.to_rational(), xi_constant_closed_form(r));
  }));
  out.push_back(check("genus-one-form", "appendix/genus-one-theorem", P, [&]() -> std::string {
    const auto g = genus_one_form(f, diag);
    const auto closed = genus_one_closed_form(r);
    if (!(g.coefficient == closed)) return "dG - closed = " + (g.coefficient - closed).to_string();
    return expect_eq(g.constant, Rational(-r * (r + 1), 48));
  }));
  const json PN{{"r", r}, {"rmatrix_order", cfg.rmatrix_order}};
  out.push_back(check("r-matrix", "appendix/r-matrix-recursion", PN, [&]() -> std::string {
    const auto orders = r_matrix_recursion(f, conn, cfg.rmatrix_order);
    for (std::size_t i = 0; i < off.size(); ++i)
      for (std::size_t j = 0; j < off.size(); ++j)
        if (!(orders[0].entries[i][j] == (i == j ? diag[i] : off[i][j])))
          return "R_1 differs from R1 at " + pos(static_cast<int>(i), static_cast<int>(j));
    for (int k = 1; k <= cfg.rmatrix_order; ++k)
      if (!is_zero(unitarity_residual(orders, k))) return "unitarity fails at n=" + std::to_string(k);
    return "";
  }));
  return out;
}

std::vector<Entry> flop_cell(int r, const RunConfig& cfg) {
  using namespace flop;
  const json P{{"r", r}};
  std::vector<Entry> out;
  out.push_back(check("reflection", "flop/reflection", P, [&]() -> std::string {
    return verify_reflection(r) ? "" : "G(q) + G(1/q) = " + reflection_sum(r).to_string();
  }));
  out.push_back(check("first-derivative", "flop/first-derivative", P, [&]() -> std::string {
    const auto g = g_function(r).value;
    const RatFunc want = g + RatFunc(-parity_sign(r)) * g * g;
    const auto got = delta_power_g(r, 1);
    return got == want ? "" : (got - want).to_string();
  }));
  const json PM{{"r", r}, {"max_m", cfg.max_m}};
  out.push_back(check("derivative-closure", "flop/derivative-closure", PM, [&]() -> std::string {
    for (int m = 1; m <= cfg.max_m; ++m) {
      const auto a = delta_g_polynomial(r, m);
      if (a != delta_g_polynomial_direct(r, m)) return "m=" + std::to_string(m) + ": recursion and fit differ";
      for (const auto& c : a)
        if (!c.is_integer()) return "m=" + std::to_string(m) + ": non-integral coefficient " + c.to_string();
    }
    return "";
  }));
  out.push_back(check("reciprocal-antisymmetry", "flop/reciprocal-antisymmetry", PM, [&]() -> std::string {
    for (int m = 1; m <= cfg.max_m; ++m)
      if (!reciprocal_antisymmetry(r, m)) return "m=" + std::to_string(m);
    return "";
  }));
  out.push_back(check("npoint-invariance", "flop/genus-one-npoint", json{{"r", r}, {"max_n", cfg.max_n}}, [&]() -> std::string {
    for (int k = 2; k <= cfg.max_n; ++k)
      if (!genus1_npoint_invariance(r, k)) return "n=" + std::to_string(k);
    return "";
  }));
  out.push_back(check("onepoint-defect", "flop/genus-one-defect", P, [&]() -> std::string {
    return expect_eq(genus1_onepoint_defect(r), Rational(0));
  }));
  if (r == 1)
    out.push_back(check("fp-generating-function", "flop/fp-generating-function", PM, [&]() -> std::string {
      for (int m = 1; m <= cfg.max_m; m += 2)
        if (!fp_generating_invariance(m)) return "m=" + std::to_string(m);
      return "";
    }));
  return out;
}

std::vector<Entry> cohomology_cell(int r, const RunConfig&) {
  using namespace cohomology;
  const json P{{"r", r}};
  std::vector<Entry> out;
  out.push_back(check("chern-flop-identity", "cohomology/chern-flop-identity", P,
                      [&] { return expect_eq(chern_flop_identity(r), Rational(-(r + 1))); }));
  out.push_back(check("degree-zero-genus-one", "cohomology/degree-zero-genus-one", P, [&] {
    const CohClass alpha = Rational(2) * CohClass::h(r) - CohClass::xi(r);
    return expect_eq(genus1_degree0(alpha), Rational(r + 1, 24));
  }));
  out.push_back(check("pairing-unimodular", "cohomology/pairing", P, [&]() -> std::string {
    const Rational d = determinant(pairing_matrix(r));
    return d == Rational(1) || d == Rational(-1) ? "" : "det = " + d.to_string();
  }));
  if (r == 1)
    out.push_back(check("c3-minus-c2c1", "cohomology/c3-minus-c2c1", P,
                        [&] { return expect_eq(c3_minus_c2c1(1), c3_minus_c2c1_flop_side(1)); }));
  return out;
}

std::vector<Entry> batyrev_cell(int r, const RunConfig& cfg) {
  using namespace batyrev;
  const json P{{"r", r}, {"order", cfg.order}};
  std::vector<Entry> out;
  out.push_back(check("eigenvalue-relations", "batyrev/eigenvalues", P, [&]() -> std::string {
    const auto rep = verify_eigen_relations(r, cfg.order);
    if (rep.failures.empty()) return "";
    const auto& f = rep.failures.front();
    return std::to_string(rep.failures.size()) + " failures; first (i,j)=" + pos(f.i, f.j) + " relation " +
           std::to_string(f.relation) + " coefficient " + f.coefficient;
  }));
  out.push_back(check("frame-ratio", "batyrev/frame-ratio", P, [&]() -> std::string {
    const auto field = eigen_field(r);
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= r + 1; ++j) {
        const auto e = eigen_formulas(r, i, j, cfg.order);
        const auto u = algebra::FracSeries::monomial(r, cfg.order, 1, 0, algebra::CycNumber::zeta(field, static_cast<long>(r + 2) * i));
        if (!(e.h * (algebra::FracSeries::constant(r, cfg.order, algebra::CycNumber(1)) + u) == u * e.xi))
          return "h/xi != u/(1+u) at " + pos(i, j);
      }
    return "";
  }));
  out.push_back(check("matrices-commute", "batyrev/quantum-ring", json{{"r", r}}, [&]() -> std::string {
    const auto mh = quantum_mult_matrix(r, Divisor::h);
    const auto mx = quantum_mult_matrix(r, Divisor::xi);
    const auto a = mat_mul(mh, mx);
    const auto b = mat_mul(mx, mh);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        if (!(a[i][j] == b[i][j])) return "commutator nonzero at " + pos(static_cast<int>(i), static_cast<int>(j));
    return "";
  }));
  std::ostringstream sample;
  sample << cfg.q1.real() << ',' << cfg.q1.imag() << ' ' << cfg.q2.real() << ',' << cfg.q2.imag();
  const json PS{{"r", r}, {"sample", sample.str()}, {"tolerance", cfg.tolerance}, {"gap_tolerance", cfg.gap_tolerance}};
  out.push_back(check("semisimplicity", "batyrev/semisimplicity", PS, [&]() -> std::string {
    const auto rep = semisimplicity_certificate(r, cfg.q1, cfg.q2, cfg.gap_tolerance, cfg.tolerance);
    if (rep.status == CertificateStatus::certified) return "";
    std::ostringstream os;
    os << to_string(rep.status) << ": min gap " << rep.min_gap << ", max mismatch " << rep.max_mismatch;
    return os.str();
  }));
  return out;
}

std::vector<Entry> quantization_cell(const RunConfig& cfg) {
  using namespace quantize;
  const int N = cfg.dim;
  const int K = cfg.cutoff;
  const json P{{"dim", N}, {"cutoff", K}};
  std::vector<Entry> out;
  out.push_back(check("string-hamiltonian", "quantization/string-operator", P, [&]() -> std::string {
    QuadHamiltonian want;
    for (int i = 0; i < N; ++i) {
      want.add({false, i, 0}, {false, i, 0}, Rational(-1, 2));
      for (int m = 0; m < K; ++m) want.add({false, i, m + 1}, {true, i, m}, Rational(-1));
    }
    const auto got = hamiltonian_of(z_power(N, -1), N, K);
    if (!(got == want)) return "got " + got.to_string();
    FockPolynomial w;
    for (int i = 0; i < N; ++i) w += Rational(-1, 2) * (FockPolynomial::variable(i, 0) * FockPolynomial::variable(i, 0)).times_hbar(-1);
    const auto applied = quantize::quantize(got)(FockPolynomial::constant(Rational(1)));
    return applied == w ? "" : "operator on 1 gives " + applied.to_string();
  }));
  out.push_back(check("cocycle-table", "quantization/cocycle", P, [&]() -> std::string {
    std::vector<QuadHamiltonian::Index> idx;
    for (int i = 0; i < N; ++i)
      for (int k = 0; k <= K; ++k) idx.emplace_back(i, k);
    int bad = 0, total = 0;
    std::string first;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a; b < idx.size(); ++b)
        for (std::size_t c = 0; c < idx.size(); ++c)
          for (std::size_t d = c; d < idx.size(); ++d) {
            QuadHamiltonian p1, p2;
            p1.add({true, idx[a].first, idx[a].second}, {true, idx[b].first, idx[b].second}, Rational(1));
            p2.add({false, idx[c].first, idx[c].second}, {false, idx[d].first, idx[d].second}, Rational(1));
            const long want = (a == c && b == d ? 1 : 0) + (a == d && b == c ? 1 : 0);
            ++total;
            if (commutator_cocycle(p1, p2) != Rational(want)) {
              if (bad++ == 0) first = "first at " + pos(static_cast<int>(a), static_cast<int>(b)) + "x" + pos(static_cast<int>(c), static_cast<int>(d));
            }
          }
    return bad == 0 ? "" : std::to_string(bad) + " of " + std::to_string(total) + " entries differ; " + first;
  }));
  out.push_back(check("lie-homomorphism", "quantization/lie-homomorphism", json{{"dim", 2}, {"cutoff", K}}, [&]() -> std::string {
    const RatMat g{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    const RatMat lower{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}};
    const RatMat upper{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}};
    const Metric metric(g);
    const int wide = K + 6;
    const std::vector<LaurentMatrix> ops{z_power(2, -1), z_power(2, -3), z_power_times(1, lower), z_power_times(-1, upper),
                                         z_power_times(1, upper)};
    for (std::size_t a = 0; a < ops.size(); ++a)
      for (std::size_t b = 0; b < ops.size(); ++b) {
        const auto lhs = hamiltonian_of(commutator(ops[a], ops[b]), 2, wide, metric).restricted(K);
        const auto rhs = poisson_bracket(hamiltonian_of(ops[a], 2, wide, metric), hamiltonian_of(ops[b], 2, wide, metric)).restricted(K);
        if (!(lhs == rhs)) return "pair " + pos(static_cast<int>(a), static_cast<int>(b)) + " differs";
      }
    return "";
  }));
  out.push_back(check("dilaton-shift", "quantization/dilaton-shift", P, [&]() -> std::string {
    const LoopVector zero(N, K);
    const auto t = dilaton_shift(zero);
    if (!(t == LoopVector::basis(N, K, 0, 1))) return "shift of 0 is " + t.to_string();
    LoopVector v(N, K);
    for (int i = 0; i < N; ++i)
      for (int k = -K - 1; k <= K; ++k) v.add(i, k, Rational(i + 1, k + K + 3));
    return dilaton_unshift(dilaton_shift(v)) == v ? "" : "round trip changed the vector";
  }));
  return out;
}

Report run_suite(const std::string& suite, const RunConfig& cfg) {
  const auto& names = suite_names();
  std::vector<std::string> selected;
  if (suite == "all") selected = names;
  else if (std::find(names.begin(), names.end(), suite) != names.end()) selected = {suite};
  else throw UsageError("unknown suite '" + suite + "'");

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::future<std::vector<Entry>>> cells;
  for (const auto& s : selected) {
    if (s == "quantization") {
      cells.push_back(std::async(std::launch::async, [&cfg] { return quantization_cell(cfg); }));
      continue;
    }
    for (int r = cfg.r_min; r <= cfg.r_max; ++r) {
      auto fn = s == "appendix" ? appendix_cell : s == "flop" ? flop_cell : s == "batyrev" ? batyrev_cell : cohomology_cell;
      cells.push_back(std::async(std::launch::async, [fn, r, &cfg] { return fn(r, cfg); }));
    }
  }
  Report rep{suite, to_json(cfg), {}, 0.0};
  for (auto& c : cells) {
    auto entries = c.get();
    std::move(entries.begin(), entries.end(), std::back_inserter(rep.entries));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

void emit_genus1_table(const RunConfig& cfg, std::ostream& os) {
  std::vector<std::future<std::vector<Rational>>> cells;
  for (int r = cfg.r_min; r <= cfg.r_max; ++r)
    cells.push_back(std::async(std::launch::async, [r, &cfg] { return givental::genus_one_table(r, cfg.dmax); }));
  const bool single = cfg.r_min == cfg.r_max;
  json rows = json::array();
  if (cfg.format == Format::csv) os << (single ? "d,invariant\n" : "r,d,invariant\n");
  for (int r = cfg.r_min; r <= cfg.r_max; ++r) {
    const auto values = cells[static_cast<std::size_t>(r - cfg.r_min)].get();
    for (int d = 1; d <= cfg.dmax; ++d) {
      const auto& v = values[static_cast<std::size_t>(d - 1)];
      switch (cfg.format) {
        case Format::csv:
          if (!single) os << r << ',';
          os << d << ',' << v.to_string() << '\n';
          break;
        case Format::text:
          os << "r=" << r << " d=" << d << "  " << v.to_string() << '\n';
          break;
        case Format::json:
          rows.push_back({{"r", r}, {"d", d}, {"invariant", v.to_string()}});
          break;
      }
    }
  }
  if (cfg.format == Format::json) os << json{{"table", "genus1"}, {"rows", rows}}.dump(2) << '\n';
}

void emit_dg_dump(const RunConfig& cfg, std::ostream& os) {
  std::vector<std::future<givental::GenusOneForm>> cells;
  for (int r = cfg.r_min; r <= cfg.r_max; ++r)
    cells.push_back(std::async(std::launch::async, [r] { return givental::genus_one_form(r); }));
  json items = json::array();
  if (cfg.format == Format::csv) os << "r,coefficient,constant,closed_form\n";
  for (int r = cfg.r_min; r <= cfg.r_max; ++r) {
    const auto g = cells[static_cast<std::size_t>(r - cfg.r_min)].get();
    const bool match = g.coefficient == givental::genus_one_closed_form(r);
    switch (cfg.format) {
      case Format::csv:
        os << r << ",\"" << g.coefficient.to_string() << "\"," << g.constant.to_string() << ',' << (match ? "match" : "differ")
           << '\n';
        break;
      case Format::text:
        os << "r=" << r << "  dG = (" << g.coefficient.to_string() << ") dlog q  constant " << g.constant.to_string()
           << (match ? "  ✓" : "  ✗") << '\n';
        break;
      case Format::json:
        items.push_back({{"r", r},
                         {"coefficient", ratfunc_json(g.coefficient)},
                         {"constant", g.constant.to_string()},
                         {"matches_closed_form", match}});
        break;
    }
  }
  if (cfg.format == Format::json) os << json{{"dump", "dG"}, {"forms", items}}.dump(2) << '\n';
}

}  // namespace flopgw::cli
