// qtwist: command-line front end for the quartic-twist library.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 internal consistency failure (including a failed verify-all).

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtwist/acceptance.hpp"

using json = nlohmann::json;
using namespace qtwist;

namespace {

struct Options {
  std::string field = "4";
  std::string A = "0,1";
  std::string B = "0";
  int ext = 1;
  int n = 1;
  int m = 1;
  int degA = 1;
  int degB = 1;
  int max_deg = 15;
  int q_degree = 0;
  unsigned threads = 1;
  bool csv = false;
  bool timing = false;
};

json poly_json(const UniPoly& f) {
  return {{"coeffs", f.to_string()}, {"degree", f.degree() ? json(*f.degree()) : json(nullptr)}};
}

json field_json(const FieldCtx& F) {
  return {{"m", F.degree()}, {"modulus", F.describe()}, {"size", F.size()}};
}

json checks_json(const std::vector<Check>& checks) {
  json out = json::object();
  for (const auto& c : checks) out[c.name] = c.passed;
  return out;
}

json family_json(const FamilyInstance& f) {
  json out{{"name", f.name},
           {"field_degree", f.field_degree},
           {"Q", f.Q},
           {"genus_C", f.genus_C},
           {"genus_H", f.genus_H},
           {"expected_rank", f.expected_rank},
           {"rank", f.rank},
           {"hypothesis", f.hypothesis},
           {"count_C", f.count_C ? json(*f.count_C) : json(nullptr)}};
  if (f.A) out["A"] = poly_json(*f.A);
  if (f.B) out["B"] = poly_json(*f.B);
  json ledger = json::array();
  for (const auto& c : f.checks) ledger.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  out["ledger"] = ledger;
  return out;
}

json fiber_json(const FiberReport& r) {
  return {{"type", r.kodaira.name()},   {"components", r.kodaira.components()},
          {"euler_n", r.euler_n},       {"b2", r.b2},
          {"r", r.geometric_rank},      {"shioda_tate_ok", r.shioda_tate_ok}};
}

json rank_json(const RankReport& r) {
  return {{"gC", r.gC},
          {"gH", r.gH},
          {"rank", r.rank_arith},
          {"hypothesis", to_string(r.hypothesis)},
          {"Q", r.Q},
          {"E_extremality", to_string(r.e_extremality)},
          {"C_count", r.c_count ? json(*r.c_count) : json(nullptr)},
          {"C_extremality", r.c_extremality ? json(to_string(*r.c_extremality)) : json(nullptr)}};
}

struct Pair {
  const FieldCtx* F;
  UniPoly A, B;
};

Pair read_pair(const Options& o) {
  const auto& F = parse_field_spec(o.field);
  return {&F, parse_poly(F, o.A), parse_poly(F, o.B)};
}

json inputs_json(const Options& o) { return {{"field", o.field}, {"A", o.A}, {"B", o.B}}; }

/// Default rank field: the smallest even-degree extension of the field of definition.
std::uint64_t rank_Q(const FieldCtx& F, int q_degree) {
  int k = q_degree;
  if (k == 0) k = (F.degree() % 2 == 0) ? F.degree() : 2 * F.degree();
  require(k >= 2 && k <= 62, "--Q-degree out of range");
  return std::uint64_t{1} << k;
}

json cmd_field(const Options& o) {
  const auto& F = parse_field_spec(o.field);
  json out = field_json(F);
  out["default_modulus"] = F.modulus() == gf2x::smallest_irreducible(F.degree());
  return out;
}

json cmd_curve_stats(const Options& o, json& checks) {
  const auto [F, A, B] = read_pair(o);
  const auto st = tower_stats(A, B, o.ext);
  json out{{"A_normalized", poly_json(st.A)},
           {"B_normalized", poly_json(st.B)},
           {"genus_H", st.genus_H},
           {"genus_C", st.genus_C},
           {"count_H", st.count_H},
           {"count_C", st.count_C},
           {"count_field_degree", st.count_field_degree},
           {"classification", st.classification ? json(to_string(*st.classification)) : json(nullptr)}};
  if (st.count_field_degree % 2 == 0) {
    const auto Q = std::uint64_t{1} << st.count_field_degree;
    checks["weil_bound_H"] = weil_bound_holds(st.count_H, st.genus_H, Q);
    checks["weil_bound_C"] = weil_bound_holds(st.count_C, st.genus_C, Q);
  }
  return out;
}

json cmd_e_count(const Options& o, json& checks) {
  require(o.n >= 1 && 2 * o.n <= kMaxFieldDegree, "n must be in [1, 12]");
  const auto formula = e_point_count_formula(o.n);
  const auto brute = e_count_bruteforce(field(2 * o.n));
  checks["formula_matches_bruteforce"] = formula == brute;
  return {{"n", o.n}, {"formula", formula}, {"brute", brute}, {"extremal", to_string(e_extremality(o.n))}};
}

json cmd_twist_build(const Options& o, json& checks) {
  const auto [F, A, B] = read_pair(o);
  const auto T = build_quartic_twist(A, B);
  const auto& W = T.model();
  checks["discriminant_is_1"] = W.discriminant() == UniPoly::constant(F->one());
  checks["j_is_0"] = W.c4().is_zero();
  return {{"a1", poly_json(W.a1)}, {"a2", poly_json(W.a2)}, {"a3", poly_json(W.a3)},
          {"a4", poly_json(W.a4)}, {"a6", poly_json(W.a6)}, {"discriminant", poly_json(W.discriminant())}};
}

json cmd_twist_verify(const Options& o, json& checks) {
  const auto [F, A, B] = read_pair(o);
  const auto chk = verify_twist_isomorphism(A, B);
  checks["isomorphism"] = chk.ok;
  return {{"ok", chk.ok},
          {"equation_residual", chk.equation_residual.to_string()},
          {"inverse_x_residual", chk.inverse_x_residual.to_string()},
          {"inverse_y_residual", chk.inverse_y_residual.to_string()}};
}

json cmd_twist_rank(const Options& o, json&) {
  const auto [F, A, B] = read_pair(o);
  const auto norm = normalize_pair(A, B);
  const auto rep = rank_theorem(norm.A, norm.B, rank_Q(*F, o.q_degree));
  json out = rank_json(rep);
  out["A_normalized"] = poly_json(norm.A);
  out["B_normalized"] = poly_json(norm.B);
  if (!norm.B.is_constant())
    out["geometric_rank"] = geometric_rank(static_cast<int>(*norm.A.degree()), static_cast<int>(*norm.B.degree()));
  return out;
}

json cmd_fiber(const Options& o, json& checks) {
  const auto rep = shioda_tate_check(o.degA, o.degB);
  checks["shioda_tate"] = rep.shioda_tate_ok;
  return fiber_json(rep);
}

json cmd_fiber_run(const Options& o, json& checks) {
  const auto [F, A, B] = read_pair(o);
  const auto norm = normalize_pair(A, B);
  const int dA = odd_degree(norm.A, "A"), dB = odd_degree(norm.B, "B");
  const auto inf = model_at_infinity(norm.A, norm.B);
  const auto outcome = tate::run(inf.model);
  const auto table = shioda_tate_check(dA, dB);
  checks["tate_matches_table"] = outcome.type == table.kodaira;
  checks["euler_n_matches"] = inf.n == table.euler_n;
  ensure(outcome.type == table.kodaira, "Tate's algorithm gives " + outcome.type.name() + ", table gives " +
                                            table.kodaira.name());
  json out = fiber_json(table);
  out["tate_type"] = outcome.type.name();
  out["disc_valuation"] = outcome.disc_valuation;
  out["rescalings"] = outcome.rescalings;
  out["A_normalized"] = poly_json(norm.A);
  out["B_normalized"] = poly_json(norm.B);
  return out;
}

int cmd_fiber_grid(const Options& o) {
  require(o.max_deg >= 1 && o.max_deg <= 63, "--max must be in [1, 63]");
  std::printf("degA,degB,euler_n,type,components,b2,geometric_rank,genus_H,genus_C,rank_formula,shioda_tate_ok\n");
  bool ok = true;
  accept::for_grid(o.max_deg, [&](int a, int b) {
    const auto r = shioda_tate_check(a, b);
    const int gH = genus_H_from_degree(a), gC = genus_C_from_degrees(a, b);
    ok = ok && r.shioda_tate_ok && 2 * gC - 2 * gH == r.geometric_rank;
    std::printf("%d,%d,%d,%s,%d,%d,%d,%d,%d,%d,%s\n", a, b, r.euler_n, r.kodaira.name().c_str(),
                r.kodaira.components(), r.b2, r.geometric_rank, gH, gC, 2 * gC - 2 * gH,
                r.shioda_tate_ok ? "true" : "false");
  });
  return ok ? 0 : 4;
}

json cmd_verify_all(json& checks, bool timing) {
  json rows = json::array();
  for (const auto& r : accept::run_all()) {
    json row{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
    if (timing) row["seconds"] = r.seconds;
    rows.push_back(row);
    checks["criterion " + std::to_string(r.id)] = r.passed;
  }
  return {{"criteria", rows}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quartic twists of y^2 + y = x^3 + x in characteristic 2.\n"
               "Exit codes: 0 ok, 2 parse error, 3 precondition violation, 4 consistency failure."};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker threads for enumeration (0 = all cores)")->capture_default_str();
  app.add_flag("--timing", o.timing, "include wall time in the JSON report");
  app.add_flag("--json", "JSON output (the default)");

  auto add_pair = [&](CLI::App* sc) {
    sc->add_option("--field", o.field, "field spec m[:modulus-hex]")->capture_default_str();
    sc->add_option("--A", o.A, "A(t), comma-separated hex coefficients, lowest degree first")->capture_default_str();
    sc->add_option("--B", o.B, "B(t), same format")->capture_default_str();
  };

  auto* field_cmd = app.add_subcommand("field", "describe GF(2^m)");
  field_cmd->add_option("--field", o.field, "field spec m[:modulus-hex]")->capture_default_str();

  auto* curve = app.add_subcommand("curve", "Artin-Schreier tower");
  curve->require_subcommand(1);
  auto* stats = curve->add_subcommand("stats", "genera, counts and extremality");
  add_pair(stats);
  stats->add_option("--ext", o.ext, "count over the degree-k extension")->capture_default_str();

  auto* e = app.add_subcommand("e", "the curve y^2 + y = x^3 + x");
  e->require_subcommand(1);
  auto* e_count = e->add_subcommand("count", "formula vs brute force over F_{2^{2n}}");
  e_count->add_option("--n", o.n)->required();

  auto* twist = app.add_subcommand("twist", "the quartic twist E_{A,B}");
  twist->require_subcommand(1);
  auto* t_build = twist->add_subcommand("build", "Weierstrass model");
  auto* t_verify = twist->add_subcommand("verify", "symbolic isomorphism check");
  auto* t_rank = twist->add_subcommand("rank", "rank over F_Q(t)");
  for (auto* sc : {t_build, t_verify, t_rank}) add_pair(sc);
  t_rank->add_option("--Q-degree", o.q_degree, "Q = 2^k (default: smallest even multiple of m)");

  auto* fiber = app.add_subcommand("fiber", "the fiber at infinity");
  fiber->add_option("--degA", o.degA)->capture_default_str();
  fiber->add_option("--degB", o.degB)->capture_default_str();
  auto* f_run = fiber->add_subcommand("run", "Tate's algorithm on concrete A, B");
  add_pair(f_run);
  auto* f_grid = fiber->add_subcommand("grid", "consistency table as CSV");
  f_grid->add_option("--max", o.max_deg)->capture_default_str();
  f_grid->add_flag("--csv", o.csv, "CSV output (the only format for the grid)");

  auto* examples = app.add_subcommand("examples", "worked families");
  examples->require_subcommand(1);
  auto* ex_quintic = examples->add_subcommand("quintic", "y^4 + y = x^5 over F_16");
  auto* ex_herm = examples->add_subcommand("hermitian", "y^2 + y = x^{q+1}, q = 4^n");
  ex_herm->add_option("--n", o.n)->required();
  auto* ex_trace = examples->add_subcommand("trace", "A = Tr(t), B = 0");
  ex_trace->add_option("--m", o.m)->required();

  auto* verify_all = app.add_subcommand("verify-all", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  default_threads() = o.threads;
  const auto t0 = std::chrono::steady_clock::now();
  json report;
  report["command"] = std::vector<std::string>(argv + 1, argv + argc);
  json checks = json::object();
  try {
    json outputs;
    json inputs = json::object();
    if (*field_cmd) {
      inputs = {{"field", o.field}};
      outputs = cmd_field(o);
    } else if (*stats) {
      inputs = inputs_json(o);
      inputs["ext"] = o.ext;
      outputs = cmd_curve_stats(o, checks);
    } else if (*e_count) {
      inputs = {{"n", o.n}};
      outputs = cmd_e_count(o, checks);
    } else if (*t_build) {
      inputs = inputs_json(o);
      outputs = cmd_twist_build(o, checks);
    } else if (*t_verify) {
      inputs = inputs_json(o);
      outputs = cmd_twist_verify(o, checks);
    } else if (*t_rank) {
      inputs = inputs_json(o);
      outputs = cmd_twist_rank(o, checks);
    } else if (*f_run) {
      inputs = inputs_json(o);
      outputs = cmd_fiber_run(o, checks);
    } else if (*f_grid) {
      return cmd_fiber_grid(o);
    } else if (*fiber) {
      inputs = {{"degA", o.degA}, {"degB", o.degB}};
      outputs = cmd_fiber(o, checks);
    } else if (*ex_quintic) {
      const auto inst = quintic_example();
      checks = checks_json(inst.checks);
      outputs = family_json(inst);
    } else if (*ex_herm) {
      inputs = {{"n", o.n}};
      const auto inst = hermitian_family(o.n);
      checks = checks_json(inst.checks);
      outputs = family_json(inst);
    } else if (*ex_trace) {
      inputs = {{"m", o.m}};
      const auto inst = trace_family(o.m);
      checks = checks_json(inst.checks);
      outputs = family_json(inst);
    } else if (*verify_all) {
      outputs = cmd_verify_all(checks, o.timing);
    }
    report["inputs"] = inputs;
    report["outputs"] = outputs;
    report["checks"] = checks;
    if (o.timing)
      report["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << report.dump(2) << "\n";
    for (const auto& [name, ok] : checks.items())
      if (!ok.get<bool>()) return 4;
    return 0;
  } catch (const qtwist::ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return 2;
  } catch (const PreconditionError& err) {
    std::cerr << "precondition: " << err.what() << "\n";
    return 3;
  } catch (const ConsistencyError& err) {
    std::cerr << "consistency: " << err.what() << "\n";
    return 4;
  }
}
