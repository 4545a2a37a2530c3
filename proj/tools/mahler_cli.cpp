// mahler: command-line front end. Every subcommand except `table` prints one
// JSON report {command, inputs, exact_results, numeric_results, checks}.
// Exit status: 0 all checks pass, 1 a check failed, 2 malformed arguments.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mahler/mahler.hpp"

using namespace mahler;

namespace {

struct Report {
  json doc;

  explicit Report(const std::string& command) {
    doc["command"] = command;
    doc["inputs"] = json::object();
    doc["exact_results"] = json::object();
    doc["numeric_results"] = json::object();
    doc["checks"] = json::array();
  }

  json& inputs() { return doc["inputs"]; }
  json& exact() { return doc["exact_results"]; }
  json& numeric() { return doc["numeric_results"]; }

  void check(const std::string& name, bool passed, const std::string& detail, const std::string& tolerance) {
    doc["checks"].push_back({{"name", name}, {"status", passed ? "pass" : "fail"}, {"detail", detail}, {"tolerance", tolerance}});
  }

  int emit() const {
    std::cout << dump15(doc, 2) << '\n';
    for (const auto& c : doc["checks"]) {
      if (c["status"] != "pass") return 1;
    }
    return 0;
  }
};

double num(const PiScaled& x) { return round15(static_cast<double>(x.value(pi_ld))); }

json laurent_floats(const LaurentPi& g) {
  json out = json::array();
  for (const auto& [e, c] : g.terms()) out.push_back({{"exponent", e}, {"coeff", num(PiScaled(c, g.pi_power()))}});
  return out;
}

// ---- measure ----
int run_measure(const std::string& coeffs_arg, int nodes, double tol) {
  std::string text = coeffs_arg;
  if (coeffs_arg == "-") text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("--coeffs: ") + e.what());
  }
  const CoeffVec f = coeff_vec_from_json(parsed);

  Report r("measure");
  r.inputs() = {{"coeffs", to_json(f)}, {"nodes", nodes}, {"tol", round15(tol)}};

  const RootSet roots = find_roots(f, tol);
  const double by_roots = mahler_from_roots(f, tol);
  r.numeric()["mahler_roots"] = round15(by_roots);
  r.numeric()["root_residual"] = round15(roots.residual);
  r.check("root_residual", roots.residual <= tol, "normwise backward error of the computed roots", format15(tol));

  bool near_circle = false;
  for (const cplx& z : roots.roots) near_circle = near_circle || std::abs(std::abs(z) - 1.0) < 0.02;
  r.numeric()["root_near_unit_circle"] = near_circle;
  try {
    const double by_quad = mahler_quadrature(f, nodes);
    r.numeric()["mahler_quadrature"] = round15(by_quad);
    if (!near_circle) {
      const double rel = std::abs(by_roots - by_quad) / by_roots;
      r.check("methods_agree", rel <= 1e-6, "relative difference " + format15(rel), "1e-6 relative");
    }
  } catch (const error& e) {
    if (e.code() != errc::node_on_zero) throw;
    r.numeric()["mahler_quadrature"] = nullptr;
  }
  return r.emit();
}

// ---- hn ----
int run_hn(int order, const double* xi) {
  if (order < 1) throw error(errc::domain_error, "--N must be >= 1");
  Report r("hn");
  r.inputs()["N"] = order;
  if (xi) r.inputs()["xi"] = round15(*xi);

  const LaurentPi h = h_closed(order);
  r.exact()["h_closed"] = to_json(h);
  r.exact()["mellin"] = to_json(h_mellin(order));
  json residues = json::array();
  for (int n = 1; n <= order; ++n) residues.push_back({{"n", n}, {"rho", to_string(rho(order, n))}});
  r.exact()["residues"] = residues;
  r.numeric()["h_closed"] = laurent_floats(h);

  r.check("h_at_one", h.eval_exact(1).coeff() == 0, "h_N(1) == 0 exactly", "exact");
  r.check("mellin_matches_product", laurent_mellin(h) == h_mellin(order), "Mellin(h_N) == H_N(s)/(2s)", "exact");
  if (xi) {
    const double v = h_eval(order, *xi);
    r.numeric()["h_at_xi"] = round15(v);
    r.check("non_negative", v >= 0.0, "h_N(xi) >= 0", "exact sign");
  }
  return r.emit();
}

// ---- volume ----
int run_volume(int order) {
  if (order < 1) throw error(errc::domain_error, "--N must be >= 1");
  Report r("volume");
  r.inputs()["N"] = order;
  const PiScaled v = volume_exact(order);
  r.exact()["volume"] = to_string(v);
  r.numeric()["volume"] = num(v);
  r.check("mellin_at_N_plus_1", volume_via_mellin(order) == v,
          "2 pi H_N(N+1)/(2(N+1)) == 2^N pi^(N+1) (N+1)^N/(2N+1)!", "exact");
  return r.emit();
}

// ---- verify-det ----
int run_verify_det(int order) {
  if (order < 1) throw error(errc::domain_error, "--N must be >= 1");
  Report r("verify-det");
  r.inputs()["N"] = order;
  const RatFunPi det = det_ratfun(i_matrix(order));
  const RatFunPi prod = h_product(order);
  r.exact()["det"] = to_json(det);
  r.exact()["det_display"] = display(det);
  r.exact()["product"] = to_json(prod);
  r.check("det_equals_product", det == prod, "det I_N(s) == prod_{n=1}^N 2 pi s/(s^2 - n^2)", "exact");
  return r.emit();
}

// ---- verify-entries ----
int run_verify_entries(int j, int k, int nodes) {
  if (j < 1 || k < 1) throw error(errc::domain_error, "--J and --K must be >= 1");
  if (nodes == 0) nodes = 4 * (j + k) + 16;
  Report r("verify-entries");
  r.inputs() = {{"J", j}, {"K", k}, {"nodes", nodes}};
  const LaurentPi closed = hJK_closed(j, k);
  r.exact()["h_closed"] = to_json(closed);
  r.exact()["mellin"] = to_json(i_entry(j, k));
  r.check("mellin_matches_entry", laurent_mellin(closed) == i_entry(j, k), "Mellin(h(J,K;r)) == I(J,K;s)", "exact");

  json rows = json::array();
  for (double radius : {1.0, 1.1, 2.0, 5.0}) {
    const double quad = hJK_quadrature(j, k, radius, nodes);
    const double exact = static_cast<double>(closed.eval(radius));
    const double scale = closed.is_zero() ? 2 * pi_ld * std::pow(radius + 1 / radius, j + k) : std::abs(exact);
    const double rel = std::abs(quad - exact) / scale;
    rows.push_back({{"r", round15(radius)}, {"quadrature", round15(quad)}, {"closed", round15(exact)}});
    r.check("quadrature_r_" + format15(radius), rel <= 1e-10, "relative error " + format15(rel), "1e-10 relative");
  }
  r.numeric()["values"] = rows;
  return r.emit();
}

// ---- rank-one ----
int run_rank_one(int order) {
  Report r("rank-one");
  r.inputs()["N"] = order;
  const RankOneReport rep = omega_psi_check(order);
  json psi = json::array();
  for (const Rational& x : rep.psi) psi.push_back(to_string(x));
  r.exact()["psi"] = psi;
  for (const auto& c : rep.checks) r.check(c.name, c.passed, c.detail, "exact");
  return r.emit();
}

// ---- jacobian-test ----
int run_jacobian(int max_order, int points, std::uint64_t seed) {
  if (max_order < 1 || points < 1) throw error(errc::domain_error, "--N and --points must be >= 1");
  Report r("jacobian-test");
  r.inputs() = {{"N", max_order}, {"points", points}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mod(0.5, 2.0);
  std::uniform_real_distribution<double> arg(0.0, 2 * pi_ld);
  const ComplexMap map = roots_to_coefficients_map();
  json rows = json::array();
  for (int order = 1; order <= max_order; ++order) {
    double worst = 0.0;
    for (int done = 0; done < points;) {
      std::vector<cplx> alpha(static_cast<std::size_t>(order));
      for (auto& a : alpha) a = std::polar(mod(rng), arg(rng));
      const RootVec p(alpha);
      const auto beta = beta_of(p);
      bool conditioned = true;
      for (std::size_t i = 0; i < beta.size(); ++i) {
        conditioned = conditioned && std::abs(alpha[i] * alpha[i] - 1.0) > 0.2;
        for (std::size_t m = 0; m < i; ++m) conditioned = conditioned && std::abs(beta[i] - beta[m]) > 0.2;
      }
      if (!conditioned) continue;
      const double formula = jacobian_real_factor(p);
      const double fd = numeric_jacobian(map, p, default_jacobian_step(p)).determinant();
      worst = std::max(worst, std::abs(fd / formula - 1.0));
      rows.push_back({{"N", order}, {"formula", round15(formula)}, {"finite_difference", round15(fd)}});
      ++done;
    }
    r.check("jacobian_N" + std::to_string(order), worst <= 1e-5, "worst relative error " + format15(worst), "1e-5 relative");
  }
  r.numeric()["points"] = rows;
  return r.emit();
}

// ---- mc ----
int run_mc(const std::string& mode, int order, double xi, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  Report r("mc");
  r.inputs() = {{"mode", mode}, {"N", order}, {"samples", samples}, {"seed", seed}, {"workers", workers}};
  MCEstimate e;
  PiScaled target_exact;
  double target = 0.0;
  if (mode == "hn") {
    r.inputs()["xi"] = round15(xi);
    e = mc_hN(order, xi, samples, seed, workers);
    target = h_eval(order, xi);
  } else {
    e = mc_volume(order, samples, seed, workers);
    target_exact = volume_exact(order);
    r.exact()["target"] = to_string(target_exact);
    target = static_cast<double>(target_exact.value(pi_ld));
  }
  const double z = e.std_error > 0 ? (e.mean - target) / e.std_error : (e.mean == target ? 0.0 : INFINITY);
  r.numeric() = {{"mean", round15(e.mean)},
                 {"std_error", round15(e.std_error)},
                 {"samples", e.samples},
                 {"hits", e.hits},
                 {"rejections", e.rejections},
                 {"region_volume", round15(e.region_volume)},
                 {"seed", e.seed},
                 {"target", round15(target)},
                 {"z_score", std::isfinite(z) ? json(round15(z)) : json(nullptr)}};
  r.check("within_3_sigma", std::abs(z) <= 3.0, "|mean - target| / std_error = " + format15(std::abs(z)), "3 sigma");
  return r.emit();
}

// ---- table ----
int run_table(int order, double from, double to, double step) {
  if (order < 1) throw error(errc::domain_error, "--N must be >= 1");
  if (!(step > 0) || !(to >= from)) throw error(errc::domain_error, "need --step > 0 and --to >= --from");
  const auto count = static_cast<long>(std::floor((to - from) / step + 1e-9));
  std::cout << "xi,h_N\n";
  for (long i = 0; i <= count; ++i) {
    const double xi = from + static_cast<double>(i) * step;
    std::cout << format15(xi) << ',' << format15(h_eval(order, xi)) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo computations for the reciprocal Mahler measure"};
  app.require_subcommand(1);

  auto* measure = app.add_subcommand("measure", "Mahler measure of a polynomial by roots and by quadrature");
  std::string coeffs;
  int nodes = 4096;
  double tol = default_root_tol;
  measure->add_option("--coeffs", coeffs, "JSON [[re, im], ...] ascending, or - for stdin")->required();
  measure->add_option("--nodes", nodes, "quadrature nodes (>= 16)");
  measure->add_option("--tol", tol, "root residual tolerance");

  int order = 0;
  double xi = 1.0;
  auto* hn = app.add_subcommand("hn", "closed form of h_N, its transform and residues");
  hn->add_option("--N", order)->required();
  auto* hn_xi = hn->add_option("--xi", xi, "also evaluate h_N(xi)");

  auto* volume = app.add_subcommand("volume", "volume of the unit sublevel set of the reciprocal measure");
  volume->add_option("--N", order)->required();

  auto* verify_det = app.add_subcommand("verify-det", "exact determinant of I_N against the product formula");
  verify_det->add_option("--N", order)->required();

  int j = 0;
  int k = 0;
  int entry_nodes = 0;
  auto* verify_entries = app.add_subcommand("verify-entries", "angular integral h(J,K;r) by quadrature and in closed form");
  verify_entries->add_option("--J", j)->required();
  verify_entries->add_option("--K", k)->required();
  verify_entries->add_option("--nodes", entry_nodes, "trapezoid nodes (default 4(J+K)+16)");

  auto* rank_one = app.add_subcommand("rank-one", "rank-one structure checks behind the product formula");
  rank_one->add_option("--N", order)->required();

  int jac_order = 4;
  int points = 20;
  std::uint64_t seed = 1;
  auto* jacobian = app.add_subcommand("jacobian-test", "finite-difference Jacobian vs closed form at seeded points");
  jacobian->add_option("--N", jac_order, "largest N (default 4)");
  jacobian->add_option("--points", points, "points per N (default 20)");
  jacobian->add_option("--seed", seed, "RNG seed (default 1)");

  std::string mode = "hn";
  std::uint64_t samples = 1'000'000;
  unsigned workers = 1;
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate against the exact value");
  mc->add_option("--mode", mode)->check(CLI::IsMember({"hn", "volume"}));
  mc->add_option("--N", order)->required();
  mc->add_option("--xi", xi, "threshold for --mode hn (default 1)");
  mc->add_option("--samples", samples, "sample count (default 1e6)");
  mc->add_option("--seed", seed, "RNG seed (default 1)");
  mc->add_option("--workers", workers, "threads; never changes the result")->check(CLI::PositiveNumber);

  double from = 1.0;
  double to = 3.0;
  double step = 0.01;
  auto* table = app.add_subcommand("table", "CSV of (xi, h_N(xi)) on a grid");
  table->add_option("--N", order)->required();
  table->add_option("--from", from);
  table->add_option("--to", to);
  table->add_option("--step", step);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (measure->parsed()) return run_measure(coeffs, nodes, tol);
    if (hn->parsed()) return run_hn(order, hn_xi->count() ? &xi : nullptr);
    if (volume->parsed()) return run_volume(order);
    if (verify_det->parsed()) return run_verify_det(order);
    if (verify_entries->parsed()) return run_verify_entries(j, k, entry_nodes);
    if (rank_one->parsed()) return run_rank_one(order);
    if (jacobian->parsed()) return run_jacobian(jac_order, points, seed);
    if (mc->parsed()) return run_mc(mode, order, xi, samples, seed, workers);
    if (table->parsed()) return run_table(order, from, to, step);
  } catch (const error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n' << app.help();
    switch (e.code()) {
      case errc::parse_error:
      case errc::domain_error:
      case errc::index_out_of_range:
      case errc::dimension_too_large:
        return 2;
      default:
        return 1;
    }
  }
  return 2;
}
