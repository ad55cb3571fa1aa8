// Command-line front end: recompute the certified constants, evaluate the
// bound families, run certified quadrature cross-checks, locate crossover
// thresholds, and search for smoothing coefficients.
//
// Exit codes: 0 success, 1 a requested check failed, 2 usage or domain error.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "zetatail/interval.hpp"
#include "zetatail/meanvalue.hpp"
#include "zetatail/smoothing.hpp"
#include "zetatail/thresholds.hpp"
#include "zetatail/verify.hpp"

using namespace zetatail;

namespace {

// Accepts "0.75" (exact decimal) or "3/4" (exact fraction).
Interval parse_number(const std::string& s) {
  const auto pos = s.find('/');
  if (pos != std::string::npos) {
    const cpp_rational q(cpp_int(s.substr(0, pos)), cpp_int(s.substr(pos + 1)));
    return Interval::from_rational(q);
  }
  return Interval::from_decimal(s);
}

std::string endpoint_str(const mpfr_t& x, int digits) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, x);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

nlohmann::json interval_json(const Interval& x, int digits) {
  return {{"lo", endpoint_str(x.lo_raw(), digits)}, {"hi", endpoint_str(x.hi_raw(), digits)}};
}

std::string rational_str(const cpp_rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

struct NamedConstant {
  std::string name;
  Interval value;
  cpp_rational published;
};

void collect_smoothing(std::vector<NamedConstant>& out) {
  const auto& c = first_approach_constants();
  out.push_back({"kappa", c.kappa, c.kappa_pub});
  out.push_back({"kappa_111", c.k111, c.k111_pub});
  out.push_back({"kappa_112", c.k112, c.k112_pub});
  out.push_back({"kappa_113", c.k113, c.k113_pub});
  out.push_back({"kappa_114", c.k114, c.k114_pub});
  out.push_back({"kappa_12*", c.k12s, c.k12s_pub});
  out.push_back({"c_21*", c.c21s, c.c21s_pub});
  out.push_back({"c_22*", c.c22s, c.c22s_pub});
  out.push_back({"kappa_314", c.k314, c.k314_pub});
  out.push_back({"c_30*", c.c30s, c.c30s_pub});
  out.push_back({"certificate 2 beta r / d_min", c.certificate, cpp_rational(3, 5)});
}

void collect_meanvalue(std::vector<NamedConstant>& out) {
  const auto& c = second_approach_constants();
  out.push_back({"C_1/2 upper (sqrt-log)", c.cz12_ua, c.cz12_ua_pub});
  out.push_back({"C_1/2 upper (const)", c.cz12_ub, c.cz12_ub_pub});
  out.push_back({"C_1/2 lower (sqrt-log)", c.cz12_la, c.cz12_la_pub});
  out.push_back({"C_1/2 lower (const)", c.cz12_lb, c.cz12_lb_pub});
  out.push_back({"C_1 upper", c.cz1_u, c.cz1_u_pub});
  out.push_back({"C_1 lower (magnitude)", -c.cz1_l, c.cz1_l_mag_pub});
  for (int k = 0; k < 5; ++k)
    out.push_back({"strip upper [" + std::to_string(k) + "]", c.cz121_u[static_cast<size_t>(k)],
                   c.cz121_u_pub[static_cast<size_t>(k)]});
  for (int k = 0; k < 5; ++k)
    out.push_back({"strip lower [" + std::to_string(k) + "]", c.cz121_l[static_cast<size_t>(k)],
                   c.cz121_l_pub[static_cast<size_t>(k)]});
  for (int k = 0; k < 3; ++k)
    out.push_back({"window sum [" + std::to_string(k) + "]", c.n_u[static_cast<size_t>(k)],
                   c.n_u_pub[static_cast<size_t>(k)]});
  out.push_back({"L+ (sigma=1)", c.l_u_1, c.l_u_1_pub});
  out.push_back({"L+ (strip, zeta coeff)", c.l_u_11, c.l_u_11_pub});
  out.push_back({"L+ (sigma=1/2)", c.l_u_12, c.l_u_12_pub});
  out.push_back({"L+ (low strip)", c.l_u_0, c.l_u_0_pub});
  out.push_back({"L- (sigma=1)", c.l_l_1, c.l_l_1_pub});
  out.push_back({"L- (strip, zeta coeff)", c.l_l_11, c.l_l_11_pub});
  out.push_back({"L- (sigma=1/2)", c.l_l_12, c.l_l_12_pub});
  out.push_back({"L- (low strip)", c.l_l_0, c.l_l_0_pub});
  out.push_back({"sigma=0 upper a", c.cz0_u_a, c.cz0_u_a_pub});
  out.push_back({"sigma=0 upper b", c.cz0_u_b, c.cz0_u_b_pub});
  out.push_back({"sigma=0 lower a", c.cz0_l_a, c.cz0_l_a_pub});
  out.push_back({"tail sigma=1/2 sqrt-log coeff", c.c12_a, c.c12_a_pub});
  out.push_back({"tail sigma=1/2 const", c.c12_b, c.c12_b_pub});
  out.push_back({"tail general a", c.c1_a, c.c1_a_pub});
  out.push_back({"tail general b", c.c1_b, c.c1_b_pub});
}

void collect_headline(std::vector<NamedConstant>& out) {
  const HeadlineConstants h = simplify_to_headline();
  const auto add = [&out](const char* n, const cpp_rational& q) {
    out.push_back({n, Interval::from_rational(q), q});
  };
  add("mean-square sigma=1", h.mz_1);
  add("mean-square strip", h.mz_121);
  add("mean-square sigma=1/2 a", h.mz_12_a);
  add("mean-square sigma=1/2 b", h.mz_12_b);
  add("mean-square low strip", h.mz_012);
  add("mean-square sigma=0", h.mz_0);
  add("tail sigma=1", h.t_1);
  add("tail strip numeric a", h.t_121_num_a);
  add("tail strip numeric b", h.t_121_num_b);
  add("tail strip asymptotic", h.t_121_opt);
  add("tail sigma=1/2 numeric", h.t_12_num);
  add("tail sigma=1/2 asymptotic", h.t_12_opt);
  add("tail low strip numeric a", h.t_012_num_a);
  add("tail low strip numeric b", h.t_012_num_b);
  add("tail low strip numeric c", h.t_012_num_c);
  add("tail low strip numeric d", h.t_012_num_d);
  add("tail low strip asymptotic", h.t_012_opt);
}

int run_constants(const std::string& family, const std::string& format, int digits) {
  std::vector<NamedConstant> list;
  if (family == "smoothing" || family == "all") collect_smoothing(list);
  if (family == "meanvalue" || family == "all") collect_meanvalue(list);
  if (family == "headline" || family == "all") collect_headline(list);
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : list) {
      nlohmann::json e = interval_json(c.value, digits);
      e["name"] = c.name;
      e["published"] = rational_str(c.published);
      j.push_back(e);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : list)
      std::cout << c.name << "  " << c.value.str(digits) << "  published "
                << rational_str(c.published) << "\n";
  }
  return 0;
}

int run_bound(const std::string& family, const Interval& sigma, const Interval& T,
              const std::string& format, int digits) {
  BoundReport rep;
  if (family == "smoothing")
    rep = tail_bound_first_approach(sigma, T);
  else if (family == "linear-transition")
    rep = corollary_tail_bound(sigma, T);
  else if (family == "meanvalue")
    rep = tail_bound_second_approach(sigma, T);
  else if (family == "headline-numeric")
    rep = tail_bound_headline(sigma, T, false);
  else if (family == "headline-asymptotic")
    rep = tail_bound_headline(sigma, T, true);
  else if (family == "finite-upper")
    rep = finite_mean_square_upper(sigma, T);
  else if (family == "finite-lower")
    rep = finite_mean_square_lower(sigma, T);
  else
    throw DomainError("unknown bound family: " + family);
  std::cout << (format == "json" ? rep.to_json(digits) : rep.to_text(digits)) << "\n";
  return 0;
}

int run_verify(const std::string& kind, const Interval& sigma, long T, double width,
               const std::string& format, int digits) {
  if (kind == "finite") {
    const auto r = check_finite_mean_square(sigma, T, width);
    if (format == "json") {
      nlohmann::json j;
      j["kind"] = "finite";
      j["integral"] = interval_json(r.integral, digits);
      j["lower"] = interval_json(r.lower, digits);
      j["upper"] = interval_json(r.upper, digits);
      j["panels"] = r.panels;
      j["passed"] = r.passed;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "integral over [1, " << T << "]  " << r.integral.str(digits) << "\n"
                << "lower bound  " << r.lower.str(digits) << "\n"
                << "upper bound  " << r.upper.str(digits) << "\n"
                << "panels " << r.panels << "  " << (r.passed ? "PASS" : "FAIL") << "\n";
    }
    return r.passed ? 0 : 1;
  }
  if (kind != "tail") throw DomainError("verify kind must be finite or tail");
  const auto r = check_tail_bounds(sigma, T, width);
  if (format == "json") {
    nlohmann::json j;
    j["kind"] = "tail";
    j["integral"] = interval_json(r.integral, digits);
    j["smoothing_bound"] = interval_json(r.smoothing_bound, digits);
    j["meanvalue_bound"] = interval_json(r.meanvalue_bound, digits);
    j["panels"] = r.panels;
    j["passed"] = r.passed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "integral over [" << T << ", " << 5 * T << "]  " << r.integral.str(digits)
              << "\n"
              << "smoothing-route bound  " << r.smoothing_bound.str(digits) << "\n"
              << "mean-value-route bound  " << r.meanvalue_bound.str(digits) << "\n"
              << "panels " << r.panels << "  " << (r.passed ? "PASS" : "FAIL") << "\n";
  }
  return r.passed ? 0 : 1;
}

int run_threshold(const std::string& family, const std::string& sigma_str,
                  const std::string& scan, const std::string& t_min, const std::string& t_max,
                  const std::string& format) {
  const CrossoverForms forms =
      family == "full" ? CrossoverForms::Full : CrossoverForms::Simplified;
  if (!scan.empty()) {
    long lo = 0, hi = 0, step = 1;
    if (std::sscanf(scan.c_str(), "%ld:%ld:%ld", &lo, &hi, &step) < 2)
      throw DomainError("scan expects lo:hi[:step] in thousandths of sigma");
    const auto rows = crossover_scan(forms, lo, hi, step);
    if (format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& [s, r] : rows)
        j.push_back({{"milli_sigma", s}, {"threshold", r.str()}});
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << format_scan(rows);
    }
    return 0;
  }
  if (sigma_str.empty()) throw DomainError("threshold needs --sigma or --scan");
  const auto r = find_crossover_threshold(forms, parse_number(sigma_str), cpp_int(t_min),
                                          cpp_int(t_max));
  if (format == "json") {
    nlohmann::json j;
    j["sigma"] = sigma_str;
    j["threshold"] = r.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.str() << "\n";
  }
  return 0;
}

int run_optimize(int degree, const std::string& step, const std::string& config,
                 const std::string& out_path, int digits) {
  SmoothingPolynomial seed = config.empty() ? default_smoothing() : read_smoothing_config(config);
  const auto pos = step.find('/');
  const cpp_rational q = pos == std::string::npos
                             ? cpp_rational(cpp_int(step), 1)
                             : cpp_rational(cpp_int(step.substr(0, pos)),
                                            cpp_int(step.substr(pos + 1)));
  std::cout << "seed objective " << smoothing_objective(seed).str(digits) << "\n";
  const SmoothingPolynomial best = optimize_coefficients(degree, seed, q);
  std::cout << "best objective " << smoothing_objective(best).str(digits) << "\n";
  if (!out_path.empty()) {
    write_smoothing_config(out_path, best);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigorous mean-square bounds for the Riemann zeta function"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  int digits = 20;
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--precision", digits, "printed digits per endpoint")
      ->check(CLI::Range(2, 50));

  auto* c_cmd = app.add_subcommand("constants", "recompute the certified constants");
  std::string c_family = "all";
  c_cmd->add_option("--family", c_family, "smoothing, meanvalue, headline or all")
      ->check(CLI::IsMember({"smoothing", "meanvalue", "headline", "all"}));

  auto* b_cmd = app.add_subcommand("bound", "evaluate a bound family at (sigma, T)");
  std::string b_sigma, b_t, b_family = "meanvalue";
  b_cmd->add_option("--sigma", b_sigma, "abscissa, decimal or fraction")->required();
  b_cmd->add_option("--t", b_t, "height T, decimal or fraction")->required();
  b_cmd->add_option("--family", b_family,
                    "smoothing, linear-transition, meanvalue, headline-numeric, "
                    "headline-asymptotic, finite-upper or finite-lower");

  auto* v_cmd = app.add_subcommand("verify", "certified quadrature cross-check");
  std::string v_sigma, v_kind = "tail";
  long v_t = 200;
  double v_width = 0.0;
  v_cmd->add_option("--sigma", v_sigma, "abscissa, decimal or fraction")->required();
  v_cmd->add_option("--t", v_t, "height T (integer)")->required();
  v_cmd->add_option("--kind", v_kind, "finite: int_1^T |zeta|^2 against the mean-square "
                                      "bounds; tail: int_T^5T |zeta/s|^2 against both tail "
                                      "bounds")
      ->check(CLI::IsMember({"finite", "tail"}));
  v_cmd->add_option("--target-width", v_width, "quadrature enclosure width target");

  auto* t_cmd = app.add_subcommand("threshold", "crossover height between the bound forms");
  std::string t_family = "simplified", t_sigma, t_scan, t_lo = "200",
              t_hi = "1000000000000000000000000000000000000000";
  t_cmd->add_option("--family", t_family, "simplified or full")
      ->check(CLI::IsMember({"simplified", "full"}));
  t_cmd->add_option("--sigma", t_sigma, "abscissa, decimal or fraction");
  t_cmd->add_option("--scan", t_scan, "lo:hi[:step] grid in thousandths of sigma");
  t_cmd->add_option("--t-min", t_lo, "search lower limit");
  t_cmd->add_option("--t-max", t_hi, "search upper limit");

  auto* o_cmd = app.add_subcommand("optimize", "search for smoothing coefficients");
  int o_degree = 6;
  std::string o_step = "1/100", o_config, o_out;
  o_cmd->add_option("--degree", o_degree, "polynomial degree n");
  o_cmd->add_option("--step", o_step, "coordinate increment (fraction)");
  o_cmd->add_option("--config", o_config, "seed coefficient file");
  o_cmd->add_option("--out", o_out, "write the best coefficient file here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_cmd->parsed()) return run_constants(c_family, format, digits);
    if (b_cmd->parsed())
      return run_bound(b_family, parse_number(b_sigma), parse_number(b_t), format, digits);
    if (v_cmd->parsed()) {
      if (v_width <= 0.0) v_width = v_kind == "tail" ? 1e-3 : 0.25;
      return run_verify(v_kind, parse_number(v_sigma), v_t, v_width, format, digits);
    }
    if (t_cmd->parsed()) return run_threshold(t_family, t_sigma, t_scan, t_lo, t_hi, format);
    if (o_cmd->parsed()) return run_optimize(o_degree, o_step, o_config, o_out, digits);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
