// Command-line front end. Talks to the library exclusively through the C
// API in hardycexp.h.
//
// Exit codes: 0 pass, 1 verification failure, 2 malformed input.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hardycexp.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::complex<double> parse_complex(const std::string& text) {
  std::istringstream is(text);
  double re = 0.0, im = 0.0;
  char sep = 0;
  if (!(is >> re)) throw MalformedInput("bad complex literal: " + text);
  if (is >> sep) {
    if (sep != ',' || !(is >> im)) throw MalformedInput("bad complex literal: " + text);
  }
  std::string rest;
  if (is >> rest) throw MalformedInput("bad complex literal: " + text);
  return {re, im};
}

// Entries separated by ';', each "re" or "re,im". A ';'-free string whose
// comma-separated pieces are all plain reals is read as a list of real
// zeros ("0,0.5" means the two zeros 0 and 1/2).
std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  if (text.find(';') == std::string::npos && text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::vector<std::complex<double>> reals;
    while (std::getline(is, item, ',')) reals.push_back(parse_complex(item));
    return reals;
  }
  std::istringstream is(text);
  std::vector<std::complex<double>> out;
  while (std::getline(is, item, ';'))
    if (!item.empty()) out.push_back(parse_complex(item));
  if (out.empty()) throw MalformedInput("empty list: " + text);
  return out;
}

std::vector<double> interleave(const std::vector<std::complex<double>>& v) {
  std::vector<double> out;
  out.reserve(2 * v.size());
  for (auto z : v) {
    out.push_back(z.real());
    out.push_back(z.imag());
  }
  return out;
}

[[noreturn]] void raise_last(hc_status st) {
  std::string msg = hc_last_error();
  if (st == HC_ERROR_INVALID_ARGUMENT || st == HC_ERROR_DOMAIN) throw MalformedInput(msg);
  throw std::runtime_error(msg);
}

void check(hc_status st) {
  if (st != HC_OK) raise_last(st);
}

struct BlaschkeHandle {
  hc_blaschke* ptr = nullptr;
  ~BlaschkeHandle() { hc_blaschke_destroy(ptr); }
};

struct CexpHandle {
  hc_cexp* ptr = nullptr;
  ~CexpHandle() { hc_cexp_destroy(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { hc_string_free(ptr); }
};

void make_blaschke(const std::string& zeros, const std::string& rotation, BlaschkeHandle& h) {
  auto z = interleave(parse_complex_list(zeros));
  auto rot = parse_complex(rotation);
  check(hc_blaschke_create(z.data(), z.size() / 2, rot.real(), rot.imag(), &h.ptr));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open " + out_path);
    os << text;
  }
}

// Merge config-file values into any option the user left at its default.
void apply_config(CLI::App& app, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw MalformedInput("cannot open config " + path);
  json cfg = json::parse(is, nullptr, false);
  if (cfg.is_discarded() || !cfg.is_object()) throw MalformedInput("bad config " + path);
  for (auto& [key, value] : cfg.items()) {
    CLI::Option* opt = app.get_option_no_throw("--" + key);
    if (!opt || !opt->empty()) continue;
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    opt->add_result(text);
    opt->run_callback();
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(15);
  os << x;
  return os.str();
}

json complex_json(double re, double im) { return json{{"re", re}, {"im", im}}; }

int run(int argc, char** argv) {
  CLI::App app{"Blaschke conditional expectations and contractive coefficient multipliers"};
  app.require_subcommand(1);

  std::string zeros = "0", rotation = "1", point = "1,0", target = "1,0", out_path;
  std::string config_path, coeffs = "0;1", gamma_json, poly_json, members_csv;
  double p = 0.5;
  unsigned kmax = 8, budget = 16;
  std::uint64_t seed = 1, bound = 100;
  std::size_t band = 0;
  bool theory = false, empirical = false, sweep = false, with_witness = false;

  auto add_product = [&](CLI::App* cmd) {
    cmd->add_option("--zeros", zeros, "zeros, ';'-separated 're' or 're,im' (all-real shorthand: commas)");
    cmd->add_option("--rotation", rotation, "unimodular rotation, 're' or 're,im'");
    cmd->add_option("--config", config_path, "JSON file supplying any of the flags");
  };

  auto* blaschke = app.add_subcommand("blaschke", "finite Blaschke products");
  auto* b_eval = blaschke->add_subcommand("eval", "evaluate at a point");
  auto* b_pre = blaschke->add_subcommand("preimage", "boundary preimages of a target");
  auto* b_dsup = blaschke->add_subcommand("dsup", "sup and inf of |eta'| on the circle");
  auto* b_bounds = blaschke->add_subcommand("bounds", "closed-form derivative sandwich");
  for (auto* cmd : {b_eval, b_pre, b_dsup, b_bounds}) add_product(cmd);
  b_eval->add_option("--point", point, "evaluation point, 're' or 're,im'");
  b_pre->add_option("--target", target, "boundary target, 're' or 're,im'");

  auto* cexp = app.add_subcommand("cexp", "conditional expectation E(.|eta)");
  auto* c_apply = cexp->add_subcommand("apply", "expand E(f|eta) as a polynomial");
  auto* c_verify = cexp->add_subcommand("verify", "partition-of-unity and route-agreement residuals");
  auto* c_norm = cexp->add_subcommand("norm", "operator norm on H^p");
  auto* c_degree = cexp->add_subcommand("degree-sweep", "k vs k^{1/p-1} growth table (CSV: k,norm)");
  for (auto* cmd : {c_apply, c_verify, c_norm}) add_product(cmd);
  c_apply->add_option("--coeffs", coeffs, "polynomial coefficients c0;c1;... ('re' or 're,im')");
  c_apply->add_option("--band", band, "L^2 expansion band (default: adequate for the input)");
  c_norm->add_option("--p", p, "exponent in (0,1)");
  c_norm->add_flag("--theory", theory, "closed-form norm");
  c_norm->add_flag("--empirical", empirical, "extremal-family lower bound");
  c_norm->add_flag("--sweep", sweep, "CSV over the schedule: t,half_width,delta,ratio,theoretical");
  c_norm->add_option("--out", out_path, "write CSV here instead of stdout");
  c_degree->add_option("--p", p, "exponent in (0,1)");
  c_degree->add_option("--kmax", kmax, "largest degree");
  c_degree->add_option("--out", out_path, "write CSV here instead of stdout");

  auto* mult = app.add_subcommand("multiplier", "idempotent coefficient multipliers");
  auto* m_classify = mult->add_subcommand("classify", "contractivity verdict (JSON)");
  auto* m_apply = mult->add_subcommand("apply", "apply P_Gamma to a polynomial (JSON)");
  auto* m_falsify = mult->add_subcommand("falsify", "search for a norm-expanding input (JSON)");
  auto* m_const = mult->add_subcommand("constant", "sharp one-coefficient constant c(1,p)");
  for (auto* cmd : {m_classify, m_apply, m_falsify}) {
    cmd->add_option("--gamma", gamma_json, "index set as JSON")->required();
    cmd->add_option("--config", config_path, "JSON file supplying any of the flags");
  }
  m_classify->add_option("--p", p, "exponent in (0,1)");
  m_classify->add_flag("--witness", with_witness, "attach a falsifier witness when not contractive");
  m_classify->add_option("--seed", seed, "falsifier seed");
  m_apply->add_option("--poly", poly_json, "polynomial as JSON")->required();
  m_falsify->add_option("--p", p, "exponent in (0,1)");
  m_falsify->add_option("--budget", budget, "restart budget");
  m_falsify->add_option("--seed", seed, "RNG seed");
  m_const->add_option("--p", p, "exponent in (0,1)");

  auto* dirichlet = app.add_subcommand("dirichlet", "Dirichlet-series index sets");
  auto* d_classify = dirichlet->add_subcommand("classify", "verdict for an integer set (JSON)");
  d_classify->add_option("--members", members_csv, "comma-separated positive integers")->required();
  d_classify->add_option("--bound", bound, "truncation bound");

  auto* verify = app.add_subcommand("verify", "property suites");
  auto* v_all = verify->add_subcommand("all", "every module's property suite (JSON stream)");
  v_all->add_option("--seed", seed, "RNG seed");

  app.parse(argc, argv);

  if (!config_path.empty()) {
    for (auto* cmd : {b_eval, b_pre, b_dsup, b_bounds, c_apply, c_verify, c_norm, m_classify,
                      m_apply, m_falsify})
      if (cmd->parsed()) apply_config(*cmd, config_path);
  }

  if (b_eval->parsed()) {
    BlaschkeHandle b;
    make_blaschke(zeros, rotation, b);
    auto w = parse_complex(point);
    double re, im;
    check(hc_blaschke_eval(b.ptr, w.real(), w.imag(), &re, &im));
    emit(json{{"value", complex_json(re, im)}}.dump(), "");
    return 0;
  }
  if (b_pre->parsed()) {
    BlaschkeHandle b;
    make_blaschke(zeros, rotation, b);
    auto z = parse_complex(target);
    size_t k = parse_complex_list(zeros).size();
    std::vector<double> buf(2 * k);
    check(hc_blaschke_preimages(b.ptr, z.real(), z.imag(), buf.data()));
    json pts = json::array();
    for (size_t i = 0; i < k; ++i) pts.push_back(complex_json(buf[2 * i], buf[2 * i + 1]));
    emit(json{{"preimages", pts}}.dump(), "");
    return 0;
  }
  if (b_dsup->parsed()) {
    BlaschkeHandle b;
    make_blaschke(zeros, rotation, b);
    double sup, inf, argmax;
    check(hc_blaschke_derivative_sup(b.ptr, &sup, &argmax));
    check(hc_blaschke_derivative_inf(b.ptr, &inf));
    emit(json{{"sup", sup}, {"inf", inf}, {"argmax_theta", argmax}}.dump(), "");
    return 0;
  }
  if (b_bounds->parsed()) {
    BlaschkeHandle b;
    make_blaschke(zeros, rotation, b);
    double lo, hi, sup, inf;
    check(hc_blaschke_derivative_bounds(b.ptr, &lo, &hi));
    check(hc_blaschke_derivative_sup(b.ptr, &sup, nullptr));
    check(hc_blaschke_derivative_inf(b.ptr, &inf));
    bool pass = lo <= inf + 1e-12 && sup <= hi + 1e-12;
    emit(json{{"lower", lo}, {"upper", hi}, {"sup", sup}, {"inf", inf}, {"sandwich", pass}}.dump(),
         "");
    return pass ? 0 : 1;
  }

  if (c_apply->parsed()) {
    BlaschkeHandle b;
    make_blaschke(zeros, rotation, b);
    CexpHandle op;
    check(hc_cexp_create(b.ptr, &op.ptr));
    auto f = interleave(parse_complex_list(coeffs));
    size_t ncoeff = f.size() / 2;
    size_t k = parse_complex_list(zeros).size();
    size_t use_band = band ? band : (ncoeff - 1) / k + 1;
    std::vector<double> buf(2 * (use_band * k + 1));
    size_t len = 0;
    hc_status st =
        hc_cexp_apply_fourier(op.ptr, f.data(), ncoeff, use_band, buf.data(), buf.size() / 2, &len);
    if (st != HC_OK && len > buf.size() / 2) {  // expansion longer than the band suggests
      buf.resize(2 * len);
      st = hc_cexp_apply_fourier(op.ptr, f.data(), ncoeff, use_band, buf.data(), len, &len);
    }
    check(st);
    json cs = json::array();
    for (size_t i = 0; i < len; ++i) cs.push_back(complex_json(buf[2 * i], buf[2 * i + 1]));
    emit(json{{"coefficients", cs}}.dump(), "");
    return 0;
  }
  if (c_verify->parsed()) {
    BlaschkeHandle b;
    make_blaschke(zeros, rotation, b);
    CexpHandle op;
    check(hc_cexp_create(b.ptr, &op.ptr));
    double worst = 0.0;
    for (int j = 0; j < 64; ++j) {
      double th = 2.0 * M_PI * j / 64.0 + 0.0123;
      double r;
      check(hc_cexp_partition_residual(op.ptr, std::cos(th), std::sin(th), &r));
      worst = std::max(worst, r);
    }
    bool pass = worst < 1e-8;
    emit(json{{"partition_of_unity_max_residual", worst}, {"pass", pass}}.dump(), "");
    return pass ? 0 : 1;
  }
  if (c_norm->parsed()) {
    if (!theory && !empirical && !sweep) theory = true;
    BlaschkeHandle b;
    make_blaschke(zeros, rotation, b);
    CexpHandle op;
    check(hc_cexp_create(b.ptr, &op.ptr));
    json result;
    double theoretical = 0.0;
    check(hc_cexp_theoretical_norm(op.ptr, p, &theoretical));
    if (theory) result["theoretical"] = theoretical;
    if (empirical || sweep) {
      OwnedString csv;
      double ratio = 0.0;
      check(hc_cexp_empirical_norm(op.ptr, p, nullptr, 0, sweep ? &csv.ptr : nullptr, &ratio));
      if (empirical) result["empirical_lower_bound"] = ratio;
      if (sweep) {
        emit(csv.ptr, out_path);
        if (!empirical && !theory) return 0;
      }
    }
    emit(result.dump(), "");
    return 0;
  }
  if (c_degree->parsed()) {
    if (p <= 0.0 || p >= 1.0) throw MalformedInput("p must lie in (0,1)");
    std::ostringstream os;
    os.precision(15);
    os << "k,norm\n";
    for (unsigned k = 1; k <= kmax; ++k)
      os << k << ',' << std::pow(static_cast<double>(k), 1.0 / p - 1.0) << '\n';
    emit(os.str(), out_path);
    return 0;
  }

  if (m_classify->parsed()) {
    OwnedString verdict;
    check(hc_multiplier_classify(gamma_json.c_str(), p, with_witness ? 1 : 0, seed, &verdict.ptr));
    emit(verdict.ptr, "");
    return 0;
  }
  if (m_apply->parsed()) {
    OwnedString out;
    check(hc_multiplier_apply(gamma_json.c_str(), poly_json.c_str(), &out.ptr));
    emit(out.ptr, "");
    return 0;
  }
  if (m_falsify->parsed()) {
    OwnedString out;
    check(hc_multiplier_falsify(gamma_json.c_str(), p, budget, seed, &out.ptr));
    emit(out.ptr, "");
    return 0;
  }
  if (m_const->parsed()) {
    double c = 0.0;
    check(hc_coefficient_constant(p, &c));
    emit(fmt(c), "");
    return 0;
  }

  if (d_classify->parsed()) {
    std::vector<std::uint64_t> members;
    std::istringstream is(members_csv);
    std::string item;
    while (std::getline(is, item, ',')) {
      try {
        members.push_back(std::stoull(item));
      } catch (const std::exception&) {
        throw MalformedInput("bad integer: " + item);
      }
    }
    OwnedString verdict;
    check(hc_dirichlet_classify(members.data(), members.size(), bound, &verdict.ptr));
    emit(verdict.ptr, "");
    return 0;
  }

  if (v_all->parsed()) {
    OwnedString report;
    int all_pass = 0;
    check(hc_verify_all(seed, &report.ptr, &all_pass));
    emit(report.ptr, "");
    return all_pass ? 0 : 1;
  }

  throw MalformedInput("no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    CLI::App dummy;
    return dummy.exit(e) == 0 ? 0 : 2;
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
