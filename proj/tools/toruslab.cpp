// toruslab: command-line front end for the torus spectral laboratory.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "torus/explab.hpp"
#include "torus/exponents.hpp"
#include "torus/kernel.hpp"
#include "torus/lattice.hpp"
#include "torus/multiplier.hpp"
#include "torus/weyl.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace torus;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt17(cdouble z) {
  return fmt17(z.real()) + (z.imag() < 0 ? "-" : "+") +
         fmt17(std::abs(z.imag())) + "i";
}

struct GlobalOpts {
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 1;
  int threads = 1;
  bool no_timestamp = false;
  std::uint64_t max_points = 50'000'000;
  std::uint64_t max_terms = 200'000'000;
};

struct Report {
  json config = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void row(std::initializer_list<std::string> cells) { rows.emplace_back(cells); }
};

void emit(const GlobalOpts& g, const std::string& command, const Report& rep) {
  std::ostringstream os;
  std::string stamp;
  if (!g.no_timestamp) {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    stamp = buf;
  }
  if (g.format == "json") {
    json doc;
    doc["version"] = version_string();
    doc["command"] = command;
    if (!stamp.empty()) doc["timestamp"] = stamp;
    doc["config"] = rep.config;
    doc["columns"] = rep.columns;
    doc["rows"] = rep.rows;
    os << doc.dump(2) << "\n";
  } else if (g.format == "csv") {
    os << "# version=" << version_string() << "\n";
    os << "# command=" << command << "\n";
    if (!stamp.empty()) os << "# timestamp=" << stamp << "\n";
    for (auto it = rep.config.begin(); it != rep.config.end(); ++it) {
      os << "# " << it.key() << "=";
      if (it.value().is_string())
        os << it.value().get<std::string>();
      else
        os << it.value().dump();
      os << "\n";
    }
    for (std::size_t i = 0; i < rep.columns.size(); ++i)
      os << (i ? "," : "") << rep.columns[i];
    os << "\n";
    for (const auto& r : rep.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
      os << "\n";
    }
  } else {
    throw domain_error("unknown format: " + g.format);
  }
  if (g.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(g.out, std::ios::trunc);
    if (!f) throw resource_error("cannot open output file: " + g.out);
    f << os.str();
  }
}

void add_common_config(Report& rep, const GlobalOpts& g) {
  rep.config["seed"] = std::to_string(g.seed);
  rep.config["threads"] = std::to_string(g.threads);
  rep.config["format"] = g.format;
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

weyl::IntMatrix parse_matrix(const std::string& text) {
  weyl::IntMatrix out;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<long long> r;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) r.push_back(std::stoll(cell));
    out.push_back(std::move(r));
  }
  for (const auto& r : out)
    if (r.size() != out.size()) throw domain_error("matrix must be square");
  return out;
}

std::vector<double> parse_lambda_grid(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::stringstream ss(text);
    std::string a, b, mode;
    std::getline(ss, a, ':');
    std::getline(ss, b, ':');
    std::getline(ss, mode, ':');
    double lo = std::stod(a), hi = std::stod(b);
    if (!mode.empty() && mode != "geometric")
      throw domain_error("unknown grid mode: " + mode);
    for (double v = lo; v <= hi * (1 + 1e-12); v *= 2.0) out.push_back(v);
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  }
  if (out.empty()) throw domain_error("empty lambda grid");
  return out;
}

// --- subcommand payloads -----------------------------------------------

struct ExponentsArgs {
  int n_min = 3, n_max = 8, q_max = 10, n = 3, q = 3;
};

void run_exponents_table(const GlobalOpts& g, const ExponentsArgs& a) {
  Report rep;
  add_common_config(rep, g);
  rep.config["n_min"] = std::to_string(a.n_min);
  rep.config["n_max"] = std::to_string(a.n_max);
  rep.config["q_max"] = std::to_string(a.q_max);
  rep.columns = {"n",       "q",          "epsilon_n",        "beta_n",
                 "omega_nq", "beta_nq",   "constraint_margin", "positivity_margin"};
  for (const auto& r : exponents::table(a.n_min, a.n_max, a.q_max)) {
    rep.row({std::to_string(r.n), std::to_string(r.q), to_string(r.epsilon_n),
             to_string(r.beta_n), to_string(r.omega_nq), to_string(r.beta_nq),
             to_string(r.constraint_margin), to_string(r.positivity_margin)});
  }
  emit(g, "exponents table", rep);
}

void run_exponents_report(const GlobalOpts& g, const ExponentsArgs& a) {
  Report rep;
  add_common_config(rep, g);
  rep.config["n"] = std::to_string(a.n);
  rep.config["q"] = std::to_string(a.q);
  auto r = exponents::report(Dim(a.n), QOrder(a.q));
  rep.columns = {"quantity", "value"};
  rep.row({"epsilon_n", to_string(r.epsilon_n)});
  rep.row({"beta_n", to_string(r.beta_n)});
  rep.row({"omega_nq", to_string(r.omega_nq)});
  rep.row({"beta_nq", to_string(r.beta_nq)});
  rep.row({"constraint_margin", to_string(r.constraint_margin)});
  rep.row({"positivity_margin", to_string(r.positivity_margin)});
  rep.row({"optimal_q", std::to_string(exponents::optimal_q(Dim(a.n), QOrder(30)).q)});
  emit(g, "exponents report", rep);
}

struct LatticeArgs {
  int n = 2;
  std::string lambda = "5", rho = "1/2";
  long long lambda_sq = 25;
  double cap_radius = 0;
};

void run_lattice_annulus(const GlobalOpts& g, const LatticeArgs& a) {
  lattice::AnnulusSpec spec(a.n, parse_rational(a.lambda), parse_rational(a.rho));
  lattice::LatticeBudget budget{g.max_points};
  auto pts = lattice::enumerate_annulus(spec, budget);
  Report rep;
  add_common_config(rep, g);
  rep.config["n"] = std::to_string(a.n);
  rep.config["lambda"] = to_string(spec.lambda);
  rep.config["rho"] = to_string(spec.rho);
  rep.config["count"] = std::to_string(pts.points.size());
  rep.columns.push_back("norm");
  for (int d = 0; d < a.n; ++d) rep.columns.push_back("k" + std::to_string(d));
  for (const auto& k : pts.points) {
    std::vector<std::string> r{fmt17(lattice::norm_of(k))};
    for (long long c : k) r.push_back(std::to_string(c));
    rep.rows.push_back(std::move(r));
  }
  emit(g, "lattice annulus", rep);
}

void run_lattice_sphere(const GlobalOpts& g, const LatticeArgs& a) {
  auto pts = lattice::enumerate_sphere(Dim(a.n), a.lambda_sq);
  Report rep;
  add_common_config(rep, g);
  rep.config["n"] = std::to_string(a.n);
  rep.config["lambda_sq"] = std::to_string(a.lambda_sq);
  rep.config["count"] = std::to_string(pts.size());
  for (int d = 0; d < a.n; ++d) rep.columns.push_back("k" + std::to_string(d));
  for (const auto& k : pts) {
    std::vector<std::string> r;
    for (long long c : k) r.push_back(std::to_string(c));
    rep.rows.push_back(std::move(r));
  }
  emit(g, "lattice sphere", rep);
}

void run_lattice_caps(const GlobalOpts& g, const LatticeArgs& a) {
  lattice::AnnulusSpec spec(a.n, parse_rational(a.lambda), parse_rational(a.rho));
  auto pts = lattice::enumerate_annulus(spec, lattice::LatticeBudget{g.max_points});
  double lam = to_double(spec.lambda);
  double cap_r = a.cap_radius > 0 ? a.cap_radius
                                  : std::sqrt(to_double(spec.rho) * lam);
  auto cover = lattice::cap_cover(lam, cap_r, Dim(a.n));
  auto counts = lattice::max_cap_count(pts, cover);
  Report rep;
  add_common_config(rep, g);
  rep.config["n"] = std::to_string(a.n);
  rep.config["lambda"] = to_string(spec.lambda);
  rep.config["rho"] = to_string(spec.rho);
  rep.config["cap_radius"] = fmt17(cap_r);
  rep.columns = {"caps", "points", "max_cap_count", "normalized_ratio"};
  rep.row({std::to_string(cover.centers.size()), std::to_string(pts.points.size()),
           std::to_string(counts.max_count), fmt17(counts.normalized_ratio)});
  emit(g, "lattice caps", rep);
}

struct KernelArgs {
  int n = 2;
  double lambda = 5, rho = 0.5, x_norm = 1, radius = 10;
  std::string point = "0.3,0.4";
};

void run_kernel_radial(const GlobalOpts& g, const KernelArgs& a) {
  kernel::BumpSpec bump;
  double v = kernel::radial_ft(bump, a.lambda, a.rho, a.x_norm, Dim(a.n));
  kernel::DecayEnvelopeSpec env{0, a.lambda, a.rho};
  Report rep;
  add_common_config(rep, g);
  rep.config["n"] = std::to_string(a.n);
  rep.config["lambda"] = fmt17(a.lambda);
  rep.config["rho"] = fmt17(a.rho);
  rep.config["x_norm"] = fmt17(a.x_norm);
  rep.columns = {"x_norm", "radial_ft", "envelope"};
  rep.row({fmt17(a.x_norm), fmt17(v),
           fmt17(kernel::envelope_value(env, a.n, a.x_norm))});
  emit(g, "kernel radial", rep);
}

void run_kernel_poisson(const GlobalOpts& g, const KernelArgs& a) {
  auto x = parse_point(a.point);
  kernel::BumpSpec bump;
  auto m = mult::build_smooth_symbol(a.lambda, a.rho, bump, Dim(a.n));
  auto direct = kernel::kernel_direct(m, x);
  auto poisson = kernel::kernel_poisson(bump, a.lambda, a.rho, x, a.radius, Dim(a.n));
  Report rep;
  add_common_config(rep, g);
  rep.config["n"] = std::to_string(a.n);
  rep.config["lambda"] = fmt17(a.lambda);
  rep.config["rho"] = fmt17(a.rho);
  rep.config["point"] = a.point;
  rep.config["radius"] = fmt17(a.radius);
  rep.columns = {"direct", "poisson", "difference", "tail_estimate", "terms"};
  rep.row({fmt17(direct), fmt17(poisson.value),
           fmt17(std::abs(direct - poisson.value)), fmt17(poisson.tail_estimate),
           std::to_string(poisson.terms)});
  emit(g, "kernel poisson", rep);
}

struct MultArgs {
  std::string kind = "smooth";
  int n = 2;
  double lambda = 5, rho = 0.5, mu = 0.1, cutoff = 0;
  bool split = false;
};

void run_mult_build(const GlobalOpts& g, const MultArgs& a) {
  kernel::BumpSpec bump;
  MultiplierSymbol m;
  if (a.kind == "smooth") {
    m = mult::build_smooth_symbol(a.lambda, a.rho, bump, Dim(a.n));
  } else if (a.kind == "sharp") {
    m = mult::build_sharp_symbol(a.lambda, a.rho, Dim(a.n));
  } else if (a.kind == "resolvent") {
    double cut = a.cutoff > 0 ? a.cutoff : 4.0 * a.lambda;
    m = mult::build_resolvent_symbol({a.lambda, a.mu}, cut, Dim(a.n));
  } else {
    throw domain_error("unknown symbol kind: " + a.kind);
  }
  Report rep;
  add_common_config(rep, g);
  rep.config["kind"] = a.kind;
  rep.config["n"] = std::to_string(a.n);
  rep.config["lambda"] = fmt17(a.lambda);
  rep.config["rho"] = fmt17(a.rho);
  if (a.kind == "resolvent") rep.config["mu"] = fmt17(a.mu);
  rep.columns = {"symbol", "support_size", "l1_mass", "op_norm_l2",
                 "truncation_error"};
  rep.row({a.kind, std::to_string(m.size()), fmt17(mult::l1_mass(m)),
           fmt17(explab::op_norm_l2(m)), fmt17(m.meta.truncation_error)});
  if (a.split) {
    auto parts = mult::mollified_split(m, mult::EtaSpec{bump});
    rep.row({"m0", std::to_string(parts.m0.size()), fmt17(mult::l1_mass(parts.m0)),
             fmt17(explab::op_norm_l2(parts.m0)), "0"});
    rep.row({"m1", std::to_string(parts.m1.size()), fmt17(mult::l1_mass(parts.m1)),
             fmt17(explab::op_norm_l2(parts.m1)), "0"});
  }
  emit(g, "mult build", rep);
}

struct WeylArgs {
  int n = 2, sign = 1, weight_N = 2, q = 3, samples = 64;
  double lambda = 40, rho = 0.3, radius = 20, threshold = 1e-6, big_m = 4;
  std::string point = "0.3,0.4";
  std::string matrix = "1,0;0,1";
};

void run_weyl_sum(const GlobalOpts& g, const WeylArgs& a) {
  weyl::WeylSumConfig cfg;
  cfg.n = a.n;
  cfg.lambda = a.lambda;
  cfg.rho = a.rho;
  cfg.sign = a.sign;
  cfg.truncation_radius = a.radius;
  cfg.N = a.weight_N;
  cfg.x = parse_point(a.point);
  cfg.max_terms = g.max_terms;
  auto res = weyl::truncated_weyl_sum(cfg);
  Report rep;
  add_common_config(rep, g);
  rep.config["n"] = std::to_string(a.n);
  rep.config["lambda"] = fmt17(a.lambda);
  rep.config["rho"] = fmt17(a.rho);
  rep.config["point"] = a.point;
  rep.config["radius"] = fmt17(a.radius);
  rep.config["weight_N"] = std::to_string(a.weight_N);
  rep.columns = {"value", "abs_value", "abs_sum", "cancellation", "terms"};
  double cr = res.abs_sum > 0 ? std::abs(res.value) / res.abs_sum : 0.0;
  rep.row({fmt17(res.value), fmt17(std::abs(res.value)), fmt17(res.abs_sum),
           fmt17(cr), std::to_string(res.terms)});
  emit(g, "weyl sum", rep);
}

void run_weyl_hessian(const GlobalOpts& g, const WeylArgs& a) {
  auto Q = parse_matrix(a.matrix);
  auto cert = weyl::hessian_certificate(Q, QOrder(a.q), a.samples, a.threshold);
  Report rep;
  add_common_config(rep, g);
  rep.config["matrix"] = a.matrix;
  rep.config["q"] = std::to_string(a.q);
  rep.config["samples"] = std::to_string(a.samples);
  rep.config["threshold"] = fmt17(a.threshold);
  rep.columns = {"min_scaled_hessian", "degenerate_samples", "samples"};
  rep.row({fmt17(cert.min_scaled), std::to_string(cert.degenerate.size()),
           std::to_string(cert.samples.size())});
  emit(g, "weyl hessian", rep);
}

void run_weyl_cosets(const GlobalOpts& g, const WeylArgs& a) {
  auto Q = parse_matrix(a.matrix);
  auto cs = weyl::coset_decomposition(Q);
  Report rep;
  add_common_config(rep, g);
  rep.config["matrix"] = a.matrix;
  rep.config["det"] = std::to_string(weyl::det_int(Q));
  for (std::size_t d = 0; d < Q.size(); ++d)
    rep.columns.push_back("b" + std::to_string(d));
  for (const auto& b : cs.representatives) {
    std::vector<std::string> r;
    for (long long c : b) r.push_back(std::to_string(c));
    rep.rows.push_back(std::move(r));
  }
  emit(g, "weyl cosets", rep);
}

void run_weyl_muller(const GlobalOpts& g, const WeylArgs& a) {
  weyl::WeylSumConfig cfg;
  cfg.n = a.n;
  cfg.lambda = a.lambda;
  cfg.rho = a.rho;
  cfg.N = a.weight_N;
  auto rep_m = weyl::muller_hypotheses_check(cfg, QOrder(a.q), a.big_m);
  Report rep;
  add_common_config(rep, g);
  rep.config["n"] = std::to_string(a.n);
  rep.config["lambda"] = fmt17(a.lambda);
  rep.config["q"] = std::to_string(a.q);
  rep.config["M"] = fmt17(a.big_m);
  rep.columns = {"predicate", "exponent", "j", "c0", "c1", "c2"};
  for (std::size_t i = 0; i < rep_m.j_levels.size(); ++i) {
    rep.row({rep_m.predicate ? "1" : "0", to_string(rep_m.exponent),
             std::to_string(rep_m.j_levels[i]), fmt17(rep_m.weight_constants[i][0]),
             fmt17(rep_m.weight_constants[i][1]), fmt17(rep_m.weight_constants[i][2])});
  }
  emit(g, "weyl muller", rep);
}

struct LabArgs {
  std::string experiment = "proj-norm";
  int n = 3, trials = 4;
  double rho_exp = 1.0 / 3.0;
  std::string lambda_grid = "8:64:geometric";
  long long lambda_sq = 25;
};

void run_lab(const GlobalOpts& g, const LabArgs& a) {
  explab::SweepConfig cfg;
  cfg.n = a.n;
  cfg.rho_exp = a.rho_exp;
  cfg.seed = g.seed;
  cfg.trials = a.trials;
  auto report = explab::scaling_sweep(a.experiment, parse_lambda_grid(a.lambda_grid), cfg);
  Report rep;
  add_common_config(rep, g);
  rep.config["experiment"] = report.experiment;
  rep.config["n"] = std::to_string(a.n);
  rep.config["rho_exp"] = fmt17(a.rho_exp);
  rep.config["trials"] = std::to_string(a.trials);
  rep.config["lambda_grid"] = a.lambda_grid;
  rep.config["fitted_slope"] = fmt17(report.fitted_slope);
  rep.config["predicted_slope"] = to_string(report.predicted_slope);
  rep.config["residual"] = fmt17(report.residual);
  rep.config["digest"] = report.config_digest;
  rep.config["note"] = report.note;
  rep.columns = {"lambda", "value"};
  for (const auto& p : report.points) rep.row({fmt17(p.lambda), fmt17(p.value)});
  emit(g, "lab run", rep);
}

void run_lab_restriction(const GlobalOpts& g, const LabArgs& a) {
  double v = explab::discrete_restriction_probe(Dim(a.n), a.lambda_sq, a.trials, g.seed);
  Report rep;
  add_common_config(rep, g);
  rep.config["n"] = std::to_string(a.n);
  rep.config["lambda_sq"] = std::to_string(a.lambda_sq);
  rep.config["trials"] = std::to_string(a.trials);
  rep.columns = {"lambda_sq", "ratio"};
  rep.row({std::to_string(a.lambda_sq), fmt17(v)});
  emit(g, "lab restriction", rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toruslab: spectral projector and resolvent laboratory on T^n"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--format", g.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--threads", g.threads, "worker thread count (recorded)");
  app.add_flag("--no-timestamp", g.no_timestamp, "omit the timestamp field");
  app.add_option("--max-points", g.max_points, "lattice enumeration budget");
  app.add_option("--max-terms", g.max_terms, "sum term budget");
  app.set_config("--config", "", "key = value configuration file");

  ExponentsArgs ea;
  auto* exp_cmd = app.add_subcommand("exponents", "exact exponent calculus");
  auto* exp_table = exp_cmd->add_subcommand("table", "sweep a range of (n, q)");
  exp_table->add_option("--n-min", ea.n_min);
  exp_table->add_option("--n-max", ea.n_max);
  exp_table->add_option("--q-max", ea.q_max);
  auto* exp_report = exp_cmd->add_subcommand("report", "single (n, q) report");
  exp_report->add_option("--n", ea.n);
  exp_report->add_option("--q", ea.q);
  exp_cmd->require_subcommand(1);

  LatticeArgs la;
  auto* lat_cmd = app.add_subcommand("lattice", "lattice point enumeration");
  auto* lat_ann = lat_cmd->add_subcommand("annulus", "points of A(lambda, rho)");
  lat_ann->add_option("--n", la.n);
  lat_ann->add_option("--lambda", la.lambda);
  lat_ann->add_option("--rho", la.rho);
  auto* lat_sph = lat_cmd->add_subcommand("sphere", "points with |k|^2 = s");
  lat_sph->add_option("--n", la.n);
  lat_sph->add_option("--lambda-sq", la.lambda_sq);
  auto* lat_caps = lat_cmd->add_subcommand("caps", "cap cover statistics");
  lat_caps->add_option("--n", la.n);
  lat_caps->add_option("--lambda", la.lambda);
  lat_caps->add_option("--rho", la.rho);
  lat_caps->add_option("--cap-radius", la.cap_radius);
  lat_cmd->require_subcommand(1);

  KernelArgs ka;
  auto* ker_cmd = app.add_subcommand("kernel", "kernel evaluation and decay");
  auto* ker_rad = ker_cmd->add_subcommand("radial", "radial Fourier transform");
  ker_rad->add_option("--n", ka.n);
  ker_rad->add_option("--lambda", ka.lambda);
  ker_rad->add_option("--rho", ka.rho);
  ker_rad->add_option("--x-norm", ka.x_norm);
  auto* ker_poi = ker_cmd->add_subcommand("poisson", "direct vs Poisson route");
  ker_poi->add_option("--n", ka.n);
  ker_poi->add_option("--lambda", ka.lambda);
  ker_poi->add_option("--rho", ka.rho);
  ker_poi->add_option("--point", ka.point);
  ker_poi->add_option("--radius", ka.radius);
  ker_cmd->require_subcommand(1);

  MultArgs ma;
  auto* mul_cmd = app.add_subcommand("mult", "multiplier symbols");
  auto* mul_build = mul_cmd->add_subcommand("build", "build and summarize");
  mul_build->add_option("--kind", ma.kind);
  mul_build->add_option("--n", ma.n);
  mul_build->add_option("--lambda", ma.lambda);
  mul_build->add_option("--rho", ma.rho);
  mul_build->add_option("--mu", ma.mu);
  mul_build->add_option("--cutoff", ma.cutoff);
  mul_build->add_flag("--split", ma.split, "also report the m0/m1 split");
  mul_cmd->require_subcommand(1);

  WeylArgs wa;
  auto* wey_cmd = app.add_subcommand("weyl", "exponential sums and phases");
  auto* wey_sum = wey_cmd->add_subcommand("sum", "truncated weighted sum");
  wey_sum->add_option("--n", wa.n);
  wey_sum->add_option("--lambda", wa.lambda);
  wey_sum->add_option("--rho", wa.rho);
  wey_sum->add_option("--point", wa.point);
  wey_sum->add_option("--radius", wa.radius);
  wey_sum->add_option("--sign", wa.sign);
  wey_sum->add_option("--weight-N", wa.weight_N);
  auto* wey_hes = wey_cmd->add_subcommand("hessian", "non-degeneracy certificate");
  wey_hes->add_option("--matrix", wa.matrix);
  wey_hes->add_option("--q", wa.q);
  wey_hes->add_option("--samples", wa.samples);
  wey_hes->add_option("--threshold", wa.threshold);
  auto* wey_cos = wey_cmd->add_subcommand("cosets", "coset decomposition");
  wey_cos->add_option("--matrix", wa.matrix);
  auto* wey_mul = wey_cmd->add_subcommand("muller", "hypothesis predicate");
  wey_mul->add_option("--n", wa.n);
  wey_mul->add_option("--lambda", wa.lambda);
  wey_mul->add_option("--rho", wa.rho);
  wey_mul->add_option("--q", wa.q);
  wey_mul->add_option("--M", wa.big_m);
  wey_mul->add_option("--weight-N", wa.weight_N);
  wey_cmd->require_subcommand(1);

  LabArgs ba;
  auto* lab_cmd = app.add_subcommand("lab", "experiment harness");
  auto* lab_run = lab_cmd->add_subcommand("run", "scaling sweep");
  lab_run->add_option("--experiment", ba.experiment);
  lab_run->add_option("--n", ba.n);
  lab_run->add_option("--lambda", ba.lambda_grid, "a:b:geometric or v1,v2,...");
  lab_run->add_option("--rho-exp", ba.rho_exp);
  lab_run->add_option("--trials", ba.trials);
  auto* lab_res = lab_cmd->add_subcommand("restriction", "discrete restriction probe");
  lab_res->add_option("--n", ba.n);
  lab_res->add_option("--lambda-sq", ba.lambda_sq);
  lab_res->add_option("--trials", ba.trials);
  lab_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (exp_table->parsed()) run_exponents_table(g, ea);
    else if (exp_report->parsed()) run_exponents_report(g, ea);
    else if (lat_ann->parsed()) run_lattice_annulus(g, la);
    else if (lat_sph->parsed()) run_lattice_sphere(g, la);
    else if (lat_caps->parsed()) run_lattice_caps(g, la);
    else if (ker_rad->parsed()) run_kernel_radial(g, ka);
    else if (ker_poi->parsed()) run_kernel_poisson(g, ka);
    else if (mul_build->parsed()) run_mult_build(g, ma);
    else if (wey_sum->parsed()) run_weyl_sum(g, wa);
    else if (wey_hes->parsed()) run_weyl_hessian(g, wa);
    else if (wey_cos->parsed()) run_weyl_cosets(g, wa);
    else if (wey_mul->parsed()) run_weyl_muller(g, wa);
    else if (lab_run->parsed()) run_lab(g, ba);
    else if (lab_res->parsed()) run_lab_restriction(g, ba);
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const accuracy_error& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
