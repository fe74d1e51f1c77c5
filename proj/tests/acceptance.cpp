// End-to-end acceptance gate: one pass/fail line per criterion, nonzero exit
// if anything fails. Tolerances are pinned here and nowhere else.
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "torus/exponents.hpp"
#include "torus/explab.hpp"
#include "torus/kernel.hpp"
#include "torus/lattice.hpp"
#include "torus/multiplier.hpp"
#include "torus/weyl.hpp"

using namespace torus;

namespace {

int failures = 0;

void report(int id, const char* what, bool ok, const std::string& detail = "") {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, what,
              detail.empty() ? "" : " | ", detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool exact_exponents() {
  using namespace torus::exponents;
  bool ok = beta_n(Dim(3)) == Rational(55, 162);
  ok = ok && epsilon3_refined() == Rational(85, 252);
  ok = ok && beta_n(Dim(3)) > epsilon3_refined() &&
       epsilon3_refined() > Rational(1, 3);
  for (int n = 3; n <= 50; ++n)
    ok = ok && beta_nq(Dim(n), QOrder(3)) == beta_n(Dim(n));
  for (int n = 3; n <= 12; ++n) {
    ok = ok && optimal_q(Dim(n), QOrder(30)).q == 3;
    for (int q = 4; q < 30; ++q)
      ok = ok && beta_nq(Dim(n), QOrder(q + 1)) < beta_nq(Dim(n), QOrder(q));
    ok = ok && constraint_margin(Dim(n), QOrder(3), beta_n(Dim(n))) > 0;
  }
  for (int n = 2; n <= 12; ++n)
    for (int q = 1; q <= 30; ++q)
      ok = ok && positivity_margin(Dim(n), QOrder(q)) > 0;
  return ok;
}

bool lattice_oracles(std::string& detail) {
  // independent nested loops, written without the library enumerators
  long long sphere = 0;
  for (long long a = -5; a <= 5; ++a)
    for (long long b = -5; b <= 5; ++b)
      for (long long c = -5; c <= 5; ++c)
        if (a * a + b * b + c * c == 25) ++sphere;
  long long annulus = 0;
  for (long long a = -6; a <= 6; ++a)
    for (long long b = -6; b <= 6; ++b) {
      long long s = a * a + b * b;
      // 4.5^2 < s < 5.5^2
      if (4 * s > 81 && 4 * s < 121) ++annulus;
    }
  auto lib_sphere = lattice::enumerate_sphere(Dim(3), 25).size();
  auto lib_annulus =
      lattice::enumerate_annulus({2, Rational(5), Rational(1, 2)}).points.size();
  detail = "sphere " + std::to_string(lib_sphere) + "/" +
           std::to_string(sphere) + ", annulus " + std::to_string(lib_annulus) +
           "/" + std::to_string(annulus);
  return sphere == 30 && annulus == 28 &&
         lib_sphere == static_cast<std::size_t>(sphere) &&
         lib_annulus == static_cast<std::size_t>(annulus);
}

bool poisson_oracle(std::string& detail) {
  kernel::BumpSpec bump;
  double rho = 0.5, worst = -1e300;
  bool ok = true;
  for (double lambda : {3.0, 5.0}) {
    auto m = mult::build_smooth_symbol(lambda, rho, bump, Dim(2));
    Rng rng(42);
    for (int i = 0; i < 10; ++i) {
      std::vector<double> x{rng.next_centered(), rng.next_centered()};
      auto direct = kernel::kernel_direct(m, x);
      auto pois = kernel::kernel_poisson(bump, lambda, rho, x, 20.0, Dim(2));
      double diff = std::abs(direct - pois.value);
      double tol = 1e-6 * rho * std::sqrt(lambda) + pois.tail_estimate;
      worst = std::max(worst, diff - tol);
      ok = ok && diff <= tol;
    }
  }
  detail = "worst slack " + fmt(-worst);
  return ok;
}

bool special_functions(std::string& detail) {
  bool ok = true;
  double worst3 = 0;
  for (int i = 0; i < 100; ++i) {
    double t = 0.01 * std::pow(1e4, i / 99.0);
    double sinc = std::sin(2 * M_PI * t) / (2 * M_PI * t);
    worst3 = std::max(worst3, std::abs(kernel::sphere_ft(Dim(3), t) - sinc));
  }
  ok = ok && worst3 <= 1e-10;
  double worst2 = 0;
  for (double t : {0.5, 2.0}) {
    const int M = 1 << 14;
    double acc = 0;
    for (int j = 0; j < M; ++j)
      acc += std::cos(2 * M_PI * t * std::cos(2 * M_PI * j / M));
    worst2 = std::max(worst2,
                      std::abs(kernel::sphere_ft(Dim(2), t) - acc / M));
  }
  ok = ok && worst2 <= 1e-8;
  detail = "n=3 err " + fmt(worst3) + ", n=2 err " + fmt(worst2);
  return ok;
}

bool exact_inequalities(std::string& detail) {
  bool ok = true;
  double worst_cs = -1e300;
  for (int n = 2; n <= 3; ++n) {
    lattice::AnnulusSpec spec(n, Rational(16), Rational(1));
    auto pts = lattice::enumerate_annulus(spec);
    auto cover = lattice::cap_cover(16.0, 4.0, Dim(n));
    lattice::max_cap_count(pts, cover);
    std::vector<std::vector<std::size_t>> caps(cover.centers.size());
    for (std::size_t i = 0; i < pts.points.size(); ++i)
      caps[static_cast<std::size_t>(cover.assignment[i])].push_back(i);
    Rng rng(2024);
    for (const auto& cap : caps) {
      if (cap.empty()) continue;
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& c : x) c = rng.next_centered();
        cdouble sum = 0;
        double l2 = 0;
        for (std::size_t idx : cap) {
          cdouble a(rng.next_centered(), rng.next_centered());
          l2 += std::norm(a);
          double phase = 0;
          for (int d = 0; d < n; ++d)
            phase += x[static_cast<std::size_t>(d)] *
                     static_cast<double>(pts.points[idx][static_cast<std::size_t>(d)]);
          sum += a * std::polar(1.0, 2 * M_PI * phase);
        }
        double lhs = std::abs(sum);
        double rhs = std::sqrt(static_cast<double>(cap.size()) * l2);
        worst_cs = std::max(worst_cs, lhs - rhs * (1 + 1e-12));
        ok = ok && lhs <= rhs * (1 + 1e-12);
      }
    }
  }
  // Parseval round-trip and projector idempotence on the sharp symbol
  auto m = mult::build_sharp_symbol(16.0, 1.0, Dim(2));
  int N = mult::default_grid_size(m.max_freq());
  auto f = mult::GridFunction::zeros(2, N);
  Rng rng(5);
  for (auto& s : f.samples) s = {rng.next_centered(), rng.next_centered()};
  auto Tf = mult::apply_symbol(m, f);
  auto coeffs = mult::fourier_coefficients(f, m.support);
  double rhs = 0;
  for (const auto& c : coeffs) rhs += std::norm(c);
  double lhs = mult::lp_norm(Tf, 2.0);
  ok = ok && std::abs(lhs * lhs - rhs) <= 1e-10 * rhs;
  auto TTf = mult::apply_symbol(m, Tf);
  double scale = mult::lp_norm(Tf, 0.0), idem = 0;
  for (std::size_t i = 0; i < Tf.total(); ++i)
    idem = std::max(idem, std::abs(TTf.samples[i] - Tf.samples[i]));
  ok = ok && idem <= 1e-12 * scale;
  detail = "CS slack " + fmt(-worst_cs) + ", idem " + fmt(idem / scale);
  return ok;
}

bool decay_envelope(std::string& detail) {
  kernel::BumpSpec bump;
  double cmin = 1e300, cmax = 0;
  for (int n = 2; n <= 3; ++n)
    for (double lambda : {8.0, 16.0, 32.0}) {
      double rho = std::pow(lambda, -1.0 / 3.0);
      kernel::DecayEnvelopeSpec env{0, lambda, rho};
      double C = 0;
      for (int i = 0; i < 12; ++i) {
        double t = std::pow(1.0 / rho, i / 11.0);
        double best = 0;
        for (int j = 0; j < 6; ++j) {
          double tj = t * (1.0 + 0.015 * (j - 2.5));
          double v = std::abs(kernel::radial_ft(bump, lambda, rho, tj, Dim(n)));
          best = std::max(best, v / kernel::envelope_value(env, n, tj));
        }
        C = std::max(C, best);
      }
      cmin = std::min(cmin, C);
      cmax = std::max(cmax, C);
    }
  detail = "constants in [" + fmt(cmin) + ", " + fmt(cmax) + "]";
  return cmax <= 4.0 * cmin;
}

bool crude_kernel_scaling(std::string& detail) {
  explab::SweepConfig cfg;
  cfg.n = 2;
  auto rep = explab::scaling_sweep("crude-kernel", {16, 32, 64, 128, 256}, cfg);
  detail = "fitted slope " + fmt(rep.fitted_slope) + " <= " +
           fmt(2.0 / 3.0 + 0.1);
  return rep.fitted_slope <= 2.0 / 3.0 + 0.1;
}

bool weyl_cancellation(std::string& detail) {
  weyl::WeylSumConfig cfg;
  cfg.n = 2;
  cfg.lambda = 40.0;
  cfg.rho = std::pow(40.0, -1.0 / 3.0);
  cfg.truncation_radius = 30.0;
  Rng rng(77);
  bool ok = true;
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    cfg.x = {rng.next_centered(), rng.next_centered()};
    cfg.sign = +1;
    auto plus = weyl::truncated_weyl_sum(cfg);
    double ratio = std::abs(plus.value) / plus.abs_sum;
    worst = std::max(worst, ratio);
    ok = ok && ratio < 0.5;
    cfg.sign = -1;
    auto minus = weyl::truncated_weyl_sum(cfg);
    ok = ok && std::abs(plus.value - std::conj(minus.value)) <=
                   1e-10 * plus.abs_sum;
  }
  // first-derivative homogeneity of the phase building block, exact scaling
  weyl::IntMatrix Q{{2, 1}, {1, 1}};
  for (int a1 = 0; a1 <= 1; ++a1)
    for (int a2 = 0; a2 <= 2; ++a2) {
      double base = weyl::phi_derivative(Q, {a1, a2}, {0.3, 0.7});
      double scaled = weyl::phi_derivative(Q, {a1, a2}, {0.6, 1.4});
      double expect = std::pow(2.0, 1 - a1 - a2) * base;
      ok = ok && std::abs(scaled - expect) <= 1e-10 * (1 + std::abs(expect));
    }
  detail = "max |S|/sum|w| " + fmt(worst);
  return ok;
}

bool hessian_and_cosets(std::string& detail) {
  bool ok = true;
  weyl::IntMatrix Q{{2, 1}, {1, 1}};
  double a = weyl::scaled_hessian(Q, QOrder(3), {0.6, 0.8});
  double b = weyl::scaled_hessian(Q, QOrder(3), {1.8, 2.4});
  ok = ok && std::abs(a - b) <= 1e-9 * std::abs(a);
  std::vector<weyl::IntMatrix> mats{{{1, 0}, {0, 1}}, {{2, 1}, {1, 1}}};
  double worst_fd = 0;
  for (const auto& M : mats)
    for (int a1 = 0; a1 <= 3; ++a1)
      for (int a2 = 0; a1 + a2 <= 3; ++a2) {
        double exact = weyl::phi_derivative(M, {a1, a2}, {0.7, -0.35});
        double fd = weyl::phi_derivative_fd(M, {a1, a2}, {0.7, -0.35}, 1e-3);
        double err = std::abs(exact - fd) / (1 + std::abs(exact));
        worst_fd = std::max(worst_fd, err);
        ok = ok && err <= 1e-7;
      }
  // cosets: 5 seeded maps, 1000 vectors, adjugate-mod-det uniqueness witness
  std::vector<weyl::IntMatrix> maps{{{2, 0}, {0, 3}},
                                    {{3, 1}, {1, 2}},
                                    {{2, 1}, {0, 2}},
                                    {{4, 3}, {1, 1}},
                                    {{5, 2}, {3, 4}}};
  Rng rng(31);
  for (const auto& M : maps) {
    auto cs = weyl::coset_decomposition(M);
    long long det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    long long ad = det < 0 ? -det : det;
    ok = ok && cs.representatives.size() == static_cast<std::size_t>(ad);
    for (int t = 0; t < 1000; ++t) {
      std::vector<long long> k{
          static_cast<long long>(rng.next_below(201)) - 100,
          static_cast<long long>(rng.next_below(201)) - 100};
      std::size_t idx = weyl::coset_index(cs, k);
      int matches = 0;
      std::size_t found = cs.representatives.size();
      for (std::size_t r = 0; r < cs.representatives.size(); ++r) {
        long long d0 = k[0] - cs.representatives[r][0];
        long long d1 = k[1] - cs.representatives[r][1];
        // M^{-1} d integral  iff  adj(M) d == 0 mod det
        long long y0 = M[1][1] * d0 - M[0][1] * d1;
        long long y1 = -M[1][0] * d0 + M[0][0] * d1;
        if (y0 % det == 0 && y1 % det == 0) {
          ++matches;
          found = r;
        }
      }
      ok = ok && matches == 1 && found == idx;
    }
  }
  detail = "fd err " + fmt(worst_fd);
  return ok;
}

bool resolvent_uniformity(std::string& detail) {
  explab::SweepConfig cfg;  // n = 3, rho_exp = 1/3
  auto rep =
      explab::scaling_sweep("resolvent-uniformity", {8, 16, 32, 64}, cfg);
  double lo = 1e300, hi = 0;
  for (const auto& p : rep.points) {
    lo = std::min(lo, p.value);
    hi = std::max(hi, p.value);
  }
  detail = "max/min " + fmt(hi / lo);
  return hi <= 4.0 * lo;
}

bool stein_tomas_stability(std::string& detail) {
  explab::SweepConfig cfg;  // n = 3
  auto rep = explab::scaling_sweep("stein-tomas", {8, 16, 32, 64}, cfg);
  double lo = 1e300, hi = 0;
  for (const auto& p : rep.points) {
    double v = p.value / std::pow(p.lambda, 0.25);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  detail = "normalized max/min " + fmt(hi / lo);
  return hi <= 4.0 * lo;
}

}  // namespace

int main() {
  std::string d;
  report(1, "exact exponent suite", exact_exponents());
  d.clear();
  report(2, "lattice enumeration oracles", lattice_oracles(d), d);
  d.clear();
  report(3, "direct kernel vs lattice-translate sum", poisson_oracle(d), d);
  d.clear();
  report(4, "sphere transform closed forms", special_functions(d), d);
  d.clear();
  report(5, "cap Cauchy-Schwarz, Parseval, idempotence",
         exact_inequalities(d), d);
  d.clear();
  report(6, "kernel decay envelope constants", decay_envelope(d), d);
  d.clear();
  report(7, "crude kernel scaling slope", crude_kernel_scaling(d), d);
  d.clear();
  report(8, "oscillatory sum cancellation and invariants",
         weyl_cancellation(d), d);
  d.clear();
  report(9, "Hessian certificates and coset classification",
         hessian_and_cosets(d), d);
  d.clear();
  report(10, "resolvent uniformity probe", resolvent_uniformity(d), d);
  d.clear();
  report(11, "projector ratio stability at the dual exponent",
         stein_tomas_stability(d), d);
  return failures == 0 ? 0 : 1;
}
