#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "torus/weyl.hpp"

using namespace torus;
using namespace torus::weyl;

namespace {

WeylSumConfig base_config() {
  WeylSumConfig cfg;
  cfg.n = 1;
  cfg.lambda = 3.0;
  cfg.rho = 1.0;
  cfg.truncation_radius = 2.5;
  cfg.x = {0.3};
  return cfg;
}

}  // namespace

TEST_CASE("term count in one dimension by hand") {
  // |0.3 + k| in (1/2, 5/2] holds for k in {-2, -1, 1, 2}: four terms.
  auto res = truncated_weyl_sum(base_config());
  CHECK(res.terms == 4);
  CHECK(res.abs_sum > 0.0);
}

TEST_CASE("sign flip conjugates the sum") {
  auto cfg = base_config();
  auto plus = truncated_weyl_sum(cfg);
  cfg.sign = -1;
  auto minus = truncated_weyl_sum(cfg);
  CHECK(std::abs(plus.value - std::conj(minus.value)) <= 1e-12);
  CHECK(plus.abs_sum == doctest::Approx(minus.abs_sum).epsilon(1e-15));
}

TEST_CASE("weyl sum guards") {
  auto cfg = base_config();
  cfg.truncation_radius = 0.1;
  CHECK_THROWS_AS(truncated_weyl_sum(cfg), domain_error);
  cfg = base_config();
  cfg.n = 3;
  cfg.x = {0.1, 0.2, 0.3};
  cfg.truncation_radius = 200.0;
  cfg.max_terms = 100;
  CHECK_THROWS_AS(truncated_weyl_sum(cfg), resource_error);
}

TEST_CASE("phi derivative closed forms") {
  IntMatrix I2{{1, 0}, {0, 1}};
  std::vector<double> u{0.8, -0.6};  // |u| = 1
  // d_1 |u| = u_1 / |u|
  CHECK(phi_derivative(I2, {1, 0}, u) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(phi_derivative(I2, {0, 1}, u) == doctest::Approx(-0.6).epsilon(1e-14));
  // zeroth order is |u| itself
  CHECK(phi_derivative(I2, {0, 0}, u) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("phi derivative homogeneity") {
  IntMatrix Q{{2, 1}, {1, 1}};
  std::vector<double> u{0.4, 0.9};
  for (int a1 = 0; a1 <= 2; ++a1)
    for (int a2 = 0; a2 <= 2; ++a2) {
      double base = phi_derivative(Q, {a1, a2}, u);
      std::vector<double> su{3.0 * u[0], 3.0 * u[1]};
      double scaled = phi_derivative(Q, {a1, a2}, su);
      double expect = std::pow(3.0, 1 - a1 - a2) * base;
      CHECK(scaled == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("phi derivative against finite differences") {
  std::vector<IntMatrix> mats{{{1, 0}, {0, 1}}, {{2, 1}, {1, 1}}};
  std::vector<double> u{0.7, -0.35};
  for (const auto& Q : mats)
    for (int a1 = 0; a1 <= 2; ++a1)
      for (int a2 = 0; a2 + a1 <= 3; ++a2) {
        double exact = phi_derivative(Q, {a1, a2}, u);
        double fd = phi_derivative_fd(Q, {a1, a2}, u, 1e-3);
        CHECK(std::abs(exact - fd) <= 1e-7 * (1.0 + std::abs(exact)));
      }
}

TEST_CASE("phi derivative rejects singular maps") {
  IntMatrix S{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(phi_derivative(S, {1, 0}, {0.3, 0.4}), domain_error);
}

TEST_CASE("scaled hessian is radius invariant") {
  IntMatrix Q{{2, 1}, {1, 1}};
  std::vector<double> u{0.6, 0.8};
  std::vector<double> u2{1.2, 1.6};
  double a = scaled_hessian(Q, QOrder(3), u);
  double b = scaled_hessian(Q, QOrder(3), u2);
  CHECK(a == doctest::Approx(b).epsilon(1e-9));
  CHECK(a > 0.0);
}

TEST_CASE("hessian certificate") {
  IntMatrix Q{{2, 1}, {1, 1}};
  auto cert = hessian_certificate(Q, QOrder(3), 64, 1e-12);
  CHECK(cert.samples.size() == 64);
  CHECK(cert.scaled.size() == 64);
  CHECK(cert.min_scaled > 0.0);
  CHECK(cert.degenerate.empty());
  CHECK(cert.alpha == std::vector<int>{1, 2});
  CHECK(alpha_of_order(3, 4) == std::vector<int>{1, 0, 3});
}

TEST_CASE("unit sphere samples have unit norm") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : sample_unit_sphere(n, 37)) {
      double s = 0;
      for (double v : p) s += v * v;
      CHECK(std::abs(s - 1.0) <= 1e-12);
    }
}

TEST_CASE("integer determinant") {
  CHECK(det_int({{3, 1}, {1, 2}}) == 5);
  CHECK(det_int({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}) == 24);
  CHECK(det_int({{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("cosets of a diagonal map") {
  IntMatrix D{{2, 0}, {0, 3}};
  auto cs = coset_decomposition(D);
  REQUIRE(cs.representatives.size() == 6);
  std::set<std::pair<long long, long long>> reduced;
  for (const auto& b : cs.representatives) {
    long long r0 = ((b[0] % 2) + 2) % 2, r1 = ((b[1] % 3) + 3) % 3;
    reduced.insert({r0, r1});
  }
  CHECK(reduced.size() == 6);
}

TEST_CASE("coset index is a classifier") {
  std::vector<IntMatrix> mats{{{2, 0}, {0, 3}},
                              {{3, 1}, {1, 2}},
                              {{2, 1}, {0, 2}},
                              {{4, 3}, {1, 1}},
                              {{5, 2}, {3, 4}}};
  Rng rng(91);
  for (const auto& Q : mats) {
    auto cs = coset_decomposition(Q);
    long long d = det_int(Q);
    if (d < 0) d = -d;
    CHECK(cs.representatives.size() == static_cast<std::size_t>(d));
    for (int t = 0; t < 50; ++t) {
      std::vector<long long> k{
          static_cast<long long>(rng.next_below(41)) - 20,
          static_cast<long long>(rng.next_below(41)) - 20};
      std::size_t idx = coset_index(cs, k);
      REQUIRE(idx < cs.representatives.size());
      // k and k + Q z land in the same coset
      long long z0 = static_cast<long long>(rng.next_below(7)) - 3;
      long long z1 = static_cast<long long>(rng.next_below(7)) - 3;
      std::vector<long long> shifted{k[0] + Q[0][0] * z0 + Q[0][1] * z1,
                                     k[1] + Q[1][0] * z0 + Q[1][1] * z1};
      CHECK(coset_index(cs, shifted) == idx);
    }
  }
  CHECK_THROWS_AS(coset_decomposition(IntMatrix{{1, 2}, {2, 4}}),
                  domain_error);
}

TEST_CASE("muller hypotheses") {
  WeylSumConfig cfg;
  cfg.n = 3;
  cfg.lambda = 4.0;
  cfg.rho = 1.0;
  cfg.truncation_radius = 4.0;
  cfg.x = {0.1, 0.2, 0.3};
  auto rep = muller_hypotheses_check(cfg, QOrder(3), 2.0);
  CHECK(rep.exponent == Rational(19, 12));
  CHECK(rep.predicate);  // 4^12 >= 2^19
  REQUIRE_FALSE(rep.weight_constants.empty());
  for (const auto& row : rep.weight_constants) {
    REQUIRE(row.size() == 3);
    for (double c : row) {
      CHECK(std::isfinite(c));
      CHECK(c >= 0.0);
    }
  }
  cfg.lambda = 2.0;
  CHECK_FALSE(muller_hypotheses_check(cfg, QOrder(3), 2.0).predicate);
}
