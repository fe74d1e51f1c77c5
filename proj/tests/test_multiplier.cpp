#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "torus/multiplier.hpp"

using namespace torus;
using namespace torus::mult;

namespace {

double sq_norm(const std::vector<long long>& k) {
  double s = 0;
  for (long long c : k) s += double(c) * double(c);
  return s;
}

cdouble inner(const GridFunction& f, const GridFunction& g) {
  KahanC acc;
  for (std::size_t i = 0; i < f.total(); ++i)
    acc.add(f.samples[i] * std::conj(g.samples[i]));
  return acc.sum() / double(f.total());
}

GridFunction random_grid(int n, int N, std::uint64_t seed) {
  auto f = GridFunction::zeros(n, N);
  Rng rng(seed);
  for (auto& s : f.samples) s = {rng.next_centered(), rng.next_centered()};
  return f;
}

}  // namespace

TEST_CASE("smooth symbol support and range") {
  double lambda = 6, rho = 1;
  auto m = build_smooth_symbol(lambda, rho, kernel::BumpSpec{}, Dim(2));
  CHECK(m.meta.kind == "smooth");
  REQUIRE(m.size() > 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    double r = std::sqrt(sq_norm(m.support[i]));
    CHECK(r > lambda - 2 * rho);
    CHECK(r < lambda + 2 * rho);
    double v = m.values[i].real();
    CHECK(m.values[i].imag() == 0.0);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    if (r >= lambda - rho && r <= lambda + rho) CHECK(v == 1.0);
  }
}

TEST_CASE("sharp symbol is the annulus indicator") {
  auto m = build_sharp_symbol(5.0, 0.5, Dim(2));
  CHECK(m.size() == 28);
  for (const auto& v : m.values) CHECK(v == cdouble(1, 0));
}

TEST_CASE("resolvent symbol values and tail bound") {
  ResolventPoint zp{4.0, 0.25};
  auto m = build_resolvent_symbol(zp, 16.0, Dim(2));
  REQUIRE(m.size() > 0);
  cdouble z = zp.z();
  for (std::size_t i = 0; i < m.size(); ++i) {
    cdouble expect = 1.0 / (z - sq_norm(m.support[i]));
    CHECK(std::abs(m.values[i] - expect) <= 1e-15 * std::abs(expect));
  }
  CHECK(m.meta.truncation_error > 0.0);
  CHECK_THROWS_AS(build_resolvent_symbol({4.0, 0.0}, 16.0, Dim(2)),
                  domain_error);
  CHECK_THROWS_AS(build_resolvent_symbol(zp, 8.0, Dim(2)), domain_error);
}

TEST_CASE("apply_symbol: Parseval, idempotence, self-adjointness") {
  auto m = build_sharp_symbol(5.0, 0.5, Dim(2));
  int N = default_grid_size(m.max_freq());
  auto f = random_grid(2, N, 21);
  auto g = random_grid(2, N, 22);
  auto Tf = apply_symbol(m, f);
  auto Tg = apply_symbol(m, g);

  // Projection: ||Tf||_2^2 = sum over supported modes of |f_hat|^2.
  auto coeffs = fourier_coefficients(f, m.support);
  double rhs = 0;
  for (const auto& c : coeffs) rhs += std::norm(c);
  double lhs = sqr(lp_norm(Tf, 2.0));
  CHECK(std::abs(lhs - rhs) <= 1e-10 * rhs);

  auto TTf = apply_symbol(m, Tf);
  double scale = lp_norm(Tf, 0.0);
  for (std::size_t i = 0; i < Tf.total(); ++i)
    CHECK(std::abs(TTf.samples[i] - Tf.samples[i]) <= 1e-12 * scale);

  cdouble a = inner(Tf, g), b = inner(f, Tg);
  CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));
}

TEST_CASE("aliasing guard") {
  auto m = build_sharp_symbol(5.0, 0.5, Dim(2));
  auto f = GridFunction::zeros(2, 8);  // N = 8 < 2 * max_freq
  CHECK_THROWS_AS(apply_symbol(m, f), domain_error);
}

TEST_CASE("synthesize / fourier_coefficients roundtrip") {
  std::vector<std::vector<long long>> freqs{{0, 0}, {3, -2}, {-5, 1}, {2, 2}};
  std::vector<cdouble> coeffs{{1, 0}, {0.5, -0.25}, {-0.125, 2}, {0, 1}};
  auto f = synthesize(2, 24, freqs, coeffs);
  auto back = fourier_coefficients(f, freqs);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    CHECK(std::abs(back[i] - coeffs[i]) <= 1e-12);
  // unsupported mode reads as zero
  auto zero = fourier_coefficients(f, {{7, 7}});
  CHECK(std::abs(zero[0]) <= 1e-12);
}

TEST_CASE("mollified split") {
  auto m = build_smooth_symbol(20.0, 0.5, kernel::BumpSpec{}, Dim(2));
  auto split = mollified_split(m, EtaSpec{});
  std::map<std::vector<long long>, cdouble> total;
  for (std::size_t i = 0; i < split.m0.size(); ++i)
    total[split.m0.support[i]] += split.m0.values[i];
  for (std::size_t i = 0; i < split.m1.size(); ++i)
    total[split.m1.support[i]] += split.m1.values[i];
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto it = total.find(m.support[i]);
    REQUIRE(it != total.end());
    CHECK(std::abs(it->second - m.values[i]) <= 1e-12);
    total.erase(it);
  }
  for (const auto& [k, v] : total) CHECK(std::abs(v) <= 1e-12);

  CHECK(l1_mass(split.m1) <= 0.2 * l1_mass(m));
  CHECK_THROWS_AS(mollified_split(build_sharp_symbol(20.0, 0.5, Dim(2)),
                                  EtaSpec{}),
                  domain_error);
}

TEST_CASE("lp_norm") {
  auto f = random_grid(2, 16, 33);
  double p1 = lp_norm(f, 1.0), p2 = lp_norm(f, 2.0), p4 = lp_norm(f, 4.0);
  double pinf = lp_norm(f, 0.0);
  CHECK(p1 <= p2);
  CHECK(p2 <= p4);
  CHECK(p4 <= pinf);
  Kahan acc;
  for (const auto& s : f.samples) acc.add(std::norm(s));
  CHECK(p2 == doctest::Approx(std::sqrt(acc.sum() / double(f.total())))
                  .epsilon(1e-12));
  CHECK_THROWS_AS(lp_norm(f, 0.5), domain_error);
}

TEST_CASE("grid guards") {
  CHECK_THROWS_AS(GridFunction::zeros(0, 8), domain_error);
  CHECK_THROWS_AS(GridFunction::zeros(3, 100000), resource_error);
  CHECK(default_grid_size(5) >= 22);
}
