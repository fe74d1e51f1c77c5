#pragma once

#include <string>
#include <vector>

#include "torus/multiplier.hpp"

namespace torus::explab {

// Structured extremizer candidates, all band-limited to the active symbol's
// support. Draws are deterministic at fixed seed.
enum class FamilyKind { random_sign, focusing, knapp_cap, random_gaussian };

struct TestFamily {
  FamilyKind kind = FamilyKind::random_sign;
  std::uint64_t seed = 1;
  int cap_index = -1;  // knapp: -1 draws the cap from the seed
};

FamilyKind parse_family(const std::string& name);
std::string family_name(FamilyKind kind);

// Exact L^2 -> L^2 operator norm: max |m(k)| over the support.
double op_norm_l2(const MultiplierSymbol& m);

struct SupNormSearch {
  int grid = 0;        // 0 -> default_grid_size of the support radius
  int refine_rounds = 24;
};

struct SupNormResult {
  double lower_bound = 0;  // certified: an evaluated |kernel| value
  double gap = 0;          // Lipschitz bound on sup - grid max
  std::vector<double> argmax;
};

// L^1 -> L^infty norm = sup_x |kernel(x)|: grid sup through the DFT followed
// by coordinatewise golden-section refinement around the best cell. The gap
// uses the Lipschitz constant 2 pi sum |m(k)| |k|.
SupNormResult op_norm_1_inf(const MultiplierSymbol& m,
                            const SupNormSearch& search = {});

// max over trials of ||m(D) f||_{p_out} / ||f||_{p_in}; an empirical lower
// bound for the operator norm. grid_n = 0 picks the default aliasing-safe
// size. Zero-norm draws are skipped.
double empirical_ratio(const MultiplierSymbol& m, double p_out, double p_in,
                       const TestFamily& family, int trials, int grid_n = 0);

struct ScalingPoint {
  double lambda = 0;
  double value = 0;
};

struct ScalingReport {
  std::string experiment;
  std::vector<ScalingPoint> points;
  double fitted_slope = 0;
  Rational predicted_slope;
  double residual = 0;  // fitted - predicted
  std::uint64_t seed = 0;
  std::string config_digest;
  std::string note;
};

struct SweepConfig {
  int n = 3;
  double rho_exp = 1.0 / 3.0;  // rho = lambda^{-rho_exp}
  std::uint64_t seed = 11;
  int trials = 4;
};

// Experiments: "proj-norm", "crude-kernel", "resolvent-uniformity",
// "stein-tomas", "discrete-restriction".
ScalingReport scaling_sweep(const std::string& experiment,
                            const std::vector<double>& lambdas,
                            const SweepConfig& config);

// max over random-sign draws of ||sum a_k e^{2 pi i k x}||_{2n/(n-2)} with
// sum |a_k|^2 = #points, normalized by sqrt(#points).
double discrete_restriction_probe(Dim n, long long lambda_sq, int trials,
                                  std::uint64_t seed = 7);

// Ordinary least squares slope of log(value) against log(lambda). Requires
// at least 4 points spanning at least 3 octaves.
double fit_loglog_slope(const std::vector<ScalingPoint>& points);

}  // namespace torus::explab
