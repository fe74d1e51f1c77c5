#pragma once

#include <vector>

#include "torus/rational.hpp"

namespace torus::weyl {

// Truncated oscillatory lattice sum with phase lambda |x + k| and the
// surrogate weight w(t) = t^{-(n-1)/2} (1 + rho t)^{-N}. Terms with
// |x + k| < 1/2 are excluded (near-origin cut standing in for the
// 1 - eta_check factor, which vanishes there).
struct WeylSumConfig {
  int n = 2;
  double lambda = 1;
  double rho = 1;
  int sign = +1;
  double truncation_radius = 1;
  int N = 2;
  std::vector<double> x;
  std::uint64_t max_terms = 200'000'000;
};

struct WeylSumResult {
  cdouble value{0, 0};
  double abs_sum = 0;
  long long terms = 0;
};

WeylSumResult truncated_weyl_sum(const WeylSumConfig& cfg);

// Exact partial derivative  d^alpha |Q u|  via the closed recursion for the
// derivatives of r(v) = |v| (polynomials in v over odd powers of r),
// composed with the linear map Q. No finite differences.
using IntMatrix = std::vector<std::vector<long long>>;

double phi_derivative(const IntMatrix& Q, const std::vector<int>& alpha,
                      const std::vector<double>& u);

// Finite-difference oracle for the same quantity (test support).
double phi_derivative_fd(const IntMatrix& Q, const std::vector<int>& alpha,
                         const std::vector<double>& u, double h);

struct HessianCertificate {
  IntMatrix Q;
  std::vector<int> alpha;                    // (1, 0, ..., 0, q-1)
  std::vector<std::vector<double>> samples;  // unit sphere sample points
  std::vector<double> scaled;                // |Hess| * |u|^{(q+1)n} per sample
  double min_scaled = 0;
  std::vector<std::size_t> degenerate;       // sample indices below threshold
};

// |det Hess d^{alpha(q)} Phi(u)| * |u|^{(q+1)n} over a deterministic
// quasi-uniform sphere sample.
HessianCertificate hessian_certificate(const IntMatrix& Q, QOrder q,
                                       int sphere_samples, double threshold);

// The mixed-derivative multi-index (1, 0, ..., 0, q-1).
std::vector<int> alpha_of_order(int n, int q);

// Scaled Hessian determinant at a single point.
double scaled_hessian(const IntMatrix& Q, QOrder q, const std::vector<double>& u);

struct CosetSet {
  IntMatrix Q;
  std::vector<std::vector<long long>> representatives;  // canonical, |det Q| many
};

// Z^n = disjoint union of b + Q Z^n over the representatives, computed via
// the Smith normal form of Q. Representatives are canonically reduced into
// the Hermite-normal-form fundamental domain.
CosetSet coset_decomposition(const IntMatrix& Q);

// Index of the coset containing k (every k classifies into exactly one).
std::size_t coset_index(const CosetSet& cosets, const std::vector<long long>& k);

long long det_int(const IntMatrix& Q);

struct MullerReport {
  bool predicate = false;       // lambda >= M^{q - 1 - 2/n + 2^{1-q}}, exact
  Rational exponent;            // q - 1 - 2/n + 2^{1-q}
  // sup |d^alpha w_j| * 2^{j|alpha|} sampled per dyadic level, |alpha| <= 2.
  std::vector<std::vector<double>> weight_constants;  // [j][order]
  std::vector<int> j_levels;
};

MullerReport muller_hypotheses_check(const WeylSumConfig& cfg, QOrder q,
                                     double M);

std::vector<std::vector<double>> sample_unit_sphere(int n, int count);

}  // namespace torus::weyl
