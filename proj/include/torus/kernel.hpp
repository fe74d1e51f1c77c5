#pragma once

#include <optional>
#include <vector>

#include "torus/common.hpp"
#include "torus/symbol.hpp"

namespace torus::kernel {

// Even C^infty cutoff with plateau [-1,1] and support [-2,2]:
//   beta(t) = h((4-t^2)/3) / (h((4-t^2)/3) + h((t^2-1)/3)),  h(s) = e^{-1/s}.
struct BumpSpec {
  // The construction is fixed; the struct exists so alternative shapes can be
  // threaded through later without touching call sites.
};

double bump_eval(const BumpSpec& spec, double t);

struct BesselResult {
  double value = 0;
  bool accuracy_loss = false;
};

// J_nu(z) for nu = order_twice/2 (integer or half-integer order), z >= 0.
BesselResult bessel_j(int order_twice, double z);

// Fourier transform of the unit-mass surface measure of S^{n-1}:
//   sigma_check(t) = Gamma(n/2) (pi t)^{-(n-2)/2} J_{(n-2)/2}(2 pi t),
// with sigma_check(0) = 1.
double sphere_ft(Dim n, double t);

// Decay envelope parameters from the kernel bound
//   |m_check(x)| <~ rho lambda^{(n-1)/2} |x|^{-(n-1)/2} (1 + rho|x|)^{-N}.
struct DecayEnvelopeSpec {
  int N = -1;  // negative -> default 100 n; 0 drops the (1 + rho|x|)^-N tail
  double lambda = 0;
  double rho = 0;
};

// Radial Fourier transform of the smooth annulus multiplier, i.e. the value
// m_check(x) for |x| = x_norm:
//   |S^{n-1}| int over r in [lambda-2rho, lambda+2rho] of
//   sigma_check(r * x_norm) beta(rho^{-1}(r-lambda)) r^{n-1} dr.
// Panels are kept narrower than 1/(8 x_norm) so the oscillation is resolved;
// absolute quadrature error is held below 1e-9 * rho * lambda^{n-1}.
double radial_ft(const BumpSpec& bump, double lambda, double rho,
                 double x_norm, Dim n);

// Exact finite sum  sum_k m(k) e^{2 pi i x.k}  with compensated accumulation.
cdouble kernel_direct(const MultiplierSymbol& m, const std::vector<double>& x);

struct PoissonResult {
  cdouble value{0, 0};
  double tail_estimate = 0;
  long long terms = 0;
};

// Sum of radial_ft over the lattice translates x + k with |x+k| <= T, plus
// a conservative estimate of the omitted tail obtained by extrapolating the
// measured decay near the truncation radius.
PoissonResult kernel_poisson(const BumpSpec& bump, double lambda, double rho,
                             const std::vector<double>& x,
                             double truncation_radius, Dim n);

double envelope_value(const DecayEnvelopeSpec& env, int n, double t);

}  // namespace torus::kernel
