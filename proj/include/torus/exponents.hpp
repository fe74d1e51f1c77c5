#pragma once

#include <vector>

#include "torus/rational.hpp"

namespace torus::exponents {

// Exact values of every closed-form exponent for a given (n, q), together
// with the margins of the two side conditions they must satisfy.
struct ExponentReport {
  int n = 0;
  int q = 0;
  Rational epsilon_n;          // only defined for n >= 3
  Rational beta_n;             // only defined for n >= 3
  Rational omega_nq;
  Rational beta_nq;            // only defined for n >= 3
  Rational constraint_margin;  // at beta = beta_n(n)
  Rational positivity_margin;
};

// epsilon_n: 2(n-1)/(n(n+1)) for odd n, 2(n-1)/(n^2+2n+2) for even n.
Rational epsilon_bssy(Dim n);

// The number-theoretically refined three-dimensional exponent 85/252.
Rational epsilon3_refined();

// omega_{n,q} = n / (2n(2^q - 1) + 2^{q+1}).
Rational omega(Dim n, QOrder q);

// beta_n = 1/3 + n/3 * 1/(21n^2 - n - 24).
Rational beta_n(Dim n);

// beta_{n,q} = 1/3 + n/3 * (q-2)/(3(n^2-1)2^q - qn - (3n-2)n).
Rational beta_nq(Dim n, QOrder q);

// argmax of beta_nq(n, .) over q in 3..q_max; ties broken toward smaller q.
QOrder optimal_q(Dim n, QOrder q_max);

// 1 - beta * (q - 1 - 2/n + 2^{1-q}). Positive iff rho = lambda^{-beta}
// meets the admissibility constraint with room for small epsilon.
Rational constraint_margin(Dim n, QOrder q, const Rational& beta);

// (n+1)/2 - (q+1) * omega_{n,q}; must be positive.
Rational positivity_margin(Dim n, QOrder q);

ExponentReport report(Dim n, QOrder q);

std::vector<ExponentReport> table(int n_min, int n_max, int q_max);

}  // namespace torus::exponents
