#pragma once

#include <functional>
#include <vector>

#include "torus/kernel.hpp"
#include "torus/lattice.hpp"
#include "torus/symbol.hpp"

namespace torus::mult {

// Sampled function on the uniform periodic grid x_j = j/N in [0,1)^n,
// row-major. All norms carry the measure weight N^{-n}.
struct GridFunction {
  int n = 0;
  int N = 0;
  std::vector<cdouble> samples;  // size N^n

  static GridFunction zeros(int n, int N);
  std::size_t total() const { return samples.size(); }
};

// z = (lambda + i mu)^2, kept off the lattice spectrum {|k|^2}.
struct ResolventPoint {
  double lambda = 0;
  double mu = 0;
  cdouble z() const {
    cdouble w(lambda, mu);
    return w * w;
  }
};

// Construction parameters for the mollifier eta: eta_check is the same
// bump construction as beta (1 on B(0,1), supported in B(0,2), radial).
struct EtaSpec {
  kernel::BumpSpec bump;
};

MultiplierSymbol build_smooth_symbol(double lambda, double rho,
                                     const kernel::BumpSpec& bump, Dim n);

MultiplierSymbol build_sharp_symbol(double lambda, double rho, Dim n);

// Values 1/(z - |k|^2) on |k| <= cutoff_radius; the reported
// truncation_error bounds the operator-norm contribution of the omitted
// O(|k|^-2) tail symbols.
MultiplierSymbol build_resolvent_symbol(const ResolventPoint& zp,
                                        double cutoff_radius, Dim n);

// Same values, support restricted to the annulus A(lambda, band). Used by
// experiments whose test functions are band-limited near the annulus, where
// the full 4*lambda cutoff ball would be needlessly large.
MultiplierSymbol build_resolvent_symbol_banded(const ResolventPoint& zp,
                                               double band, Dim n);

// Forward DFT / pointwise multiply / inverse DFT. Precondition:
// N > 2 * max|k|_infty over the support (no aliasing).
GridFunction apply_symbol(const MultiplierSymbol& m, const GridFunction& f);

// Fourier coefficients of f at the signed frequencies in (-N/2, N/2]^n,
// evaluated through the same DFT convention as apply_symbol.
std::vector<cdouble> fourier_coefficients(const GridFunction& f,
                                          const std::vector<std::vector<long long>>& freqs);

// m0 = m * eta (radial Hankel-type convolution, support restricted to
// A(lambda, 4)), m1 = m - m0 on the union of supports.
struct SplitSymbols {
  MultiplierSymbol m0;
  MultiplierSymbol m1;
};
SplitSymbols mollified_split(const MultiplierSymbol& m, const EtaSpec& eta);

// (N^{-n} sum |f|^p)^{1/p}; p = infinity -> max (pass p <= 0).
double lp_norm(const GridFunction& f, double p);

double l1_mass(const MultiplierSymbol& m);

// Default grid size for a symbol of outer radius maxfreq: the smallest
// 5-smooth integer >= scale * maxfreq (scale 4 for quadrature headroom).
int default_grid_size(double outer_radius, int scale = 4);

// Band-limited synthesis: f with given Fourier coefficients on `freqs`.
GridFunction synthesize(int n, int N,
                        const std::vector<std::vector<long long>>& freqs,
                        const std::vector<cdouble>& coeffs);

}  // namespace torus::mult
