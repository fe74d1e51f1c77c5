#pragma once

#include <cstdint>
#include <vector>

#include "torus/rational.hpp"

namespace torus::lattice {

using Point = std::vector<long long>;

// The annulus A(lambda, rho) = { xi : | |xi| - lambda | < rho }. Both radii
// are exact rationals so that lattice membership can be decided in integer
// arithmetic: lambda - rho < |k| < lambda + rho iff
// (lambda - rho)^2 < |k|^2 < (lambda + rho)^2 (with the lower bound dropped
// when lambda < rho).
struct AnnulusSpec {
  int n;
  Rational lambda;
  Rational rho;

  AnnulusSpec(int n_, Rational lambda_, Rational rho_)
      : n(n_), lambda(std::move(lambda_)), rho(std::move(rho_)) {
    if (n < 1) throw domain_error("annulus dimension must be >= 1");
    if (lambda < 1) throw domain_error("annulus requires lambda >= 1");
    if (rho <= 0) throw domain_error("annulus requires rho > 0");
  }
};

// Lattice points of an annulus, in lexicographic order, duplicate-free.
struct LatticePointSet {
  AnnulusSpec spec;
  std::vector<Point> points;
};

// Deterministic finitely-overlapping covering of the sphere of radius lambda
// by caps of euclidean radius cap_radius. Centers are unit directions;
// assignment maps each lattice point of an annulus to its nearest center,
// accepting angular distance up to twice the nominal cap angle.
struct CapCover {
  double lambda = 0;
  double cap_radius = 0;
  std::vector<std::vector<double>> centers;  // unit vectors
  std::vector<int> assignment;               // per lattice point index
};

struct LatticeBudget {
  // Upper bound on the estimated number of enumerated points.
  std::uint64_t max_points = 50'000'000;
};

LatticePointSet enumerate_annulus(const AnnulusSpec& spec,
                                  const LatticeBudget& budget = {});

// All k in Z^n with |k|^2 = radius_sq, lexicographic order.
std::vector<Point> enumerate_sphere(Dim n, long long radius_sq);

// Independent oracle: r_n(s) by nested-loop brute force.
std::uint64_t shell_count_bruteforce(int n, long long s);

CapCover cap_cover(double lambda, double cap_radius, Dim n);

// Assigns every point of `points` to a cap of `cover` (in place) and returns
// the maximum number of points landing in a single cap.
struct CapCountResult {
  int max_count = 0;
  double normalized_ratio = 0;  // max_count / (r * lambda)^{(n-1)/2}
};
CapCountResult max_cap_count(const LatticePointSet& points, CapCover& cover);

double norm_of(const Point& p);

}  // namespace torus::lattice
