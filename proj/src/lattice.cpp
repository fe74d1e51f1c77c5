#include "torus/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace torus::lattice {

namespace {

// floor of a nonnegative rational
BigInt rational_floor(const Rational& r) {
  return numerator(r) / denominator(r);
}

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw domain_error("isqrt of negative");
  if (v == 0) return 0;
  BigInt x = BigInt(1) << static_cast<unsigned>((msb(v) / 2) + 1);
  for (;;) {
    BigInt y = (x + v / x) / 2;
    if (y >= x) break;
    x = y;
  }
  while (x * x > v) --x;
  return x;
}

struct AnnulusEnum {
  int n;
  Rational lo;  // (lambda - rho)^2, or negative when lambda < rho
  Rational hi;  // (lambda + rho)^2
  bool has_lo;
  std::uint64_t limit;
  std::vector<Point>* out;
  Point current;

  void recurse(int level, const BigInt& partial) {
    Rational rem = hi - Rational(partial);
    if (rem <= 0) return;
    if (level == n) {
      // partial = |k|^2; membership: lo < partial < hi, both strict
      if (has_lo && Rational(partial) <= lo) return;
      if (Rational(partial) >= hi) return;
      if (out->size() >= limit) throw resource_error("lattice budget exceeded");
      out->push_back(current);
      return;
    }
    // Remaining coordinates cannot push |k|^2 above hi.
    BigInt bound = isqrt(rational_floor(rem));
    // Prune subtrees that cannot reach the inner radius.
    if (has_lo) {
      Rational max_reach = Rational(partial) + Rational(n - level) * Rational(bound * bound);
      if (max_reach <= lo) return;
    }
    for (BigInt c = -bound; c <= bound; ++c) {
      current[static_cast<std::size_t>(level)] = static_cast<long long>(c);
      recurse(level + 1, partial + c * c);
    }
  }
};

}  // namespace

double norm_of(const Point& p) {
  double s = 0;
  for (long long c : p) s += static_cast<double>(c) * static_cast<double>(c);
  return std::sqrt(s);
}

LatticePointSet enumerate_annulus(const AnnulusSpec& spec,
                                  const LatticeBudget& budget) {
  double lam = to_double(spec.lambda);
  double rho = to_double(spec.rho);
  // Volume-based guard before enumerating anything.
  double outer = lam + rho + 1.0;
  double vol = std::pow(2.0 * outer + 1.0, spec.n);
  if (vol > 4.0e9)
    throw resource_error("annulus bounding box too large to enumerate");

  AnnulusEnum e;
  e.n = spec.n;
  Rational inner = spec.lambda - spec.rho;
  e.has_lo = inner > 0;
  e.lo = inner * inner;
  e.hi = (spec.lambda + spec.rho) * (spec.lambda + spec.rho);
  e.limit = budget.max_points;
  std::vector<Point> pts;
  e.out = &pts;
  e.current.assign(static_cast<std::size_t>(spec.n), 0);
  e.recurse(0, 0);
  return LatticePointSet{spec, std::move(pts)};
}

namespace {

void sphere_recurse(int n, int level, long long rem, Point& current,
                    std::vector<Point>& out) {
  if (level == n) {
    if (rem == 0) out.push_back(current);
    return;
  }
  auto bound = static_cast<long long>(std::floor(std::sqrt(static_cast<double>(rem)) + 0.5));
  while (bound * bound > rem) --bound;
  for (long long c = -bound; c <= bound; ++c) {
    current[static_cast<std::size_t>(level)] = c;
    sphere_recurse(n, level + 1, rem - c * c, current, out);
  }
}

}  // namespace

std::vector<Point> enumerate_sphere(Dim n, long long radius_sq) {
  if (radius_sq < 0) throw domain_error("radius_sq must be >= 0");
  std::vector<Point> out;
  Point current(static_cast<std::size_t>(n.n), 0);
  sphere_recurse(n.n, 0, radius_sq, current, out);
  return out;
}

std::uint64_t shell_count_bruteforce(int n, long long s) {
  if (n < 1 || n > 4) throw domain_error("bruteforce oracle supports n in 1..4");
  auto B = static_cast<long long>(std::floor(std::sqrt(static_cast<double>(s))) + 1);
  std::uint64_t count = 0;
  for (long long a = -B; a <= B; ++a) {
    if (n == 1) {
      if (a * a == s) ++count;
      continue;
    }
    for (long long b = -B; b <= B; ++b) {
      if (n == 2) {
        if (a * a + b * b == s) ++count;
        continue;
      }
      for (long long c = -B; c <= B; ++c) {
        if (n == 3) {
          if (a * a + b * b + c * c == s) ++count;
          continue;
        }
        for (long long d = -B; d <= B; ++d)
          if (a * a + b * b + c * c + d * d == s) ++count;
      }
    }
  }
  return count;
}

CapCover cap_cover(double lambda, double cap_radius, Dim n) {
  if (n.n < 2) throw domain_error("cap cover requires n >= 2");
  if (!(cap_radius > 0) || !(lambda > 0) || cap_radius > 2.0 * lambda)
    throw domain_error("degenerate cap radius");
  double theta = cap_radius / lambda;  // nominal angular radius
  CapCover cover;
  cover.lambda = lambda;
  cover.cap_radius = cap_radius;

  // Uniform grid on each face of the cube [-1,1]^n, radially projected to
  // the unit sphere. Projection from the cube surface is 1-Lipschitz, so a
  // face pitch p with half-diagonal p*sqrt(n-1)/2 <= 2*theta guarantees every
  // direction lies within the doubled cap angle of some center.
  double p = 4.0 * theta / std::sqrt(static_cast<double>(n.n - 1));
  int m = std::max(1, static_cast<int>(std::ceil(2.0 / p)));
  int faces_dims = n.n - 1;
  std::vector<int> idx(static_cast<std::size_t>(faces_dims), 0);
  for (int axis = 0; axis < n.n; ++axis) {
    for (int sign = -1; sign <= 1; sign += 2) {
      idx.assign(static_cast<std::size_t>(faces_dims), 0);
      for (;;) {
        std::vector<double> c(static_cast<std::size_t>(n.n), 0.0);
        c[static_cast<std::size_t>(axis)] = sign;
        int j = 0;
        for (int d = 0; d < n.n; ++d) {
          if (d == axis) continue;
          c[static_cast<std::size_t>(d)] =
              -1.0 + (idx[static_cast<std::size_t>(j)] + 0.5) * (2.0 / m);
          ++j;
        }
        double norm = 0;
        for (double v : c) norm += v * v;
        norm = std::sqrt(norm);
        for (double& v : c) v /= norm;
        cover.centers.push_back(std::move(c));
        // advance multi-index
        int d = 0;
        for (; d < faces_dims; ++d) {
          if (++idx[static_cast<std::size_t>(d)] < m) break;
          idx[static_cast<std::size_t>(d)] = 0;
        }
        if (d == faces_dims) break;
      }
    }
  }
  return cover;
}

CapCountResult max_cap_count(const LatticePointSet& points, CapCover& cover) {
  double theta = cover.cap_radius / cover.lambda;
  double min_dot = std::cos(std::min(2.0 * theta, M_PI));
  cover.assignment.assign(points.points.size(), -1);
  std::vector<int> counts(cover.centers.size(), 0);
  for (std::size_t i = 0; i < points.points.size(); ++i) {
    const Point& k = points.points[i];
    double nk = norm_of(k);
    if (nk == 0) {
      cover.assignment[i] = 0;
      ++counts[0];
      continue;
    }
    double best = -2.0;
    int best_j = -1;
    for (std::size_t j = 0; j < cover.centers.size(); ++j) {
      double dot = 0;
      for (int d = 0; d < points.spec.n; ++d)
        dot += cover.centers[j][static_cast<std::size_t>(d)] *
               static_cast<double>(k[static_cast<std::size_t>(d)]) / nk;
      if (dot > best) {
        best = dot;
        best_j = static_cast<int>(j);
      }
    }
    if (best < min_dot - 1e-12)
      throw accuracy_error("cap cover failed to cover a lattice direction");
    cover.assignment[i] = best_j;
    ++counts[static_cast<std::size_t>(best_j)];
  }
  CapCountResult res;
  for (int c : counts) res.max_count = std::max(res.max_count, c);
  double r = to_double(points.spec.rho);
  double lam = to_double(points.spec.lambda);
  double scale = std::pow(r * lam, 0.5 * (points.spec.n - 1));
  res.normalized_ratio = scale > 0 ? res.max_count / scale : 0.0;
  return res;
}

}  // namespace torus::lattice
