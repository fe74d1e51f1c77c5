#include "torus/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "torus/kernel.hpp"

namespace torus::weyl {

WeylSumResult truncated_weyl_sum(const WeylSumConfig& cfg) {
  if (cfg.n < 1 || cfg.x.size() != static_cast<std::size_t>(cfg.n))
    throw domain_error("weyl sum: bad dimension or base point");
  // radii below the near-origin cut 1/2 cannot contain any term
  if (!(cfg.truncation_radius >= 0.5))
    throw domain_error("weyl sum: truncation radius must be >= 1/2");
  double R = cfg.truncation_radius;
  double est = std::pow(2.0 * R + 2.0, cfg.n);
  if (est > static_cast<double>(cfg.max_terms))
    throw resource_error("weyl sum term budget exceeded");

  WeylSumResult res;
  KahanC val;
  Kahan mass;
  std::vector<long long> k(static_cast<std::size_t>(cfg.n), 0);
  // Lexicographic enumeration of the box; membership decided per term.
  std::vector<long long> lo(static_cast<std::size_t>(cfg.n)),
      hi(static_cast<std::size_t>(cfg.n));
  for (int d = 0; d < cfg.n; ++d) {
    lo[static_cast<std::size_t>(d)] =
        static_cast<long long>(std::floor(-R - cfg.x[static_cast<std::size_t>(d)]));
    hi[static_cast<std::size_t>(d)] =
        static_cast<long long>(std::ceil(R - cfg.x[static_cast<std::size_t>(d)]));
    k[static_cast<std::size_t>(d)] = lo[static_cast<std::size_t>(d)];
  }
  for (;;) {
    double t2 = 0;
    for (int d = 0; d < cfg.n; ++d) {
      double c = cfg.x[static_cast<std::size_t>(d)] +
                 static_cast<double>(k[static_cast<std::size_t>(d)]);
      t2 += c * c;
    }
    double t = std::sqrt(t2);
    if (t >= 0.5 && t <= R) {
      double w = std::pow(t, -0.5 * (cfg.n - 1)) *
                 std::pow(1.0 + cfg.rho * t, -cfg.N);
      double phase = 2.0 * M_PI * cfg.sign * cfg.lambda * t;
      val.add(cdouble(w * std::cos(phase), w * std::sin(phase)));
      mass.add(w);
      ++res.terms;
    }
    int d = cfg.n - 1;
    for (; d >= 0; --d) {
      if (++k[static_cast<std::size_t>(d)] <= hi[static_cast<std::size_t>(d)]) break;
      k[static_cast<std::size_t>(d)] = lo[static_cast<std::size_t>(d)];
    }
    if (d < 0) break;
  }
  res.value = val.sum();
  res.abs_sum = mass.sum();
  return res;
}

namespace {

// Term list representation  sum c * v^beta * |v|^m  for functions of v.
struct TermKey {
  std::vector<int> beta;
  int m;
  bool operator<(const TermKey& o) const {
    if (m != o.m) return m < o.m;
    return beta < o.beta;
  }
};
using TermMap = std::map<TermKey, double>;

// d/dv_i of the term map.
TermMap diff_v(const TermMap& f, int i) {
  TermMap out;
  for (const auto& [key, c] : f) {
    if (key.beta[static_cast<std::size_t>(i)] > 0) {
      TermKey k1 = key;
      k1.beta[static_cast<std::size_t>(i)] -= 1;
      out[k1] += c * key.beta[static_cast<std::size_t>(i)];
    }
    if (key.m != 0) {
      TermKey k2 = key;
      k2.beta[static_cast<std::size_t>(i)] += 1;
      k2.m -= 2;
      out[k2] += c * key.m;
    }
  }
  return out;
}

// d/du_j = sum_i Q_{ij} d/dv_i   (v = Q u).
TermMap diff_u(const TermMap& f, const IntMatrix& Q, int j) {
  TermMap out;
  int n = static_cast<int>(Q.size());
  for (int i = 0; i < n; ++i) {
    long long qij = Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (qij == 0) continue;
    TermMap d = diff_v(f, i);
    for (const auto& [key, c] : d) out[key] += static_cast<double>(qij) * c;
  }
  return out;
}

TermMap phi_terms(const IntMatrix& Q, const std::vector<int>& alpha) {
  int n = static_cast<int>(Q.size());
  TermMap f;
  f[TermKey{std::vector<int>(static_cast<std::size_t>(n), 0), 1}] = 1.0;  // |v|
  for (int j = 0; j < n; ++j)
    for (int c = 0; c < alpha[static_cast<std::size_t>(j)]; ++c)
      f = diff_u(f, Q, j);
  return f;
}

double eval_terms(const TermMap& f, const std::vector<double>& v) {
  double r2 = 0;
  for (double c : v) r2 += c * c;
  if (r2 == 0) throw domain_error("phi derivative at Qu = 0");
  double r = std::sqrt(r2);
  Kahan acc;
  for (const auto& [key, c] : f) {
    double term = c * std::pow(r, key.m);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (int e = 0; e < key.beta[i]; ++e) term *= v[i];
    acc.add(term);
  }
  return acc.sum();
}

std::vector<double> apply_q(const IntMatrix& Q, const std::vector<double>& u) {
  std::size_t n = Q.size();
  std::vector<double> v(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      v[i] += static_cast<double>(Q[i][j]) * u[j];
  return v;
}

}  // namespace

double phi_derivative(const IntMatrix& Q, const std::vector<int>& alpha,
                      const std::vector<double>& u) {
  if (Q.size() != u.size() || Q.size() != alpha.size())
    throw domain_error("phi_derivative: dimension mismatch");
  if (det_int(Q) == 0) throw domain_error("phi_derivative: singular Q");
  TermMap f = phi_terms(Q, alpha);
  return eval_terms(f, apply_q(Q, u));
}

namespace {

// Central differences in extended precision; the recursion peels one
// derivative order at a time. Extended precision keeps the roundoff floor
// below the truncation error even at total order 3.
long double phi_fd_rec(const IntMatrix& Q, const std::vector<int>& alpha,
                       const std::vector<long double>& u, long double h) {
  int order = 0;
  for (int a : alpha) order += a;
  if (order == 0) {
    long double r2 = 0;
    for (std::size_t i = 0; i < Q.size(); ++i) {
      long double c = 0;
      for (std::size_t j = 0; j < Q.size(); ++j)
        c += static_cast<long double>(Q[i][j]) * u[j];
      r2 += c * c;
    }
    return sqrtl(r2);
  }
  std::vector<int> a2 = alpha;
  std::size_t j = 0;
  while (a2[j] == 0) ++j;
  a2[j] -= 1;
  auto central = [&](long double step) {
    std::vector<long double> up = u, um = u;
    up[j] += step;
    um[j] -= step;
    return (phi_fd_rec(Q, a2, up, step) - phi_fd_rec(Q, a2, um, step)) /
           (2.0L * step);
  };
  long double d1 = central(h);
  long double d2 = central(0.5L * h);
  return (4.0L * d2 - d1) / 3.0L;  // Richardson
}

}  // namespace

double phi_derivative_fd(const IntMatrix& Q, const std::vector<int>& alpha,
                         const std::vector<double>& u, double h) {
  std::vector<long double> ul(u.begin(), u.end());
  return static_cast<double>(phi_fd_rec(Q, alpha, ul, h));
}

std::vector<int> alpha_of_order(int n, int q) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  a[0] += 1;
  a[static_cast<std::size_t>(n - 1)] += q - 1;
  return a;
}

namespace {

double det_small(std::vector<std::vector<double>> a) {
  std::size_t n = a.size();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (a[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

}  // namespace

double scaled_hessian(const IntMatrix& Q, QOrder q, const std::vector<double>& u) {
  int n = static_cast<int>(Q.size());
  auto base = alpha_of_order(n, q.q);
  std::vector<std::vector<double>> H(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      auto a = base;
      a[static_cast<std::size_t>(i)] += 1;
      a[static_cast<std::size_t>(j)] += 1;
      double v = phi_derivative(Q, a, u);
      H[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      H[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  double r2 = 0;
  for (double c : u) r2 += c * c;
  double r = std::sqrt(r2);
  return std::abs(det_small(H)) * std::pow(r, (q.q + 1) * n);
}

std::vector<std::vector<double>> sample_unit_sphere(int n, int count) {
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(count));
  if (n == 1) {
    out.push_back({1.0});
    if (count > 1) out.push_back({-1.0});
    return out;
  }
  if (n == 2) {
    for (int i = 0; i < count; ++i) {
      double a = 2.0 * M_PI * (i + 0.5) / count;
      out.push_back({std::cos(a), std::sin(a)});
    }
    return out;
  }
  if (n == 3) {
    // Fibonacci sphere.
    double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    for (int i = 0; i < count; ++i) {
      double z = 1.0 - (2.0 * i + 1.0) / count;
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double a = 2.0 * M_PI * i / golden;
      out.push_back({r * std::cos(a), r * std::sin(a), z});
    }
    return out;
  }
  // Seeded deterministic directions for n > 3.
  Rng rng(20240901u + static_cast<std::uint64_t>(n));
  while (static_cast<int>(out.size()) < count) {
    std::vector<double> u(static_cast<std::size_t>(n));
    double r2 = 0;
    for (auto& c : u) {
      // Box-Muller normal from two uniforms.
      double a = rng.next_double(), b = rng.next_double();
      c = std::sqrt(-2.0 * std::log(a + 1e-300)) * std::cos(2.0 * M_PI * b);
      r2 += c * c;
    }
    if (r2 < 1e-12) continue;
    double r = std::sqrt(r2);
    for (auto& c : u) c /= r;
    out.push_back(std::move(u));
  }
  return out;
}

HessianCertificate hessian_certificate(const IntMatrix& Q, QOrder q,
                                       int sphere_samples, double threshold) {
  int n = static_cast<int>(Q.size());
  if (det_int(Q) == 0) throw domain_error("hessian certificate: singular Q");
  HessianCertificate cert;
  cert.Q = Q;
  cert.alpha = alpha_of_order(n, q.q);
  cert.samples = sample_unit_sphere(n, sphere_samples);
  cert.scaled.reserve(cert.samples.size());
  cert.min_scaled = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cert.samples.size(); ++i) {
    double v = scaled_hessian(Q, q, cert.samples[i]);
    cert.scaled.push_back(v);
    cert.min_scaled = std::min(cert.min_scaled, v);
    if (v < threshold) cert.degenerate.push_back(i);
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Integer linear algebra: determinant, Smith normal form, cosets.

long long det_int(const IntMatrix& Q) {
  std::size_t n = Q.size();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Q[i][j];
  // Fraction-free Gaussian elimination (Bareiss).
  BigInt prev = 1;
  long long sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      sign = -sign;
    }
    for (std::size_t r = col + 1; r < n; ++r)
      for (std::size_t c = col + 1; c < n; ++c)
        a[r][c] = (a[col][col] * a[r][c] - a[r][col] * a[col][c]) / prev;
    prev = a[col][col];
  }
  BigInt d = sign * a[n - 1][n - 1];
  return static_cast<long long>(d);
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix identity(std::size_t n) {
  BigMatrix I(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

// Smith normal form: returns (U, D, V) with U A V = D diagonal.
void smith_normal_form(BigMatrix a, BigMatrix& U, BigMatrix& D, BigMatrix& V) {
  std::size_t n = a.size();
  U = identity(n);
  V = identity(n);
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(U[i], U[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    for (std::size_t r = 0; r < n; ++r) std::swap(V[r][i], V[r][j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t c = 0; c < n; ++c) a[dst][c] += f * a[src][c];
    for (std::size_t c = 0; c < n; ++c) U[dst][c] += f * U[src][c];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t r = 0; r < n; ++r) a[r][dst] += f * a[r][src];
    for (std::size_t r = 0; r < n; ++r) V[r][dst] += f * V[r][src];
  };

  for (std::size_t t = 0; t < n; ++t) {
    // Move a nonzero pivot of minimal absolute value to (t, t).
    for (;;) {
      std::size_t pi = t, pj = t;
      BigInt best = 0;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (best == 0 || abs(a[i][j]) < best)) {
            best = abs(a[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) break;  // remaining block zero
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i)
        if (a[i][t] != 0) {
          add_row(i, t, -(a[i][t] / a[t][t]));
          if (a[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (a[t][j] != 0) {
          add_col(j, t, -(a[t][j] / a[t][t]));
          if (a[t][j] != 0) clean = false;
        }
      if (!clean) continue;
      bool zeroed = true;
      for (std::size_t i = t + 1; i < n && zeroed; ++i)
        if (a[i][t] != 0) zeroed = false;
      for (std::size_t j = t + 1; j < n && zeroed; ++j)
        if (a[t][j] != 0) zeroed = false;
      if (zeroed) break;
    }
    if (a[t][t] < 0) {
      for (std::size_t c = 0; c < n; ++c) {
        a[t][c] = -a[t][c];
        U[t][c] = -U[t][c];
      }
    }
  }
  // Divisibility chain is not needed for coset purposes; diagonal suffices.
  D = a;
}

// Inverse of a unimodular integer matrix via adjugate-style elimination
// over rationals (entries are exact integers).
BigMatrix inverse_unimodular(const BigMatrix& M) {
  std::size_t n = M.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(M[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw domain_error("matrix not invertible");
    std::swap(a[piv], a[col]);
    Rational p = a[col][col];
    for (auto& v : a[col]) v /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  BigMatrix inv(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = a[i][n + j];
      if (denominator(v) != 1)
        throw domain_error("matrix inverse is not integral");
      inv[i][j] = numerator(v);
    }
  return inv;
}

// Column-style Hermite normal form: returns H lower-triangular with positive
// diagonal such that H Z^n = A Z^n.
BigMatrix hermite_columns(BigMatrix a) {
  std::size_t n = a.size();
  for (std::size_t row = 0; row < n; ++row) {
    // Reduce columns row..n-1 by gcd in this row.
    for (;;) {
      std::size_t piv = n;
      BigInt best = 0;
      for (std::size_t j = row; j < n; ++j)
        if (a[row][j] != 0 && (best == 0 || abs(a[row][j]) < best)) {
          best = abs(a[row][j]);
          piv = j;
        }
      if (piv == n) throw domain_error("singular matrix in HNF");
      if (piv != row)
        for (std::size_t r = 0; r < n; ++r) std::swap(a[r][row], a[r][piv]);
      bool done = true;
      for (std::size_t j = row + 1; j < n; ++j) {
        if (a[row][j] == 0) continue;
        BigInt f = a[row][j] / a[row][row];
        for (std::size_t r = 0; r < n; ++r) a[r][j] -= f * a[r][row];
        if (a[row][j] != 0) done = false;
      }
      if (done) {
        bool all_zero = true;
        for (std::size_t j = row + 1; j < n; ++j)
          if (a[row][j] != 0) all_zero = false;
        if (all_zero) break;
      }
    }
    if (a[row][row] < 0)
      for (std::size_t r = 0; r < n; ++r) a[r][row] = -a[r][row];
    // Reduce earlier columns against this pivot.
    for (std::size_t j = 0; j < row; ++j) {
      BigInt f = a[row][j] / a[row][row];
      if (a[row][j] - f * a[row][row] < 0) f -= 1;
      if (f != 0)
        for (std::size_t r = 0; r < n; ++r) a[r][j] -= f * a[r][row];
    }
  }
  return a;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

namespace {

// Reduce b into the HNF fundamental domain of the column lattice H.
std::vector<long long> canonical_rep(const BigMatrix& H, std::vector<BigInt> b) {
  std::size_t n = H.size();
  for (std::size_t i = 0; i < n; ++i) {
    BigInt f = floor_div(b[i], H[i][i]);
    if (f != 0)
      for (std::size_t r = 0; r < n; ++r) b[r] -= f * H[r][i];
  }
  std::vector<long long> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<long long>(b[i]);
  return out;
}

}  // namespace

CosetSet coset_decomposition(const IntMatrix& Q) {
  std::size_t n = Q.size();
  long long det = det_int(Q);
  if (det == 0) throw domain_error("coset decomposition: singular Q");
  long long index = det < 0 ? -det : det;

  BigMatrix A(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = Q[i][j];
  BigMatrix U, D, V;
  smith_normal_form(A, U, D, V);
  BigMatrix Uinv = inverse_unimodular(U);
  BigMatrix H = hermite_columns(A);

  CosetSet out;
  out.Q = Q;
  std::vector<BigInt> residue(n, 0);
  std::vector<std::vector<long long>> reps;
  for (;;) {
    // b = Uinv * residue, then canonical reduction mod Q Z^n.
    std::vector<BigInt> b(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i] += Uinv[i][j] * residue[j];
    reps.push_back(canonical_rep(H, std::move(b)));
    std::size_t d = 0;
    for (; d < n; ++d) {
      if (++residue[d] < abs(D[d][d])) break;
      residue[d] = 0;
    }
    if (d == n) break;
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  if (static_cast<long long>(reps.size()) != index)
    throw accuracy_error("coset representative count does not match |det Q|");
  out.representatives = std::move(reps);
  return out;
}

std::size_t coset_index(const CosetSet& cosets, const std::vector<long long>& k) {
  std::size_t n = cosets.Q.size();
  BigMatrix A(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = cosets.Q[i][j];
  BigMatrix H = hermite_columns(A);
  std::vector<BigInt> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = k[i];
  auto canon = canonical_rep(H, std::move(b));
  std::size_t hits = 0;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < cosets.representatives.size(); ++i)
    if (cosets.representatives[i] == canon) {
      ++hits;
      idx = i;
    }
  if (hits != 1) throw accuracy_error("coset classification not unique");
  return idx;
}

MullerReport muller_hypotheses_check(const WeylSumConfig& cfg, QOrder q,
                                     double M) {
  if (M < 1.0) throw domain_error("muller check requires M >= 1");
  MullerReport rep;
  rep.exponent = Rational(q.q - 1) - Rational(2, cfg.n) + pow2_rational(1 - q.q);
  // Exact predicate lambda >= M^{p/s}: compare lambda^s and M^p.
  Rational lam(cfg.lambda), Mr(M);
  BigInt p = numerator(rep.exponent), s = denominator(rep.exponent);
  auto rpow = [](const Rational& base, const BigInt& e) {
    Rational r = 1;
    for (BigInt i = 0; i < e; ++i) r *= base;
    return r;
  };
  if (p >= 0)
    rep.predicate = rpow(lam, s) >= rpow(Mr, p);
  else
    rep.predicate = rpow(lam, s) * rpow(Mr, -p) >= 1;

  // Sampled derivative-bound constants for the normalized dyadic weights
  // w_j(u) = 2^{j(n-1)/2} w(|u|) zeta(2^{-j}|u|), |alpha| <= 2.
  kernel::BumpSpec bump;
  auto zeta = [&](double t) { return kernel::bump_eval(bump, (t - 1.25) * (8.0 / 3.0)); };
  auto wj = [&](int j, const std::vector<double>& u) {
    double t = 0;
    for (double c : u) t += c * c;
    t = std::sqrt(t);
    if (t < 1e-9) return 0.0;
    double w = std::pow(t, -0.5 * (cfg.n - 1)) *
               std::pow(1.0 + cfg.rho * t, -cfg.N);
    return std::pow(2.0, 0.5 * j * (cfg.n - 1)) * w * zeta(std::ldexp(t, -j));
  };
  Rng rng(0xabcdefULL);
  int j_max = std::max(1, static_cast<int>(std::floor(std::log2(M))));
  for (int j = 1; j <= j_max; ++j) {
    double scale = std::ldexp(1.0, j);
    std::vector<double> consts(3, 0.0);
    for (int trial = 0; trial < 32; ++trial) {
      std::vector<double> u(static_cast<std::size_t>(cfg.n));
      double r2 = 0;
      for (auto& c : u) {
        c = 2.0 * rng.next_double() - 1.0;
        r2 += c * c;
      }
      if (r2 < 1e-6) continue;
      double r = std::sqrt(r2);
      double target = scale * (0.6 + 1.2 * rng.next_double());
      for (auto& c : u) c *= target / r;
      double h = 1e-3 * scale;
      consts[0] = std::max(consts[0], std::abs(wj(j, u)));
      for (int d = 0; d < cfg.n; ++d) {
        auto up = u, um = u;
        up[static_cast<std::size_t>(d)] += h;
        um[static_cast<std::size_t>(d)] -= h;
        double d1 = (wj(j, up) - wj(j, um)) / (2 * h);
        double d2 = (wj(j, up) - 2 * wj(j, u) + wj(j, um)) / (h * h);
        consts[1] = std::max(consts[1], std::abs(d1) * scale);
        consts[2] = std::max(consts[2], std::abs(d2) * scale * scale);
      }
    }
    rep.j_levels.push_back(j);
    rep.weight_constants.push_back(consts);
  }
  return rep;
}

}  // namespace torus::weyl
