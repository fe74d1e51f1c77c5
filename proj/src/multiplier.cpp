#include "torus/multiplier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>

namespace torus::mult {

namespace {

std::size_t checked_total(int n, int N) {
  if (n < 1 || N < 2) throw domain_error("grid requires n >= 1, N >= 2");
  double t = std::pow(static_cast<double>(N), n);
  if (t > 6.0e8) throw resource_error("grid too large");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(N);
  return total;
}

void fft_inplace(int n, int N, std::vector<cdouble>& data, int sign) {
  std::vector<int> dims(static_cast<std::size_t>(n), N);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan = fftw_plan_dft(n, dims.data(), ptr, ptr, sign, FFTW_ESTIMATE);
  if (!plan) throw resource_error("fftw plan creation failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

std::size_t bin_index(const std::vector<long long>& k, int n, int N) {
  std::size_t idx = 0;
  for (int d = 0; d < n; ++d) {
    long long r = k[static_cast<std::size_t>(d)] % N;
    if (r < 0) r += N;
    idx = idx * static_cast<std::size_t>(N) + static_cast<std::size_t>(r);
  }
  return idx;
}

lattice::LatticePointSet annulus_points(double lambda, double rho, int n) {
  return lattice::enumerate_annulus(
      lattice::AnnulusSpec(n, Rational(lambda), Rational(rho)));
}

}  // namespace

GridFunction GridFunction::zeros(int n, int N) {
  GridFunction f;
  f.n = n;
  f.N = N;
  f.samples.assign(checked_total(n, N), cdouble(0, 0));
  return f;
}

MultiplierSymbol build_smooth_symbol(double lambda, double rho,
                                     const kernel::BumpSpec& bump, Dim n) {
  if (!(lambda >= 1.0) || !(rho > 0))
    throw domain_error("smooth symbol requires lambda >= 1, rho > 0");
  auto pts = annulus_points(lambda, 2.0 * rho, n.n);
  MultiplierSymbol m;
  m.n = n.n;
  m.meta = {"smooth", lambda, rho, 0.0};
  m.support.reserve(pts.points.size());
  m.values.reserve(pts.points.size());
  for (auto& k : pts.points) {
    double v = kernel::bump_eval(bump, (lattice::norm_of(k) - lambda) / rho);
    m.support.push_back(std::move(k));
    m.values.emplace_back(v, 0.0);
  }
  return m;
}

MultiplierSymbol build_sharp_symbol(double lambda, double rho, Dim n) {
  auto pts = annulus_points(lambda, rho, n.n);
  MultiplierSymbol m;
  m.n = n.n;
  m.meta = {"sharp", lambda, rho, 0.0};
  m.support = std::move(pts.points);
  m.values.assign(m.support.size(), cdouble(1, 0));
  return m;
}

namespace {

MultiplierSymbol resolvent_from_points(const ResolventPoint& zp,
                                       std::vector<std::vector<long long>> pts,
                                       int n, double cutoff) {
  cdouble z = zp.z();
  MultiplierSymbol m;
  m.n = n;
  m.meta.kind = "resolvent";
  m.meta.lambda = zp.lambda;
  m.meta.rho = zp.mu;
  double abs_z = std::abs(z);
  m.meta.truncation_error =
      cutoff > 0 && cutoff * cutoff > abs_z ? 1.0 / (cutoff * cutoff - abs_z) : 0.0;
  m.support = std::move(pts);
  m.values.reserve(m.support.size());
  for (const auto& k : m.support) {
    double s = 0;
    for (long long c : k) s += static_cast<double>(c) * static_cast<double>(c);
    cdouble d = z - s;
    if (std::abs(d) < 1e-12)
      throw domain_error("resolvent point lies on the lattice spectrum");
    m.values.push_back(1.0 / d);
  }
  return m;
}

}  // namespace

MultiplierSymbol build_resolvent_symbol(const ResolventPoint& zp,
                                        double cutoff_radius, Dim n) {
  if (zp.mu == 0) throw domain_error("resolvent requires mu != 0");
  if (!(cutoff_radius >= 4.0 * zp.lambda))
    throw domain_error("resolvent cutoff must be >= 4 lambda");
  // Ball |k| < cutoff + 1/4 as a degenerate annulus around the origin.
  auto pts = lattice::enumerate_annulus(lattice::AnnulusSpec(
      n.n, Rational(1), Rational(cutoff_radius) - Rational(3, 4)));
  return resolvent_from_points(zp, std::move(pts.points), n.n, cutoff_radius);
}

MultiplierSymbol build_resolvent_symbol_banded(const ResolventPoint& zp,
                                               double band, Dim n) {
  if (zp.mu == 0) throw domain_error("resolvent requires mu != 0");
  auto pts = annulus_points(zp.lambda, band, n.n);
  auto m = resolvent_from_points(zp, std::move(pts.points), n.n, 0.0);
  m.meta.kind = "resolvent-banded";
  return m;
}

GridFunction apply_symbol(const MultiplierSymbol& m, const GridFunction& f) {
  if (m.n != f.n) throw domain_error("apply_symbol: dimension mismatch");
  if (f.N <= 2 * m.max_freq())
    throw domain_error("apply_symbol: grid too small for symbol (aliasing)");
  std::vector<cdouble> hat(f.samples);
  fft_inplace(f.n, f.N, hat, FFTW_FORWARD);
  GridFunction out = GridFunction::zeros(f.n, f.N);
  for (std::size_t i = 0; i < m.support.size(); ++i) {
    std::size_t b = bin_index(m.support[i], f.n, f.N);
    out.samples[b] = m.values[i] * hat[b];
  }
  fft_inplace(f.n, f.N, out.samples, FFTW_BACKWARD);
  double scale = 1.0 / static_cast<double>(f.total());
  for (auto& v : out.samples) v *= scale;
  return out;
}

std::vector<cdouble> fourier_coefficients(
    const GridFunction& f, const std::vector<std::vector<long long>>& freqs) {
  std::vector<cdouble> hat(f.samples);
  fft_inplace(f.n, f.N, hat, FFTW_FORWARD);
  double scale = 1.0 / static_cast<double>(f.total());
  std::vector<cdouble> out;
  out.reserve(freqs.size());
  for (const auto& k : freqs) out.push_back(hat[bin_index(k, f.n, f.N)] * scale);
  return out;
}

GridFunction synthesize(int n, int N,
                        const std::vector<std::vector<long long>>& freqs,
                        const std::vector<cdouble>& coeffs) {
  if (freqs.size() != coeffs.size())
    throw domain_error("synthesize: size mismatch");
  GridFunction f = GridFunction::zeros(n, N);
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    for (long long c : freqs[i])
      if (2 * std::llabs(c) >= N)
        throw domain_error("synthesize: frequency not representable");
    f.samples[bin_index(freqs[i], n, N)] += coeffs[i];
  }
  fft_inplace(n, N, f.samples, FFTW_BACKWARD);
  return f;
}

SplitSymbols mollified_split(const MultiplierSymbol& m, const EtaSpec& eta) {
  if (m.meta.kind != "smooth")
    throw domain_error("mollified_split expects a smooth annulus symbol");
  double lambda = m.meta.lambda;
  double rho = m.meta.rho;
  Dim n(m.n);

  // m0 = m * eta is radial: with eta_check(x) = bump(|x|) supported in
  // B(0,2), (m * eta)(k) equals the Fourier transform of
  // m_check(x) eta_check(x) at k, i.e. a one-dimensional integral
  //   |S^{n-1}| int_0^2 m_check(s) bump(s) sigma_check(s|k|) s^{n-1} ds.
  // The integrand oscillates at scale max(lambda, |k|); one shared
  // Gauss-Legendre node set serves every shell.
  double max_t = lambda + 4.0 + 1.0;
  double width = 1.0 / (8.0 * std::max(lambda, max_t));
  int panels = static_cast<int>(std::ceil(2.0 / width));
  // 15-point Gauss-Legendre nodes on [-1, 1].
  static const double gl_x[8] = {0.0,
                                 0.2011940939974345,
                                 0.3941513470775634,
                                 0.5709721726085388,
                                 0.7244177313601701,
                                 0.8482065834104272,
                                 0.9372733924007060,
                                 0.9879925180204854};
  static const double gl_w[8] = {0.2025782419255613,
                                 0.1984314853271116,
                                 0.1861610000155622,
                                 0.1662692058169939,
                                 0.1395706779261543,
                                 0.1071592204671719,
                                 0.0703660474881081,
                                 0.0307532419961173};
  std::vector<double> nodes, weights;
  nodes.reserve(static_cast<std::size_t>(panels) * 15);
  double step = 2.0 / panels;
  for (int p = 0; p < panels; ++p) {
    double mid = (p + 0.5) * step;
    double half = 0.5 * step;
    for (int i = -7; i <= 7; ++i) {
      int a = i < 0 ? -i : i;
      double x = mid + half * (i < 0 ? -gl_x[a] : gl_x[a]);
      nodes.push_back(x);
      weights.push_back(half * gl_w[a]);
    }
  }
  double surf = unit_sphere_area(m.n);
  kernel::BumpSpec bump = eta.bump;
  std::vector<double> base(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double s = nodes[i];
    double cut = kernel::bump_eval(bump, s);
    base[i] = cut == 0.0
                  ? 0.0
                  : weights[i] * surf * cut *
                        kernel::radial_ft(bump, lambda, rho, s, n) *
                        std::pow(s, m.n - 1);
  }

  auto window = annulus_points(lambda, 4.0, m.n);
  std::map<long long, double> shell_value;
  for (const auto& k : window.points) {
    long long s2 = 0;
    for (long long c : k) s2 += c * c;
    shell_value.emplace(s2, 0.0);
  }
  for (auto& [s2, val] : shell_value) {
    double t = std::sqrt(static_cast<double>(s2));
    Kahan acc;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (base[i] == 0.0) continue;
      acc.add(base[i] * kernel::sphere_ft(n, nodes[i] * t));
    }
    val = acc.sum();
  }

  SplitSymbols out;
  out.m0.n = m.n;
  out.m0.meta = {"m0", lambda, rho, 0.0};
  out.m0.support = window.points;
  out.m0.values.reserve(window.points.size());
  for (const auto& k : window.points) {
    long long s2 = 0;
    for (long long c : k) s2 += c * c;
    out.m0.values.emplace_back(shell_value.at(s2), 0.0);
  }

  // m1 = m - m0 on the union of supports. The m0 window contains the
  // support of m (rho <= 1), so index m's values by point.
  std::map<std::vector<long long>, cdouble> m_map;
  for (std::size_t i = 0; i < m.support.size(); ++i)
    m_map.emplace(m.support[i], m.values[i]);
  out.m1.n = m.n;
  out.m1.meta = {"m1", lambda, rho, 0.0};
  out.m1.support = out.m0.support;
  out.m1.values.reserve(out.m1.support.size());
  for (std::size_t i = 0; i < out.m1.support.size(); ++i) {
    auto it = m_map.find(out.m1.support[i]);
    cdouble mv = it == m_map.end() ? cdouble(0, 0) : it->second;
    out.m1.values.push_back(mv - out.m0.values[i]);
    if (it != m_map.end()) m_map.erase(it);
  }
  // Any m-support point outside the window (possible only if rho > 1).
  for (auto& [k, v] : m_map) {
    out.m1.support.push_back(k);
    out.m1.values.push_back(v);
    out.m0.support.push_back(k);
    out.m0.values.emplace_back(0, 0);
  }
  return out;
}

double lp_norm(const GridFunction& f, double p) {
  if (p > 0 && p < 1) throw domain_error("lp_norm requires p >= 1 or p = inf");
  if (p <= 0 || std::isinf(p)) {
    double mx = 0;
    for (const auto& v : f.samples) mx = std::max(mx, std::abs(v));
    return mx;
  }
  Kahan acc;
  for (const auto& v : f.samples) acc.add(std::pow(std::abs(v), p));
  double w = 1.0 / static_cast<double>(f.total());
  return std::pow(w * acc.sum(), 1.0 / p);
}

double l1_mass(const MultiplierSymbol& m) {
  Kahan acc;
  for (const auto& v : m.values) acc.add(std::abs(v));
  return acc.sum();
}

int default_grid_size(double outer_radius, int scale) {
  int want = static_cast<int>(std::ceil(scale * outer_radius)) + 2;
  return next_fft_size(std::max(64, want));
}

}  // namespace torus::mult
