#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace torus {

using cdouble = std::complex<double>;

// Error taxonomy shared by all modules. The CLI maps these onto exit codes
// (domain -> 1, resource -> 2, accuracy -> 3).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct accuracy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integer dimension of the ambient lattice Z^n.
struct Dim {
  int n;
  explicit Dim(int n_) : n(n_) {
    if (n < 1) throw domain_error("dimension must be >= 1");
  }
};

// Derivative order q >= 1.
struct QOrder {
  int q;
  explicit QOrder(int q_) : q(q_) {
    if (q < 1) throw domain_error("derivative order must be >= 1");
  }
};

// Splitmix64-based generator with an explicitly specified output mapping, so
// that seeded runs are reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [-1/2, 1/2).
  double next_centered() { return next_double() - 0.5; }

  // Uniform sign +1/-1.
  double next_sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

  // Uniform integer in [0, m).
  std::uint64_t next_below(std::uint64_t m) { return next_u64() % m; }

 private:
  std::uint64_t state_;
};

// Kahan-compensated accumulator for long sums.
class Kahan {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double sum() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

class KahanC {
 public:
  void add(cdouble z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  cdouble sum() const { return {re_.sum(), im_.sum()}; }

 private:
  Kahan re_, im_;
};

inline double sqr(double x) { return x * x; }

// Smallest 5-smooth integer >= m (FFT-friendly transform sizes).
int next_fft_size(int m);

// Surface area of the unit sphere S^{n-1} in R^n.
double unit_sphere_area(int n);

std::string version_string();

}  // namespace torus
