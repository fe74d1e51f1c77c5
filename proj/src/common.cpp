#include "torus/common.hpp"

#include <cmath>

namespace torus {

int next_fft_size(int m) {
  if (m < 2) return 2;
  for (int s = m;; ++s) {
    int r = s;
    for (int p : {2, 3, 5})
      while (r % p == 0) r /= p;
    if (r == 1) return s;
  }
}

double unit_sphere_area(int n) {
  // |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2)
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

std::string version_string() { return "toruslab 0.1.0"; }

}  // namespace torus
