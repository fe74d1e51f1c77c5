#pragma once

#include <string>
#include <vector>

#include "torus/common.hpp"

namespace torus {

// Finitely supported map from lattice points to complex values. Houses the
// smooth annulus multiplier, the sharp projector and the resolvent symbol.
struct MultiplierSymbol {
  int n = 0;
  std::vector<std::vector<long long>> support;  // duplicate-free
  std::vector<cdouble> values;                  // parallel to support

  struct Meta {
    std::string kind;  // "smooth", "sharp", "resolvent", ...
    double lambda = 0;
    double rho = 0;
    double truncation_error = 0;  // resolvent tail bound, 0 otherwise
  } meta;

  std::size_t size() const { return support.size(); }

  // Largest |k|_infty over the support (0 for an empty symbol).
  long long max_freq() const {
    long long m = 0;
    for (const auto& k : support)
      for (long long c : k) m = std::max(m, c < 0 ? -c : c);
    return m;
  }
};

}  // namespace torus
