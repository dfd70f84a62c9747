#pragma once

#include <cstdint>
#include <random>

#include "sc/dense.hpp"

namespace sc {

// Seeded Gaussian source with a platform-independent output stream:
// std::mt19937_64 (bit-exact by the standard) feeding a 53-bit uniform and
// the Box-Muller transform. std::normal_distribution is avoided because its
// algorithm is implementation-defined.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  // Uniform on the open interval (0, 1).
  double uniform();
  double normal();
  // Real and imaginary parts are independent standard normals.
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sc
