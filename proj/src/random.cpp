#include "sc/random.hpp"

#include <cmath>
#include <numbers>

namespace sc {

double GaussianSource::uniform() {
  // (x + 0.5) / 2^53 never hits 0 or 1.
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double GaussianSource::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex GaussianSource::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

}  // namespace sc
