#pragma once

// Cross-validation of the closed forms against the dense oracle.

#include <cstdint>
#include <string>
#include <vector>

#include "sc/dense.hpp"
#include "sc/oracle.hpp"
#include "sc/random.hpp"
#include "sc/state.hpp"

namespace sc {

struct CheckResidual {
  std::string name;
  double max_residual = 0.0;
};

class VerifyReport {
 public:
  void record(const std::string& name, double residual);
  void merge(const VerifyReport& other);

  const std::vector<CheckResidual>& checks() const noexcept { return checks_; }
  double max_residual() const;
  bool passed(double tol) const { return max_residual() <= tol; }

 private:
  std::vector<CheckResidual> checks_;
};

struct VerifyOptions {
  std::uint64_t guard = kDefaultSizeGuard;
  int split = 1;
  LogBase log_base = LogBase::Two;
  int separable_samples = 10;
  std::uint64_t seed = 0;
  double separable_tol = 1e-9;
};

// Pure product state with independent Haar-like random local vectors.
DenseMatrix random_product_state(int k, int N, GaussianSource& rng);
// Convex combination of 1..max_terms random product states.
DenseMatrix random_separable_state(int k, int N, int max_terms, GaussianSource& rng);

// Dense checks for one mixed SC state: PT spectrum for every proper subset,
// full spectrum, realignment, negativity, relative entropy, witness, Bloch.
VerifyReport verify_state(const SCState& state, const VerifyOptions& options = {});

// Filter maps psi to uniform moduli with a single global phase.
double slocc_residual(const PureSCState& psi);

// `samples` random mixed states plus the same number of random pure states.
VerifyReport oracle_verify(int k, int N, int samples, std::uint64_t seed,
                           std::uint64_t guard = kDefaultSizeGuard);

}  // namespace sc
