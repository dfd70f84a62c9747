#pragma once

// Schmidt-correlated states: rho = sum_mn a_mn |m...m><n...n| on k parties of
// local dimension N. The N x N coefficient matrix (a_mn) determines the state.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sc/dense.hpp"

namespace sc {

class SCState;
class PureSCState;

struct Tolerances {
  double hermitian = 1e-10;
  double trace = 1e-10;
  double psd = 1e-10;
};

// N^k if it fits in 64 bits.
std::optional<std::uint64_t> checked_power(std::uint64_t base, int exponent);

// Hermitian, positive semidefinite, unit-trace N x N matrix. Inputs accepted
// within tolerance are stored symmetrized as (A + A^dagger) / 2.
class CoeffMatrix {
 public:
  static CoeffMatrix validated(const DenseMatrix& a, const Tolerances& tol = {});

  std::size_t dim() const noexcept { return a_.rows(); }
  const Complex& operator()(std::size_t m, std::size_t n) const { return a_(m, n); }
  const DenseMatrix& matrix() const noexcept { return a_; }

  std::vector<double> diagonal() const;
  std::vector<double> eigenvalues() const;

 private:
  explicit CoeffMatrix(DenseMatrix a) : a_(std::move(a)) {}
  DenseMatrix a_;

  friend SCState pure_to_mixed(const PureSCState& psi);
};

class SCState {
 public:
  int parties() const noexcept { return parties_; }
  int local_dim() const noexcept { return static_cast<int>(coeffs_.dim()); }
  const CoeffMatrix& coeffs() const noexcept { return coeffs_; }
  const Complex& coeff(std::size_t m, std::size_t n) const { return coeffs_(m, n); }

  // Dimension N^k of the full Hilbert space, if representable.
  std::optional<std::uint64_t> hilbert_dim() const;

  friend SCState new_sc_state(int k, int N, const DenseMatrix& a, const Tolerances& tol);
  friend SCState pure_to_mixed(const PureSCState& psi);

 private:
  SCState(int k, CoeffMatrix coeffs) : parties_(k), coeffs_(std::move(coeffs)) {}
  int parties_;
  CoeffMatrix coeffs_;
};

// sum_m c_m |m...m>
class PureSCState {
 public:
  static PureSCState create(int k, std::vector<Complex> amplitudes, const Tolerances& tol = {});

  int parties() const noexcept { return parties_; }
  int local_dim() const noexcept { return static_cast<int>(amplitudes_.size()); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& amplitude(std::size_t m) const { return amplitudes_[m]; }

 private:
  PureSCState(int k, std::vector<Complex> amplitudes)
      : parties_(k), amplitudes_(std::move(amplitudes)) {}
  int parties_;
  std::vector<Complex> amplitudes_;
};

struct EnsembleComponent {
  double weight;
  PureSCState state;
};

class Ensemble {
 public:
  Ensemble() = default;
  explicit Ensemble(std::vector<EnsembleComponent> components);

  std::span<const EnsembleComponent> components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }

  // sum_i p_i c^(i) c^(i)^dagger
  DenseMatrix reconstruct() const;
  double reconstruction_error(const CoeffMatrix& source) const;

 private:
  std::vector<EnsembleComponent> components_;
};

SCState new_sc_state(int k, int N, const DenseMatrix& a, const Tolerances& tol = {});

PureSCState ghz(int k, int N);

SCState pure_to_mixed(const PureSCState& psi);

// Eigendecomposition of the coefficient matrix; eigenvalues below 1e-12 are
// dropped.
Ensemble spectral_ensemble(const SCState& state);

// N = 2 only. Two equal-weight components with amplitude moduli
// (sqrt(a_00), sqrt(a_11)) and relative phases psi +/- phi. Falls back to a
// single component when the state is pure or a diagonal entry vanishes.
Ensemble equal_modulus_ensemble(const SCState& state);

// G G^dagger / Tr(G G^dagger) with G an N x N matrix of standard complex
// Gaussians drawn from GaussianSource(seed).
SCState random_sc_state(int k, int N, std::uint64_t seed);

// Random unit vector supported on the first `support` levels, then permuted
// by a seeded shuffle so the support sits anywhere in 0..N-1.
PureSCState random_pure_sc_state(int k, int N, int support, std::uint64_t seed);

}  // namespace sc
