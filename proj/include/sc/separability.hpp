#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sc/dense.hpp"
#include "sc/oracle.hpp"
#include "sc/state.hpp"

namespace sc {

// Spectrum of rho^{T_S}, identical for every nonempty proper party subset S:
// {a_mm} U {+|a_mn|, -|a_mn| : m < n} U {0 repeated zero_multiplicity times}.
struct PTSpectrum {
  std::vector<double> diagonal;
  std::vector<double> pair_magnitudes;  // (0,1), (0,2), ..., (N-2,N-1)
  std::uint64_t zero_multiplicity = 0;

  double min_eigenvalue() const;
  // Full multiset sorted ascending. Throws SizeGuard when its size exceeds guard.
  std::vector<double> sorted_values(std::uint64_t guard = kDefaultSizeGuard) const;
};

// Throws Overflow only when N^k does not fit in 64 bits.
PTSpectrum pt_spectrum(const SCState& state);

bool is_fully_separable(const SCState& state, double tol = 1e-12);

struct WitnessTerm {
  std::uint64_t row;
  std::uint64_t col;
  Complex value;
};

struct WitnessPair {
  std::size_t m;
  std::size_t n;
  double magnitude;  // |a_mn|
};

// W = sum_{m<n} (|Psi_mn><Psi_mn|)^{T_1} with
// |Psi_mn> = (|m n...n> - e^{i arg a_mn} |n m...m>) / sqrt(2), the eigenvector
// of rho^{T_1} for eigenvalue -|a_mn|.
class Witness {
 public:
  Witness(int k, int N, std::vector<WitnessTerm> terms, std::vector<WitnessPair> pairs)
      : parties_(k), local_dim_(N), terms_(std::move(terms)), pairs_(std::move(pairs)) {}

  int parties() const noexcept { return parties_; }
  int local_dim() const noexcept { return local_dim_; }
  const std::vector<WitnessTerm>& terms() const noexcept { return terms_; }
  const std::vector<WitnessPair>& pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return terms_.empty(); }

  // Tr[W rho_source] = -sum_{m<n} |a_mn|.
  double source_expectation() const;

  DenseMatrix to_dense(std::uint64_t guard = kDefaultSizeGuard) const;

 private:
  int parties_;
  int local_dim_;
  std::vector<WitnessTerm> terms_;
  std::vector<WitnessPair> pairs_;
};

// Pairs with |a_mn| <= pair_tol are skipped.
Witness build_witness(const SCState& state, double pair_tol = 1e-12);

// |Psi_mn> as a dense vector, for eigenvector checks.
std::vector<Complex> witness_eigenvector(const SCState& state, std::size_t m, std::size_t n,
                                         std::uint64_t guard = kDefaultSizeGuard);

// Tr[W target]; the SC overload needs no dense algebra.
double witness_expectation(const Witness& w, const SCState& target);
double witness_expectation(const Witness& w, const DenseMatrix& target);

// ||R(rho)||_1 for the split 1 | 2...k, equal to sum_mn |a_mn|.
double realignment_norm(const SCState& state);

struct BlochDecomposition {
  int split = 0;               // parties 1..split form the first subsystem
  std::size_t dim_a = 0;       // N^split
  std::size_t dim_b = 0;       // N^(k - split)
  std::vector<double> r;       // dim_a^2 - 1
  std::vector<double> s;       // dim_b^2 - 1
  std::vector<double> t;       // row-major (dim_a^2 - 1) x (dim_b^2 - 1)
  double imaginary_residue = 0.0;

  std::size_t t_rows() const noexcept { return dim_a * dim_a - 1; }
  std::size_t t_cols() const noexcept { return dim_b * dim_b - 1; }
  double t_at(std::size_t i, std::size_t j) const { return t[i * t_cols() + j]; }
};

// Bloch coefficients of a bipartite dim_a x dim_b density matrix.
BlochDecomposition bloch_from_dense(const DenseMatrix& rho, std::size_t dim_a, std::size_t dim_b);

BlochDecomposition bloch_decomposition(const SCState& state, int split,
                                       std::uint64_t guard = kDefaultSizeGuard);

// max |t_ij| over the off-diagonal x off-diagonal generator block.
double corollary2_block_max(const BlochDecomposition& b);

bool check_corollary2(const BlochDecomposition& b, double tol = 1e-9);

}  // namespace sc
