#pragma once

// Brute-force dense counterparts of every closed form. Multi-indices are
// flattened row-major with party 1 most significant.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sc/dense.hpp"
#include "sc/state.hpp"

namespace sc {

inline constexpr std::uint64_t kDefaultSizeGuard = 4096;

// Throws SizeGuard unless N^k <= guard.
std::size_t require_dense_size(int k, int N, std::uint64_t guard);

// Parties are numbered 1..k.
class PartySubset {
 public:
  PartySubset(std::vector<int> parties, int k);

  std::span<const int> parties() const noexcept { return parties_; }
  bool contains(int party) const;
  bool proper() const noexcept { return static_cast<int>(parties_.size()) < k_; }
  int party_count() const noexcept { return k_; }

  // Every nonempty proper subset of {1..k}.
  static std::vector<PartySubset> all_proper(int k);

 private:
  std::vector<int> parties_;
  int k_;
};

// Local dimensions of k parties of dimension N.
std::vector<std::size_t> uniform_dims(int k, int N);

// Index of |m m ... m> over `count` parties of dimension N.
std::size_t repeated_index(std::size_t m, std::size_t N, int count);

DenseMatrix dense_from_sc(const SCState& state, std::uint64_t guard = kDefaultSizeGuard);
DenseMatrix dense_from_pure(const PureSCState& psi, std::uint64_t guard = kDefaultSizeGuard);
// Diagonal state sum_m d_m |m...m><m...m|.
DenseMatrix dense_diagonal_sc(std::span<const double> diag, int k,
                              std::uint64_t guard = kDefaultSizeGuard);

DenseMatrix partial_transpose(const DenseMatrix& m, const PartySubset& subset,
                              std::span<const std::size_t> dims);

// Partial trace over the complement of `keep`.
DenseMatrix reduced_density(const DenseMatrix& m, const PartySubset& keep,
                            std::span<const std::size_t> dims);

// R_{(i,j),(k,l)} = m_{(i,k),(j,l)}; output is dimA^2 x dimB^2.
DenseMatrix realign(const DenseMatrix& m, std::size_t dim_a, std::size_t dim_b);

// Sum of singular values, from the eigenvalues of the smaller Gram matrix.
double trace_norm(const DenseMatrix& m);

// Sum of |eigenvalues|, valid for Hermitian input only.
double hermitian_trace_norm(const DenseMatrix& m);

enum class LogBase { Two, E, Ten };

double log_in_base(double x, LogBase base);

double von_neumann_entropy(const DenseMatrix& m, LogBase base = LogBase::Two,
                           double tol = 1e-10);

// S(rho || sigma). Returns +infinity when rho has weight outside the support
// of sigma (beyond `tol`).
double relative_entropy_dense(const DenseMatrix& rho, const DenseMatrix& sigma,
                              LogBase base = LogBase::Two, double tol = 1e-10);

// d^2 - 1 generators: d - 1 diagonal ones, then the symmetric and the
// antisymmetric off-diagonal ones, each block in lexicographic (j, k) order.
std::vector<DenseMatrix> su_generators(std::size_t d);

// Position of the symmetric generator for the pair j < k; the antisymmetric
// partner sits d(d-1)/2 further on.
std::size_t offdiagonal_generator_index(std::size_t d, std::size_t j, std::size_t k);

}  // namespace sc
