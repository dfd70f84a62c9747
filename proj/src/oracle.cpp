#include "sc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "sc/error.hpp"

namespace sc {

namespace {

constexpr double kLogClamp = 1e-15;

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void split_index(std::size_t index, std::span<const std::size_t> dims, std::vector<std::size_t>& out) {
  out.resize(dims.size());
  for (std::size_t p = dims.size(); p-- > 0;) {
    out[p] = index % dims[p];
    index /= dims[p];
  }
}

std::size_t join_index(std::span<const std::size_t> digits, std::span<const std::size_t> dims) {
  std::size_t index = 0;
  for (std::size_t p = 0; p < dims.size(); ++p) index = index * dims[p] + digits[p];
  return index;
}

void require_square_of(const DenseMatrix& m, std::span<const std::size_t> dims) {
  const std::size_t total = product(dims);
  if (!m.square() || m.rows() != total) {
    throw Error(ErrorKind::DimMismatch, "matrix is " + std::to_string(m.rows()) + "x" +
                                            std::to_string(m.cols()) +
                                            " but party dimensions multiply to " +
                                            std::to_string(total));
  }
}

}  // namespace

std::size_t require_dense_size(int k, int N, std::uint64_t guard) {
  const auto size = checked_power(static_cast<std::uint64_t>(N), k);
  if (!size || *size > guard) {
    throw Error(ErrorKind::SizeGuard, "N^k = " + (size ? std::to_string(*size) : std::string("overflow")) +
                                          " exceeds the dense size guard " + std::to_string(guard));
  }
  return static_cast<std::size_t>(*size);
}

PartySubset::PartySubset(std::vector<int> parties, int k) : parties_(std::move(parties)), k_(k) {
  std::sort(parties_.begin(), parties_.end());
  parties_.erase(std::unique(parties_.begin(), parties_.end()), parties_.end());
  if (parties_.empty()) throw Error(ErrorKind::DimMismatch, "party subset is empty");
  if (parties_.front() < 1 || parties_.back() > k) {
    throw Error(ErrorKind::DimMismatch, "party index outside 1.." + std::to_string(k));
  }
}

bool PartySubset::contains(int party) const {
  return std::binary_search(parties_.begin(), parties_.end(), party);
}

std::vector<PartySubset> PartySubset::all_proper(int k) {
  std::vector<PartySubset> out;
  const unsigned full = (1u << k) - 1u;
  for (unsigned mask = 1; mask < full; ++mask) {
    std::vector<int> members;
    for (int p = 0; p < k; ++p)
      if (mask & (1u << p)) members.push_back(p + 1);
    out.emplace_back(std::move(members), k);
  }
  return out;
}

std::vector<std::size_t> uniform_dims(int k, int N) {
  return std::vector<std::size_t>(static_cast<std::size_t>(k), static_cast<std::size_t>(N));
}

std::size_t repeated_index(std::size_t m, std::size_t N, int count) {
  std::size_t index = 0;
  for (int i = 0; i < count; ++i) index = index * N + m;
  return index;
}

DenseMatrix dense_from_sc(const SCState& state, std::uint64_t guard) {
  const int k = state.parties();
  const auto N = static_cast<std::size_t>(state.local_dim());
  const std::size_t dim = require_dense_size(k, state.local_dim(), guard);
  DenseMatrix out(dim, dim);
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n)
      out(repeated_index(m, N, k), repeated_index(n, N, k)) = state.coeff(m, n);
  return out;
}

DenseMatrix dense_from_pure(const PureSCState& psi, std::uint64_t guard) {
  const int k = psi.parties();
  const auto N = static_cast<std::size_t>(psi.local_dim());
  const std::size_t dim = require_dense_size(k, psi.local_dim(), guard);
  std::vector<Complex> ket(dim);
  for (std::size_t m = 0; m < N; ++m) ket[repeated_index(m, N, k)] = psi.amplitude(m);
  return outer(ket, ket);
}

DenseMatrix dense_diagonal_sc(std::span<const double> diag, int k, std::uint64_t guard) {
  const std::size_t N = diag.size();
  const std::size_t dim = require_dense_size(k, static_cast<int>(N), guard);
  DenseMatrix out(dim, dim);
  for (std::size_t m = 0; m < N; ++m) {
    const std::size_t i = repeated_index(m, N, k);
    out(i, i) = diag[m];
  }
  return out;
}

DenseMatrix partial_transpose(const DenseMatrix& m, const PartySubset& subset,
                              std::span<const std::size_t> dims) {
  require_square_of(m, dims);
  if (static_cast<std::size_t>(subset.party_count()) != dims.size()) {
    throw Error(ErrorKind::DimMismatch, "subset party count does not match dims");
  }
  const std::size_t n = m.rows();
  DenseMatrix out(n, n);
  std::vector<std::size_t> rd, cd;
  for (std::size_t r = 0; r < n; ++r) {
    split_index(r, dims, rd);
    for (std::size_t c = 0; c < n; ++c) {
      const Complex v = m(r, c);
      if (v == Complex{}) continue;
      split_index(c, dims, cd);
      std::vector<std::size_t> r2 = rd, c2 = cd;
      for (int p : subset.parties()) {
        const auto i = static_cast<std::size_t>(p - 1);
        std::swap(r2[i], c2[i]);
      }
      out(join_index(r2, dims), join_index(c2, dims)) = v;
    }
  }
  return out;
}

DenseMatrix reduced_density(const DenseMatrix& m, const PartySubset& keep,
                            std::span<const std::size_t> dims) {
  require_square_of(m, dims);
  if (static_cast<std::size_t>(keep.party_count()) != dims.size()) {
    throw Error(ErrorKind::DimMismatch, "subset party count does not match dims");
  }
  std::vector<std::size_t> kept_dims;
  for (int p : keep.parties()) kept_dims.push_back(dims[static_cast<std::size_t>(p - 1)]);
  const std::size_t out_dim = product(kept_dims);
  DenseMatrix out(out_dim, out_dim);

  std::vector<std::size_t> rd, cd, rk, ck;
  const std::size_t n = m.rows();
  for (std::size_t r = 0; r < n; ++r) {
    split_index(r, dims, rd);
    for (std::size_t c = 0; c < n; ++c) {
      split_index(c, dims, cd);
      bool traced_match = true;
      rk.clear();
      ck.clear();
      for (std::size_t p = 0; p < dims.size(); ++p) {
        if (keep.contains(static_cast<int>(p) + 1)) {
          rk.push_back(rd[p]);
          ck.push_back(cd[p]);
        } else if (rd[p] != cd[p]) {
          traced_match = false;
          break;
        }
      }
      if (traced_match) out(join_index(rk, kept_dims), join_index(ck, kept_dims)) += m(r, c);
    }
  }
  return out;
}

DenseMatrix realign(const DenseMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  const std::size_t n = dim_a * dim_b;
  if (!m.square() || m.rows() != n) {
    throw Error(ErrorKind::DimMismatch, "realign expects a " + std::to_string(n) + "x" +
                                            std::to_string(n) + " matrix");
  }
  DenseMatrix out(dim_a * dim_a, dim_b * dim_b);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_a; ++j)
      for (std::size_t k = 0; k < dim_b; ++k)
        for (std::size_t l = 0; l < dim_b; ++l)
          out(i * dim_a + j, k * dim_b + l) = m(i * dim_b + k, j * dim_b + l);
  return out;
}

double trace_norm(const DenseMatrix& m) {
  const DenseMatrix gram = m.rows() <= m.cols() ? m * m.adjoint() : m.adjoint() * m;
  double sum = 0.0;
  for (double ev : hermitian_eigenvalues(gram)) sum += std::sqrt(std::max(ev, 0.0));
  return sum;
}

double hermitian_trace_norm(const DenseMatrix& m) {
  double sum = 0.0;
  for (double ev : hermitian_eigenvalues(m)) sum += std::abs(ev);
  return sum;
}

double log_in_base(double x, LogBase base) {
  switch (base) {
    case LogBase::Two: return std::log2(x);
    case LogBase::Ten: return std::log10(x);
    case LogBase::E: break;
  }
  return std::log(x);
}

double von_neumann_entropy(const DenseMatrix& m, LogBase base, double tol) {
  const std::vector<double> values = hermitian_eigenvalues(m);
  if (values.front() < -tol) {
    throw Error(ErrorKind::NotPSD, "entropy input has eigenvalue " + std::to_string(values.front()),
                -values.front());
  }
  double entropy = 0.0;
  for (double ev : values)
    if (ev > kLogClamp) entropy -= ev * log_in_base(ev, base);
  return entropy;
}

double relative_entropy_dense(const DenseMatrix& rho, const DenseMatrix& sigma, LogBase base,
                              double tol) {
  if (!rho.square() || rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw Error(ErrorKind::DimMismatch, "relative entropy operands differ in shape");
  }
  double rho_log_rho = 0.0;
  for (double ev : hermitian_eigenvalues(rho))
    if (ev > kLogClamp) rho_log_rho += ev * log_in_base(ev, base);

  const EigenDecomposition sig = hermitian_eigen(sigma);
  const std::size_t n = rho.rows();
  double rho_log_sigma = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    // <u_j| rho |u_j>
    Complex weight = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex ur = std::conj(sig.vectors(r, j));
      if (ur == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) weight += ur * rho(r, c) * sig.vectors(c, j);
    }
    if (sig.values[j] > kLogClamp) {
      rho_log_sigma += weight.real() * log_in_base(sig.values[j], base);
    } else if (weight.real() > tol) {
      return std::numeric_limits<double>::infinity();
    }
  }
  return rho_log_rho - rho_log_sigma;
}

std::size_t offdiagonal_generator_index(std::size_t d, std::size_t j, std::size_t k) {
  // Pairs (0,1), (0,2), ..., (0,d-1), (1,2), ...
  const std::size_t pair = j * (2 * d - j - 1) / 2 + (k - j - 1);
  return (d - 1) + pair;
}

std::vector<DenseMatrix> su_generators(std::size_t d) {
  if (d < 2) throw Error(ErrorKind::InvalidDims, "SU(d) generators need d >= 2");
  std::vector<DenseMatrix> gens;
  gens.reserve(d * d - 1);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    DenseMatrix g(d, d);
    const double norm = std::sqrt(2.0 / (static_cast<double>(i + 1) * static_cast<double>(i + 2)));
    for (std::size_t a = 0; a <= i; ++a) g(a, a) = norm;
    g(i + 1, i + 1) = -static_cast<double>(i + 1) * norm;
    gens.push_back(std::move(g));
  }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      DenseMatrix g(d, d);
      g(j, k) = 1.0;
      g(k, j) = 1.0;
      gens.push_back(std::move(g));
    }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      DenseMatrix g(d, d);
      g(j, k) = Complex(0.0, -1.0);
      g(k, j) = Complex(0.0, 1.0);
      gens.push_back(std::move(g));
    }
  return gens;
}

}  // namespace sc
