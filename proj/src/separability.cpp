#include "sc/separability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sc/error.hpp"

namespace sc {

namespace {

std::uint64_t hilbert_dim_or_throw(int k, int N) {
  const auto dim = checked_power(static_cast<std::uint64_t>(N), k);
  if (!dim) {
    throw Error(ErrorKind::Overflow, "N^k overflows 64 bits for k=" + std::to_string(k) +
                                         " N=" + std::to_string(N));
  }
  return *dim;
}

std::uint64_t repeated(std::uint64_t m, std::uint64_t N, int count) {
  std::uint64_t index = 0;
  for (int i = 0; i < count; ++i) index = index * N + m;
  return index;
}

// Level m when index is |m...m>.
std::optional<std::size_t> repeated_level(std::uint64_t index, std::uint64_t N, int k) {
  const std::uint64_t unit = repeated(1, N, k);
  if (index % unit != 0) return std::nullopt;
  const std::uint64_t m = index / unit;
  if (m >= N) return std::nullopt;
  return static_cast<std::size_t>(m);
}

// Nonzero entries (generator index, value) of all SU(d) generators at (x, y).
template <typename Fn>
void generator_entries(std::size_t d, std::size_t x, std::size_t y, Fn&& fn) {
  if (x == y) {
    for (std::size_t i = (x == 0 ? 0 : x - 1); i + 1 < d; ++i) {
      const double norm = std::sqrt(2.0 / (static_cast<double>(i + 1) * static_cast<double>(i + 2)));
      if (x <= i) {
        fn(i, Complex(norm, 0.0));
      } else {  // x == i + 1
        fn(i, Complex(-static_cast<double>(i + 1) * norm, 0.0));
      }
    }
    return;
  }
  const std::size_t lo = std::min(x, y);
  const std::size_t hi = std::max(x, y);
  const std::size_t sym = offdiagonal_generator_index(d, lo, hi);
  fn(sym, Complex(1.0, 0.0));
  fn(sym + d * (d - 1) / 2, x < y ? Complex(0.0, -1.0) : Complex(0.0, 1.0));
}

}  // namespace

double PTSpectrum::min_eigenvalue() const {
  double lowest = zero_multiplicity > 0 ? 0.0 : diagonal.front();
  for (double d : diagonal) lowest = std::min(lowest, d);
  for (double p : pair_magnitudes) lowest = std::min(lowest, -p);
  return lowest;
}

std::vector<double> PTSpectrum::sorted_values(std::uint64_t guard) const {
  const std::uint64_t total = diagonal.size() + 2 * pair_magnitudes.size() + zero_multiplicity;
  if (total > guard) {
    throw Error(ErrorKind::SizeGuard, "spectrum of size " + std::to_string(total) +
                                          " exceeds guard " + std::to_string(guard));
  }
  std::vector<double> values(diagonal);
  for (double p : pair_magnitudes) {
    values.push_back(p);
    values.push_back(-p);
  }
  values.insert(values.end(), static_cast<std::size_t>(zero_multiplicity), 0.0);
  std::sort(values.begin(), values.end());
  return values;
}

PTSpectrum pt_spectrum(const SCState& state) {
  const int k = state.parties();
  const auto N = static_cast<std::size_t>(state.local_dim());
  const std::uint64_t dim = hilbert_dim_or_throw(k, state.local_dim());
  PTSpectrum out;
  out.diagonal = state.coeffs().diagonal();
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = m + 1; n < N; ++n) out.pair_magnitudes.push_back(std::abs(state.coeff(m, n)));
  out.zero_multiplicity = dim - static_cast<std::uint64_t>(N * N);
  return out;
}

bool is_fully_separable(const SCState& state, double tol) {
  const auto N = static_cast<std::size_t>(state.local_dim());
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = m + 1; n < N; ++n)
      if (std::abs(state.coeff(m, n)) > tol) return false;
  return true;
}

double Witness::source_expectation() const {
  double sum = 0.0;
  for (const auto& p : pairs_) sum -= p.magnitude;
  return sum;
}

DenseMatrix Witness::to_dense(std::uint64_t guard) const {
  const std::size_t dim = require_dense_size(parties_, local_dim_, guard);
  DenseMatrix out(dim, dim);
  for (const auto& term : terms_) out(term.row, term.col) += term.value;
  return out;
}

Witness build_witness(const SCState& state, double pair_tol) {
  const int k = state.parties();
  const auto N = static_cast<std::uint64_t>(state.local_dim());
  hilbert_dim_or_throw(k, state.local_dim());
  const std::uint64_t first_stride = *checked_power(N, k - 1);

  std::vector<WitnessTerm> terms;
  std::vector<WitnessPair> pairs;
  for (std::uint64_t m = 0; m < N; ++m) {
    for (std::uint64_t n = m + 1; n < N; ++n) {
      const Complex amn = state.coeff(m, n);
      const double magnitude = std::abs(amn);
      if (magnitude <= pair_tol) continue;
      const Complex phase = amn / magnitude;
      // |m n...n> and |n m...m>
      const std::uint64_t x = m * first_stride + repeated(n, N, k - 1);
      const std::uint64_t y = n * first_stride + repeated(m, N, k - 1);
      const std::uint64_t all_m = repeated(m, N, k);
      const std::uint64_t all_n = repeated(n, N, k);
      terms.push_back({x, x, Complex(0.5, 0.0)});
      terms.push_back({y, y, Complex(0.5, 0.0)});
      terms.push_back({all_n, all_m, -0.5 * std::conj(phase)});
      terms.push_back({all_m, all_n, -0.5 * phase});
      pairs.push_back({static_cast<std::size_t>(m), static_cast<std::size_t>(n), magnitude});
    }
  }
  return Witness(k, state.local_dim(), std::move(terms), std::move(pairs));
}

std::vector<Complex> witness_eigenvector(const SCState& state, std::size_t m, std::size_t n,
                                         std::uint64_t guard) {
  const int k = state.parties();
  const auto N = static_cast<std::size_t>(state.local_dim());
  const std::size_t dim = require_dense_size(k, state.local_dim(), guard);
  const std::size_t stride = dim / N;
  const Complex amn = state.coeff(m, n);
  const Complex phase = std::abs(amn) > 0.0 ? amn / std::abs(amn) : Complex(1.0, 0.0);
  std::vector<Complex> v(dim);
  v[m * stride + repeated_index(n, N, k - 1)] = 1.0 / std::numbers::sqrt2;
  v[n * stride + repeated_index(m, N, k - 1)] = -phase / std::numbers::sqrt2;
  return v;
}

double witness_expectation(const Witness& w, const SCState& target) {
  if (target.parties() != w.parties() || target.local_dim() != w.local_dim()) {
    throw Error(ErrorKind::DimMismatch, "witness and state have different shapes");
  }
  const auto N = static_cast<std::uint64_t>(w.local_dim());
  Complex sum = 0.0;
  for (const auto& term : w.terms()) {
    // Tr[W rho] = sum W_rc rho_cr; rho_cr is nonzero only on |m..m><n..n|.
    const auto m = repeated_level(term.col, N, w.parties());
    if (!m) continue;
    const auto n = repeated_level(term.row, N, w.parties());
    if (!n) continue;
    sum += term.value * target.coeff(*m, *n);
  }
  return sum.real();
}

double witness_expectation(const Witness& w, const DenseMatrix& target) {
  const auto dim = checked_power(static_cast<std::uint64_t>(w.local_dim()), w.parties());
  if (!target.square() || !dim || target.rows() != *dim) {
    throw Error(ErrorKind::DimMismatch, "witness and matrix have different dimensions");
  }
  Complex sum = 0.0;
  for (const auto& term : w.terms()) sum += term.value * target(term.col, term.row);
  return sum.real();
}

double realignment_norm(const SCState& state) {
  const auto N = static_cast<std::size_t>(state.local_dim());
  double sum = 0.0;
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n) sum += std::abs(state.coeff(m, n));
  return sum;
}

BlochDecomposition bloch_from_dense(const DenseMatrix& rho, std::size_t dim_a, std::size_t dim_b) {
  if (dim_a < 2 || dim_b < 2 || !rho.square() || rho.rows() != dim_a * dim_b) {
    throw Error(ErrorKind::DimMismatch, "Bloch decomposition shape mismatch");
  }
  BlochDecomposition b;
  b.dim_a = dim_a;
  b.dim_b = dim_b;
  const std::size_t na = dim_a * dim_a - 1;
  const std::size_t nb = dim_b * dim_b - 1;
  std::vector<Complex> r(na), s(nb), t(na * nb);

  const std::size_t n = rho.rows();
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) {
      const Complex v = rho(row, col);
      if (v == Complex{}) continue;
      const std::size_t r1 = row / dim_b, r2 = row % dim_b;
      const std::size_t c1 = col / dim_b, c2 = col % dim_b;
      // Tr[rho (A (x) B)] = sum rho_{rc} A_{c1 r1} B_{c2 r2}
      if (c2 == r2) generator_entries(dim_a, c1, r1, [&](std::size_t i, Complex a) { r[i] += v * a; });
      if (c1 == r1) generator_entries(dim_b, c2, r2, [&](std::size_t j, Complex bv) { s[j] += v * bv; });
      generator_entries(dim_a, c1, r1, [&](std::size_t i, Complex a) {
        generator_entries(dim_b, c2, r2, [&](std::size_t j, Complex bv) { t[i * nb + j] += v * a * bv; });
      });
    }
  }

  const double ma = static_cast<double>(dim_a);
  const double mb = static_cast<double>(dim_b);
  auto take_real = [&](const std::vector<Complex>& in, double scale, std::vector<double>& out) {
    out.resize(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
      const Complex z = scale * in[i];
      out[i] = z.real();
      b.imaginary_residue = std::max(b.imaginary_residue, std::abs(z.imag()));
    }
  };
  take_real(r, ma / 2.0, b.r);
  take_real(s, mb / 2.0, b.s);
  take_real(t, ma * mb / 4.0, b.t);
  return b;
}

BlochDecomposition bloch_decomposition(const SCState& state, int split, std::uint64_t guard) {
  const int k = state.parties();
  if (split < 1 || split > k - 1) {
    throw Error(ErrorKind::InvalidSplit,
                "split " + std::to_string(split) + " outside 1.." + std::to_string(k - 1));
  }
  const DenseMatrix rho = dense_from_sc(state, guard);
  const auto N = static_cast<std::uint64_t>(state.local_dim());
  const auto dim_a = static_cast<std::size_t>(*checked_power(N, split));
  const auto dim_b = static_cast<std::size_t>(*checked_power(N, k - split));
  BlochDecomposition b = bloch_from_dense(rho, dim_a, dim_b);
  b.split = split;
  return b;
}

double corollary2_block_max(const BlochDecomposition& b) {
  double worst = 0.0;
  for (std::size_t i = b.dim_a - 1; i < b.t_rows(); ++i)
    for (std::size_t j = b.dim_b - 1; j < b.t_cols(); ++j) worst = std::max(worst, std::abs(b.t_at(i, j)));
  return worst;
}

bool check_corollary2(const BlochDecomposition& b, double tol) { return corollary2_block_max(b) <= tol; }

}  // namespace sc
