#include "sc/verify.hpp"

#include <algorithm>
#include <cmath>

#include "sc/error.hpp"
#include "sc/measures.hpp"
#include "sc/separability.hpp"
#include "sc/slocc.hpp"

namespace sc {

void VerifyReport::record(const std::string& name, double residual) {
  for (auto& check : checks_) {
    if (check.name == name) {
      check.max_residual = std::max(check.max_residual, residual);
      return;
    }
  }
  checks_.push_back({name, residual});
}

void VerifyReport::merge(const VerifyReport& other) {
  for (const auto& check : other.checks_) record(check.name, check.max_residual);
}

double VerifyReport::max_residual() const {
  double worst = 0.0;
  for (const auto& check : checks_) worst = std::max(worst, check.max_residual);
  return worst;
}

DenseMatrix random_product_state(int k, int N, GaussianSource& rng) {
  DenseMatrix out = DenseMatrix::identity(1);
  for (int p = 0; p < k; ++p) {
    std::vector<Complex> v(static_cast<std::size_t>(N));
    double norm2 = 0.0;
    for (auto& z : v) {
      z = rng.complex_normal();
      norm2 += std::norm(z);
    }
    for (auto& z : v) z /= std::sqrt(norm2);
    out = kron(out, outer(v, v));
  }
  return out;
}

DenseMatrix random_separable_state(int k, int N, int max_terms, GaussianSource& rng) {
  const int terms = 1 + static_cast<int>(rng.uniform() * max_terms);
  std::vector<double> weights;
  double total = 0.0;
  for (int i = 0; i < std::min(terms, max_terms); ++i) {
    weights.push_back(rng.uniform());
    total += weights.back();
  }
  DenseMatrix out;
  for (double w : weights) {
    DenseMatrix term = Complex(w / total, 0.0) * random_product_state(k, N, rng);
    out = out.rows() == 0 ? std::move(term) : out + term;
  }
  return out;
}

namespace {

double sorted_diff(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

VerifyReport verify_state(const SCState& state, const VerifyOptions& options) {
  const int k = state.parties();
  const int N = state.local_dim();
  const auto n = static_cast<std::size_t>(N);
  const std::size_t dim = require_dense_size(k, N, options.guard);
  const auto dims = uniform_dims(k, N);
  const DenseMatrix rho = dense_from_sc(state, options.guard);
  VerifyReport report;

  const PTSpectrum spectrum = pt_spectrum(state);
  const std::vector<double> closed = spectrum.sorted_values(options.guard);
  for (const auto& subset : PartySubset::all_proper(k)) {
    report.record("pt_spectrum", sorted_diff(closed, hermitian_eigenvalues(partial_transpose(rho, subset, dims))));
  }

  std::vector<double> coeff_spectrum = state.coeffs().eigenvalues();
  coeff_spectrum.resize(dim, 0.0);
  report.record("dense_spectrum", sorted_diff(coeff_spectrum, hermitian_eigenvalues(rho)));

  const std::size_t rest = dim / n;
  report.record("realignment", std::abs(realignment_norm(state) - trace_norm(realign(rho, n, rest))));

  const DenseMatrix pt1 = partial_transpose(rho, PartySubset({1}, k), dims);
  report.record("negativity", std::abs(negativity(state) - (trace_norm(pt1) - 1.0) / 2.0));
  report.record("negativity_identity", std::abs(negativity(state) - (realignment_norm(state) - 1.0) / 2.0));

  const DenseMatrix sigma = dense_diagonal_sc(optimal_separable(state).diag, k, options.guard);
  report.record("relative_entropy", std::abs(relative_entropy(state, options.log_base) -
                                             relative_entropy_dense(rho, sigma, options.log_base)));

  const Witness w = build_witness(state);
  report.record("witness_source", std::abs(w.source_expectation() - witness_expectation(w, rho)) +
                                      std::abs(w.source_expectation() - witness_expectation(w, state)));
  double eigen_residual = 0.0;
  for (const auto& pair : w.pairs()) {
    const auto psi = witness_eigenvector(state, pair.m, pair.n, options.guard);
    for (std::size_t r = 0; r < dim; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < dim; ++c) acc += pt1(r, c) * psi[c];
      eigen_residual = std::max(eigen_residual, std::abs(acc + pair.magnitude * psi[r]));
    }
  }
  report.record("witness_eigenvector", eigen_residual);
  GaussianSource rng(options.seed);
  double witness_violation = 0.0;
  for (int i = 0; i < options.separable_samples; ++i) {
    const DenseMatrix sep = random_separable_state(k, N, 4, rng);
    witness_violation = std::max(witness_violation, -witness_expectation(w, sep));
  }
  report.record("witness_separable", std::max(witness_violation, 0.0));

  // r_i, s_j and the mixed t blocks vanish for every SC state; the
  // off-diagonal t block vanishes iff the state is separable.
  const int split = std::clamp(options.split, 1, k - 1);
  const BlochDecomposition bloch = bloch_decomposition(state, split, options.guard);
  double bloch_residual = bloch.imaginary_residue;
  for (std::size_t i = bloch.dim_a - 1; i < bloch.r.size(); ++i) bloch_residual = std::max(bloch_residual, std::abs(bloch.r[i]));
  for (std::size_t j = bloch.dim_b - 1; j < bloch.s.size(); ++j) bloch_residual = std::max(bloch_residual, std::abs(bloch.s[j]));
  for (std::size_t i = 0; i < bloch.t_rows(); ++i)
    for (std::size_t j = 0; j < bloch.t_cols(); ++j) {
      const bool diag_i = i + 1 < bloch.dim_a;
      const bool diag_j = j + 1 < bloch.dim_b;
      if (diag_i != diag_j) bloch_residual = std::max(bloch_residual, std::abs(bloch.t_at(i, j)));
    }
  report.record("bloch", bloch_residual);

  const bool prop1 = is_fully_separable(state, options.separable_tol);
  const bool realign_one = std::abs(realignment_norm(state) - 1.0) <= static_cast<double>(N * N) * options.separable_tol;
  const bool pt_positive = spectrum.min_eigenvalue() >= -options.separable_tol;
  const bool cor2 = check_corollary2(bloch, options.separable_tol);
  const bool agree = prop1 == realign_one && prop1 == pt_positive && prop1 == cor2;
  report.record("separability_agreement", agree ? 0.0 : 1.0);
  return report;
}

double slocc_residual(const PureSCState& psi) {
  const SloccClass cls = classify_pure(psi);
  if (cls.kind != SloccKind::GhzClass) return 0.0;
  const PureSCState out = apply_filter(build_filter(psi), psi);
  const double target = 1.0 / std::sqrt(static_cast<double>(cls.t));
  // Global phase taken from the first support entry.
  Complex phase = 0.0;
  for (std::size_t m = 0; m < psi.amplitudes().size(); ++m) {
    if (std::abs(psi.amplitude(m)) > 1e-12) {
      phase = out.amplitude(m) / std::abs(out.amplitude(m));
      break;
    }
  }
  double residual = 0.0;
  for (std::size_t m = 0; m < psi.amplitudes().size(); ++m) {
    const bool in_support = std::abs(psi.amplitude(m)) > 1e-12;
    const Complex expected = in_support ? phase * target : Complex{};
    residual = std::max(residual, std::abs(out.amplitude(m) - expected));
  }
  if (classify_pure(out).t != cls.t) residual = std::max(residual, 1.0);
  return residual;
}

VerifyReport oracle_verify(int k, int N, int samples, std::uint64_t seed, std::uint64_t guard) {
  require_dense_size(k, N, guard);
  VerifyReport report;
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    VerifyOptions options;
    options.guard = guard;
    options.seed = s ^ 0x9e3779b97f4a7c15ULL;
    options.split = 1 + i % std::max(k - 1, 1);
    report.merge(verify_state(random_sc_state(k, N, s), options));

    GaussianSource pick(s);
    const int support = 1 + static_cast<int>(pick.uniform() * N);
    report.record("slocc", slocc_residual(random_pure_sc_state(k, N, std::min(support, N), s)));
  }
  return report;
}

}  // namespace sc
