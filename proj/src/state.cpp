#include "sc/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sc/error.hpp"
#include "sc/random.hpp"

namespace sc {

namespace {

constexpr double kSpectralDropThreshold = 1e-12;

void require_dims(int k, int N) {
  if (k < 2 || N < 2) {
    throw Error(ErrorKind::InvalidDims,
                "need k >= 2 and N >= 2, got k=" + std::to_string(k) + " N=" + std::to_string(N));
  }
}

}  // namespace

std::optional<std::uint64_t> checked_power(std::uint64_t base, int exponent) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    result *= base;
  }
  return result;
}

CoeffMatrix CoeffMatrix::validated(const DenseMatrix& a, const Tolerances& tol) {
  if (!a.square() || a.rows() == 0) {
    throw Error(ErrorKind::InvalidDims, "coefficient matrix must be square and non-empty");
  }
  for (const auto& z : a.data()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorKind::NonFinite, "coefficient matrix has a non-finite entry");
  }
  const double defect = a.hermiticity_defect();
  if (defect > tol.hermitian) {
    throw Error(ErrorKind::NotHermitian, "max |a_mn - conj(a_nm)| = " + std::to_string(defect),
                defect);
  }

  const std::size_t n = a.rows();
  DenseMatrix sym(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    sym(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex v = 0.5 * (a(r, c) + std::conj(a(c, r)));
      sym(r, c) = v;
      sym(c, r) = std::conj(v);
    }
  }

  const double trace_error = std::abs(sym.trace().real() - 1.0);
  if (trace_error > tol.trace) {
    throw Error(ErrorKind::NotUnitTrace, "|Tr a - 1| = " + std::to_string(trace_error), trace_error);
  }

  double consistency = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const double amm = std::max(sym(m, m).real(), 0.0);
    consistency = std::max(consistency, -sym(m, m).real());
    for (std::size_t k = m + 1; k < n; ++k) {
      const double akk = std::max(sym(k, k).real(), 0.0);
      consistency = std::max(consistency, std::abs(sym(m, k)) - std::sqrt(amm * akk));
    }
  }
  const double min_eigen = hermitian_eigenvalues(sym).front();
  const double psd_violation = std::max(-min_eigen, consistency);
  if (psd_violation > tol.psd) {
    throw Error(ErrorKind::NotPSD, "min eigenvalue " + std::to_string(min_eigen), psd_violation);
  }
  return CoeffMatrix(std::move(sym));
}

std::vector<double> CoeffMatrix::diagonal() const {
  std::vector<double> out(dim());
  for (std::size_t m = 0; m < dim(); ++m) out[m] = a_(m, m).real();
  return out;
}

std::vector<double> CoeffMatrix::eigenvalues() const { return hermitian_eigenvalues(a_); }

std::optional<std::uint64_t> SCState::hilbert_dim() const {
  return checked_power(static_cast<std::uint64_t>(local_dim()), parties_);
}

SCState new_sc_state(int k, int N, const DenseMatrix& a, const Tolerances& tol) {
  require_dims(k, N);
  if (a.rows() != static_cast<std::size_t>(N) || a.cols() != static_cast<std::size_t>(N)) {
    throw Error(ErrorKind::InvalidDims, "coefficient matrix is " + std::to_string(a.rows()) + "x" +
                                            std::to_string(a.cols()) + ", expected N=" +
                                            std::to_string(N));
  }
  return SCState(k, CoeffMatrix::validated(a, tol));
}

PureSCState PureSCState::create(int k, std::vector<Complex> amplitudes, const Tolerances& tol) {
  require_dims(k, static_cast<int>(amplitudes.size()));
  double norm2 = 0.0;
  for (const auto& c : amplitudes) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorKind::NonFinite, "amplitude is not finite");
    norm2 += std::norm(c);
  }
  const double err = std::abs(norm2 - 1.0);
  if (err > tol.trace) {
    throw Error(ErrorKind::NotNormalized, "sum |c_m|^2 = " + std::to_string(norm2), err);
  }
  return PureSCState(k, std::move(amplitudes));
}

Ensemble::Ensemble(std::vector<EnsembleComponent> components)
    : components_(std::move(components)) {}

DenseMatrix Ensemble::reconstruct() const {
  if (components_.empty()) return {};
  const std::size_t n = static_cast<std::size_t>(components_.front().state.local_dim());
  DenseMatrix out(n, n);
  for (const auto& comp : components_) {
    const auto c = comp.state.amplitudes();
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t k = 0; k < n; ++k) out(m, k) += comp.weight * c[m] * std::conj(c[k]);
  }
  return out;
}

double Ensemble::reconstruction_error(const CoeffMatrix& source) const {
  return max_abs_diff(reconstruct(), source.matrix());
}

PureSCState ghz(int k, int N) {
  require_dims(k, N);
  const double amp = 1.0 / std::sqrt(static_cast<double>(N));
  return PureSCState::create(k, std::vector<Complex>(static_cast<std::size_t>(N), amp));
}

SCState pure_to_mixed(const PureSCState& psi) {
  const auto c = psi.amplitudes();
  const std::size_t n = c.size();
  DenseMatrix a(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    a(m, m) = std::norm(c[m]);
    for (std::size_t k = m + 1; k < n; ++k) {
      a(m, k) = c[m] * std::conj(c[k]);
      a(k, m) = std::conj(a(m, k));
    }
  }
  return SCState(psi.parties(), CoeffMatrix(std::move(a)));
}

Ensemble spectral_ensemble(const SCState& state) {
  EigenDecomposition eig;
  try {
    eig = hermitian_eigen(state.coeffs().matrix());
  } catch (const Error& e) {
    throw Error(ErrorKind::EigenFailure, e.what());
  }
  const std::size_t n = eig.values.size();
  std::vector<EnsembleComponent> components;
  // Descending weight order.
  for (std::size_t j = n; j-- > 0;) {
    const double weight = eig.values[j];
    if (weight < kSpectralDropThreshold) continue;
    std::vector<Complex> amps(n);
    for (std::size_t m = 0; m < n; ++m) amps[m] = eig.vectors(m, j);
    components.push_back({weight, PureSCState::create(state.parties(), std::move(amps))});
  }
  return Ensemble(std::move(components));
}

Ensemble equal_modulus_ensemble(const SCState& state) {
  if (state.local_dim() != 2) {
    throw Error(ErrorKind::UnsupportedDim, "equal-modulus construction is implemented for N = 2");
  }
  const double a00 = std::max(state.coeff(0, 0).real(), 0.0);
  const double a11 = std::max(state.coeff(1, 1).real(), 0.0);
  const Complex a01 = state.coeff(0, 1);
  const int k = state.parties();
  const double r0 = std::sqrt(a00);
  const double r1 = std::sqrt(a11);

  auto component = [&](double weight, double phase) {
    return EnsembleComponent{weight,
                             PureSCState::create(k, {Complex(r0, 0.0), std::polar(r1, phase)})};
  };

  if (a00 == 0.0 || a11 == 0.0) return Ensemble({component(1.0, 0.0)});

  const double cos_phi = std::min(std::abs(a01) / std::sqrt(a00 * a11), 1.0);
  // Sum_i p_i e^{-i theta_i} sqrt(a00 a11) = a01 with theta = psi +/- phi.
  const double psi = std::abs(a01) == 0.0 ? std::numbers::pi / 2.0 : -std::arg(a01);
  if (1.0 - cos_phi <= 1e-12) return Ensemble({component(1.0, psi)});

  const double phi = std::acos(cos_phi);
  return Ensemble({component(0.5, psi + phi), component(0.5, psi - phi)});
}

SCState random_sc_state(int k, int N, std::uint64_t seed) {
  require_dims(k, N);
  const auto n = static_cast<std::size_t>(N);
  GaussianSource gauss(seed);
  DenseMatrix g(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) g(r, c) = gauss.complex_normal();

  DenseMatrix a(n, n);
  double trace = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double diag = 0.0;
    for (std::size_t j = 0; j < n; ++j) diag += std::norm(g(r, j));
    a(r, r) = diag;
    trace += diag;
    for (std::size_t c = r + 1; c < n; ++c) {
      Complex v = 0.0;
      for (std::size_t j = 0; j < n; ++j) v += g(r, j) * std::conj(g(c, j));
      a(r, c) = v;
      a(c, r) = std::conj(v);
    }
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) /= trace;
  return new_sc_state(k, N, a);
}

PureSCState random_pure_sc_state(int k, int N, int support, std::uint64_t seed) {
  require_dims(k, N);
  if (support < 1 || support > N) {
    throw Error(ErrorKind::InvalidDims, "support size must lie in [1, N]");
  }
  GaussianSource gauss(seed);
  std::vector<std::size_t> levels(static_cast<std::size_t>(N));
  for (std::size_t i = 0; i < levels.size(); ++i) levels[i] = i;
  for (std::size_t i = levels.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(gauss.uniform() * static_cast<double>(i + 1));
    std::swap(levels[i], levels[std::min(j, i)]);
  }

  std::vector<Complex> amps(static_cast<std::size_t>(N));
  double norm2 = 0.0;
  for (int s = 0; s < support; ++s) {
    const Complex z = gauss.complex_normal();
    amps[levels[static_cast<std::size_t>(s)]] = z;
    norm2 += std::norm(z);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : amps) c *= scale;
  return PureSCState::create(k, std::move(amps));
}

}  // namespace sc
