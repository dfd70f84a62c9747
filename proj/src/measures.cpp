#include "sc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sc/error.hpp"
#include "sc/random.hpp"
#include "sc/separability.hpp"

namespace sc {

namespace {

constexpr double kLogClamp = 1e-15;

double sum_fourth_powers(std::span<const Complex> c) {
  double sum = 0.0;
  for (const auto& z : c) sum += std::norm(z) * std::norm(z);
  return sum;
}

// Row-major M x N block of unnormalized ensemble vectors.
struct Decomposition {
  std::size_t size = 0;
  std::size_t dim = 0;
  std::vector<Complex> rows;

  std::span<const Complex> row(std::size_t i) const { return {rows.data() + i * dim, dim}; }
};

// Unitary U = G_1 G_2 ... G_L over all pairs p < q. Each Givens factor has
// angle theta and phase phi. Two parameters per pair.
class GivensUnitary {
 public:
  explicit GivensUnitary(std::size_t size) : size_(size) {
    for (std::size_t p = 0; p < size; ++p)
      for (std::size_t q = p + 1; q < size; ++q) pairs_.push_back({p, q});
  }

  std::size_t parameter_count() const { return 2 * pairs_.size(); }

  // Applies U to the rows of `block` in place.
  void apply(std::span<const double> params, Decomposition& block) const {
    const std::size_t dim = block.dim;
    for (std::size_t g = pairs_.size(); g-- > 0;) {
      const auto [p, q] = pairs_[g];
      const double theta = params[2 * g];
      const double phi = params[2 * g + 1];
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      const Complex upq = -std::polar(s, phi);
      const Complex uqp = std::polar(s, -phi);
      for (std::size_t col = 0; col < dim; ++col) {
        const Complex bp = block.rows[p * dim + col];
        const Complex bq = block.rows[q * dim + col];
        block.rows[p * dim + col] = c * bp + upq * bq;
        block.rows[q * dim + col] = uqp * bp + c * bq;
      }
    }
  }

 private:
  std::size_t size_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

// p_i * C(c_i) for an unnormalized vector with p_i = ||c~_i||^2.
double weighted_pure_value(std::span<const Complex> v, RoofObjective objective, int k) {
  double cross = 0.0;  // sum_{m<n} |c~_m|^2 |c~_n|^2
  double prefix = 0.0;
  for (const auto& z : v) {
    const double w = std::norm(z);
    cross += w * prefix;
    prefix += w;
  }
  cross = std::max(cross, 0.0);
  if (objective == RoofObjective::Multipartite) {
    // k (p^2 - sum |c~|^4) = 2 k cross
    return std::sqrt(2.0 * static_cast<double>(k) * cross);
  }
  return 2.0 * std::sqrt(cross);
}

class RoofProblem {
 public:
  RoofProblem(const Ensemble& spectral, std::size_t size, RoofObjective objective, int k)
      : unitary_(size), objective_(objective), parties_(k) {
    base_.size = size;
    base_.dim = static_cast<std::size_t>(spectral.components().front().state.local_dim());
    base_.rows.assign(size * base_.dim, Complex{});
    std::size_t j = 0;
    for (const auto& comp : spectral.components()) {
      const double scale = std::sqrt(comp.weight);
      for (std::size_t m = 0; m < base_.dim; ++m)
        base_.rows[j * base_.dim + m] = scale * comp.state.amplitude(m);
      ++j;
    }
  }

  std::size_t parameter_count() const { return unitary_.parameter_count(); }

  Decomposition decomposition(std::span<const double> params) const {
    Decomposition d = base_;
    unitary_.apply(params, d);
    return d;
  }

  double value(std::span<const double> params) const {
    const Decomposition d = decomposition(params);
    double total = 0.0;
    for (std::size_t i = 0; i < d.size; ++i) total += weighted_pure_value(d.row(i), objective_, parties_);
    return total;
  }

 private:
  Decomposition base_;
  GivensUnitary unitary_;
  RoofObjective objective_;
  int parties_;
};

struct DescentRun {
  double value;
  std::vector<double> params;
  std::vector<RoofTracePoint> trace;
  bool converged;
};

DescentRun coordinate_descent(const RoofProblem& problem, std::vector<double> params,
                              const RoofOptions& options) {
  const std::size_t n = params.size();
  std::vector<double> step(n, 0.5);
  double best = problem.value(params);
  DescentRun run{best, {}, {{0, best}}, n == 0};
  std::vector<double> history{best};

  for (int iter = 1; iter <= options.max_iter && n > 0; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      const double origin = params[i];
      bool moved = false;
      for (double dir : {1.0, -1.0}) {
        params[i] = origin + dir * step[i];
        const double trial = problem.value(params);
        if (trial < best) {
          best = trial;
          moved = true;
          break;
        }
      }
      if (moved) {
        step[i] = std::min(step[i] * 2.0, std::numbers::pi);
      } else {
        params[i] = origin;
        step[i] *= 0.5;
      }
    }
    if (best < run.trace.back().value) run.trace.push_back({iter, best});
    history.push_back(best);

    const bool stalled = iter >= options.stall_window &&
                         history[static_cast<std::size_t>(iter - options.stall_window)] - best <
                             options.stall_tol;
    const bool tiny_steps = *std::max_element(step.begin(), step.end()) < 1e-14;
    if (stalled || tiny_steps) {
      run.converged = true;
      break;
    }
  }
  run.value = best;
  run.params = std::move(params);
  return run;
}

}  // namespace

double negativity(const SCState& state) {
  const auto N = static_cast<std::size_t>(state.local_dim());
  double sum = 0.0;
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = m + 1; n < N; ++n) sum += std::abs(state.coeff(m, n));
  return sum;
}

double concurrence_pure_bipartite(const PureSCState& psi) {
  return std::sqrt(std::max(2.0 * (1.0 - sum_fourth_powers(psi.amplitudes())), 0.0));
}

double concurrence_pure_multipartite(const PureSCState& psi) {
  const double k = static_cast<double>(psi.parties());
  return std::sqrt(std::max(k * (1.0 - sum_fourth_powers(psi.amplitudes())), 0.0));
}

RoofResult roof_optimizer(const SCState& state, const RoofOptions& options) {
  const Ensemble spectral = spectral_ensemble(state);
  const std::size_t rank = spectral.size();
  GaussianSource rng(options.seed);

  RoofResult result;
  result.value = std::numeric_limits<double>::infinity();
  bool have_best = false;
  Decomposition best_decomposition;

  for (std::size_t size = rank; size <= 2 * rank; ++size) {
    const RoofProblem problem(spectral, size, options.objective, state.parties());
    const int runs = std::max(options.restarts, 1);
    for (int restart = 0; restart < runs; ++restart) {
      std::vector<double> start(problem.parameter_count(), 0.0);
      if (restart > 0)
        for (auto& x : start) x = 2.0 * std::numbers::pi * rng.uniform();
      DescentRun run = coordinate_descent(problem, std::move(start), options);
      // Ties keep the earlier run so results are independent of float noise in later runs.
      if (!have_best || run.value < result.value) {
        have_best = true;
        result.value = run.value;
        result.trace = std::move(run.trace);
        result.converged = run.converged;
        result.ensemble_size = size;
        best_decomposition = problem.decomposition(run.params);
      }
      if (problem.parameter_count() == 0) break;
    }
  }

  std::vector<EnsembleComponent> components;
  for (std::size_t i = 0; i < best_decomposition.size; ++i) {
    const auto row = best_decomposition.row(i);
    double weight = 0.0;
    for (const auto& z : row) weight += std::norm(z);
    if (weight <= 0.0) continue;
    std::vector<Complex> amps(row.begin(), row.end());
    for (auto& z : amps) z /= std::sqrt(weight);
    components.push_back({weight, PureSCState::create(state.parties(), std::move(amps), {1e-8, 1e-8, 1e-8})});
  }
  result.ensemble = Ensemble(std::move(components));
  result.reconstruction_error = result.ensemble.reconstruction_error(state.coeffs());
  if (result.reconstruction_error > 1e-9) {
    throw Error(ErrorKind::EigenFailure, "roof decomposition does not reproduce the state",
                result.reconstruction_error);
  }
  return result;
}

std::string_view to_string(ConcurrenceMethod method) {
  switch (method) {
    case ConcurrenceMethod::PureClosedForm: return "PureClosedForm";
    case ConcurrenceMethod::QubitClosedForm: return "QubitClosedForm";
    case ConcurrenceMethod::BoundsOnly: return "BoundsOnly";
    case ConcurrenceMethod::RoofOptimizer: return "RoofOptimizer";
  }
  return "BoundsOnly";
}

double concurrence_lower_bound(const SCState& state) {
  const double N = state.local_dim();
  return 2.0 * std::numbers::sqrt2 / std::sqrt(N * (N - 1.0)) * negativity(state);
}

double concurrence_upper_bound(int N) {
  return std::sqrt(2.0 * (1.0 - 1.0 / static_cast<double>(N)));
}

ConcurrenceReport concurrence(const SCState& state, const ConcurrenceOptions& options) {
  ConcurrenceReport report;
  report.lower = concurrence_lower_bound(state);
  report.upper = concurrence_upper_bound(state.local_dim());
  report.method = ConcurrenceMethod::BoundsOnly;

  if (options.use_roof) {
    RoofResult roof = roof_optimizer(state, options.roof);
    report.upper = std::min(report.upper, roof.value);
    report.roof_trace = std::move(roof.trace);
    report.roof_converged = roof.converged;
    report.method = ConcurrenceMethod::RoofOptimizer;
  }

  const Ensemble spectral = spectral_ensemble(state);
  if (spectral.size() == 1) {
    report.exact = concurrence_pure_bipartite(spectral.components().front().state);
    report.method = ConcurrenceMethod::PureClosedForm;
  } else if (state.local_dim() == 2) {
    report.exact = 2.0 * std::abs(state.coeff(0, 1));
    report.method = ConcurrenceMethod::QubitClosedForm;
  } else if (is_fully_separable(state, options.separable_tol)) {
    report.exact = 0.0;
  }
  if (report.exact) {
    report.upper = std::min(report.upper, *report.exact);
  }
  return report;
}

OptimalSeparable optimal_separable(const SCState& state) { return {state.coeffs().diagonal()}; }

double relative_entropy(const SCState& state, LogBase base) {
  std::vector<double> spectrum;
  try {
    spectrum = state.coeffs().eigenvalues();
  } catch (const Error& e) {
    throw Error(ErrorKind::EigenFailure, e.what());
  }
  double value = 0.0;
  for (double ev : spectrum)
    if (ev > kLogClamp) value += ev * log_in_base(ev, base);
  for (double d : state.coeffs().diagonal())
    if (d > kLogClamp) value -= d * log_in_base(d, base);
  return std::max(value, 0.0);
}

}  // namespace sc
