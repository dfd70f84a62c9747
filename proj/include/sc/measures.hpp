#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sc/oracle.hpp"
#include "sc/state.hpp"

namespace sc {

// (1/2) sum_{m != n} |a_mn|
double negativity(const SCState& state);

// sqrt(2 (1 - sum_m |c_m|^4))
double concurrence_pure_bipartite(const PureSCState& psi);

// sqrt(k (1 - sum_m |c_m|^4)); every single-party reduction is diag(|c_m|^2).
double concurrence_pure_multipartite(const PureSCState& psi);

enum class RoofObjective { Bipartite, Multipartite };

struct RoofOptions {
  int restarts = 16;
  int max_iter = 2000;
  std::uint64_t seed = 0;
  RoofObjective objective = RoofObjective::Bipartite;
  double stall_tol = 1e-10;
  int stall_window = 50;
};

struct RoofTracePoint {
  int iteration;
  double value;
};

struct RoofResult {
  double value = 0.0;
  std::vector<RoofTracePoint> trace;  // improvements of the winning run
  bool converged = false;
  std::size_t ensemble_size = 0;
  double reconstruction_error = 0.0;
  Ensemble ensemble;
};

// Upper bound on the convex-roof concurrence. Decompositions are generated as
// c~_i = sum_j U_ij sqrt(lambda_j) v_j from the spectral decomposition, with U
// the first `rank` columns of an M x M unitary (M = rank..2 rank) built from
// Givens rotations; the angles are tuned by adaptive coordinate descent.
RoofResult roof_optimizer(const SCState& state, const RoofOptions& options = {});

enum class ConcurrenceMethod { PureClosedForm, QubitClosedForm, BoundsOnly, RoofOptimizer };

std::string_view to_string(ConcurrenceMethod method);

struct ConcurrenceOptions {
  bool use_roof = false;
  RoofOptions roof;
  double separable_tol = 1e-12;
};

struct ConcurrenceReport {
  double lower = 0.0;
  double upper = 0.0;
  std::optional<double> exact;
  ConcurrenceMethod method = ConcurrenceMethod::BoundsOnly;
  std::optional<std::vector<RoofTracePoint>> roof_trace;
  bool roof_converged = false;
};

// 2 sqrt(2) / sqrt(N (N - 1)) * negativity
double concurrence_lower_bound(const SCState& state);
// sqrt(2 (1 - 1/N))
double concurrence_upper_bound(int N);

ConcurrenceReport concurrence(const SCState& state, const ConcurrenceOptions& options = {});

// sigma* = sum_m a_mm |m...m><m...m|
struct OptimalSeparable {
  std::vector<double> diag;
};

OptimalSeparable optimal_separable(const SCState& state);

// S(rho || sigma*) = sum_i lambda_i log lambda_i - sum_m a_mm log a_mm.
double relative_entropy(const SCState& state, LogBase base = LogBase::Two);

}  // namespace sc
