#pragma once

#include <string_view>
#include <vector>

#include "sc/state.hpp"

namespace sc {

enum class SloccKind { FullySeparable, GhzClass };

std::string_view to_string(SloccKind kind);

struct SloccClass {
  SloccKind kind;
  int t;  // support size; 1 for FullySeparable
};

SloccClass classify_pure(const PureSCState& psi, double tol = 1e-12);

// Diagonal local filter F; F^{(x)k} maps a pure SC state to GHZ(k, t) on its
// support up to a global phase.
struct FilterOperator {
  std::vector<Complex> diagonal;  // zero outside the support
};

// f_m = (sqrt(t) c_m)^{-1/k} on the principal branch for |c_m| > tol.
FilterOperator build_filter(const PureSCState& psi, double tol = 1e-12);

// c'_m = f_m^k c_m, renormalized.
PureSCState apply_filter(const FilterOperator& f, const PureSCState& psi);

}  // namespace sc
