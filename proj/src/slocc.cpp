#include "sc/slocc.hpp"

#include <cmath>
#include <string>

#include "sc/error.hpp"

namespace sc {

std::string_view to_string(SloccKind kind) {
  return kind == SloccKind::FullySeparable ? "FullySeparable" : "GhzClass";
}

SloccClass classify_pure(const PureSCState& psi, double tol) {
  int t = 0;
  for (const auto& c : psi.amplitudes())
    if (std::abs(c) > tol) ++t;
  return t <= 1 ? SloccClass{SloccKind::FullySeparable, 1} : SloccClass{SloccKind::GhzClass, t};
}

FilterOperator build_filter(const PureSCState& psi, double tol) {
  const SloccClass cls = classify_pure(psi, tol);
  if (cls.kind != SloccKind::GhzClass) {
    throw Error(ErrorKind::NotEntangled, "a fully separable state has no GHZ filter");
  }
  const double root_t = std::sqrt(static_cast<double>(cls.t));
  const double inv_k = 1.0 / static_cast<double>(psi.parties());
  FilterOperator f;
  f.diagonal.reserve(psi.amplitudes().size());
  for (const auto& c : psi.amplitudes()) {
    if (std::abs(c) > tol) {
      f.diagonal.push_back(std::exp(-inv_k * std::log(root_t * c)));
    } else {
      f.diagonal.emplace_back(0.0, 0.0);
    }
  }
  return f;
}

PureSCState apply_filter(const FilterOperator& f, const PureSCState& psi) {
  if (f.diagonal.size() != psi.amplitudes().size()) {
    throw Error(ErrorKind::DimMismatch, "filter has " + std::to_string(f.diagonal.size()) +
                                            " entries for local dimension " +
                                            std::to_string(psi.local_dim()));
  }
  const int k = psi.parties();
  std::vector<Complex> out(f.diagonal.size());
  double norm2 = 0.0;
  for (std::size_t m = 0; m < out.size(); ++m) {
    Complex fk = 1.0;
    for (int i = 0; i < k; ++i) fk *= f.diagonal[m];
    out[m] = fk * psi.amplitude(m);
    norm2 += std::norm(out[m]);
  }
  if (norm2 == 0.0) throw Error(ErrorKind::ZeroOutput, "filter annihilates the state");
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : out) c *= scale;
  return PureSCState::create(k, std::move(out));
}

}  // namespace sc
