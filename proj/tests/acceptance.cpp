// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sc/measures.hpp"
#include "sc/oracle.hpp"
#include "sc/separability.hpp"
#include "sc/slocc.hpp"
#include "sc/state.hpp"
#include "sc/verify.hpp"

using namespace sc;

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kOracleTol = 1e-9;
constexpr double kEntropyTol = 1e-8;
constexpr double kWitnessTol = 1e-9;
constexpr double kSeparableTol = 1e-12;
constexpr double kSloccTol = 1e-10;
constexpr double kRoofBelow = 1e-9;
constexpr double kRoofAbove = 1e-4;
constexpr double kReconTol = 1e-10;

constexpr double kExampleSeconds = 1.0;
constexpr double kOracleSeconds = 60.0;
constexpr double kRoofSeconds = 300.0;

const std::vector<std::pair<int, int>> kConfigs{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the worst observation of each quantity and any hard failures.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void close(double got, double want, double tol, const std::string& what) {
    const double diff = std::abs(got - want);
    worst_ = std::max(worst_, diff);
    expect(diff <= tol, what + ": got " + fmt(got) + ", want " + fmt(want));
  }
  bool ok() const { return failed_ == 0; }
  double worst() const { return worst_; }
  std::string failures() const {
    std::string out;
    for (const auto& f : failures_) out += "\n    " + f;
    if (failed_ > static_cast<int>(failures_.size())) out += "\n    ...";
    return out;
  }
  static std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
  }

 private:
  std::vector<std::string> failures_;
  int failed_ = 0;
  double worst_ = 0.0;
};

struct Outcome {
  bool pass;
  std::string detail;
};

std::string config_name(int k, int N) { return "(k=" + std::to_string(k) + ",N=" + std::to_string(N) + ")"; }

double pair_sum(const SCState& s) {
  double sum = 0.0;
  for (std::size_t m = 0; m < static_cast<std::size_t>(s.local_dim()); ++m)
    for (std::size_t n = m + 1; n < static_cast<std::size_t>(s.local_dim()); ++n) sum += std::abs(s.coeff(m, n));
  return sum;
}

Outcome criterion1() {
  Tally t;
  double slowest = 0.0;
  auto timed = [&](const std::string& name, const std::function<void()>& body) {
    const auto start = Clock::now();
    body();
    const double elapsed = seconds_since(start);
    slowest = std::max(slowest, elapsed);
    t.expect(elapsed < kExampleSeconds, name + " took " + Tally::fmt(elapsed) + " s");
  };

  timed("negativity of GHZ(2,N)", [&] {
    for (int N = 2; N <= 6; ++N)
      t.close(negativity(pure_to_mixed(ghz(2, N))), (N - 1) / 2.0, kExactTol, "negativity GHZ(2," + std::to_string(N) + ")");
  });
  timed("three-qubit negativities", [&] {
    DenseMatrix a(2, 2);
    a(0, 0) = 2.0 / 3.0;
    a(0, 1) = a(1, 0) = a(1, 1) = 1.0 / 3.0;
    t.close(negativity(new_sc_state(3, 2, a)), 1.0 / 3.0, kExactTol, "negativity of the mixture");
    t.close(negativity(pure_to_mixed(ghz(3, 2))), 0.5, kExactTol, "negativity GHZ(3,2)");
  });
  timed("one-third state concurrence", [&] {
    const PureSCState psi = PureSCState::create(2, {std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0)});
    const SCState rho = pure_to_mixed(psi);
    const double c = concurrence_pure_bipartite(psi);
    t.close(c, 2.0 * std::sqrt(2.0) / 3.0, kExactTol, "C(psi)");
    t.close(c, 2.0 * negativity(rho), kExactTol, "C(psi) vs 2 negativity");
    t.close(c, realignment_norm(rho) - 1.0, kExactTol, "C(psi) vs realignment norm - 1");
  });
  timed("GHZ concurrences", [&] {
    for (int k = 2; k <= 4; ++k)
      for (int N = 2; N <= 4; ++N) {
        const PureSCState g = ghz(k, N);
        t.close(concurrence_pure_bipartite(g), std::sqrt(2.0 * (1.0 - 1.0 / N)), kExactTol, "C GHZ" + config_name(k, N));
        t.close(concurrence_pure_multipartite(g), std::sqrt(k * (1.0 - 1.0 / N)), kExactTol,
                "multipartite C GHZ" + config_name(k, N));
      }
  });
  timed("GHZ relative entropy", [&] {
    for (int N = 2; N <= 4; ++N) {
      const double k2 = relative_entropy(pure_to_mixed(ghz(2, N)));
      for (int k = 2; k <= 4; ++k) {
        const double e = relative_entropy(pure_to_mixed(ghz(k, N)), LogBase::Two);
        t.close(e, std::log2(static_cast<double>(N)), kExactTol, "E GHZ" + config_name(k, N));
        t.close(e, k2, kExactTol, "E GHZ" + config_name(k, N) + " vs k=2");
      }
    }
  });
  timed("realignment norms", [&] {
    for (int k = 2; k <= 4; ++k)
      for (int N = 2; N <= 4; ++N) {
        t.close(realignment_norm(pure_to_mixed(ghz(k, N))), N, kExactTol, "||R|| GHZ" + config_name(k, N));
        std::vector<double> diag(static_cast<std::size_t>(N));
        for (int m = 0; m < N; ++m) diag[static_cast<std::size_t>(m)] = (m + 1.0) / (N * (N + 1) / 2.0);
        t.close(realignment_norm(new_sc_state(k, N, DenseMatrix::diagonal(diag))), 1.0, kExactTol,
                "||R|| diagonal" + config_name(k, N));
      }
  });
  return {t.ok(), "worst error " + Tally::fmt(t.worst()) + ", slowest group " + Tally::fmt(slowest) + " s" + t.failures()};
}

Outcome criterion2() {
  Tally t;
  const auto start = Clock::now();
  int states = 0;
  double entropy_worst = 0.0;
  for (auto [k, N] : kConfigs) {
    const auto dims = uniform_dims(k, N);
    const auto subsets = PartySubset::all_proper(k);
    const auto da = static_cast<std::size_t>(N);
    const auto db = static_cast<std::size_t>(std::pow(N, k - 1));
    for (int i = 0; i < 50; ++i) {
      const SCState s = random_sc_state(k, N, 20000 + 100 * static_cast<std::uint64_t>(k * 10 + N) + static_cast<std::uint64_t>(i));
      const DenseMatrix rho = dense_from_sc(s);
      const std::string tag = config_name(k, N) + " #" + std::to_string(i);
      ++states;

      const auto closed = pt_spectrum(s).sorted_values();
      for (const auto& subset : subsets) {
        const auto dense = hermitian_eigenvalues(partial_transpose(rho, subset, dims));
        t.expect(dense.size() == closed.size(), "PT spectrum size " + tag);
        for (std::size_t j = 0; j < std::min(dense.size(), closed.size()); ++j)
          t.close(closed[j], dense[j], kOracleTol, "PT spectrum " + tag);
      }

      t.close(realignment_norm(s), trace_norm(realign(rho, da, db)), kOracleTol, "realignment " + tag);
      const double pt_norm = trace_norm(partial_transpose(rho, PartySubset({1}, k), dims));
      t.close(negativity(s), (pt_norm - 1.0) / 2.0, kOracleTol, "negativity " + tag);

      const double dense_re =
          relative_entropy_dense(rho, dense_diagonal_sc(optimal_separable(s).diag, k), LogBase::Two);
      const double re_diff = std::abs(relative_entropy(s, LogBase::Two) - dense_re);
      entropy_worst = std::max(entropy_worst, re_diff);
      t.expect(re_diff <= kEntropyTol, "relative entropy " + tag + " off by " + Tally::fmt(re_diff));

      const auto full = hermitian_eigenvalues(rho);
      const auto small = s.coeffs().eigenvalues();
      const std::size_t offset = full.size() - small.size();
      for (std::size_t j = 0; j < offset; ++j) t.close(full[j], 0.0, kOracleTol, "dense zero eigenvalue " + tag);
      for (std::size_t j = 0; j < small.size(); ++j) t.close(full[offset + j], small[j], kOracleTol, "spectrum " + tag);
    }
  }
  const double elapsed = seconds_since(start);
  t.expect(elapsed < kOracleSeconds, "runtime " + Tally::fmt(elapsed) + " s");
  return {t.ok(), std::to_string(states) + " states, worst residual " + Tally::fmt(t.worst()) +
                      ", worst relative-entropy gap " + Tally::fmt(entropy_worst) + ", " + Tally::fmt(elapsed) + " s" +
                      t.failures()};
}

Outcome criterion3() {
  Tally t;
  GaussianSource rng(31337);
  double worst_separable = 1.0;
  int samples = 0;
  for (auto [k, N] : kConfigs) {
    for (int i = 0; i < 20; ++i) {
      const SCState s = random_sc_state(k, N, 30000 + 100 * static_cast<std::uint64_t>(k * 10 + N) + static_cast<std::uint64_t>(i));
      const std::string tag = config_name(k, N) + " #" + std::to_string(i);
      t.expect(!is_fully_separable(s, kSeparableTol), "random state separable " + tag);
      const Witness w = build_witness(s);
      const double closed = w.source_expectation();
      t.close(closed, -pair_sum(s), kWitnessTol, "closed-form Tr[W rho] " + tag);
      t.close(witness_expectation(w, dense_from_sc(s)), closed, kWitnessTol, "dense Tr[W rho] " + tag);
      for (int j = 0; j < 500; ++j) {
        const DenseMatrix sigma = j % 2 == 0 ? random_product_state(k, N, rng) : random_separable_state(k, N, 4, rng);
        const double value = witness_expectation(w, sigma);
        worst_separable = std::min(worst_separable, value);
        t.expect(value >= -kWitnessTol, "Tr[W sigma] = " + Tally::fmt(value) + " " + tag);
        ++samples;
      }
    }
  }
  return {t.ok(), "worst source residual " + Tally::fmt(t.worst()) + ", min Tr[W sigma] over " +
                      std::to_string(samples) + " separable samples " + Tally::fmt(worst_separable) + t.failures()};
}

Outcome criterion4() {
  Tally t;
  GaussianSource rng(4242);
  int states = 0, separable = 0;
  for (auto [k, N] : kConfigs) {
    std::vector<SCState> pool;
    for (int i = 0; i < 100; ++i)
      pool.push_back(random_sc_state(k, N, 40000 + 1000 * static_cast<std::uint64_t>(k * 10 + N) + static_cast<std::uint64_t>(i)));
    for (int i = 0; i < 20; ++i) {
      std::vector<double> diag(static_cast<std::size_t>(N));
      for (auto& d : diag) d = rng.uniform();
      // every fifth state has an empty level
      if (i % 5 == 0) diag.front() = 0.0;
      double total = 0.0;
      for (double d : diag) total += d;
      for (auto& d : diag) d /= total;
      pool.push_back(new_sc_state(k, N, DenseMatrix::diagonal(diag)));
    }
    const std::vector<int> splits = k / 2 == 1 ? std::vector<int>{1} : std::vector<int>{1, k / 2};
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const SCState& s = pool[i];
      const std::string tag = config_name(k, N) + " #" + std::to_string(i);
      const bool prop1 = is_fully_separable(s, kSeparableTol);
      const bool realign_test = std::abs(realignment_norm(s) - 1.0) <= N * N * kSeparableTol;
      const bool ppt = pt_spectrum(s).min_eigenvalue() >= -kSeparableTol;
      t.expect(prop1 == realign_test, "realignment verdict " + tag);
      t.expect(prop1 == ppt, "PT nonnegativity verdict " + tag);
      for (int l : splits) t.expect(prop1 == check_corollary2(bloch_decomposition(s, l)), "Bloch l=" + std::to_string(l) + " " + tag);
      t.expect(prop1 == (i >= 100), "expected verdict " + tag);
      separable += prop1 ? 1 : 0;
      ++states;
    }
  }
  return {t.ok(), std::to_string(states) + " states, " + std::to_string(separable) + " separable, all four tests agree" +
                      t.failures()};
}

Outcome criterion5() {
  Tally t;
  GaussianSource rng(5150);
  int states = 0;
  for (auto [k, N] : kConfigs) {
    for (int i = 0; i < 50; ++i) {
      const int support = 2 + static_cast<int>(rng.uniform() * (N - 1));
      const PureSCState psi =
          random_pure_sc_state(k, N, support, 50000 + 100 * static_cast<std::uint64_t>(k * 10 + N) + static_cast<std::uint64_t>(i));
      const std::string tag = config_name(k, N) + " t=" + std::to_string(support) + " #" + std::to_string(i);
      const PureSCState out = apply_filter(build_filter(psi), psi);
      Complex phase{};
      for (std::size_t m = 0; m < out.amplitudes().size(); ++m) {
        const Complex c = out.amplitude(m);
        if (std::abs(psi.amplitude(m)) <= 1e-12) {
          t.close(std::abs(c), 0.0, kSloccTol, "off-support amplitude " + tag);
          continue;
        }
        t.close(std::abs(c), 1.0 / std::sqrt(static_cast<double>(support)), kSloccTol, "modulus " + tag);
        if (phase == Complex{}) {
          phase = c / std::abs(c);
        } else {
          t.close(std::abs(c / std::abs(c) - phase), 0.0, kSloccTol, "phase " + tag);
        }
      }
      ++states;
    }
  }
  return {t.ok(), std::to_string(states) + " pure states, worst deviation " + Tally::fmt(t.worst()) + t.failures()};
}

Outcome criterion6() {
  Tally t;
  const auto start = Clock::now();
  double worst_above = 0.0, worst_below = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int k = 2 + i % 2;
    const SCState s = random_sc_state(k, 2, 60000 + static_cast<std::uint64_t>(i));
    RoofOptions options;
    options.seed = static_cast<std::uint64_t>(i);
    const RoofResult r = roof_optimizer(s, options);
    const double exact = 2.0 * std::abs(s.coeff(0, 1));
    const double diff = r.value - exact;
    worst_above = std::max(worst_above, diff);
    worst_below = std::min(worst_below, diff);
    t.expect(diff >= -kRoofBelow && diff <= kRoofAbove,
             "qubit state #" + std::to_string(i) + ": optimizer - 2|a01| = " + Tally::fmt(diff));
  }
  int n3 = 0;
  for (int i = 0; i < 10; ++i) {
    const int k = 2 + i % 2;
    const SCState s = random_sc_state(k, 3, 61000 + static_cast<std::uint64_t>(i));
    RoofOptions options;
    options.seed = static_cast<std::uint64_t>(i);
    const RoofResult r = roof_optimizer(s, options);
    const double lower = concurrence_lower_bound(s);
    t.expect(lower <= r.value + kRoofBelow, "N=3 #" + std::to_string(i) + " below the lower bound");
    t.expect(r.value <= std::sqrt(2.0 * (1.0 - 1.0 / 3.0)) + kRoofBelow, "N=3 #" + std::to_string(i) + " above sqrt(4/3)");
    ++n3;
  }
  const double elapsed = seconds_since(start);
  t.expect(elapsed < kRoofSeconds, "runtime " + Tally::fmt(elapsed) + " s");
  return {t.ok(), "50 qubit states, optimizer - 2|a01| in [" + Tally::fmt(worst_below) + ", " + Tally::fmt(worst_above) +
                      "]; " + std::to_string(n3) + " N=3 states within bounds; " + Tally::fmt(elapsed) + " s" + t.failures()};
}

Outcome criterion7() {
  Tally t;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto [k, N] = kConfigs[static_cast<std::size_t>(i) % kConfigs.size()];
    const SCState s = random_sc_state(k, N, 70000 + static_cast<std::uint64_t>(i));
    const double err = spectral_ensemble(s).reconstruction_error(s.coeffs());
    worst = std::max(worst, err);
    t.expect(err <= kReconTol, "spectral " + config_name(k, N) + " #" + std::to_string(i) + " error " + Tally::fmt(err));
  }
  for (int i = 0; i < 100; ++i) {
    const SCState s = random_sc_state(2 + i % 3, 2, 71000 + static_cast<std::uint64_t>(i));
    const Ensemble e = equal_modulus_ensemble(s);
    const double err = e.reconstruction_error(s.coeffs());
    worst = std::max(worst, err);
    t.expect(err <= kReconTol, "equal-modulus #" + std::to_string(i) + " error " + Tally::fmt(err));
  }
  return {t.ok(), "200 ensembles, worst reconstruction error " + Tally::fmt(worst) + t.failures()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"closed-form example values", criterion1},
      {"oracle equivalence", criterion2},
      {"witness", criterion3},
      {"separability agreement", criterion4},
      {"SLOCC filter", criterion5},
      {"roof optimizer", criterion6},
      {"ensemble reconstruction", criterion7},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu (%s): %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                outcome.detail.c_str());
    std::fflush(stdout);
    failed += outcome.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
