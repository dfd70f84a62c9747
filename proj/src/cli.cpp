#include "sc/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "sc/error.hpp"
#include "sc/io.hpp"
#include "sc/separability.hpp"
#include "sc/verify.hpp"

namespace sc::cli {

using nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDims:
    case ErrorKind::NonFinite:
    case ErrorKind::NotHermitian:
    case ErrorKind::NotUnitTrace:
    case ErrorKind::NotPSD:
    case ErrorKind::NotNormalized:
    case ErrorKind::Parse:
    case ErrorKind::InvalidSplit:
    case ErrorKind::UnknownExample:
      return kValidation;
    case ErrorKind::SizeGuard:
    case ErrorKind::Overflow:
      return kSizeGuard;
    default:
      return kOther;
  }
}

std::optional<LogBase> parse_log_base(const std::string& text) {
  if (text == "2") return LogBase::Two;
  if (text == "e") return LogBase::E;
  if (text == "10") return LogBase::Ten;
  return std::nullopt;
}

std::string log_base_name(LogBase base) {
  switch (base) {
    case LogBase::Two: return "2";
    case LogBase::E: return "e";
    case LogBase::Ten: return "10";
  }
  return "2";
}

json AnalysisReport::to_json() const {
  json j;
  j["k"] = k;
  j["N"] = N;
  j["separable"] = separable;
  j["pt_spectrum"] = {{"diagonal", pt.diagonal},
                      {"pair_magnitudes", pt.pair_magnitudes},
                      {"zero_multiplicity", pt.zero_multiplicity},
                      {"min_eigenvalue", pt.min_eigenvalue()}};
  j["realignment_norm"] = realignment_norm;
  j["negativity"] = negativity;
  j["concurrence_lower"] = concurrence.lower;
  j["concurrence_upper"] = concurrence.upper;
  j["concurrence_exact"] = concurrence.exact ? json(*concurrence.exact) : json(nullptr);
  j["concurrence_method"] = std::string(to_string(concurrence.method));
  if (concurrence.roof_trace) {
    json trace = json::array();
    for (const auto& p : *concurrence.roof_trace) trace.push_back({p.iteration, p.value});
    j["roof_trace"] = std::move(trace);
    j["roof_converged"] = concurrence.roof_converged;
  }
  j["relative_entropy"] = relative_entropy;
  j["log_base"] = log_base_name(log_base);
  if (slocc) j["slocc"] = {{"kind", std::string(to_string(slocc->kind))}, {"t", slocc->t}};
  j["witness"] = {{"pairs", witness_pairs}, {"closed_form_expectation", witness_expectation}};
  if (bloch_split) j["bloch"] = {{"split", *bloch_split}, {"corollary2_separable", *bloch_separable}};
  j["oracle_checked"] = oracle_checked;
  if (oracle_checked) {
    j["oracle_max_residual"] = oracle_max_residual;
    j["oracle_checks"] = oracle_checks;
  }
  return j;
}

AnalysisReport analyze(const SCState& state, const AnalyzeOptions& options) {
  if (options.split < 1 || options.split > state.parties() - 1) {
    throw Error(ErrorKind::InvalidSplit, "--split must lie in 1.." + std::to_string(state.parties() - 1));
  }
  AnalysisReport report;
  report.k = state.parties();
  report.N = state.local_dim();
  report.separable = is_fully_separable(state, options.tol);
  report.pt = pt_spectrum(state);
  report.realignment_norm = realignment_norm(state);
  report.negativity = negativity(state);
  if (std::abs(report.negativity - (report.realignment_norm - 1.0) / 2.0) > 1e-12) {
    throw Error(ErrorKind::EigenFailure, "negativity / realignment identity violated");
  }

  ConcurrenceOptions copts;
  copts.use_roof = options.roof;
  copts.roof = options.roof_options;
  copts.separable_tol = options.tol;
  report.concurrence = concurrence(state, copts);

  report.log_base = options.log_base;
  report.relative_entropy = relative_entropy(state, options.log_base);

  const Ensemble spectral = spectral_ensemble(state);
  if (spectral.size() == 1) report.slocc = classify_pure(spectral.components().front().state);

  const Witness w = build_witness(state);
  report.witness_pairs = w.pairs().size();
  report.witness_expectation = w.source_expectation();

  const auto dim = state.hilbert_dim();
  if (dim && *dim <= options.guard) {
    const BlochDecomposition b = bloch_decomposition(state, options.split, options.guard);
    report.bloch_split = options.split;
    report.bloch_separable = check_corollary2(b, options.tol);
  }

  if (options.oracle) {
    VerifyOptions vopts;
    vopts.guard = options.guard;
    vopts.split = options.split;
    vopts.log_base = options.log_base;
    vopts.separable_tol = options.tol;
    const VerifyReport v = verify_state(state, vopts);
    report.oracle_checked = true;
    report.oracle_max_residual = v.max_residual();
    for (const auto& check : v.checks()) report.oracle_checks[check.name] = check.max_residual;
  }
  return report;
}

namespace {

// All entries exactly 1/N, which (1/sqrt N)^2 is not in floating point.
SCState ghz_state(int k, int N) {
  if (N < 2) throw Error(ErrorKind::InvalidDims, "need N >= 2, got N=" + std::to_string(N));
  const auto n = static_cast<std::size_t>(N);
  DenseMatrix a(n, n, std::vector<Complex>(n * n, Complex(1.0 / N)));
  return new_sc_state(k, N, a);
}

}  // namespace

SCState named_example(const std::string& which) {
  if (which == "ghz32") return ghz_state(3, 2);
  if (which == "example41") {
    // (2/3) GHZ(3,2) + (1/3) |000><000|
    DenseMatrix a(2, 2);
    a(0, 0) = 2.0 / 3.0;
    a(0, 1) = 1.0 / 3.0;
    a(1, 0) = 1.0 / 3.0;
    a(1, 1) = 1.0 / 3.0;
    return new_sc_state(3, 2, a);
  }
  if (which == "psi-onethird") {
    return pure_to_mixed(PureSCState::create(2, {std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0)}));
  }
  throw Error(ErrorKind::UnknownExample, "unknown example \"" + which + "\" (ghz32, example41, psi-onethird)");
}

namespace {

void emit(const std::string& text, const std::optional<std::filesystem::path>& output, std::ostream& out) {
  if (!output) {
    out << text;
    return;
  }
  std::ofstream file(*output);
  if (!file) throw Error(ErrorKind::Io, "cannot write " + output->string());
  file << text;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kOther;
  }
}

}  // namespace

int cmd_analyze(const std::filesystem::path& input, const AnalyzeOptions& options,
                const std::optional<std::filesystem::path>& output, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const SCState state = read_state_file(input);
    const AnalysisReport report = analyze(state, options);
    emit(report.to_json().dump(2) + "\n", output, out);
    if (report.oracle_checked && report.oracle_max_residual > options.tol) {
      err << "oracle residual " << report.oracle_max_residual << " exceeds tolerance " << options.tol << '\n';
      return static_cast<int>(kOracleMismatch);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_ghz(int k, int N, const std::optional<std::filesystem::path>& output, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    emit(format_state_json(ghz_state(k, N)), output, out);
    return static_cast<int>(kOk);
  });
}

int cmd_random(int k, int N, std::uint64_t seed, int count, const std::filesystem::path& output_dir,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create " + output_dir.string() + ": " + ec.message());
    for (int i = 0; i < count; ++i) {
      const std::filesystem::path path =
          output_dir / ("state-" + std::to_string(seed) + "-" + std::to_string(i) + ".json");
      write_state_file(path, random_sc_state(k, N, seed + static_cast<std::uint64_t>(i)));
      out << path.string() << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int cmd_oracle_verify(int k, int N, int samples, std::uint64_t seed, double tol,
                      std::uint64_t guard, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (k < 2 || N < 2) throw Error(ErrorKind::InvalidDims, "need k >= 2 and N >= 2");
    const VerifyReport report = oracle_verify(k, N, samples, seed, guard);
    json checks = json::object();
    for (const auto& check : report.checks()) {
      checks[check.name] = {{"max_residual", check.max_residual}, {"pass", check.max_residual <= tol}};
    }
    const bool pass = report.passed(tol);
    json summary = {{"k", k},        {"N", N},     {"samples", samples}, {"seed", seed},
                    {"tol", tol},    {"checks", checks},
                    {"max_residual", report.max_residual()}, {"pass", pass}};
    out << summary.dump(2) << '\n';
    return static_cast<int>(pass ? kOk : kOracleMismatch);
  });
}

int cmd_examples(const std::string& which, const std::optional<std::filesystem::path>& output,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    emit(format_state_json(named_example(which)), output, out);
    return static_cast<int>(kOk);
  });
}

std::uint64_t size_guard_from_env() {
  const char* raw = std::getenv("SC_SIZE_GUARD");
  if (raw == nullptr || *raw == '\0') return kDefaultSizeGuard;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) return kDefaultSizeGuard;
  return value;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schmidt-correlated state analysis"};
  app.require_subcommand(1);
  const std::uint64_t guard = size_guard_from_env();

  AnalyzeOptions analyze_opts;
  analyze_opts.guard = guard;
  std::string input;
  std::string log_base = "2";
  std::string analyze_output;
  std::uint64_t roof_seed = 0;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a state file");
  analyze_cmd->add_option("input", input, "State JSON file")->required();
  analyze_cmd->add_option("--split", analyze_opts.split, "Bloch split: parties 1..l vs the rest");
  analyze_cmd->add_option("--log-base", log_base, "Logarithm base: 2, e or 10");
  analyze_cmd->add_flag("--oracle", analyze_opts.oracle, "Recompute every closed form densely");
  analyze_cmd->add_flag("--roof", analyze_opts.roof, "Run the convex-roof optimizer");
  analyze_cmd->add_option("--roof-restarts", analyze_opts.roof_options.restarts, "Optimizer restarts");
  analyze_cmd->add_option("--roof-seed", roof_seed, "Optimizer seed");
  analyze_cmd->add_option("--tol", analyze_opts.tol, "Separability and oracle tolerance");
  analyze_cmd->add_option("--output", analyze_output, "Write the report here instead of stdout");

  int ghz_k = 0;
  int ghz_n = 0;
  std::string ghz_output;
  auto* ghz_cmd = app.add_subcommand("ghz", "Emit GHZ(k, N)");
  ghz_cmd->add_option("--k", ghz_k, "Number of parties")->required();
  ghz_cmd->add_option("--N", ghz_n, "Local dimension")->required();
  ghz_cmd->add_option("--output", ghz_output, "Output file");

  int rnd_k = 0;
  int rnd_n = 0;
  std::uint64_t rnd_seed = 0;
  int rnd_count = 1;
  std::string rnd_dir = ".";
  auto* random_cmd = app.add_subcommand("random", "Emit seeded random states");
  random_cmd->add_option("--k", rnd_k, "Number of parties")->required();
  random_cmd->add_option("--N", rnd_n, "Local dimension")->required();
  random_cmd->add_option("--seed", rnd_seed, "Base seed");
  random_cmd->add_option("--count", rnd_count, "Number of states");
  random_cmd->add_option("--output-dir", rnd_dir, "Directory for state files");

  int ov_k = 0;
  int ov_n = 0;
  int ov_samples = 50;
  std::uint64_t ov_seed = 0;
  double ov_tol = 1e-9;
  auto* verify_cmd = app.add_subcommand("oracle-verify", "Cross-check closed forms on random states");
  verify_cmd->add_option("--k", ov_k, "Number of parties")->required();
  verify_cmd->add_option("--N", ov_n, "Local dimension")->required();
  verify_cmd->add_option("--samples", ov_samples, "Random states to check");
  verify_cmd->add_option("--seed", ov_seed, "Base seed");
  verify_cmd->add_option("--tol", ov_tol, "Maximum allowed residual");

  std::string which;
  std::string ex_output;
  auto* examples_cmd = app.add_subcommand("examples", "Emit a named worked state");
  examples_cmd->add_option("--which", which, "ghz32, example41 or psi-onethird")->required();
  examples_cmd->add_option("--output", ex_output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kOther;
  }

  auto optional_path = [](const std::string& s) -> std::optional<std::filesystem::path> {
    if (s.empty()) return std::nullopt;
    return std::filesystem::path(s);
  };

  if (*analyze_cmd) {
    const auto base = parse_log_base(log_base);
    if (!base) {
      err << "error: --log-base must be 2, e or 10\n";
      return kOther;
    }
    analyze_opts.log_base = *base;
    analyze_opts.roof_options.seed = roof_seed;
    return cmd_analyze(input, analyze_opts, optional_path(analyze_output), out, err);
  }
  if (*ghz_cmd) return cmd_ghz(ghz_k, ghz_n, optional_path(ghz_output), out, err);
  if (*random_cmd) return cmd_random(rnd_k, rnd_n, rnd_seed, rnd_count, rnd_dir, out, err);
  if (*verify_cmd) return cmd_oracle_verify(ov_k, ov_n, ov_samples, ov_seed, ov_tol, guard, out, err);
  if (*examples_cmd) return cmd_examples(which, optional_path(ex_output), out, err);
  return kOther;
}

}  // namespace sc::cli
