#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sc/error.hpp"
#include "sc/measures.hpp"
#include "sc/oracle.hpp"
#include "sc/separability.hpp"
#include "sc/slocc.hpp"
#include "sc/state.hpp"

namespace sc::cli {

enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kValidation = 2,
  kOracleMismatch = 3,
  kSizeGuard = 4,
};

int exit_code_for(ErrorKind kind);

struct AnalyzeOptions {
  int split = 1;
  LogBase log_base = LogBase::Two;
  bool oracle = false;
  bool roof = false;
  double tol = 1e-9;
  std::uint64_t guard = kDefaultSizeGuard;
  RoofOptions roof_options;
};

struct AnalysisReport {
  int k = 0;
  int N = 0;
  bool separable = false;
  PTSpectrum pt;
  double realignment_norm = 0.0;
  double negativity = 0.0;
  ConcurrenceReport concurrence;
  double relative_entropy = 0.0;
  LogBase log_base = LogBase::Two;
  std::optional<SloccClass> slocc;
  std::size_t witness_pairs = 0;
  double witness_expectation = 0.0;
  std::optional<int> bloch_split;
  std::optional<bool> bloch_separable;
  bool oracle_checked = false;
  double oracle_max_residual = 0.0;
  std::map<std::string, double> oracle_checks;

  nlohmann::json to_json() const;
};

AnalysisReport analyze(const SCState& state, const AnalyzeOptions& options);

std::optional<LogBase> parse_log_base(const std::string& text);
std::string log_base_name(LogBase base);

// Named worked states: ghz32, example41, psi-onethird.
SCState named_example(const std::string& which);

int cmd_analyze(const std::filesystem::path& input, const AnalyzeOptions& options,
                const std::optional<std::filesystem::path>& output, std::ostream& out,
                std::ostream& err);
int cmd_ghz(int k, int N, const std::optional<std::filesystem::path>& output, std::ostream& out,
            std::ostream& err);
int cmd_random(int k, int N, std::uint64_t seed, int count, const std::filesystem::path& output_dir,
               std::ostream& out, std::ostream& err);
int cmd_oracle_verify(int k, int N, int samples, std::uint64_t seed, double tol,
                      std::uint64_t guard, std::ostream& out, std::ostream& err);
int cmd_examples(const std::string& which, const std::optional<std::filesystem::path>& output,
                 std::ostream& out, std::ostream& err);

// Size guard from SC_SIZE_GUARD, falling back to the default.
std::uint64_t size_guard_from_env();

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace sc::cli
