#pragma once

// State files: {"k": int, "N": int, "a": [[[re, im], ...], ...]} with the
// N x N coefficient matrix row-major. Emitted files use 17 significant
// digits so emit -> parse -> emit is byte-identical.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sc/separability.hpp"
#include "sc/state.hpp"

namespace sc {

SCState parse_state_json(std::string_view text, const Tolerances& tol = {});
SCState read_state_file(const std::filesystem::path& path, const Tolerances& tol = {});

std::string format_state_json(const SCState& state);
void write_state_file(const std::filesystem::path& path, const SCState& state);

// {"dims": [N, ...], "terms": [[row, col, [re, im]], ...]}
nlohmann::json witness_to_json(const Witness& w);

std::string format_double(double x);

}  // namespace sc
