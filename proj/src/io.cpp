#include "sc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sc/error.hpp"

namespace sc {

namespace {

using nlohmann::json;

double finite_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw Error(ErrorKind::Parse, where + " is not a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, where + " is not finite");
  return x;
}

int integer_field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw Error(ErrorKind::Parse, std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

SCState parse_state_json(std::string_view text, const Tolerances& tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  } catch (const json::out_of_range& e) {
    // number literals such as 1e999 overflow double
    throw Error(ErrorKind::NonFinite, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "state file must be a JSON object");
  const int k = integer_field(doc, "k");
  const int N = integer_field(doc, "N");
  if (k < 2 || N < 2) {
    throw Error(ErrorKind::InvalidDims, "need k >= 2 and N >= 2, got k=" + std::to_string(k) +
                                            " N=" + std::to_string(N));
  }
  if (!doc.contains("a") || !doc.at("a").is_array()) throw Error(ErrorKind::Parse, "field \"a\" must be an array");
  const json& rows = doc.at("a");
  const auto n = static_cast<std::size_t>(N);
  if (rows.size() != n) {
    throw Error(ErrorKind::Parse, "\"a\" has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(N));
  }
  DenseMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorKind::Parse, "row " + std::to_string(r) + " of \"a\" must hold " + std::to_string(N) +
                                        " entries (ragged array)");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const json& entry = row[c];
      const std::string where = "a[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      if (!entry.is_array() || entry.size() != 2) throw Error(ErrorKind::Parse, where + " must be a [re, im] pair");
      a(r, c) = Complex(finite_number(entry[0], where + ".re"), finite_number(entry[1], where + ".im"));
    }
  }
  return new_sc_state(k, N, a, tol);
}

SCState read_state_file(const std::filesystem::path& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_state_json(buffer.str(), tol);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what(), e.magnitude());
  }
}

std::string format_state_json(const SCState& state) {
  const auto n = static_cast<std::size_t>(state.local_dim());
  std::string out = "{\n  \"k\": " + std::to_string(state.parties()) + ",\n  \"N\": " +
                    std::to_string(state.local_dim()) + ",\n  \"a\": [\n";
  for (std::size_t r = 0; r < n; ++r) {
    out += "    [";
    for (std::size_t c = 0; c < n; ++c) {
      const Complex z = state.coeff(r, c);
      out += "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
      if (c + 1 < n) out += ", ";
    }
    out += r + 1 < n ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

void write_state_file(const std::filesystem::path& path, const SCState& state) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << format_state_json(state);
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

nlohmann::json witness_to_json(const Witness& w) {
  json terms = json::array();
  for (const auto& term : w.terms()) {
    terms.push_back(json::array({term.row, term.col, json::array({term.value.real(), term.value.imag()})}));
  }
  return json{{"dims", std::vector<int>(static_cast<std::size_t>(w.parties()), w.local_dim())},
              {"terms", std::move(terms)}};
}

}  // namespace sc
