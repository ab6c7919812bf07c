#pragma once

// Golden CLI transcripts. Each case runs with the fixture directory as the
// working directory; its stdout must match tests/golden/<name>.txt byte for
// byte. Set SALG_UPDATE_GOLDEN=1 to rewrite the files.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "salg/cli.hpp"

namespace salg::test {

struct CliCase {
  std::string name;
  std::vector<std::string> args;
  int exit_code;
};

inline const std::vector<CliCase>& cli_cases() {
  static const std::vector<CliCase> cases{
      {"info_complex", {"info", "--algebra", "builtin:complex"}, 0},
      {"info_octonions", {"info", "--algebra", "builtin:octonions"}, 0},
      {"info_file", {"info", "--algebra", "complex.alg"}, 0},
      {"mul_complex", {"mul", "--algebra", "builtin:complex", "1,1", "1,-1"}, 0},
      {"mul_quaternions", {"mul", "--algebra", "builtin:quaternions", "0,1,0,0", "0,0,1/2,0"}, 0},
      {"check_octonions", {"check", "--algebra", "builtin:octonions"}, 0},
      {"check_mat2", {"check", "--algebra", "builtin:mat2", "--seed", "7", "--samples", "20"}, 0},
      {"center_quaternions", {"center", "--algebra", "builtin:quaternions"}, 0},
      {"nucleus_octonions", {"nucleus", "--algebra", "builtin:octonions"}, 0},
      {"bmatrix_complex", {"bmatrix", "--algebra", "builtin:complex"}, 0},
      {"bmatrix_dual_right", {"bmatrix", "--algebra", "builtin:dual", "--convention", "right"}, 0},
      {"to_tensor_conj", {"to-tensor", "--algebra", "builtin:complex", "conj.map"}, 0},
      {"to_tensor_delta", {"to-tensor", "--algebra", "builtin:complex", "delta2.map"}, 0},
      {"to_tensor_left_i", {"to-tensor", "--algebra", "builtin:quaternions", "left_i.map"}, 0},
      {"from_tensor_ij", {"from-tensor", "--algebra", "builtin:quaternions", "ij.tensor"}, 0},
      {"gens_quaternions", {"gens", "--algebra", "builtin:quaternions"}, 0},
      {"gens_complex", {"gens", "--algebra", "builtin:complex"}, 0},
      {"gens_dual", {"gens", "--algebra", "builtin:dual"}, 0},
      {"orbit_eq_yes", {"orbit-eq", "--algebra", "builtin:complex", "delta2.map", "rot.map"}, 0},
      {"orbit_eq_no", {"orbit-eq", "--algebra", "builtin:complex", "delta2.map", "conj.map"}, 1},
      {"poly_eval", {"poly-eval", "--algebra", "builtin:complex", "mult_complex.poly", "0,1", "0,1"}, 0},
      {"poly_check_skew", {"poly-check", "--algebra", "builtin:quaternions", "comm_quat.poly", "--kind", "skew"}, 0},
      {"poly_check_sym", {"poly-check", "--algebra", "builtin:quaternions", "comm_quat.poly", "--kind", "symmetric"}, 1},
      {"change_basis", {"change-basis", "--algebra", "builtin:complex", "diag12.map"}, 0},
  };
  return cases;
}

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

/// Runs the CLI in-process from `dir`, restoring the working directory after.
inline CliResult run_cli_in(const std::filesystem::path& dir, const std::vector<std::string>& args) {
  const auto saved = std::filesystem::current_path();
  std::filesystem::current_path(dir);
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  std::filesystem::current_path(saved);
  return {code, out.str(), err.str()};
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline bool update_golden() {
  const char* v = std::getenv("SALG_UPDATE_GOLDEN");
  return v && std::string(v) == "1";
}

}  // namespace salg::test
