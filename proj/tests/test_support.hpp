#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "hpgame/models.hpp"

namespace testsupport {

/// The bundled case-study parameter set (fixed-cost column).
inline hpgame::GameParams reference_params(double p_h) {
  return {200.0, 100.0, 10.0, 100.0, 300.0, 50.0, 30.0, p_h};
}

/// A random parameter draw satisfying the standing assumptions
/// (c_t > c_p, c_n < c_h < c_a, everything positive).
inline hpgame::GameParams random_valid_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  hpgame::GameParams g{};
  g.c_p = 1.0 + 99.0 * u(rng);
  g.c_t = g.c_p + 1.0 + 199.0 * u(rng);
  g.b_s = 1.0 + 499.0 * u(rng);
  g.b_d = 1.0 + 499.0 * u(rng);
  g.c_n = 1.0 + 99.0 * u(rng);
  g.c_h = g.c_n + 1.0 + 99.0 * u(rng);
  g.c_a = g.c_h + 1.0 + 299.0 * u(rng);
  g.p_h = u(rng);
  return g;
}

/// Random prior bounded away from the equilibrium-switch threshold.
inline double random_ph_off_threshold(std::mt19937_64& rng, double threshold,
                                      double margin = 1e-6) {
  std::uniform_real_distribution<double> u(0.001, 0.999);
  double p = u(rng);
  while (std::abs(p - threshold) < margin) p = u(rng);
  return p;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Per-process scratch directory for generated configs and outputs.
inline std::string temp_dir() {
  static std::string dir = [] {
    std::string tmpl = (std::filesystem::temp_directory_path() / "hpgame_tests_XXXXXX").string();
    char* made = mkdtemp(tmpl.data());
    return std::string(made ? made : "/tmp");
  }();
  return dir;
}

inline std::string write_temp_file(const std::string& name, const std::string& content) {
  const std::string path = temp_dir() + "/" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

struct ProcResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

/// Runs a shell command, capturing stdout/stderr and the exit status.
inline ProcResult run_process(const std::string& cmd) {
  static int counter = 0;
  const std::string out_path = temp_dir() + "/proc_out_" + std::to_string(counter);
  const std::string err_path = temp_dir() + "/proc_err_" + std::to_string(counter);
  ++counter;
  const std::string full = cmd + " > " + out_path + " 2> " + err_path;
  const int rc = std::system(full.c_str());
  ProcResult r;
  if (rc != -1 && WIFEXITED(rc)) r.exit_code = WEXITSTATUS(rc);
  r.out = read_file(out_path);
  r.err = read_file(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return r;
}

/// Scenario file text for the case-study parameters.
inline std::string scenario_text(const std::string& game, bool dynamic, double cost_value,
                                 const std::string& extra_lines = "") {
  std::ostringstream os;
  os << "game = " << game << "\n"
     << "b_s = 200\nc_t = 100\nc_p = 10\nb_d = 100\nc_a = 300\nc_n = 30\n";
  if (dynamic)
    os << "cost_mode = dynamic\nk = " << cost_value << "\n";
  else
    os << "cost_mode = fixed\nc_h = " << cost_value << "\n";
  os << extra_lines;
  return os.str();
}

}  // namespace testsupport
