#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zetalab::cli {

enum class Command { spectrum, zeta, verify_selberg, order_zero, predict, genus_infer, bench };

std::string command_name(Command c);

/// Validated invocation. Numeric values stay textual so that they are read
/// at the requested precision; every path is absolute.
struct RunPlan {
  Command command = Command::predict;
  std::map<std::string, std::string> parameters;  // flag name -> value as given

  int precision_bits = 200;
  bool precision_given = false;
  int threads = 0;  // 0: ZETALAB_THREADS, else available parallelism
  int digits = 10;
  bool plot = false;

  std::optional<std::filesystem::path> spectrum_path;
  std::optional<std::filesystem::path> schottky_config;
  std::optional<std::filesystem::path> points_path;
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> cache_dir;

  std::string group = "bolza";
  std::string method = "enumerate";
  std::string kind = "ruelle";
  std::string model = "schottky";
  std::string cutoff;
  std::vector<std::string> s_values;
  std::string center = "0";
  std::string radius = "0.05";
  int mmax = 20;
  std::optional<int> order;
  int samples = 256;
  int genus = 2;
  std::string fried_a = "0.3";
  int vanishing_order = 0;

  /// Set when --help was requested; execute prints it and exits 0.
  std::optional<std::string> help;
};

/// Throws UsageError (exit code 2) on invalid input.
RunPlan parse_args(int argc, const char* const* argv);

/// Runs the plan; module errors propagate as zetalab::Error.
int execute(const RunPlan& plan, std::ostream& out);

/// parse_args + execute with error mapping: 0 ok, 1 computation error, 2 usage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zetalab::cli
