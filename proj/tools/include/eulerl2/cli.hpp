#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerl2/families.hpp"

namespace eulerl2::cli {

enum class Command { Generate, Verify, Transform, Sweep, Maximize, Glue };
enum class OutputFormat { Csv, Json };
enum class TransformOp { Swap, Inversion, Boost, Dilate, ReflectX, ReflectY };

struct CircleSelector {
  CircleKind kind = CircleKind::HyperbolicCircle;
  Vec2L center;
  double radius = 1.0;
  CircleBranch branch = CircleBranch::Plus;
};

struct RunConfig {
  Command command = Command::Verify;
  std::optional<FamilyClass> family;
  std::optional<CircleSelector> circle;
  double alpha = 2.0;
  std::optional<double> c;
  std::optional<Interval> domain;
  int samples = 200;
  double tolerance = 1e-8;
  // Empty means standard output. Relative paths are resolved against
  // $EULERL2_OUTPUT_DIR when it is set.
  std::string output_path;
  // Defaults to CSV for generate/sweep/glue and JSON otherwise.
  std::optional<OutputFormat> format;
  std::uint64_t seed = 1;
  TransformOp op = TransformOp::Swap;
  std::optional<double> param;
  std::vector<double> alphas;
  int competitors = 100;
  Vec2L p1{1.0, 0.0};
  Vec2L p2{2.0, 0.0};
};

// Thrown for malformed or inconsistent configurations (exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "a:b" and "x,y".
Interval parse_interval(const std::string& text);
Vec2L parse_point(const std::string& text);

// Throws ConfigError when the invariants of RunConfig are violated.
void validate(const RunConfig& config);

// Executes one command. Output is assembled in memory and written only on
// success, so a failing run never leaves a partial file. Returns 0 on
// success, 1 on a failed verification or numeric error, 2 on a config error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerl2::cli
