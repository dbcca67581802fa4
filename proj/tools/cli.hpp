#pragma once

#include "padovan/stability.hpp"

#include <cstdint>
#include <ostream>
#include <string>

namespace padovan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitForbidden = 3;

// Everything the argument parser collects. Numeric-looking values that feed
// exact arithmetic stay as raw strings here and are parsed to rationals on
// use, so "0.2" means exactly 1/5 rather than the nearest double.
struct Options {
  std::string command;  // sequence | iterate | compare | stability | forbidden | sweep

  std::string alpha, beta, gamma;  // one parameter form or the other,
  std::string p, q;                // never both
  std::string x_m1, x_0, y_m1, y_0;
  bool system = false;

  int n = 20;          // sequence: highest index rendered
  int steps = -1;      // -1 picks the per-command default
  int horizon = 1000;  // forbidden: scan bound
  std::string backend = "exact";
  std::string format;  // empty picks the per-command default
  int precision = 12;
  bool strict = false;
  bool binet = false;

  std::uint64_t seed = kDefaultSweepSeed;
  int trials = 500;
  double tolerance = 1e-6;
  double lo = 0.05, hi = 20.0;
  int threads = 1;

  std::string out_path;  // empty writes to `out`
};

// Runs one command, writing the report to `out` (or opts.out_path) and
// notes/errors to `err`. Returns the process exit code.
int run(const Options& opts, std::ostream& out, std::ostream& err);

}  // namespace padovan::cli
