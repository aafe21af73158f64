#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pvc/exact.hpp"

namespace pvc::cli {

struct BenchRow {
  std::string instance;
  std::string method;
  int value = 0;
  int bound = 0;
  std::string ratio;  // bound / value, exact
  int opt = -1;       // -1 when the oracle is out of reach
  double time_ms = 0.0;
};

struct BenchConfig {
  std::string suite;
  std::uint64_t seed = 1;
  int instances = 20;
  SolveOptions opts;
};

// Suites: ratios, vcdim, baker, double-hitting.
std::vector<BenchRow> run_bench(const BenchConfig& config);
const std::vector<std::string>& bench_suites();

// CSV with header; time_ms is written only when `timing` is set.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool timing);

}  // namespace pvc::cli
