#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evotree/dataset.hpp"
#include "evotree/evolve.hpp"

namespace evotree {

/// Paired-run benchmark: each grid point runs the Full and the Incremental
/// engine with the same seed, proves their payoff trajectories identical,
/// and reports wall times plus counter-based savings.
struct BenchmarkSpec {
  std::string dataset_label = "dataset";
  std::vector<std::int32_t> grid;  // generations = population per point
  double mutation_rate = 0.5;
  double crossover_rate = 1.0;
  double x_start = 1e4;
  double x_end = 1e4;
  std::uint64_t seed = 1;
  std::int32_t repetitions = 1;
  std::int32_t elitism = 1;
  AccuracyUnit accuracy_unit = AccuracyUnit::Count;
};

struct BenchRow {
  std::string dataset;
  std::string config;
  double old_ms = 0.0;
  double new_ms = 0.0;
  double instance_savings_pct = 0.0;
  double check_savings_pct = 0.0;
};

/// Compares two recorded runs: per-generation payoff multisets, final best
/// tree, and the incremental run's full-equivalent tallies against the
/// full run's measured work. Returns an empty string when equivalent,
/// otherwise a diagnostic.
std::string compare_engine_runs(const RunReport& full, const RunReport& incremental);

/// Throws std::runtime_error with a lossless-failure diagnostic if any
/// grid point breaks engine equivalence.
std::vector<BenchRow> run_benchmark(const BenchmarkSpec& spec, const Dataset& dataset);

/// dataset,config,old_ms,new_ms,instance_savings_pct,check_savings_pct
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace evotree
