#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evotree/dataset.hpp"
#include "evotree/rng.hpp"
#include "evotree/tree.hpp"

namespace evotree {

/// Full re-evaluates every operator output from the root over the whole
/// training set; Incremental re-evaluates only the stale subtree from
/// cached leaf data. Both produce bit-identical payoffs.
enum class Engine { Full, Incremental };

/// Count plugs the raw number of correct instances into the payoff;
/// Fraction plugs correct/n.
enum class AccuracyUnit { Count, Fraction };

struct EvolutionConfig {
  std::int32_t population_size = 50;
  std::int32_t generations = 50;
  double mutation_rate = 0.5;
  double crossover_rate = 1.0;
  double x_start = 1e4;
  double x_end = 1e4;
  std::uint64_t seed = 1;
  Engine engine = Engine::Incremental;
  std::int32_t elitism = 1;
  AccuracyUnit accuracy_unit = AccuracyUnit::Count;

  void validate() const;  // throws std::invalid_argument
};

struct Individual {
  DecisionTree tree;
  double payoff = 0.0;
  EvalCounters counters;  // work spent producing this individual's payoff
};

using Population = std::vector<Individual>;

struct OperatorOutcome {
  enum class Kind { NodeChange, LeafChange, NodePrune, Crossover, RootRootCrossover };

  Kind kind = Kind::NodeChange;
  /// Node whose subtree content changed and needs re-examination.
  NodeId stale = kNoNode;
  /// Crossover only: root of the displaced subtree, still intact in the
  /// offspring arena. Its leaves hold the instance set that enters the
  /// graft position.
  NodeId old_subtree = kNoNode;
};

/// accuracy^2 * x / (size^2 + x)
double payoff_value(double accuracy, std::int32_t size, double x);
double accuracy_value(std::int32_t correct, std::int32_t n, AccuracyUnit unit);
double score_tree(const DecisionTree& tree, const Dataset& dataset, double x, AccuracyUnit unit);

/// Linear interpolation from x_start (generation 0) to x_end (last
/// generation); constant when they coincide or there is one generation.
double x_at(const EvolutionConfig& config, std::int32_t generation);

/// Uniform attribute; nominal tests draw a uniform value, continuous tests
/// a uniform integer threshold in [min..max].
TestPredicate random_predicate(const Dataset& dataset, Rng& rng);

/// population_size trees of one internal node and two random-class
/// leaves, fully evaluated and scored at generation 0.
Population init_population(const EvolutionConfig& config, const Dataset& dataset,
                           Rng& rng, EvalCounters& counters);

/// Picks a node uniformly over the tree. Leaves get their class resampled
/// among the other classes; internal nodes split 50/50 between a test
/// change and a prune to a random-class leaf. Does not re-evaluate.
OperatorOutcome mutate(Individual& individual, const Dataset& dataset, Rng& rng);

struct CrossoverOffspring {
  Individual a;
  Individual b;
  OperatorOutcome outcome_a;
  OperatorOutcome outcome_b;
};

/// One uniform crossover node per parent; offspring are deep copies with
/// the chosen subtrees exchanged. When both nodes are roots the offspring
/// are plain copies of the opposite parents and the payoffs travel with
/// them unchanged.
CrossoverOffspring crossover(const Individual& parent_a, const Individual& parent_b, Rng& rng);

/// Roulette-wheel over payoffs; uniform when every payoff is zero.
std::size_t select_parent(const Population& population, Rng& rng);

struct GenerationStats {
  std::int32_t generation = 0;
  double best_payoff = 0.0;
  double best_accuracy_fraction = 0.0;
  std::int32_t best_size = 0;
  std::uint64_t cum_checks = 0;
  std::uint64_t cum_reclassified = 0;
  double elapsed_ms = 0.0;
  std::uint64_t evaluations = 0;  // operator outputs re-evaluated this step
};

/// Operator re-evaluation work only (the initial population evaluation is
/// excluded): what the run actually paid, and what from-root re-evaluation
/// of the same outputs would have paid.
struct RunTallies {
  EvalCounters actual;
  EvalCounters full_equiv;
  std::uint64_t evaluations = 0;
};

struct StepAccounting {
  RunTallies reeval;
  EvalCounters total;
  std::uint64_t evaluations = 0;
};

/// One generational step: elites carry over untouched, the rest come from
/// roulette selection, crossover with probability crossover_rate, then at
/// most one mutation per offspring with probability mutation_rate. Every
/// operator output is re-evaluated through the configured engine and
/// scored with x_at(generation). All random draws happen in one serial
/// phase whose order does not depend on the engine.
Population step_generation(const Population& population, const Dataset& dataset,
                           const EvolutionConfig& config, std::int32_t generation,
                           Rng& rng, StepAccounting& accounting);

struct RunOptions {
  bool record_payoffs = false;   // keep the sorted payoff vector per generation
  bool check_storage = false;    // assert per-tree stored ids == n each step
};

struct RunReport {
  std::vector<GenerationStats> rows;
  std::string best_tree_text;
  double best_payoff = 0.0;
  double best_accuracy_fraction = 0.0;
  std::int32_t best_size = 0;
  RunTallies reeval;
  EvalCounters total;
  double wall_ms = 0.0;
  std::vector<std::vector<double>> payoff_multisets;  // per generation, sorted
};

RunReport evolve(const EvolutionConfig& config, const Dataset& dataset,
                 const RunOptions& options = {});

/// generation,best_payoff,best_accuracy_fraction,best_size,cum_checks,
/// cum_reclassified,elapsed_ms
std::string report_csv(const RunReport& report);

/// Correct-classification count of `tree` over the given instance ids.
std::int32_t count_correct(const DecisionTree& tree, const Dataset& dataset,
                           const std::vector<std::int32_t>& ids);

}  // namespace evotree
