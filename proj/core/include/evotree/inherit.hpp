#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "evotree/dataset.hpp"
#include "evotree/evolve.hpp"
#include "evotree/tree.hpp"

namespace evotree {

struct ReevalPlan {
  OperatorOutcome outcome;
  std::vector<std::int32_t> gathered;  // instance set entering the stale position
};

/// Instance ids that enter the stale position, recovered from cached leaf
/// data. The operator never touches the path above the stale node, so the
/// previous occupant's leaves hold exactly the entering set.
std::vector<std::int32_t> gathered_for(const DecisionTree& tree, const OperatorOutcome& outcome);

ReevalPlan plan_reevaluation(const DecisionTree& tree, const OperatorOutcome& outcome);

/// Incremental re-evaluation after one operator application.
///   LeafChange      — recount the leaf's stored ids against the new class.
///   NodeChange/NodePrune/Crossover — clear the stale subtree's leaves and
///                     re-route the entering set from the stale node down.
///   RootRootCrossover — nothing to do; the carried evaluation is exact.
/// Ancestor leaf data is never touched. Returns the new payoff, computed
/// from a fresh root aggregate at the supplied x.
double reevaluate(Individual& offspring, const OperatorOutcome& outcome,
                  const Dataset& dataset, double x, AccuracyUnit unit,
                  EvalCounters& counters);

/// (checks, reclassified) a from-root evaluate_full of this tree would
/// cost, computed from leaf depths without routing anything. Requires a
/// tree holding a complete evaluation.
std::pair<std::uint64_t, std::uint64_t> full_equivalent_cost(const DecisionTree& tree,
                                                             const Dataset& dataset);

struct SavingsReport {
  std::uint64_t reclassified_actual = 0;
  std::uint64_t reclassified_full_equiv = 0;
  std::uint64_t checks_actual = 0;
  std::uint64_t checks_full_equiv = 0;
  double instance_savings = 0.0;  // 1 - actual/full, 0 when both are 0
  double check_savings = 0.0;
};

/// Throws std::logic_error when actual exceeds full-equivalent: that can
/// only come from a counter bug.
SavingsReport savings(const EvalCounters& actual, const EvalCounters& full_equiv);

/// Clones the tree, evaluates the clone from scratch and compares every
/// leaf's instance multiset and correct counter plus the payoff for exact
/// equality. A false return is the failure signal.
bool verify_lossless(const Individual& offspring, const Dataset& dataset,
                     double x, AccuracyUnit unit);

}  // namespace evotree
