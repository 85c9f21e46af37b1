#pragma once

#include <string>
#include <vector>

namespace evotree::costmodel {

// Analytic re-evaluation cost model for the two extreme tree shapes. All
// quantities are normalized per instance (the instance count factors out).
// Depth parameter k counts levels 0..k, the root at level 0. "Exact"
// variants are direct summations and are the source of truth; closed forms
// and bounds are checked against them in tests rather than trusted.
//
// Complete tree: every level full, leaves only at level k, instances
// spread evenly over the 2^k leaves.
// Linear tree: one internal node and one leaf per level, two leaves at the
// bottom, n/(k+1) instances per leaf.
// Weighted linear tree: the level-i leaf holds a 2^-i share; the two
// bottom leaves hold 2^-k each, which makes the shares sum to 1.

/// Stale-node cost ratio for the complete tree, averaged over uniform node
/// selection, charging a full root-to-leaf pass per covered instance:
/// (k+1) / (2^(k+1) - 1). k >= 0.
double r_complete(int k);
/// Direct-summation twin of r_complete.
double r_complete_sum(int k);

/// Refined ratio: a stale node at level i only re-routes within its own
/// subtree, so a covered instance costs k-i+1 checks instead of k+1.
/// Computed by direct summation. k >= 0.
double r_complete_refined(int k);
/// Closed form (k+2) / (2 (2^(k+1) - 1)); verified against the sum in tests.
double r_complete_refined_closed(int k);

/// Full-evaluation cost of the linear tree: 1 + k/(k+1) + k/2. k >= 1.
double cost0_linear(int k);
/// Re-evaluation cost of the leaf at level i, charged root-to-leaf:
/// (i+1)/(k+1). 1 <= i <= k.
double cost_leaf_linear(int i, int k);
/// Re-evaluation cost of the internal node at level i: the residual
/// (k-i)-level tree evaluated as if it held the full instance mass, plus
/// the approach cost of reaching level i. 1 <= i <= k.
double cost_node_linear(int i, int k);
/// Refined node cost: the approach term drops because the entering set is
/// already known at the node. Equals cost0_linear(k-i) for i < k, 1 at i=k.
double cost_node_linear_refined(int i, int k);

/// Selection-probability-weighted average of the per-node ratios over all
/// 2k+1 nodes, by direct summation. k >= 1.
double r_linear_exact(int k);

struct LinearEstimate {
  /// Trapezoid estimate: endpoint averages of the leaf and node cost rows.
  double trapezoid = 0.0;
  /// Quoted polynomial reduction of the trapezoid. Expanding the trapezoid
  /// directly gives a +7k coefficient in the cubic where this form has -k;
  /// both are kept and compared in tests.
  double reduced = 0.0;
  /// Relaxed closed bound (3k+1)/(4k+2); tends to 3/4.
  double bound = 0.0;
};
LinearEstimate r_linear_est(int k);

/// r_linear_exact with the refined node cost substituted.
double r_linear_refined_exact(int k);
/// (k+5)/(4k+2); tends to 1/4.
double r_linear_refined_bound(int k);

struct WeightedLinearCosts {
  double cost0_exact = 0.0;  // 3 - 2^(1-k)
  double cost0_bound = 0.0;  // (k+1)/2^k + k + 2
  double r_exact = 0.0;      // direct summation over the weighted shares
  double r_bound = 0.0;      // (k+5)/(2k+1); tends to 1/2
};
WeightedLinearCosts weighted_linear(int k);  // k >= 1

struct SavingsCurveRow {
  int k = 0;
  double complete_refined_saving = 0.0;  // 1 - r_complete_refined(k)
  double linear_refined_saving = 0.0;    // 1 - r_linear_refined_bound(k)
};
/// Saved node-instance-check fraction as a function of depth, for plotting.
std::vector<SavingsCurveRow> savings_curve(int k_min, int k_max);

enum class Variant { Exact, Bound, Refined, All };

/// CSV table for one shape family over k in [k_min, k_max]. Shapes:
/// "complete", "linear", "weighted", "savings".
std::string table_csv(const std::string& shape, int k_min, int k_max, Variant variant);

}  // namespace evotree::costmodel
