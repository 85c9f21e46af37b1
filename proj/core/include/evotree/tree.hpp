#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evotree/dataset.hpp"

namespace evotree {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

struct TestPredicate {
  enum class Kind : std::uint8_t { NominalEquals, NumericAtMost };

  std::int32_t attribute = 0;
  Kind kind = Kind::NominalEquals;
  std::int32_t value = 0;  // nominal value index, or integer threshold

  friend bool operator==(const TestPredicate&, const TestPredicate&) = default;
};

/// Arena node. Internal nodes use {test, left, right}; leaves use
/// {label, instance_ids, correct}. A node can flip from internal to leaf
/// in place (prune); the detached children stay in the arena until the
/// tree is copied or dropped.
struct Node {
  bool is_leaf = true;
  NodeId parent = kNoNode;

  TestPredicate test;
  NodeId left = kNoNode;
  NodeId right = kNoNode;

  std::int32_t label = 0;
  std::vector<std::int32_t> instance_ids;
  std::int32_t correct = 0;
};

struct EvalCounters {
  std::uint64_t node_instance_checks = 0;
  std::uint64_t instances_reclassified = 0;

  EvalCounters& operator+=(const EvalCounters& o) {
    node_instance_checks += o.node_instance_checks;
    instances_reclassified += o.instances_reclassified;
    return *this;
  }
  friend EvalCounters operator-(EvalCounters a, const EvalCounters& b) {
    a.node_instance_checks -= b.node_instance_checks;
    a.instances_reclassified -= b.instances_reclassified;
    return a;
  }
  friend bool operator==(const EvalCounters&, const EvalCounters&) = default;
};

struct Aggregate {
  std::int32_t leaves = 0;
  std::int32_t correct = 0;
};

class DecisionTree {
 public:
  NodeId add_leaf(std::int32_t label);
  NodeId add_internal(const TestPredicate& test, NodeId left, NodeId right);

  NodeId root() const { return root_; }
  void set_root(NodeId id);

  Node& node(NodeId id) { return nodes_.at(static_cast<std::size_t>(id)); }
  const Node& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  std::int32_t arena_size() const { return static_cast<std::int32_t>(nodes_.size()); }

  /// Converts an internal node to a leaf, abandoning its subtree in the
  /// arena. The provided ids seed the leaf pending a correct-recount.
  void make_leaf_in_place(NodeId id, std::int32_t label, std::vector<std::int32_t> ids);

  void replace_child(NodeId parent, NodeId old_child, NodeId new_child);

 private:
  std::vector<Node> nodes_;
  NodeId root_ = kNoNode;
};

bool passes(const TestPredicate& test, const Instance& inst);

/// Walks from `start` to a leaf, counting one node-instance-check per node
/// visited (the terminating leaf included). NominalEquals sends matches
/// right, NumericAtMost sends value <= threshold left.
NodeId route_from(const DecisionTree& tree, NodeId start, const Instance& inst, EvalCounters& counters);
NodeId route(const DecisionTree& tree, const Instance& inst, EvalCounters& counters);

/// Clears every live leaf, routes every instance from the root, appends
/// its id to the reached leaf and updates that leaf's correct counter.
void evaluate_full(DecisionTree& tree, const Dataset& dataset, EvalCounters& counters);

/// Leaf count and correct-count total for the subtree, by one traversal.
/// No instances are touched and no checks are counted.
Aggregate aggregate(const DecisionTree& tree, NodeId from);

/// Concatenation of leaf instance lists below `from`, leaves left to
/// right. With a valid evaluation this is exactly the instance set that
/// enters `from`; costs zero checks.
std::vector<std::int32_t> gather_instances(const DecisionTree& tree, NodeId from);

/// Deep structural copy into `destination`, leaf data included. Returns
/// the new subtree root; its parent link is unset.
NodeId copy_subtree(const DecisionTree& source, NodeId from, DecisionTree& destination);

struct CopyResult {
  NodeId root = kNoNode;
  NodeId tracked = kNoNode;
};
/// copy_subtree that also reports where `track` landed in the destination.
CopyResult copy_subtree_tracked(const DecisionTree& source, NodeId from,
                                DecisionTree& destination, NodeId track);

/// Fresh tree holding only the reachable nodes (abandoned arena entries
/// are dropped).
DecisionTree clone_tree(const DecisionTree& tree);

void clear_leaves(DecisionTree& tree, NodeId from);

std::vector<NodeId> live_nodes(const DecisionTree& tree);  // preorder
std::int32_t depth_of(const DecisionTree& tree, NodeId id);
std::int32_t tree_depth(const DecisionTree& tree);
std::uint64_t stored_instance_total(const DecisionTree& tree);

/// Indented text: internal nodes as "name = value?" / "name <= t?", leaves
/// as "class (correct/total)". Left child printed first, two spaces per
/// level.
std::string pretty_print(const DecisionTree& tree, const Dataset& dataset);

struct PrintedTreeSummary {
  std::int32_t internal_nodes = 0;
  std::int32_t leaves = 0;
  std::int32_t depth = 0;
  std::int64_t correct = 0;
  std::int64_t total = 0;
};
/// Parses pretty_print output and checks it forms a binary tree. Throws
/// std::runtime_error on malformed input.
PrintedTreeSummary summarize_printed_tree(const std::string& text);

}  // namespace evotree
