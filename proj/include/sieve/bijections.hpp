#pragma once

// Catalan correspondences: trees and non-crossing matchings, trees and
// non-crossing partitions (with the Kreweras complement), leaf-rooted trees
// without degree-2 nodes and polygon dissections.

#include "sieve/maps.hpp"
#include "sieve/trees.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace sieve {

/// Partition of points 0..n-1 into non-crossing blocks. Block ids are
/// renumbered by first occurrence so equal partitions compare equal.
class NonCrossingPartition {
 public:
  NonCrossingPartition() = default;
  /// Throws std::invalid_argument if two blocks cross.
  explicit NonCrossingPartition(std::vector<int> block_of);
  static NonCrossingPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int points() const { return static_cast<int>(block_.size()); }
  const std::vector<int>& block_of() const { return block_; }
  /// Blocks as sorted point lists, ordered by smallest element.
  std::vector<std::vector<int>> blocks() const;

  friend bool operator==(const NonCrossingPartition&, const NonCrossingPartition&) = default;
  friend auto operator<=>(const NonCrossingPartition&, const NonCrossingPartition&) = default;

 private:
  std::vector<int> block_;
};

/// k-gon with vertices 0..k-1 and a set of pairwise non-crossing diagonals,
/// stored as sorted pairs (i, j) with i < j.
class Dissection {
 public:
  Dissection() = default;
  /// Throws std::invalid_argument on sides, duplicates or crossings.
  Dissection(int k, std::vector<std::pair<int, int>> diagonals);

  int sides() const { return k_; }
  const std::vector<std::pair<int, int>>& diagonals() const { return diagonals_; }

  friend bool operator==(const Dissection&, const Dissection&) = default;
  friend auto operator<=>(const Dissection&, const Dissection&) = default;

 private:
  int k_ = 0;
  std::vector<std::pair<int, int>> diagonals_;
};

/// Each edge becomes the pair of its two tour positions.
NonCrossingMatching tree_to_ncm(const PlaneTree& t);
PlaneTree ncm_to_tree(const NonCrossingMatching& m);
/// Pairs {a, a+1 mod 2j}.
int short_edges(const NonCrossingMatching& m);

/// Point t is the node at corner 2t; blocks are the nodes at even depth.
NonCrossingPartition tree_to_ncp(const PlaneTree& t);
PlaneTree ncp_to_tree(const NonCrossingPartition& p);
/// Point t' sits between t and t+1; returns the coarsest partition of the
/// primed points that does not cross p, relabelled t' -> t.
NonCrossingPartition kreweras(const NonCrossingPartition& p);
/// Point i becomes point i + steps (mod n).
NonCrossingPartition rotate_ncp(const NonCrossingPartition& p, long steps = 1);

/// Leaf t in tour order (the root leaf is 0) is the side (t, t+1); the edge
/// above a subtree with leaves a..b is the diagonal (a, b+1).
/// Throws StructureError("NotLeafRooted") or ("Degree2NodePresent").
Dissection tree_to_dissection(const PlaneTree& t);
PlaneTree dissection_to_tree(const Dissection& d);
/// Vertex i becomes vertex i + steps (mod k).
Dissection rotate_dissection(const Dissection& d, long steps = 1);

}  // namespace sieve
