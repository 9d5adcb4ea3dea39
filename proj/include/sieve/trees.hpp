#pragma once

// Rooted plane trees as Dyck words read from the root corner, the eight
// tree families, their generators and closed counts, and the structural maps
// (center, edge-cut, central-vertex quotient) used to describe trees fixed by
// powers of the ordinary rotation.

#include "sieve/qseries.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace sieve {

/// A rooted plane tree with n edges, stored as the balanced word of length 2n
/// traced counterclockwise from the root corner: '(' walks away from the
/// root node along an edge for the first time, ')' walks back.
class PlaneTree {
 public:
  PlaneTree() = default;
  /// Throws std::invalid_argument unless the word is balanced.
  explicit PlaneTree(std::string word);

  static bool is_valid_word(const std::string& word);

  const std::string& word() const { return word_; }
  int edges() const { return static_cast<int>(word_.size() / 2); }
  int corners() const { return static_cast<int>(word_.size()); }

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
  friend std::strong_ordering operator<=>(const PlaneTree& a, const PlaneTree& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::string word_;
};

/// Node degree counts; counts()[i-1] is the number of nodes of degree i.
/// Trailing zeros are dropped so equal distributions compare equal.
class DegreeDistribution {
 public:
  DegreeDistribution() = default;
  explicit DegreeDistribution(std::vector<long> counts);

  const std::vector<long>& counts() const { return counts_; }
  long count(int degree) const;
  long nodes() const;
  long degree_sum() const;
  int max_degree() const { return static_cast<int>(counts_.size()); }
  /// sum (i - 2) n_i = -2 - buds; with buds = 0 this is the plain tree condition.
  bool satisfies_tree_condition(long buds = 0) const;
  std::string to_string() const;

  friend bool operator==(const DegreeDistribution&, const DegreeDistribution&) = default;

 private:
  std::vector<long> counts_;
};

/// All degree distributions of trees with the given node count whose degree
/// sum (including buds) is degree_sum, in lexicographic order of counts.
std::vector<DegreeDistribution> degree_distributions(long nodes, long degree_sum);

namespace family {
struct AllTrees { int n; };
struct ByLeaves { int n, k; };
struct LeafRooted { int n, k; };
struct InternalRooted { int n, k; };
struct ByDegrees { DegreeDistribution degrees; };
struct LeafRootedDeg { DegreeDistribution degrees; };
struct InternalRootedDeg { DegreeDistribution degrees; };
struct RootDegree { DegreeDistribution degrees; int delta; };
}  // namespace family

using TreeFamily = std::variant<family::AllTrees, family::ByLeaves, family::LeafRooted,
                                family::InternalRooted, family::ByDegrees, family::LeafRootedDeg,
                                family::InternalRootedDeg, family::RootDegree>;

int family_edges(const TreeFamily& f);
/// Parameters describe a non-empty set (not checked against degree budgets
/// beyond the tree condition).
bool family_feasible(const TreeFamily& f);
bool family_contains(const TreeFamily& f, const PlaneTree& t);
/// Short machine name, e.g. "by_leaves".
std::string family_name(const TreeFamily& f);
std::string family_label(const TreeFamily& f);

struct TreeStats {
  int edges = 0;
  int nodes = 1;
  int leaves = 0;
  int root_degree = 0;
  int corners = 0;
  DegreeDistribution degrees;
};

TreeStats stats(const PlaneTree& t);

/// Per-corner structure derived from the word: node id at each corner
/// (corner p sits just before symbol p), node degrees, and the partner of
/// each symbol.
struct TreeLayout {
  std::vector<int> corner_node;
  std::vector<int> degree;
  std::vector<int> partner;
  /// First corner of each node in tour order.
  std::vector<int> first_corner;
};

TreeLayout layout(const PlaneTree& t);

/// Visits every word of the family in lexicographic order ('(' < ')').
void for_each_tree(const TreeFamily& f, const std::function<void(const PlaneTree&)>& visit);
std::vector<PlaneTree> enumerate(const TreeFamily& f);

/// The closed formula for |family|. For parameters where the formula divides
/// by zero the count comes from enumeration; formula_degenerate() says when.
BigInt closed_count(const TreeFamily& f);
bool formula_degenerate(const TreeFamily& f);

struct CentralVertex {
  int corner;  ///< first corner of the central node
  friend bool operator==(const CentralVertex&, const CentralVertex&) = default;
};
struct CentralEdge {
  int position;  ///< position of the '(' of the central edge
  friend bool operator==(const CentralEdge&, const CentralEdge&) = default;
};
using CenterResult = std::variant<CentralVertex, CentralEdge>;

CenterResult center(const PlaneTree& t);

/// A tree with a marked node, identified by the first corner of that node.
struct MarkedTree {
  PlaneTree tree;
  int mark = 0;
  friend bool operator==(const MarkedTree&, const MarkedTree&) = default;
  friend auto operator<=>(const MarkedTree&, const MarkedTree&) = default;
};

class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cuts the central edge and keeps the root side, ending in a marked leaf.
/// Throws StructureError("NotEdgeCentered") for vertex-centered trees.
MarkedTree phi_map(const PlaneTree& t);
/// Glues two copies at the marked leaf; the first copy's root corner survives.
/// Throws StructureError("MarkedLeafIsRoot") / ("MarkNotLeaf").
PlaneTree phi_inverse(const MarkedTree& m);

/// Keeps the first l/d branches at the central node (the first one holding
/// the root edge) and marks the central node.
MarkedTree psi_map(const PlaneTree& t, int d);
/// Arranges d copies of the branch tuple at the marked node around a new
/// central node.
PlaneTree psi_inverse(const MarkedTree& m, int d);

/// Rebuilds a Dyck word from a closed tour given as the edge id of each step:
/// the first occurrence of an id becomes '(' and the second ')'.
PlaneTree tree_from_tour(const std::vector<int>& edge_ids);

/// Edge id of each step (ids numbered by first occurrence).
std::vector<int> tour_edge_ids(const PlaneTree& t);

/// Moves the root `steps` corners forward along the tour (negative allowed).
PlaneTree reroot(const PlaneTree& t, long steps);

}  // namespace sieve
