#pragma once

// B-trees (trees with buds), non-crossing perfect matchings, tree-rooted maps
// encoded as quadrant excursions over {E, W, N, S}, and cubic maps with a
// Hamiltonian cycle.

#include "sieve/trees.hpp"

#include <compare>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sieve {

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A corner-rooted b-tree: '(' and ')' walk along tree edges, '*' is a bud.
class BTreeWord {
 public:
  BTreeWord() = default;
  explicit BTreeWord(std::string word);

  static bool is_valid_word(const std::string& word);

  const std::string& word() const { return word_; }
  int tree_edges() const;
  int buds() const;
  int corners() const { return static_cast<int>(word_.size()); }

  friend bool operator==(const BTreeWord&, const BTreeWord&) = default;
  friend std::strong_ordering operator<=>(const BTreeWord& a, const BTreeWord& b) { return a.word_ <=> b.word_; }

 private:
  std::string word_;
};

/// Degree of every node counting buds; root is node 0.
DegreeDistribution btree_degrees(const BTreeWord& t);

/// Perfect non-crossing matching of 2j points 0..2j-1.
class NonCrossingMatching {
 public:
  NonCrossingMatching() = default;
  /// Throws std::invalid_argument unless partner is a non-crossing involution
  /// without fixed points.
  explicit NonCrossingMatching(std::vector<int> partner);
  static NonCrossingMatching from_pairs(int points, const std::vector<std::pair<int, int>>& pairs);
  /// '(' at the smaller end of each pair.
  static NonCrossingMatching from_word(const std::string& dyck);

  const std::vector<int>& partner() const { return partner_; }
  int points() const { return static_cast<int>(partner_.size()); }
  /// Pairs (a, b) with a < b, sorted.
  std::vector<std::pair<int, int>> pairs() const;
  std::string word() const;

  friend bool operator==(const NonCrossingMatching&, const NonCrossingMatching&) = default;
  friend auto operator<=>(const NonCrossingMatching&, const NonCrossingMatching&) = default;

 private:
  std::vector<int> partner_;
};

/// A walk in the quarter plane from the origin back to it, one letter per
/// step: E/W change the first coordinate, N/S the second.
class TreeRootedMap {
 public:
  TreeRootedMap() = default;
  explicit TreeRootedMap(std::string word);

  static bool is_excursion(const std::string& word);
  /// Letters are valid and no prefix leaves the quadrant.
  static bool is_quadrant_prefix(const std::string& word);

  const std::string& word() const { return word_; }
  int tree_edges() const;   ///< i, the number of E steps
  int extra_edges() const;  ///< j, the number of N steps
  int edges() const { return static_cast<int>(word_.size() / 2); }

  friend bool operator==(const TreeRootedMap&, const TreeRootedMap&) = default;
  friend std::strong_ordering operator<=>(const TreeRootedMap& a, const TreeRootedMap& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::string word_;
};

struct CubicHamiltonianMap {
  int n = 0;  ///< the cycle has 2n vertices
  std::vector<std::pair<int, int>> inner;
  std::vector<std::pair<int, int>> outer;
  int root = 0;
  friend bool operator==(const CubicHamiltonianMap&, const CubicHamiltonianMap&) = default;
};

namespace mapfam {
struct TMij { int i, j; };
struct TMn { int n; };
struct TMd { int j; DegreeDistribution degrees; };
struct BT { int b, n; };
struct BTd { int b; DegreeDistribution degrees; };
struct NCM { int j; };
}  // namespace mapfam

using MapFamily = std::variant<mapfam::TMij, mapfam::TMn, mapfam::TMd, mapfam::BT, mapfam::BTd, mapfam::NCM>;

std::string map_family_name(const MapFamily& f);
std::string map_family_label(const MapFamily& f);
bool map_family_feasible(const MapFamily& f);
/// 2(i+j) for the map families, 2n+b for b-trees, 2j for matchings.
long map_group_order(const MapFamily& f);
/// Total edge count used for size guards: i+j, n + b/2, or j.
int map_family_size(const MapFamily& f);

std::vector<NonCrossingMatching> enumerate_ncm(int j);
std::vector<BTreeWord> enumerate_btrees(int b, int n);
std::vector<BTreeWord> enumerate_btrees(int b, const DegreeDistribution& degrees);
/// Every member of the family as its canonical word: walk words for the map
/// families, b-tree words, or matching Dyck words.
std::vector<std::string> enumerate_map_words(const MapFamily& f);

BigInt closed_count_maps(const MapFamily& f);

TreeRootedMap compose(const BTreeWord& t, const NonCrossingMatching& m);
std::pair<BTreeWord, NonCrossingMatching> decompose(const TreeRootedMap& w);

/// w = a w1 a' w2 becomes w1 a w2 a' per step; negative steps invert.
TreeRootedMap rotate_map(const TreeRootedMap& w, long steps = 1);
BTreeWord rotate_btree(const BTreeWord& t, long steps = 1);
/// Replaces point i by i + steps (mod 2j).
NonCrossingMatching rotate_ncm(const NonCrossingMatching& m, long steps = 1);
/// The family's rotation applied to one of its canonical words.
std::string rotate_map_word(const MapFamily& f, const std::string& word, long steps);

BigInt fix_count_maps(const MapFamily& f, long e, int jobs = 1);
BigInt fix_count_maps_closed(const MapFamily& f, long e);

CubicHamiltonianMap to_cubic(const TreeRootedMap& w);
/// Throws std::invalid_argument on a malformed cubic map.
TreeRootedMap from_cubic(const CubicHamiltonianMap& c);
CubicHamiltonianMap advance_root(const CubicHamiltonianMap& c, long steps = 1);

}  // namespace sieve
