#include "doctest.h"
#include "sieve/combinatorics.hpp"
#include "sieve/trees.hpp"

#include <set>

using namespace sieve;

namespace {

// Oracle: all balanced words of length 2n by brute force over bit strings.
std::vector<std::string> all_words(int n) {
  std::vector<std::string> out;
  for (unsigned long mask = 0; mask < (1UL << (2 * n)); ++mask) {
    std::string w;
    for (int i = 2 * n - 1; i >= 0; --i) w += (mask >> i) & 1 ? ')' : '(';
    if (PlaneTree::is_valid_word(w)) out.push_back(w);
  }
  return out;
}

// Oracle: leaf count from an explicit parent array.
int leaves_by_parents(const std::string& w) {
  std::vector<int> parent{-1}, stack{0};
  for (char c : w) {
    if (c == '(') {
      parent.push_back(stack.back());
      stack.push_back(static_cast<int>(parent.size()) - 1);
    } else {
      stack.pop_back();
    }
  }
  std::vector<int> deg(parent.size(), 0);
  for (std::size_t v = 1; v < parent.size(); ++v) {
    ++deg[v];
    ++deg[parent[v]];
  }
  int leaves = 0;
  for (int d : deg) leaves += d == 1;
  return leaves;
}

DegreeDistribution dd(std::vector<long> c) { return DegreeDistribution(std::move(c)); }

}  // namespace

TEST_CASE("word validation") {
  CHECK(PlaneTree::is_valid_word(""));
  CHECK(PlaneTree::is_valid_word("(()())"));
  CHECK_FALSE(PlaneTree::is_valid_word(")("));
  CHECK_FALSE(PlaneTree::is_valid_word("(()"));
  CHECK_THROWS_AS(PlaneTree("(x)"), std::invalid_argument);
}

TEST_CASE("enumerate examples") {
  CHECK(enumerate(family::AllTrees{3}).size() == 5);
  CHECK(enumerate(family::AllTrees{4}).size() == 14);
  CHECK(enumerate(family::ByLeaves{3, 2}).size() == 3);
  CHECK(enumerate(family::ByLeaves{3, 3}).size() == 2);
  CHECK(enumerate(family::ByLeaves{3, 7}).empty());
  CHECK(enumerate(family::AllTrees{0}).size() == 1);
}

TEST_CASE("enumeration is lexicographic and matches the bit-string oracle") {
  for (int n = 0; n <= 7; ++n) {
    std::vector<std::string> got;
    for (const auto& t : enumerate(family::AllTrees{n})) got.push_back(t.word());
    CHECK(got == all_words(n));
  }
}

TEST_CASE("closed_count examples") {
  CHECK(closed_count(family::LeafRooted{4, 3}) == 3);
  CHECK(closed_count(family::ByDegrees{dd({2, 2})}) == 3);
  CHECK(closed_count(family::ByDegrees{dd({3, 0, 1})}) == 2);
  CHECK(closed_count(family::InternalRooted{3, 2}) == 2);
  CHECK(closed_count(family::ByLeaves{1, 2}) == 1);
  CHECK(formula_degenerate(family::ByLeaves{1, 2}));
}

TEST_CASE("enumeration counts equal closed counts") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(BigInt(static_cast<unsigned long>(enumerate(family::AllTrees{n}).size())) ==
          closed_count(family::AllTrees{n}));
    BigInt leaf_sum = 0;
    for (int k = 0; k <= n + 1; ++k) {
      for (TreeFamily f : {TreeFamily{family::ByLeaves{n, k}}, TreeFamily{family::LeafRooted{n, k}},
                           TreeFamily{family::InternalRooted{n, k}}}) {
        CHECK_MESSAGE(BigInt(static_cast<unsigned long>(enumerate(f).size())) == closed_count(f), family_label(f));
      }
      leaf_sum += closed_count(family::ByLeaves{n, k});
    }
    CHECK(leaf_sum == catalan(n));
  }
}

TEST_CASE("degree families: counts and the double rooting identity") {
  for (int n = 1; n <= 9; ++n) {
    BigInt total = 0;
    for (const auto& d : degree_distributions(n + 1, 2 * n)) {
      CHECK(d.satisfies_tree_condition());
      std::vector<TreeFamily> fams{family::ByDegrees{d}, family::LeafRootedDeg{d}, family::InternalRootedDeg{d}};
      for (int delta = 1; delta <= d.max_degree(); ++delta) fams.push_back(family::RootDegree{d, delta});
      for (const auto& f : fams) {
        CHECK_MESSAGE(BigInt(static_cast<unsigned long>(enumerate(f).size())) == closed_count(f), family_label(f));
      }
      total += closed_count(family::ByDegrees{d});
    }
    CHECK(total == catalan(n));
  }
  for (int n = 2; n <= 9; ++n) {
    for (int k = 2; k <= n; ++k) {
      CHECK(k * enumerate(family::InternalRooted{n, k}).size() ==
            (2 * n - k) * enumerate(family::LeafRooted{n, k}).size());
    }
  }
}

TEST_CASE("stats") {
  auto s = stats(PlaneTree("(())"));
  CHECK(s.edges == 2);
  CHECK(s.leaves == 2);
  CHECK(s.degrees == dd({2, 1}));
  CHECK(s.root_degree == 1);
  s = stats(PlaneTree("()()"));
  CHECK(s.degrees == dd({2, 1}));
  CHECK(s.root_degree == 2);
  s = stats(PlaneTree(""));
  CHECK(s.edges == 0);
  CHECK(s.nodes == 1);
  CHECK(s.corners == 0);
  for (const auto& t : enumerate(family::AllTrees{7})) CHECK(stats(t).leaves == leaves_by_parents(t.word()));
}

TEST_CASE("center") {
  CHECK(center(PlaneTree("((()))")) == CenterResult{CentralEdge{1}});
  CHECK(center(PlaneTree("(()())")) == CenterResult{CentralVertex{1}});
  CHECK(center(PlaneTree("()")) == CenterResult{CentralEdge{0}});
  CHECK(center(PlaneTree("")) == CenterResult{CentralVertex{0}});
}

TEST_CASE("center is invariant under re-rooting") {
  // Track the center as the set of its tour positions, shifted with the root.
  auto center_edge_ids = [](const PlaneTree& t) {
    const auto ids = tour_edge_ids(t);
    const auto l = layout(t);
    std::set<int> pos;
    const auto c = center(t);
    if (auto e = std::get_if<CentralEdge>(&c)) {
      pos = {e->position, l.partner[e->position]};
    } else {
      const int node = l.corner_node.empty() ? 0 : l.corner_node[std::get<CentralVertex>(c).corner];
      for (int p = 0; p < t.corners(); ++p) {
        if (l.corner_node[p] == node) pos.insert(p);
      }
    }
    return pos;
  };
  for (int n = 1; n <= 7; ++n) {
    for (const auto& t : enumerate(family::AllTrees{n})) {
      const auto before = center_edge_ids(t);
      const auto after = center_edge_ids(reroot(t, 1));
      std::set<int> shifted;
      for (int p : before) shifted.insert((p - 1 + 2 * n) % (2 * n));
      CHECK(std::holds_alternative<CentralEdge>(center(t)) ==
            std::holds_alternative<CentralEdge>(center(reroot(t, 1))));
      CHECK(after == shifted);
    }
  }
}

TEST_CASE("reroot") {
  CHECK(reroot(PlaneTree("(())"), 1).word() == "()()");
  for (int n = 0; n <= 6; ++n) {
    for (const auto& t : enumerate(family::AllTrees{n})) {
      CHECK(reroot(t, 2 * n) == t);
      CHECK(reroot(reroot(t, 3), -3) == t);
    }
  }
}

TEST_CASE("phi examples") {
  auto m = phi_map(PlaneTree("((()))"));
  CHECK(m.tree.word() == "(())");
  CHECK(m.mark == 2);
  CHECK(phi_inverse(m).word() == "((()))");
  auto e = phi_map(PlaneTree("()"));
  CHECK(e.tree.word() == "()");
  CHECK(e.mark == 1);
  CHECK_THROWS_AS(phi_map(PlaneTree("(()())")), StructureError);
  CHECK_THROWS_AS(phi_inverse(MarkedTree{PlaneTree("(())"), 0}), StructureError);
}

TEST_CASE("phi is a bijection onto marked trees") {
  for (int n = 1; n <= 9; n += 2) {
    const int half = (n + 1) / 2;
    std::set<MarkedTree> images;
    int fixed = 0;
    for (const auto& t : enumerate(family::AllTrees{n})) {
      if (reroot(t, n) != t) continue;
      ++fixed;
      CHECK(std::holds_alternative<CentralEdge>(center(t)));
      const MarkedTree m = phi_map(t);
      CHECK(m.tree.edges() == half);
      CHECK(phi_inverse(m) == t);
      images.insert(m);
    }
    CHECK(static_cast<int>(images.size()) == fixed);
    int marked = 0;
    for (const auto& s : enumerate(family::AllTrees{half})) {
      const auto l = layout(s);
      for (int v = 1; v < static_cast<int>(l.degree.size()); ++v) {
        if (l.degree[v] != 1) continue;
        ++marked;
        const MarkedTree m{s, l.first_corner[v]};
        const PlaneTree g = phi_inverse(m);
        CHECK(reroot(g, n) == g);
        CHECK(phi_map(g) == m);
      }
    }
    CHECK(marked == fixed);
  }
}

TEST_CASE("psi examples") {
  auto m = psi_map(PlaneTree("()()"), 2);
  CHECK(m.tree.word() == "()");
  CHECK(m.mark == 0);
  auto s = psi_map(PlaneTree("()()()()"), 4);
  CHECK(s.tree.word() == "()");
  CHECK(psi_inverse(MarkedTree{PlaneTree("()"), 0}, 3).word() == "()()()");
  CHECK_THROWS_AS(psi_map(PlaneTree("((()))"), 2), StructureError);
  CHECK_THROWS_AS(psi_map(PlaneTree("()()()"), 2), StructureError);
  CHECK_THROWS_AS(psi_map(PlaneTree("(())()"), 2), StructureError);
}

TEST_CASE("psi round trips and counts") {
  for (int n = 2; n <= 8; ++n) {
    for (int d = 2; d <= n; ++d) {
      if (n % d) continue;
      std::set<MarkedTree> images;
      int fixed = 0;
      for (const auto& t : enumerate(family::AllTrees{n})) {
        if (reroot(t, 2 * n / d) != t) continue;
        ++fixed;
        const MarkedTree m = psi_map(t, d);
        CHECK(m.tree.edges() == n / d);
        CHECK(psi_inverse(m, d) == t);
        images.insert(m);
      }
      CHECK(static_cast<int>(images.size()) == fixed);
      // Every marked tree with n/d edges comes from a fixed tree.
      int marked = 0;
      for (const auto& s : enumerate(family::AllTrees{n / d})) {
        const auto l = layout(s);
        for (int v = 0; v < static_cast<int>(l.degree.size()); ++v) {
          ++marked;
          const MarkedTree m{s, l.first_corner[v]};
          const PlaneTree g = psi_inverse(m, d);
          CHECK(reroot(g, 2 * n / d) == g);
          CHECK(psi_map(g, d) == m);
        }
      }
      CHECK(marked == fixed);
    }
  }
}

TEST_CASE("degree distributions") {
  auto ds = degree_distributions(4, 6);
  REQUIRE(ds.size() == 2);
  CHECK(ds[0] == dd({2, 2}));
  CHECK(ds[1] == dd({3, 0, 1}));
  CHECK(dd({2, 2, 0}).to_string() == "2,2");
}
