#include "sieve/bijections.hpp"

#include <algorithm>
#include <map>

namespace sieve {

namespace {

std::vector<int> canonical_blocks(const std::vector<int>& raw) {
  std::map<int, int> ids;
  std::vector<int> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto it = ids.try_emplace(raw[i], static_cast<int>(ids.size())).first;
    out[i] = it->second;
  }
  return out;
}

bool crosses(int a, int b, int c, int d) {
  // chords (a,b) and (c,d) with a<b, c<d
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

}  // namespace

NonCrossingPartition::NonCrossingPartition(std::vector<int> block_of) : block_(canonical_blocks(block_of)) {
  const int n = points();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (block_[a] != block_[c] || block_[a] == block_[b]) continue;
        for (int d = c + 1; d < n; ++d) {
          if (block_[b] == block_[d]) throw std::invalid_argument("partition blocks cross");
        }
      }
    }
  }
}

NonCrossingPartition NonCrossingPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> of(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) {
      if (x < 0 || x >= n || of[x] != -1) throw std::invalid_argument("blocks do not partition the points");
      of[x] = static_cast<int>(b);
    }
  }
  if (std::count(of.begin(), of.end(), -1)) throw std::invalid_argument("blocks do not cover the points");
  return NonCrossingPartition(std::move(of));
}

std::vector<std::vector<int>> NonCrossingPartition::blocks() const {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < points(); ++i) {
    if (block_[i] >= static_cast<int>(out.size())) out.resize(block_[i] + 1);
    out[block_[i]].push_back(i);
  }
  return out;
}

Dissection::Dissection(int k, std::vector<std::pair<int, int>> diagonals) : k_(k), diagonals_(std::move(diagonals)) {
  if (k < 2) throw std::invalid_argument("a dissection needs at least two sides");
  for (auto& [i, j] : diagonals_) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= k || j - i < 2 || (i == 0 && j == k - 1)) {
      throw std::invalid_argument("not a diagonal of the polygon");
    }
  }
  std::sort(diagonals_.begin(), diagonals_.end());
  if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end()) {
    throw std::invalid_argument("repeated diagonal");
  }
  for (std::size_t x = 0; x < diagonals_.size(); ++x) {
    for (std::size_t y = x + 1; y < diagonals_.size(); ++y) {
      if (crosses(diagonals_[x].first, diagonals_[x].second, diagonals_[y].first, diagonals_[y].second)) {
        throw std::invalid_argument("diagonals cross");
      }
    }
  }
}

NonCrossingMatching tree_to_ncm(const PlaneTree& t) { return NonCrossingMatching::from_word(t.word()); }

PlaneTree ncm_to_tree(const NonCrossingMatching& m) { return PlaneTree(m.word()); }

int short_edges(const NonCrossingMatching& m) {
  const int len = m.points();
  int c = 0;
  for (auto [a, b] : m.pairs()) c += (b - a == 1) || (a + len - b == 1);
  return c;
}

NonCrossingPartition tree_to_ncp(const PlaneTree& t) {
  if (t.edges() == 0) throw std::invalid_argument("partitions need at least one edge");
  const TreeLayout l = layout(t);
  std::vector<int> raw(t.edges());
  for (int p = 0; p < t.edges(); ++p) raw[p] = l.corner_node[2 * p];
  return NonCrossingPartition(std::move(raw));
}

NonCrossingPartition kreweras(const NonCrossingPartition& p) {
  const int n = p.points();
  // sigma sends each point to the next point of its block (cyclically).
  std::vector<int> sigma_inv(n);
  for (const auto& block : p.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) sigma_inv[block[(i + 1) % block.size()]] = block[i];
  }
  std::vector<int> k(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (k[s] != -1) continue;
    for (int x = s; k[x] == -1; x = sigma_inv[(x + 1) % n]) k[x] = next;
    ++next;
  }
  return NonCrossingPartition(std::move(k));
}

NonCrossingPartition rotate_ncp(const NonCrossingPartition& p, long steps) {
  const long n = p.points();
  if (n == 0) return p;
  const long s = ((steps % n) + n) % n;
  std::vector<int> raw(n);
  for (long i = 0; i < n; ++i) raw[(i + s) % n] = p.block_of()[i];
  return NonCrossingPartition(std::move(raw));
}

PlaneTree ncp_to_tree(const NonCrossingPartition& p) {
  const int n = p.points();
  if (n == 0) throw std::invalid_argument("partitions need at least one point");
  const NonCrossingPartition k = kreweras(p);
  std::map<std::pair<int, int>, int> edge_id;
  std::vector<int> tour;
  auto step = [&](int black, int white) {
    auto it = edge_id.try_emplace({black, white}, static_cast<int>(edge_id.size())).first;
    tour.push_back(it->second);
  };
  for (int t = 0; t < n; ++t) {
    step(p.block_of()[t], k.block_of()[t]);
    step(p.block_of()[(t + 1) % n], k.block_of()[t]);
  }
  return tree_from_tour(tour);
}

Dissection tree_to_dissection(const PlaneTree& t) {
  const TreeLayout l = layout(t);
  if (t.edges() == 0 || l.degree[0] != 1) throw StructureError("NotLeafRooted");
  if (std::count(l.degree.begin(), l.degree.end(), 2)) throw StructureError("Degree2NodePresent");
  const int nodes = static_cast<int>(l.degree.size());
  // Leaf index of every leaf in tour order; the root leaf is 0.
  std::vector<int> leaf_index(nodes, -1);
  int k = 1;
  leaf_index[0] = 0;
  for (int v = 1; v < nodes; ++v) {
    if (l.degree[v] == 1) leaf_index[v] = k++;
  }
  if (k == 2) return Dissection(2, {});
  std::vector<std::pair<int, int>> diagonals;
  std::vector<int> first_leaf;  // smallest leaf index under each open node
  std::vector<int> node_stack{0};
  int node_counter = 0;
  int last_leaf = 0;
  for (int p = 0; p < t.corners(); ++p) {
    if (t.word()[p] == '(') {
      const int v = ++node_counter;
      node_stack.push_back(v);
      first_leaf.push_back(leaf_index[v] >= 0 ? leaf_index[v] : -1);
      if (leaf_index[v] >= 0) last_leaf = leaf_index[v];
    } else {
      const int v = node_stack.back();
      node_stack.pop_back();
      const int lo = first_leaf.back();
      first_leaf.pop_back();
      if (!first_leaf.empty() && first_leaf.back() == -1) first_leaf.back() = lo;
      const int parent = node_stack.back();
      if (l.degree[v] != 1 && parent != 0) diagonals.emplace_back(lo, (last_leaf + 1) % k);
    }
  }
  return Dissection(k, std::move(diagonals));
}

PlaneTree dissection_to_tree(const Dissection& d) {
  const int k = d.sides();
  if (k == 2) return PlaneTree("()");
  // Vertex 0 is written as k so every region is an interval u..v.
  std::vector<std::vector<int>> adj(k + 1);
  for (auto [i, j] : d.diagonals()) {
    const int a = i == 0 ? j : i;
    const int b = i == 0 ? k : j;
    adj[a].push_back(b);
  }
  auto children = [&](auto&& self, int u, int v) -> std::string {
    std::string out;
    int x = u;
    while (x != v) {
      int best = x + 1;
      for (int y : adj[x]) {
        if (y <= v && y > best && !(x == u && y == v)) best = y;
      }
      out += best == x + 1 ? "()" : "(" + self(self, x, best) + ")";
      x = best;
    }
    return out;
  };
  return PlaneTree("(" + children(children, 1, k) + ")");
}

Dissection rotate_dissection(const Dissection& d, long steps) {
  const long k = d.sides();
  const long s = ((steps % k) + k) % k;
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : d.diagonals()) out.emplace_back(static_cast<int>((i + s) % k), static_cast<int>((j + s) % k));
  return Dissection(static_cast<int>(k), std::move(out));
}

}  // namespace sieve
