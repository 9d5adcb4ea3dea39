#include "sieve/trees.hpp"

#include "sieve/combinatorics.hpp"
#include "sieve/overloaded.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sieve {

namespace {

std::vector<int> partners(const std::string& w) {
  std::vector<int> partner(w.size(), -1);
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (w[i] == '(') {
      stack.push_back(i);
    } else {
      partner[i] = stack.back();
      partner[stack.back()] = i;
      stack.pop_back();
    }
  }
  return partner;
}

const DegreeDistribution* family_degrees(const TreeFamily& f) {
  return std::visit(overloaded{
                        [](const family::ByDegrees& x) -> const DegreeDistribution* { return &x.degrees; },
                        [](const family::LeafRootedDeg& x) -> const DegreeDistribution* { return &x.degrees; },
                        [](const family::InternalRootedDeg& x) -> const DegreeDistribution* {
                          return &x.degrees;
                        },
                        [](const family::RootDegree& x) -> const DegreeDistribution* { return &x.degrees; },
                        [](const auto&) -> const DegreeDistribution* { return nullptr; },
                    },
                    f);
}

std::optional<int> family_leaf_count(const TreeFamily& f) {
  return std::visit(overloaded{
                        [](const family::ByLeaves& x) -> std::optional<int> { return x.k; },
                        [](const family::LeafRooted& x) -> std::optional<int> { return x.k; },
                        [](const family::InternalRooted& x) -> std::optional<int> { return x.k; },
                        [](const auto&) -> std::optional<int> { return std::nullopt; },
                    },
                    f);
}

bool degrees_valid(const DegreeDistribution& d) {
  return d.nodes() >= 2 && d.satisfies_tree_condition() &&
         std::all_of(d.counts().begin(), d.counts().end(), [](long c) { return c >= 0; });
}

bool leaf_params_valid(int n, int k) {
  if (n == 1) return k == 2;
  return n >= 2 && k >= 2 && k <= n;
}

}  // namespace

PlaneTree::PlaneTree(std::string word) : word_(std::move(word)) {
  if (!is_valid_word(word_)) throw std::invalid_argument("not a balanced parenthesis word: " + word_);
}

bool PlaneTree::is_valid_word(const std::string& word) {
  long depth = 0;
  for (char c : word) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (--depth < 0) return false;
    } else {
      return false;
    }
  }
  return depth == 0;
}

DegreeDistribution::DegreeDistribution(std::vector<long> counts) : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

long DegreeDistribution::count(int degree) const {
  if (degree < 1 || degree > static_cast<int>(counts_.size())) return 0;
  return counts_[degree - 1];
}

long DegreeDistribution::nodes() const { return std::accumulate(counts_.begin(), counts_.end(), 0L); }

long DegreeDistribution::degree_sum() const {
  long s = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) s += static_cast<long>(i + 1) * counts_[i];
  return s;
}

bool DegreeDistribution::satisfies_tree_condition(long buds) const {
  long s = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) s += (static_cast<long>(i + 1) - 2) * counts_[i];
  return s - buds == -2;
}

std::string DegreeDistribution::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < counts_.size(); ++i) os << (i ? "," : "") << counts_[i];
  return os.str();
}

std::vector<DegreeDistribution> degree_distributions(long nodes, long degree_sum) {
  std::vector<DegreeDistribution> out;
  std::vector<long> current;
  auto rec = [&](auto&& self, long degree, long nodes_left, long sum_left) -> void {
    if (nodes_left == 0) {
      if (sum_left == 0) out.emplace_back(current);
      return;
    }
    if (degree > sum_left) return;
    for (long c = 0; c <= nodes_left && c * degree <= sum_left; ++c) {
      const long rest = nodes_left - c;
      if (rest > 0 && sum_left - c * degree < rest * (degree + 1)) continue;
      current.push_back(c);
      self(self, degree + 1, rest, sum_left - c * degree);
      current.pop_back();
    }
  };
  if (nodes >= 1) rec(rec, 1, nodes, degree_sum);
  return out;
}

int family_edges(const TreeFamily& f) {
  return std::visit(overloaded{
                        [](const family::AllTrees& x) { return x.n; },
                        [](const family::ByLeaves& x) { return x.n; },
                        [](const family::LeafRooted& x) { return x.n; },
                        [](const family::InternalRooted& x) { return x.n; },
                        [](const auto& x) { return static_cast<int>(x.degrees.nodes()) - 1; },
                    },
                    f);
}

bool family_feasible(const TreeFamily& f) {
  return std::visit(overloaded{
                        [](const family::AllTrees& x) { return x.n >= 0; },
                        [](const family::ByLeaves& x) {
                          return (x.n == 0 && x.k == 0) || leaf_params_valid(x.n, x.k);
                        },
                        [](const family::LeafRooted& x) { return leaf_params_valid(x.n, x.k); },
                        [](const family::InternalRooted& x) {
                          return x.n >= 2 && x.k >= 2 && x.k <= x.n;
                        },
                        [](const family::ByDegrees& x) { return degrees_valid(x.degrees); },
                        [](const family::LeafRootedDeg& x) {
                          return degrees_valid(x.degrees) && x.degrees.count(1) > 0;
                        },
                        [](const family::InternalRootedDeg& x) {
                          return degrees_valid(x.degrees) && x.degrees.nodes() > x.degrees.count(1);
                        },
                        [](const family::RootDegree& x) {
                          return degrees_valid(x.degrees) && x.delta >= 1 && x.degrees.count(x.delta) > 0;
                        },
                    },
                    f);
}

std::string family_name(const TreeFamily& f) {
  return std::visit(overloaded{
                        [](const family::AllTrees&) { return std::string("all_trees"); },
                        [](const family::ByLeaves&) { return std::string("by_leaves"); },
                        [](const family::LeafRooted&) { return std::string("leaf_rooted"); },
                        [](const family::InternalRooted&) { return std::string("internal_rooted"); },
                        [](const family::ByDegrees&) { return std::string("by_degrees"); },
                        [](const family::LeafRootedDeg&) { return std::string("leaf_rooted_deg"); },
                        [](const family::InternalRootedDeg&) { return std::string("internal_rooted_deg"); },
                        [](const family::RootDegree&) { return std::string("root_degree"); },
                    },
                    f);
}

std::string family_label(const TreeFamily& f) {
  std::ostringstream os;
  os << family_name(f) << "(";
  std::visit(overloaded{
                 [&](const family::AllTrees& x) { os << "n=" << x.n; },
                 [&](const family::ByLeaves& x) { os << "n=" << x.n << ",k=" << x.k; },
                 [&](const family::LeafRooted& x) { os << "n=" << x.n << ",k=" << x.k; },
                 [&](const family::InternalRooted& x) { os << "n=" << x.n << ",k=" << x.k; },
                 [&](const family::RootDegree& x) {
                   os << "degrees=" << x.degrees.to_string() << ",delta=" << x.delta;
                 },
                 [&](const auto& x) { os << "degrees=" << x.degrees.to_string(); },
             },
             f);
  os << ")";
  return os.str();
}

TreeLayout layout(const PlaneTree& t) {
  const std::string& w = t.word();
  TreeLayout out;
  out.partner = partners(w);
  out.corner_node.resize(w.size());
  out.degree.assign(1, 0);
  out.first_corner.assign(1, 0);
  std::vector<int> stack{0};
  for (int p = 0; p < static_cast<int>(w.size()); ++p) {
    out.corner_node[p] = stack.back();
    if (w[p] == '(') {
      const int child = static_cast<int>(out.degree.size());
      out.degree[stack.back()] += 1;
      out.degree.push_back(1);
      out.first_corner.push_back(p + 1);
      stack.push_back(child);
    } else {
      stack.pop_back();
    }
  }
  return out;
}

TreeStats stats(const PlaneTree& t) {
  TreeLayout l = layout(t);
  TreeStats s;
  s.edges = t.edges();
  s.nodes = static_cast<int>(l.degree.size());
  s.corners = t.corners();
  s.root_degree = l.degree[0];
  std::vector<long> counts;
  for (int d : l.degree) {
    if (d == 1) ++s.leaves;
    if (d >= 1) {
      if (static_cast<int>(counts.size()) < d) counts.resize(d, 0);
      counts[d - 1] += 1;
    }
  }
  s.degrees = DegreeDistribution(std::move(counts));
  return s;
}

bool family_contains(const TreeFamily& f, const PlaneTree& t) {
  if (t.edges() != family_edges(f)) return false;
  const TreeStats s = stats(t);
  return std::visit(overloaded{
                        [&](const family::AllTrees&) { return true; },
                        [&](const family::ByLeaves& x) { return s.leaves == x.k; },
                        [&](const family::LeafRooted& x) { return s.leaves == x.k && s.root_degree == 1; },
                        [&](const family::InternalRooted& x) {
                          return s.leaves == x.k && s.root_degree != 1;
                        },
                        [&](const family::ByDegrees& x) { return s.degrees == x.degrees; },
                        [&](const family::LeafRootedDeg& x) {
                          return s.degrees == x.degrees && s.root_degree == 1;
                        },
                        [&](const family::InternalRootedDeg& x) {
                          return s.degrees == x.degrees && s.root_degree != 1;
                        },
                        [&](const family::RootDegree& x) {
                          return s.degrees == x.degrees && s.root_degree == x.delta;
                        },
                    },
                    f);
}

void for_each_tree(const TreeFamily& f, const std::function<void(const PlaneTree&)>& visit) {
  if (!family_feasible(f)) return;
  const int n = family_edges(f);
  const DegreeDistribution* budget = family_degrees(f);
  const std::optional<int> leaf_cap = family_leaf_count(f);

  std::string word(2 * n, '(');
  std::vector<int> children{0};
  std::vector<long> used(budget ? budget->max_degree() + 1 : 0, 0);
  int leaves = 0;

  // Closing a non-root node fixes its degree (children + 1); prune on the
  // degree budget and on the leaf cap as soon as a node is complete.
  auto rec = [&](auto&& self, int pos, int opened) -> void {
    if (pos == 2 * n) {
      PlaneTree t(word);
      if (family_contains(f, t)) visit(t);
      return;
    }
    const int depth = static_cast<int>(children.size()) - 1;
    if (opened < n) {
      word[pos] = '(';
      children.back() += 1;
      children.push_back(0);
      self(self, pos + 1, opened + 1);
      children.pop_back();
      children.back() -= 1;
    }
    if (depth > 0) {
      const int c = children.back();
      const int degree = c + 1;
      const bool leaf = c == 0;
      if (budget && (degree > budget->max_degree() || used[degree] + 1 > budget->count(degree))) return;
      if (leaf_cap && leaf && leaves + 1 > *leaf_cap) return;
      word[pos] = ')';
      children.pop_back();
      if (budget) used[degree] += 1;
      leaves += leaf;
      self(self, pos + 1, opened);
      leaves -= leaf;
      if (budget) used[degree] -= 1;
      children.push_back(c);
    }
  };
  rec(rec, 0, 0);
}

std::vector<PlaneTree> enumerate(const TreeFamily& f) {
  std::vector<PlaneTree> out;
  for_each_tree(f, [&](const PlaneTree& t) { out.push_back(t); });
  return out;
}

bool formula_degenerate(const TreeFamily& f) {
  return std::visit(overloaded{
                        [](const family::ByLeaves& x) { return x.n <= 1; },
                        [](const family::LeafRooted& x) { return x.n <= 1; },
                        [](const family::InternalRooted& x) { return x.n <= 1; },
                        [](const auto&) { return false; },
                    },
                    f);
}

BigInt closed_count(const TreeFamily& f) {
  if (!family_feasible(f)) return 0;
  if (formula_degenerate(f)) return static_cast<unsigned long>(enumerate(f).size());
  auto fact_ratio = [](long top, const DegreeDistribution& d) {
    // top! / prod n_i!
    BigInt num, den = 1;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(top));
    for (long c : d.counts()) {
      BigInt g;
      mpz_fac_ui(g.get_mpz_t(), static_cast<unsigned long>(c));
      den *= g;
    }
    return Rational(num, den);
  };
  return std::visit(
      overloaded{
          [](const family::AllTrees& x) { return catalan(x.n); },
          [](const family::LeafRooted& x) {
            return exact_integer(Rational(binomial(x.n - 1, x.k - 2) * binomial(x.n - 1, x.k - 1), x.n - 1),
                                 "leaf-rooted count");
          },
          [](const family::InternalRooted& x) {
            return exact_integer(Rational(BigInt(2 * x.n - x.k) * binomial(x.n - 1, x.k - 2) * binomial(x.n, x.k),
                                          BigInt(x.n) * (x.n - 1)),
                                 "internal-rooted count");
          },
          [](const family::ByLeaves& x) {
            return exact_integer(Rational(2 * binomial(x.n - 1, x.k - 2) * binomial(x.n, x.k), x.n - 1),
                                 "leaf count");
          },
          [&](const family::ByDegrees& x) {
            const long n = x.degrees.nodes() - 1;
            return exact_integer(2 * n * fact_ratio(n - 1, x.degrees), "degree count");
          },
          [&](const family::LeafRootedDeg& x) {
            const long n = x.degrees.nodes() - 1;
            return exact_integer(x.degrees.count(1) * fact_ratio(n - 1, x.degrees), "leaf-rooted degree count");
          },
          [&](const family::InternalRootedDeg& x) {
            const long n = x.degrees.nodes() - 1;
            return exact_integer((2 * n - x.degrees.count(1)) * fact_ratio(n - 1, x.degrees),
                                 "internal-rooted degree count");
          },
          [&](const family::RootDegree& x) {
            const long n = x.degrees.nodes() - 1;
            return exact_integer(static_cast<long>(x.delta) * x.degrees.count(x.delta) * fact_ratio(n - 1, x.degrees),
                                 "root-degree count");
          },
      },
      f);
}

std::vector<int> tour_edge_ids(const PlaneTree& t) {
  const std::string& w = t.word();
  std::vector<int> ids(w.size());
  std::vector<int> stack;
  int next = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] == '(') {
      ids[p] = next;
      stack.push_back(next++);
    } else {
      ids[p] = stack.back();
      stack.pop_back();
    }
  }
  return ids;
}

PlaneTree tree_from_tour(const std::vector<int>& edge_ids) {
  std::string w(edge_ids.size(), '(');
  std::vector<char> seen;
  for (std::size_t p = 0; p < edge_ids.size(); ++p) {
    const auto id = static_cast<std::size_t>(edge_ids[p]);
    if (id >= seen.size()) seen.resize(id + 1, 0);
    w[p] = seen[id] ? ')' : '(';
    seen[id] = 1;
  }
  return PlaneTree(std::move(w));
}

CenterResult center(const PlaneTree& t) {
  const TreeLayout l = layout(t);
  const int nodes = static_cast<int>(l.degree.size());
  if (nodes == 1) return CentralVertex{0};
  std::vector<std::vector<int>> adj(nodes);
  std::vector<int> parent(nodes, -1);
  {
    std::vector<int> stack{0};
    int next = 1;
    for (char c : t.word()) {
      if (c == '(') {
        adj[stack.back()].push_back(next);
        adj[next].push_back(stack.back());
        parent[next] = stack.back();
        stack.push_back(next++);
      } else {
        stack.pop_back();
      }
    }
  }
  std::vector<int> deg = l.degree;
  std::vector<char> removed(nodes, 0);
  std::vector<int> layer;
  for (int v = 0; v < nodes; ++v) {
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = nodes;
  while (remaining > 2) {
    std::vector<int> next_layer;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
    }
    for (int v : layer) {
      for (int u : adj[v]) {
        if (removed[u]) continue;
        if (--deg[u] == 1) next_layer.push_back(u);
      }
    }
    layer = std::move(next_layer);
  }
  std::vector<int> rest;
  for (int v = 0; v < nodes; ++v) {
    if (!removed[v]) rest.push_back(v);
  }
  if (rest.size() == 1) return CentralVertex{l.first_corner[rest[0]]};
  const int child = parent[rest[0]] == rest[1] ? rest[0] : rest[1];
  return CentralEdge{l.first_corner[child] - 1};
}

MarkedTree phi_map(const PlaneTree& t) {
  const CenterResult c = center(t);
  const auto* edge = std::get_if<CentralEdge>(&c);
  if (!edge) throw StructureError("NotEdgeCentered");
  const TreeLayout l = layout(t);
  const int p = edge->position;
  const int r = l.partner[p];
  const std::string& w = t.word();
  return MarkedTree{PlaneTree(w.substr(0, p + 1) + w.substr(r)), p + 1};
}

PlaneTree phi_inverse(const MarkedTree& m) {
  const PlaneTree& t = m.tree;
  const TreeLayout l = layout(t);
  if (m.mark < 0 || m.mark >= std::max(1, t.corners())) throw StructureError("MarkOutOfRange");
  const int node = t.corners() == 0 ? 0 : l.corner_node[m.mark];
  if (node == 0) throw StructureError("MarkedLeafIsRoot");
  if (l.degree[node] != 1) throw StructureError("MarkNotLeaf");
  const int p = m.mark;
  const int edges = t.edges();
  const std::vector<int> ids = tour_edge_ids(t);
  const int shared = ids[p - 1];
  auto copy2 = [&](int id) { return id == shared ? shared : id + edges; };
  std::vector<int> seq;
  seq.reserve(4 * edges - 2);
  for (int i = 0; i < p - 1; ++i) seq.push_back(ids[i]);
  seq.push_back(shared);
  for (int i = p + 1; i < 2 * edges; ++i) seq.push_back(copy2(ids[i]));
  for (int i = 0; i < p - 1; ++i) seq.push_back(copy2(ids[i]));
  seq.push_back(shared);
  for (int i = p + 1; i < 2 * edges; ++i) seq.push_back(ids[i]);
  return tree_from_tour(seq);
}

namespace {

// Position of the step that leaves `node` first when walking around it
// counterclockwise starting from the branch that holds the root corner.
int branch_start(const TreeLayout& l, int node) {
  if (node == 0) return 0;
  return l.partner[l.first_corner[node] - 1];
}

std::vector<int> corners_of(const TreeLayout& l, int node, int start) {
  std::vector<int> cs;
  const int len = static_cast<int>(l.corner_node.size());
  for (int i = 0; i < len; ++i) {
    const int p = (start + i) % len;
    if (l.corner_node[p] == node) cs.push_back(p);
  }
  return cs;
}

}  // namespace

MarkedTree psi_map(const PlaneTree& t, int d) {
  if (d < 2) throw std::invalid_argument("psi_map: d must be >= 2");
  const CenterResult c = center(t);
  const auto* vertex = std::get_if<CentralVertex>(&c);
  if (!vertex || t.edges() == 0) throw StructureError("NotVertexCentered");
  const TreeLayout l = layout(t);
  const int node = l.corner_node[vertex->corner];
  const int ell = l.degree[node];
  if (ell % d != 0) throw StructureError("DegreeNotDivisible");
  if (t.edges() % d != 0 || reroot(t, 2L * t.edges() / d) != t) throw StructureError("NotFixed");
  const int start = branch_start(l, node);
  const std::vector<int> cs = corners_of(l, node, start);
  const int keep = ell / d;
  const int cut_from = cs[keep];
  const int cut_to = start == 0 ? t.corners() : start;
  const std::string& w = t.word();
  return MarkedTree{PlaneTree(w.substr(0, cut_from) + w.substr(cut_to)), vertex->corner};
}

PlaneTree psi_inverse(const MarkedTree& m, int d) {
  if (d < 1) throw std::invalid_argument("psi_inverse: d must be >= 1");
  const PlaneTree& t = m.tree;
  const int len = t.corners();
  if (len == 0) return t;
  if (m.mark < 0 || m.mark >= len) throw StructureError("MarkOutOfRange");
  const TreeLayout l = layout(t);
  const int node = l.corner_node[m.mark];
  if (l.first_corner[node] != m.mark) throw StructureError("MarkNotFirstCorner");
  const int start = branch_start(l, node);
  const std::vector<int> ids = tour_edge_ids(t);
  const int edges = t.edges();
  std::vector<int> cyc;
  cyc.reserve(static_cast<std::size_t>(d) * len);
  for (int copy = 0; copy < d; ++copy) {
    for (int i = 0; i < len; ++i) cyc.push_back(ids[(start + i) % len] + copy * edges);
  }
  const int offset = (len - start) % len;
  std::rotate(cyc.begin(), cyc.begin() + offset, cyc.end());
  return tree_from_tour(cyc);
}

PlaneTree reroot(const PlaneTree& t, long steps) {
  const long len = t.corners();
  if (len == 0) return t;
  long s = ((steps % len) + len) % len;
  if (s == 0) return t;
  const std::vector<int> partner = partners(t.word());
  std::string w(len, '(');
  for (long i = 0; i < len; ++i) {
    const long j = (i + s) % len;
    const long pj = ((partner[j] - s) % len + len) % len;
    w[i] = pj > i ? '(' : ')';
  }
  return PlaneTree(std::move(w));
}

}  // namespace sieve
