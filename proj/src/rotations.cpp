#include "sieve/rotations.hpp"

#include "sieve/combinatorics.hpp"
#include "sieve/overloaded.hpp"
#include "sieve/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace sieve {

namespace {

bool eligible(const RotationKind& k, int degree) {
  return std::visit(overloaded{
                        [](kind::Ordinary) { return true; },
                        [&](kind::Leaf) { return degree == 1; },
                        [&](kind::Internal) { return degree >= 2; },
                        [&](kind::Degree d) { return degree == d.delta; },
                    },
                    k);
}

bool is_leaf_rooted(const TreeFamily& f) {
  return std::holds_alternative<family::LeafRooted>(f) || std::holds_alternative<family::LeafRootedDeg>(f) ||
         (std::holds_alternative<family::RootDegree>(f) && std::get<family::RootDegree>(f).delta == 1);
}

// n_i / d for every i, with n_ell - 1 in place of n_ell when ell > 0.
// Empty optional when some entry is not divisible.
std::optional<std::vector<long>> divided(const DegreeDistribution& dd, long d, int ell) {
  std::vector<long> out;
  for (int i = 1; i <= dd.max_degree(); ++i) {
    long c = dd.count(i) - (i == ell ? 1 : 0);
    if (c < 0 || c % d) return std::nullopt;
    out.push_back(c / d);
  }
  return out;
}

std::vector<long> halved_all_even(const DegreeDistribution& dd, bool& ok) {
  std::vector<long> out;
  ok = true;
  for (long c : dd.counts()) {
    if (c % 2) ok = false;
    out.push_back(c / 2);
  }
  return out;
}

long sum_of(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

// First ell with d | n_ell - 1 and d | n_i otherwise.
std::optional<std::vector<long>> special_degree(const DegreeDistribution& dd, long d) {
  for (int ell = 1; ell <= dd.max_degree(); ++ell) {
    if (dd.count(ell) == 0) continue;
    if (auto v = divided(dd, d, ell)) return v;
  }
  return std::nullopt;
}

BigInt closed_leaves(int n, int k, long e, long d) {
  // Ordinary rotation on trees with n edges and k leaves, order 2n.
  if (d == 1) return closed_count(family::ByLeaves{n, k});
  if (d == 2 && (n + 1) % 2 == 0 && k % 2 == 0) {
    const long h = (n + 1) / 2 - 1;
    return exact_integer(Rational(BigInt(n) * binomial(h, k / 2 - 1) * binomial(h, k / 2), h), "leaf fix d=2");
  }
  if (n % d == 0 && k % d == 0) return 2 * binomial(e / 2 - 1, k / d - 1) * binomial(e / 2, k / d);
  return 0;
}

BigInt closed_leaf_rooted(int n, int k, long e, long d) {
  if (d == 1) return closed_count(family::LeafRooted{n, k});
  if (d == 2 && k % 2 == 0 && (n + 1) % 2 == 0) {
    return binomial((n + 1) / 2 - 2, k / 2 - 1) * binomial((n + 1) / 2 - 1, k / 2 - 1);
  }
  if (n % d == 0) {
    BigInt b = binomial(n / d - 1, e - 1);
    return b * b;
  }
  return 0;
}

BigInt closed_internal_rooted(int n, int k, long d) {
  if (d == 1) return closed_count(family::InternalRooted{n, k});
  if (d == 2 && (n + 1) % 2 == 0 && k % 2 == 0) {
    return exact_integer(
        Rational(BigInt(2 * n - k) * binomial((n - 1) / 2, k / 2 - 1) * binomial((n - 1) / 2, k / 2), n - 1),
        "internal fix d=2");
  }
  if (n % d == 0) {
    return exact_integer(Rational(BigInt(2 * n - k) * binomial(n / d - 1, k / d - 1) * binomial(n / d, k / d), n),
                         "internal fix");
  }
  return 0;
}

BigInt closed_degrees(const DegreeDistribution& dd, long d) {
  const long n = dd.nodes() - 1;
  if (d == 1) return closed_count(family::ByDegrees{dd});
  bool even = false;
  auto half = halved_all_even(dd, even);
  if (d == 2 && even) {
    return exact_integer(Rational(BigInt(n) * multinomial((n + 1) / 2, half), (n + 1) / 2), "degree fix d=2");
  }
  if (auto v = special_degree(dd, d)) return 2 * multinomial(sum_of(*v), *v);
  return 0;
}

BigInt closed_root_degree(const DegreeDistribution& dd, int delta, long d) {
  const long n = dd.nodes() - 1;
  if (d == 1) return closed_count(family::RootDegree{dd, delta});
  bool even = false;
  auto half = halved_all_even(dd, even);
  if (d == 2 && even) {
    half[delta - 1] -= 1;
    return delta * multinomial((n + 1) / 2 - 1, half);
  }
  if (auto v = special_degree(dd, d)) {
    return exact_integer(Rational(BigInt(delta) * dd.count(delta) * multinomial(n / d, *v), n), "root-degree fix");
  }
  return 0;
}

BigInt closed_internal_degrees(const DegreeDistribution& dd, long d) {
  const long n = dd.nodes() - 1;
  const long order = 2 * n - dd.count(1);
  if (d == 1) return closed_count(family::InternalRootedDeg{dd});
  bool even = false;
  auto half = halved_all_even(dd, even);
  if (d == 2 && even) {
    return exact_integer(Rational(BigInt(order) * multinomial((n + 1) / 2, half), n + 1), "internal degree fix d=2");
  }
  if (auto v = special_degree(dd, d)) {
    return exact_integer(Rational(BigInt(order) * multinomial(n / d, *v), n), "internal degree fix");
  }
  return 0;
}

}  // namespace

std::string kind_name(const RotationKind& k) {
  return std::visit(overloaded{
                        [](kind::Ordinary) { return std::string("ordinary"); },
                        [](kind::Leaf) { return std::string("leaf"); },
                        [](kind::Internal) { return std::string("internal"); },
                        [](kind::Degree d) { return "degree(" + std::to_string(d.delta) + ")"; },
                    },
                    k);
}

bool kind_compatible(const TreeFamily& f, const RotationKind& k) {
  return std::visit(overloaded{
                        [](kind::Ordinary) { return true; },
                        [&](kind::Leaf) { return is_leaf_rooted(f); },
                        [&](kind::Internal) {
                          return std::holds_alternative<family::InternalRooted>(f) ||
                                 std::holds_alternative<family::InternalRootedDeg>(f);
                        },
                        [&](kind::Degree d) {
                          if (auto* r = std::get_if<family::RootDegree>(&f)) return r->delta == d.delta;
                          return d.delta == 1 && is_leaf_rooted(f);
                        },
                    },
                    k);
}

long rotation_order(const TreeFamily& f, const RotationKind& k) {
  if (!kind_compatible(f, k)) throw IncompatibleKind(kind_name(k) + " rotation does not act on " + family_label(f));
  const long n = family_edges(f);
  if (std::holds_alternative<kind::Ordinary>(k)) return 2 * n;
  return std::visit(overloaded{
                        [&](const family::LeafRooted& x) -> long { return x.k; },
                        [&](const family::InternalRooted& x) -> long { return 2 * n - x.k; },
                        [&](const family::LeafRootedDeg& x) -> long { return x.degrees.count(1); },
                        [&](const family::InternalRootedDeg& x) -> long { return 2 * n - x.degrees.count(1); },
                        [&](const family::RootDegree& x) -> long { return x.delta * x.degrees.count(x.delta); },
                        [&](const auto&) -> long { throw IncompatibleKind("no constrained rotation"); },
                    },
                    f);
}

RotationKind natural_kind(const TreeFamily& f) {
  return std::visit(overloaded{
                        [](const family::LeafRooted&) -> RotationKind { return kind::Leaf{}; },
                        [](const family::LeafRootedDeg&) -> RotationKind { return kind::Leaf{}; },
                        [](const family::InternalRooted&) -> RotationKind { return kind::Internal{}; },
                        [](const family::InternalRootedDeg&) -> RotationKind { return kind::Internal{}; },
                        [](const family::RootDegree& x) -> RotationKind { return kind::Degree{x.delta}; },
                        [](const auto&) -> RotationKind { return kind::Ordinary{}; },
                    },
                    f);
}

PlaneTree rotate(const PlaneTree& t, const RotationKind& k, long steps) {
  const long len = t.corners();
  if (std::holds_alternative<kind::Ordinary>(k)) return reroot(t, steps);
  if (len == 0) throw NoEligibleCorner("the single-vertex tree has no corners");
  const TreeLayout l = layout(t);
  std::vector<long> ahead;  // offsets in (0, len]
  for (long p = 1; p <= len; ++p) {
    if (eligible(k, l.degree[l.corner_node[p % len]])) ahead.push_back(p);
  }
  if (ahead.empty()) throw NoEligibleCorner("no corner of type " + kind_name(k));
  if (steps == 0) return t;
  const long m = static_cast<long>(ahead.size());
  if (steps > 0) return reroot(t, ahead[(steps - 1) % m]);
  // Backwards the nearest eligible corner is the largest offset below len,
  // and the root corner itself (offset len) comes last.
  std::vector<long> behind;
  for (auto it = ahead.rbegin(); it != ahead.rend(); ++it) {
    if (*it < len) behind.push_back(*it - len);
  }
  if (ahead.back() == len) behind.push_back(-len);
  return reroot(t, behind[(-steps - 1) % m]);
}

std::vector<PlaneTree> orbit(const PlaneTree& t, const RotationKind& k) {
  std::vector<PlaneTree> out{t};
  PlaneTree cur = rotate(t, k, 1);
  if (rotate(cur, k, -1) != t) throw IncompatibleKind("the root corner of " + t.word() + " is not " + kind_name(k));
  while (cur != t) {
    out.push_back(cur);
    cur = rotate(cur, k, 1);
  }
  return out;
}

BigInt fix_count_bruteforce(const FixQuery& q, int jobs) {
  return parallel_count(enumerate(q.family), jobs, [&](const PlaneTree& t) { return rotate(t, q.kind, q.e) == t; });
}

bool closed_fix_supported(const TreeFamily& f, const RotationKind& k) {
  if (!kind_compatible(f, k)) return false;
  if (std::holds_alternative<kind::Ordinary>(k)) {
    return std::holds_alternative<family::AllTrees>(f) || std::holds_alternative<family::ByLeaves>(f) ||
           std::holds_alternative<family::ByDegrees>(f);
  }
  return true;
}

BigInt fix_count_closed(const FixQuery& q) {
  if (!closed_fix_supported(q.family, q.kind)) {
    throw IncompatibleKind("no closed fixed-point formula for " + kind_name(q.kind) + " on " + family_label(q.family));
  }
  if (!family_feasible(q.family)) return 0;
  if (formula_degenerate(q.family)) return fix_count_bruteforce(q);
  const long order = rotation_order(q.family, q.kind);
  if (order == 0) return closed_count(q.family);
  const long e = std::gcd(((q.e % order) + order) % order, order);
  const long d = order / e;
  return std::visit(
      overloaded{
          [&](const family::AllTrees& x) -> BigInt {
            const long n = x.n;
            if (d == 1) return catalan(n);
            if (d == 2 && n % 2 == 1) return binomial(n, (n + 1) / 2);
            if (e % 2 == 0) return binomial(e, e / 2);
            return 0;
          },
          [&](const family::ByLeaves& x) -> BigInt { return closed_leaves(x.n, x.k, e, d); },
          [&](const family::ByDegrees& x) -> BigInt { return closed_degrees(x.degrees, d); },
          [&](const family::LeafRooted& x) -> BigInt { return closed_leaf_rooted(x.n, x.k, e, d); },
          [&](const family::InternalRooted& x) -> BigInt { return closed_internal_rooted(x.n, x.k, d); },
          [&](const family::LeafRootedDeg& x) -> BigInt { return closed_root_degree(x.degrees, 1, d); },
          [&](const family::InternalRootedDeg& x) -> BigInt { return closed_internal_degrees(x.degrees, d); },
          [&](const family::RootDegree& x) -> BigInt { return closed_root_degree(x.degrees, x.delta, d); },
      },
      q.family);
}

bool check_rotation_transfer(const TreeFamily& f, long e) {
  const RotationKind k = natural_kind(f);
  if (std::holds_alternative<kind::Ordinary>(k)) throw IncompatibleKind("family has no root constraint");
  const long order = rotation_order(f, k);
  const long n = family_edges(f);
  if (order == 0) return true;
  const long g = std::gcd(((e % order) + order) % order, order);
  const long d = order / g;
  for (const auto& t : enumerate(f)) {
    const bool fixed = rotate(t, k, e) == t;
    if (2 * n % d != 0) {
      if (fixed) return false;
      continue;
    }
    if (fixed != (reroot(t, 2 * n / d) == t)) return false;
  }
  return true;
}

}  // namespace sieve
