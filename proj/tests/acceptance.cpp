// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "sieve/bijections.hpp"
#include "sieve/combinatorics.hpp"
#include "sieve/csp.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace sieve;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

QPolynomial poly(std::vector<long> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return QPolynomial(b);
}

QPolynomial P(TheoremId id, TheoremParams p) { return to_polynomial(build_instance(id, p).polynomial); }

int jobs = 1;

void criterion1(Outcome& o) {
  const auto start = Clock::now();
  o.require(enumerate(family::AllTrees{3}).size() == 5, "|T(3)| = 5");
  const std::vector<long> want{5, 0, 2, 3};
  for (long e = 0; e < 4; ++e) {
    o.require(fix_count_bruteforce({family::AllTrees{3}, kind::Ordinary{}, e}) == want[e], "fixed count e=" + std::to_string(e));
  }
  const QPolynomial p = P(TheoremId::Ord, {.n = 3});
  o.require(p == poly({1, 0, 1, 1, 1, 0, 1}), "P(q)");
  o.require(eval_at_primitive_root(p, 1) == 5, "P(1)");
  o.require(eval_at_primitive_root(p, 6) == 0, "P(w)");
  o.require(eval_at_primitive_root(p, 3) == 2, "P(w^2)");
  o.require(eval_at_primitive_root(p, 2) == 3, "P(-1)");
  const double s = since(start);
  o.require(s < 1.0, "runtime under 1s");
  o.note << "P = " << p.to_string() << ", " << s << "s";
}

void criterion2(Outcome& o) {
  const auto start = Clock::now();
  int instances = 0;
  for (TheoremId id : all_theorems()) {
    for (const auto& p : sweep_params(id)) {
      const auto inst = build_instance(id, p);
      const auto rep = verify(inst, VerifyMode::AllExponents, jobs, std::max(12, default_size_guard(inst)));
      o.require(rep.overall, theorem_name(id) + " " + rep.family);
      ++instances;
    }
  }
  const double s = since(start);
  o.require(s < 600, "sweep under 10 minutes");
  o.note << instances << " instances, " << s << "s";
}

void criterion3(Outcome& o) {
  using T = TheoremId;
  const DegreeDistribution d22({2, 2}), d301({3, 0, 1});
  o.require(P(T::OrdLeaves, {.n = 3, .k = 3}) == poly({1, 0, 0, 1}), "ord_leaves (3,3)");
  o.require(P(T::OrdLeaves, {.n = 3, .k = 2}) == poly({1, 0, 1, 0, 1}), "ord_leaves (3,2)");
  o.require(P(T::Ext, {.n = 3, .k = 3}) == poly({1}), "ext (3,3)");
  o.require(P(T::Ext, {.n = 3, .k = 2}) == poly({1}), "ext (3,2)");
  o.require(P(T::Int, {.n = 3, .k = 3}) == poly({1}), "int (3,3)");
  o.require(P(T::Int, {.n = 3, .k = 2}) == poly({1, 0, 1}), "int (3,2)");
  o.require(P(T::OrdDeg, {.degrees = d301}) == poly({1, 0, 0, 1}), "ord_deg 3,0,1");
  o.require(P(T::OrdDeg, {.degrees = d22}) == poly({1, 0, 1, 0, 1}), "ord_deg 2,2");
  o.require(P(T::Delta, {.delta = 1, .degrees = d22}) == poly({1}), "delta 1 on 2,2");
  o.require(P(T::Delta, {.delta = 1, .degrees = d301}) == poly({1}), "delta 1 on 3,0,1");
  o.require(P(T::Delta, {.delta = 2, .degrees = d22}) == poly({1, 0, 1}), "delta 2 on 2,2");
  o.require(P(T::TMij, {.i = 1, .j = 1}) == poly({1, 0, 1}) * poly({1, 1, 1}), "tm(1,1)");
  const QPolynomial tm2 = P(T::TMn, {.n = 2});
  o.require(tm2 == poly({1, 0, 2, 1, 2, 1, 2, 0, 1}), "tm_n(2)");
  o.require(eval_at_primitive_root(tm2, 1) == 10 && eval_at_primitive_root(tm2, 4) == 0 &&
                eval_at_primitive_root(tm2, 2) == 6,
            "tm_n(2) at 1, i, -1");
  o.require(P(T::TMd, {.j = 1, .degrees = DegreeDistribution({1, 0, 1})}) == q_int(4), "tm_deg example");
  o.note << "tm_n(2) = " << tm2.to_string();
}

void criterion4(Outcome& o) {
  for (int n = 1; n <= 5; ++n) {
    const auto total = enumerate_map_words(mapfam::TMn{n}).size();
    o.require(BigInt(static_cast<unsigned long>(total)) == catalan(n) * catalan(n + 1), "Mullin n=" + std::to_string(n));
    std::size_t split = 0;
    for (int i = 0; i <= n; ++i) split += enumerate_map_words(mapfam::TMij{i, n - i}).size();
    o.require(split == total, "sum over i+j=" + std::to_string(n));
    if (n == 2) o.require(total == 10, "|TM(2)| = 10");
    if (n == 5) o.note << "|TM(5)| = " << total;
  }
}

void criterion5(Outcome& o) {
  int checked = 0;
  for (TheoremId id : all_theorems()) {
    for (const auto& p : sweep_params(id)) {
      const auto inst = build_instance(id, p);
      const PolyCheck c = check_poly_nonneg(inst);
      const std::string tag = theorem_name(id) + " " + csp_family_label(inst.family);
      o.require(c.polynomial, tag + " polynomial");
      o.require(c.nonneg, tag + " non-negative");
      o.require(c.reciprocal, tag + " reciprocal");
      ++checked;
    }
  }
  o.note << checked << " polynomials";
}

void criterion6(Outcome& o) {
  for (int n = 2; n <= 10; ++n) o.require(check_sum_identity(SumIdentity::RefinedLeaves, n), "refined leaves n=" + std::to_string(n));
  for (int n = 1; n <= 10; ++n) {
    o.require(check_sum_identity(SumIdentity::ChuVandermondeTM, n), "q-Chu-Vandermonde n=" + std::to_string(n));
  }
}

void criterion7(Outcome& o) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& t : enumerate(family::AllTrees{n})) {
      const PlaneTree r = rotate(t, kind::Ordinary{}, 1);
      const auto m = tree_to_ncm(t);
      o.require(ncm_to_tree(m) == t, "matching round trip " + t.word());
      o.require(tree_to_ncm(r) == rotate_ncm(m, -1), "matching equivariance " + t.word());
      const auto p = tree_to_ncp(t);
      o.require(ncp_to_tree(p) == t, "partition round trip " + t.word());
      o.require(tree_to_ncp(r) == kreweras(p), "kreweras equivariance " + t.word());
      o.require(kreweras(kreweras(p)) == rotate_ncp(p, -1), "kreweras squared " + t.word());
      const auto s = stats(t);
      if (s.root_degree == 1 && s.degrees.count(2) == 0) {
        const auto d = tree_to_dissection(t);
        o.require(dissection_to_tree(d) == t, "dissection round trip " + t.word());
        if (s.leaves >= 3) {
          o.require(tree_to_dissection(rotate(t, kind::Leaf{}, 1)) == rotate_dissection(d, -1),
                    "dissection equivariance " + t.word());
        }
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (const auto& w : enumerate_map_words(mapfam::TMn{n})) {
      const TreeRootedMap m(w);
      const auto [bt, ncm] = decompose(m);
      o.require(compose(bt, ncm) == m, "compose round trip " + w);
      const bool bud_first = bt.word()[0] == '*';
      o.require(rotate_map(m) == compose(rotate_btree(bt), bud_first ? rotate_ncm(ncm, -1) : ncm),
                "paired rotation " + w);
      const auto c = to_cubic(m);
      o.require(from_cubic(c) == m, "cubic round trip " + w);
      o.require(from_cubic(advance_root(c)) == rotate_map(m), "cubic equivariance " + w);
    }
  }
  for (int j = 1; j <= 8; ++j) {
    for (long e = 0; e < 2 * j; ++e) {
      o.require(fix_count_maps(mapfam::NCM{j}, e, jobs) == fix_count_maps_closed(mapfam::NCM{j}, e),
                "matching rotation j=" + std::to_string(j));
    }
  }
}

void criterion8(Outcome& o) {
  for (int n = 1; n <= 9; ++n) {
    const auto trees = enumerate(family::AllTrees{n});
    if (n % 2 == 1) {
      const int half = (n + 1) / 2;
      std::set<MarkedTree> images;
      for (const auto& t : trees) {
        if (rotate(t, kind::Ordinary{}, n) != t) continue;
        const MarkedTree m = phi_map(t);
        o.require(phi_inverse(m) == t, "phi round trip " + t.word());
        images.insert(m);
      }
      std::size_t marked = 0;
      for (const auto& s : enumerate(family::AllTrees{half})) {
        const auto l = layout(s);
        for (std::size_t v = 1; v < l.degree.size(); ++v) marked += l.degree[v] == 1;
      }
      o.require(images.size() == marked, "phi count n=" + std::to_string(n));
    }
    for (int d = 2; d <= n; ++d) {
      if (n % d) continue;
      std::set<MarkedTree> images;
      for (const auto& t : trees) {
        if (rotate(t, kind::Ordinary{}, 2 * n / d) != t) continue;
        const MarkedTree m = psi_map(t, d);
        o.require(psi_inverse(m, d) == t, "psi round trip " + t.word());
        images.insert(m);
      }
      std::size_t marked = 0;
      for (const auto& s : enumerate(family::AllTrees{n / d})) marked += layout(s).degree.size();
      o.require(images.size() == marked, "psi count n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  int families = 0;
  for (int n = 1; n <= 8; ++n) {
    std::vector<TreeFamily> fs;
    for (int k = 2; k <= std::max(2, n); ++k) {
      fs.push_back(family::LeafRooted{n, k});
      if (n >= 2) fs.push_back(family::InternalRooted{n, k});
    }
    for (const auto& dd : degree_distributions(n + 1, 2 * n)) {
      fs.push_back(family::LeafRootedDeg{dd});
      fs.push_back(family::InternalRootedDeg{dd});
      for (int delta = 1; delta <= dd.max_degree(); ++delta) {
        if (dd.count(delta) > 0) fs.push_back(family::RootDegree{dd, delta});
      }
    }
    for (const auto& f : fs) {
      if (!family_feasible(f) || closed_count(f) == 0) continue;
      const long m = rotation_order(f, natural_kind(f));
      for (long e = 1; e <= m; ++e) {
        if (m % e == 0) o.require(check_rotation_transfer(f, e), "transfer " + family_label(f));
      }
      ++families;
    }
  }
  o.note << families << " constrained families";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) jobs = std::max(1, std::atoi(argv[1]));
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"worked example for the ordinary rotation on three edges", criterion1},
      {"triple agreement over the full parameter sweep", criterion2},
      {"worked example polynomials", criterion3},
      {"tree-rooted map counts", criterion4},
      {"polynomiality, non-negativity and reciprocality", criterion5},
      {"summation identities", criterion6},
      {"bijections and equivariance", criterion7},
      {"structural bijections and rotation transfer", criterion8},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& ex) {
      o.ok = false;
      o.note << "exception: " << ex.what();
    }
    all = all && o.ok;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].first << " (" << o.note.str() << ")"
              << std::endl;
  }
  return all ? 0 : 1;
}
