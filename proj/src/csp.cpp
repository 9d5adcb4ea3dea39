#include "sieve/csp.hpp"

#include "sieve/combinatorics.hpp"
#include "sieve/overloaded.hpp"
#include "sieve/parallel.hpp"

#include <chrono>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace sieve {

namespace {

const std::vector<std::pair<TheoremId, const char*>>& names() {
  static const std::vector<std::pair<TheoremId, const char*>> table = {
      {TheoremId::Ord, "ord"},       {TheoremId::OrdLeaves, "ord_leaves"}, {TheoremId::Ext, "ext"},
      {TheoremId::Int, "int"},       {TheoremId::OrdDeg, "ord_deg"},       {TheoremId::Delta, "delta"},
      {TheoremId::IntDeg, "int_deg"}, {TheoremId::TMij, "tmij"},           {TheoremId::TMn, "tmn"},
      {TheoremId::TMd, "tmd"},       {TheoremId::BTij, "btij"},            {TheoremId::BTd, "btd"},
      {TheoremId::NcmRotation, "ncm"},
  };
  return table;
}

unsigned u(long x) {
  if (x < 0) throw InfeasibleParams("negative q-integer index");
  return static_cast<unsigned>(x);
}

/// Parts of a degree multinomial, zeros dropped.
std::vector<unsigned> parts_of(const DegreeDistribution& d, int bump_degree = 0) {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < d.counts().size(); ++i) {
    long c = d.counts()[i];
    if (static_cast<int>(i) + 1 == bump_degree) --c;
    if (c > 0) out.push_back(u(c));
  }
  return out;
}

QProductExpr multinomial_expr(long total, std::vector<unsigned> parts) {
  return q_multinomial(u(total), parts);
}

std::vector<unsigned> with(std::vector<unsigned> a, std::initializer_list<unsigned> b) {
  for (unsigned x : b) {
    if (x > 0) a.push_back(x);
  }
  return a;
}

bool has_zero_index(const QProductExpr& e) {
  for (unsigned a : e.num) {
    if (a == 0) return true;
  }
  for (unsigned b : e.den) {
    if (b == 0) return true;
  }
  return false;
}

BigInt family_count(const CspFamily& f) {
  return std::visit(overloaded{
                        [](const TreeFamily& t) -> BigInt { return family_feasible(t) ? closed_count(t) : BigInt(0); },
                        [](const MapFamily& m) -> BigInt {
                          return map_family_feasible(m) ? closed_count_maps(m) : BigInt(0);
                        },
                    },
                    f);
}

long family_order(const CspFamily& f, const RotationKind& k) {
  return std::visit(overloaded{
                        [&](const TreeFamily& t) { return rotation_order(t, k); },
                        [](const MapFamily& m) { return map_group_order(m); },
                    },
                    f);
}

bool degree_family(const TreeFamily& f) {
  return std::holds_alternative<family::ByDegrees>(f) || std::holds_alternative<family::LeafRootedDeg>(f) ||
         std::holds_alternative<family::InternalRootedDeg>(f) || std::holds_alternative<family::RootDegree>(f);
}

long edges_of(const DegreeDistribution& d) { return d.nodes() - 1; }

}  // namespace

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (auto& [id, name] : names()) v.push_back(id);
    return v;
  }();
  return ids;
}

std::string theorem_name(TheoremId id) {
  for (auto& [x, name] : names()) {
    if (x == id) return name;
  }
  throw std::logic_error("unknown theorem id");
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (auto& [x, n] : names()) {
    if (name == n) return x;
  }
  return std::nullopt;
}

CspInstance build_instance(TheoremId id, const TheoremParams& p) {
  CspInstance inst{id, p, TreeFamily{family::AllTrees{0}}, kind::Ordinary{}, 0, {}, false};
  QProductExpr& e = inst.polynomial;
  bool applied = false;
  const long n = p.n, k = p.k;
  const auto& dd = p.degrees;
  switch (id) {
    case TheoremId::Ord:
      inst.family = TreeFamily{family::AllTrees{p.n}};
      if (n >= 1) {
        applied = true;
        e = q_binomial(u(2 * n), u(n)).over_qint(u(n + 1));
      }
      break;
    case TheoremId::OrdLeaves:
      inst.family = TreeFamily{family::ByLeaves{p.n, p.k}};
      if (n >= 2 && k >= 2 && k <= n) {
        applied = true;
        e.times_qint(u(2 * n)).over_qint(u(n));
        e = e * q_binomial(u(n - 1), u(k - 2)) * q_binomial(u(n), u(k));
        e.over_qint(u(n - 1));
      }
      break;
    case TheoremId::Ext:
      inst.family = TreeFamily{family::LeafRooted{p.n, p.k}};
      if (n >= 2 && k >= 2 && k <= n) {
        applied = true;
        e = q_binomial(u(n - 1), u(k - 2)) * q_binomial(u(n - 1), u(k - 1));
        e.over_qint(u(n - 1));
      }
      break;
    case TheoremId::Int:
      inst.family = TreeFamily{family::InternalRooted{p.n, p.k}};
      if (n >= 2 && k >= 2 && k <= n) {
        applied = true;
        e.times_qint(u(2 * n - k)).over_qint(u(n)).over_qint(u(n - 1));
        e = e * q_binomial(u(n - 1), u(k - 2)) * q_binomial(u(n), u(k));
      }
      break;
    case TheoremId::OrdDeg: {
      inst.family = TreeFamily{family::ByDegrees{dd}};
      const long m = edges_of(dd);
      if (m >= 1) {
        applied = true;
        e = multinomial_expr(m + 1, parts_of(dd));
        e.times_qint(u(2 * m)).over_qint(u(m)).over_qint(u(m + 1));
      }
      break;
    }
    case TheoremId::Delta: {
      inst.family = TreeFamily{family::RootDegree{dd, p.delta}};
      const long m = edges_of(dd);
      const long nd = dd.count(p.delta);
      if (m >= 1 && p.delta >= 1 && nd >= 1) {
        applied = true;
        e = multinomial_expr(m, parts_of(dd, p.delta));
        e.times_qint(u(p.delta * nd)).over_qint(u(nd)).over_qint(u(m));
      }
      break;
    }
    case TheoremId::IntDeg: {
      inst.family = TreeFamily{family::InternalRootedDeg{dd}};
      const long m = edges_of(dd);
      if (m >= 1) {
        applied = true;
        e = multinomial_expr(m + 1, parts_of(dd));
        e.times_qint(u(2 * m - dd.count(1))).over_qint(u(m + 1)).over_qint(u(m));
      }
      break;
    }
    case TheoremId::TMij:
      inst.family = MapFamily{mapfam::TMij{p.i, p.j}};
      if (p.i >= 0 && p.j >= 0) {
        applied = true;
        e = multinomial_expr(2L * p.i + 2L * p.j, with({}, {u(p.i), u(p.i), u(p.j), u(p.j)}));
        e.over_qint(u(p.i + 1)).over_qint(u(p.j + 1));
      }
      break;
    case TheoremId::TMn:
      inst.family = MapFamily{mapfam::TMn{p.n}};
      if (n >= 0) {
        applied = true;
        e = q_binomial(u(2 * n), u(n)) * q_binomial(u(2 * n + 2), u(n + 1));
        e.over_qint(u(n + 1)).over_qint(u(n + 2));
      }
      break;
    case TheoremId::TMd: {
      inst.family = MapFamily{mapfam::TMd{p.j, dd}};
      const long m = edges_of(dd) + p.j;
      if (edges_of(dd) >= 0 && p.j >= 0) {
        applied = true;
        e = multinomial_expr(m + p.j + 1, with(parts_of(dd), {u(p.j), u(p.j)}));
        e.times_qint(u(2 * m)).over_qint(u(p.j + 1)).over_qint(u(m + p.j + 1)).over_qint(u(m + p.j));
      }
      break;
    }
    case TheoremId::BTij:
      inst.family = MapFamily{mapfam::BT{p.b, p.n}};
      if (n >= 0 && p.b >= 0) {
        applied = true;
        e = multinomial_expr(2 * n + p.b, with({}, {u(p.b), u(n), u(n)}));
        e.over_qint(u(n + 1));
      }
      break;
    case TheoremId::BTd: {
      inst.family = MapFamily{mapfam::BTd{p.b, dd}};
      const long m = edges_of(dd);
      if (m >= 0 && p.b >= 0) {
        applied = true;
        e = multinomial_expr(m + p.b + 1, with(parts_of(dd), {u(p.b)}));
        e.times_qint(u(2 * m + p.b)).over_qint(u(m + p.b + 1)).over_qint(u(m + p.b));
      }
      break;
    }
    case TheoremId::NcmRotation:
      inst.family = MapFamily{mapfam::NCM{p.j}};
      if (p.j >= 0) {
        applied = true;
        e = q_binomial(u(2L * p.j), u(p.j)).over_qint(u(p.j + 1));
      }
      break;
  }
  if (auto* t = std::get_if<TreeFamily>(&inst.family)) inst.kind = natural_kind(*t);
  const BigInt count = family_count(inst.family);
  if (count == 0) throw InfeasibleParams("empty family " + csp_family_label(inst.family));
  inst.order = family_order(inst.family, inst.kind);
  if (inst.order <= 0) throw InfeasibleParams("trivial rotation group for " + csp_family_label(inst.family));
  if (!applied || has_zero_index(e)) {
    inst.polynomial = QProductExpr{};
    inst.polynomial.scalar = Rational(count);
    inst.degenerate = true;
  }
  return inst;
}

std::string csp_family_name(const CspFamily& f) {
  return std::visit(overloaded{[](const TreeFamily& t) { return family_name(t); },
                               [](const MapFamily& m) { return map_family_name(m); }},
                    f);
}

std::string csp_family_label(const CspFamily& f) {
  return std::visit(overloaded{[](const TreeFamily& t) { return family_label(t); },
                               [](const MapFamily& m) { return map_family_label(m); }},
                    f);
}

int family_size(const CspFamily& f) {
  return std::visit(overloaded{[](const TreeFamily& t) { return family_edges(t); },
                               [](const MapFamily& m) { return map_family_size(m); }},
                    f);
}

int instance_size(const CspInstance& inst) { return family_size(inst.family); }

int default_size_guard(const CspFamily& f) {
  if (const char* env = std::getenv("SIEVE_FOREST_SIZE_GUARD")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  if (const auto* t = std::get_if<TreeFamily>(&f)) return degree_family(*t) ? 9 : 10;
  const auto& m = std::get<MapFamily>(f);
  const bool walk = std::holds_alternative<mapfam::TMij>(m) || std::holds_alternative<mapfam::TMn>(m) ||
                    std::holds_alternative<mapfam::TMd>(m);
  return walk ? 5 : 10;
}

int default_size_guard(const CspInstance& inst) { return default_size_guard(inst.family); }

VerificationReport verify(const CspInstance& inst, VerifyMode mode, int jobs, int guard) {
  const auto start = std::chrono::steady_clock::now();
  const int limit = guard > 0 ? guard : default_size_guard(inst);
  if (instance_size(inst) > limit) {
    std::ostringstream os;
    os << csp_family_label(inst.family) << " has size " << instance_size(inst) << ", guard is " << limit;
    throw SizeGuardExceeded(os.str());
  }
  VerificationReport rep;
  rep.theorem = inst.theorem;
  rep.params = inst.params;
  rep.family = csp_family_label(inst.family);
  rep.kind = std::holds_alternative<TreeFamily>(inst.family) ? kind_name(inst.kind) : "rotation";
  rep.order = inst.order;
  rep.overall = true;
  rep.fallback = inst.degenerate;

  std::vector<long> exps;
  for (long e = 0; e < inst.order; ++e) {
    if (mode == VerifyMode::AllExponents || e == 0 || inst.order % e == 0) exps.push_back(e);
  }
  const QPolynomial poly = to_polynomial(inst.polynomial);

  std::visit(overloaded{
                 [&](const TreeFamily& f) {
                   const auto members = enumerate(f);
                   rep.fallback = rep.fallback || formula_degenerate(f);
                   for (long e : exps) {
                     VerificationRow row;
                     row.e = e;
                     row.brute = parallel_count(members, jobs, [&](const PlaneTree& t) {
                       return rotate(t, inst.kind, e) == t;
                     });
                     row.closed = fix_count_closed(FixQuery{f, inst.kind, e});
                     rep.rows.push_back(std::move(row));
                   }
                 },
                 [&](const MapFamily& f) {
                   const auto members = enumerate_map_words(f);
                   for (long e : exps) {
                     VerificationRow row;
                     row.e = e;
                     row.brute = parallel_count(members, jobs, [&](const std::string& w) {
                       return rotate_map_word(f, w, e) == w;
                     });
                     row.closed = fix_count_maps_closed(f, e);
                     rep.rows.push_back(std::move(row));
                   }
                 },
             },
             inst.family);

  for (auto& row : rep.rows) {
    row.d = inst.order / std::gcd(row.e, inst.order);
    row.poly = eval_at_primitive_root(poly, static_cast<unsigned>(row.d));
    row.agree = row.brute == row.closed && row.brute == row.poly;
    rep.overall = rep.overall && row.agree;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

PolyCheck check_poly_nonneg(const CspInstance& inst) {
  PolyCheck c;
  try {
    const QPolynomial p = to_polynomial(inst.polynomial);
    c.polynomial = true;
    const ShapeFlags s = shape_predicates(p);
    c.nonneg = s.nonneg;
    c.reciprocal = s.is_reciprocal;
    c.unimodal = s.is_unimodal;
  } catch (const NotPolynomial&) {
  }
  return c;
}

SumIdentitySides sum_identity_sides(SumIdentity which, int n) {
  SumIdentitySides s;
  if (which == SumIdentity::RefinedLeaves) {
    if (n < 2) throw std::invalid_argument("the refined leaf identity needs n >= 2");
    for (int k = 2; k <= n; ++k) {
      TheoremParams p;
      p.n = n;
      p.k = k;
      s.lhs += QPolynomial::monomial(static_cast<unsigned>(k * (k - 2))) *
               to_polynomial(build_instance(TheoremId::OrdLeaves, p).polynomial);
    }
    TheoremParams p;
    p.n = n;
    s.rhs = to_polynomial(build_instance(TheoremId::Ord, p).polynomial);
  } else {
    if (n < 1) throw std::invalid_argument("the tree-rooted map identity needs n >= 1");
    for (int i = 0; i <= n; ++i) {
      const int j = n - i;
      TheoremParams p;
      p.i = i;
      p.j = j;
      s.lhs += QPolynomial::monomial(static_cast<unsigned>((n + 1 - i) * j)) *
               to_polynomial(build_instance(TheoremId::TMij, p).polynomial);
    }
    TheoremParams p;
    p.n = n;
    s.rhs = to_polynomial(build_instance(TheoremId::TMn, p).polynomial);
  }
  return s;
}

bool check_sum_identity(SumIdentity which, int n) {
  const auto s = sum_identity_sides(which, n);
  return s.lhs == s.rhs;
}

std::vector<TheoremParams> sweep_params(TheoremId id) {
  std::vector<TheoremParams> raw;
  auto push = [&](TheoremParams p) { raw.push_back(std::move(p)); };
  switch (id) {
    case TheoremId::Ord:
      for (int n = 1; n <= 12; ++n) push({.n = n});
      break;
    case TheoremId::OrdLeaves:
    case TheoremId::Ext:
    case TheoremId::Int:
      for (int n = 1; n <= 10; ++n) {
        for (int k = 1; k <= n + 1; ++k) push({.n = n, .k = k});
      }
      break;
    case TheoremId::OrdDeg:
    case TheoremId::IntDeg:
      for (int n = 1; n <= 9; ++n) {
        for (auto& d : degree_distributions(n + 1, 2 * n)) push({.degrees = d});
      }
      break;
    case TheoremId::Delta:
      for (int n = 1; n <= 8; ++n) {
        for (auto& d : degree_distributions(n + 1, 2 * n)) {
          for (int delta = 1; delta <= d.max_degree(); ++delta) {
            if (d.count(delta) > 0) push({.delta = delta, .degrees = d});
          }
        }
      }
      break;
    case TheoremId::TMij:
      for (int s = 1; s <= 5; ++s) {
        for (int i = 0; i <= s; ++i) push({.i = i, .j = s - i});
      }
      break;
    case TheoremId::TMn:
      for (int n = 1; n <= 5; ++n) push({.n = n});
      break;
    case TheoremId::TMd:
      for (int n = 1; n <= 5; ++n) {
        for (int i = 0; i <= n; ++i) {
          const int j = n - i;
          for (auto& d : degree_distributions(i + 1, 2L * i + 2L * j)) push({.j = j, .degrees = d});
        }
      }
      break;
    case TheoremId::BTij:
      for (int n = 0; 2 * n <= 12; ++n) {
        for (int b = 0; 2 * n + b <= 12; ++b) push({.n = n, .b = b});
      }
      break;
    case TheoremId::BTd:
      for (int n = 0; n <= 10; ++n) {
        for (int b = 0; n + b <= 10; ++b) {
          for (auto& d : degree_distributions(n + 1, 2L * n + b)) push({.b = b, .degrees = d});
        }
      }
      break;
    case TheoremId::NcmRotation:
      for (int j = 1; j <= 8; ++j) push({.j = j});
      break;
  }
  std::vector<TheoremParams> out;
  for (auto& p : raw) {
    try {
      build_instance(id, p);
      out.push_back(std::move(p));
    } catch (const InfeasibleParams&) {
    }
  }
  return out;
}

}  // namespace sieve
