#include "doctest.h"
#include "sieve/csp.hpp"

#include <cstdlib>
#include <numeric>

using namespace sieve;

namespace {

QPolynomial poly(std::vector<long> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return QPolynomial(b);
}

QPolynomial P(TheoremId id, TheoremParams p) { return to_polynomial(build_instance(id, p).polynomial); }

DegreeDistribution degs(std::vector<long> c) { return DegreeDistribution(std::move(c)); }

// P(zeta^e) for zeta a primitive m-th root: substitute q -> q^e, reduce mod Phi_m.
BigInt eval_at_power(const QPolynomial& p, unsigned m, unsigned e) {
  if (m == 1) return p.at_one();
  std::vector<BigInt> c(p.coeffs().size() * (e ? e : 1) + 1, 0);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i * e] += p.coeffs()[i];
  return CyclotomicResidue(m, QPolynomial(c)).constant_value();
}

}  // namespace

TEST_CASE("names round trip") {
  for (TheoremId id : all_theorems()) CHECK(parse_theorem(theorem_name(id)) == id);
  CHECK_FALSE(parse_theorem("nope").has_value());
  CHECK(all_theorems().size() == 13);
}

TEST_CASE("worked polynomials") {
  CHECK(P(TheoremId::Ord, {.n = 3}) == poly({1, 0, 1, 1, 1, 0, 1}));
  CHECK(P(TheoremId::OrdLeaves, {.n = 3, .k = 3}) == poly({1, 0, 0, 1}));
  CHECK(P(TheoremId::OrdLeaves, {.n = 3, .k = 2}) == poly({1, 0, 1, 0, 1}));
  CHECK(P(TheoremId::Ext, {.n = 3, .k = 3}) == poly({1}));
  CHECK(P(TheoremId::Ext, {.n = 3, .k = 2}) == poly({1}));
  CHECK(P(TheoremId::Int, {.n = 3, .k = 3}) == poly({1}));
  CHECK(P(TheoremId::Int, {.n = 3, .k = 2}) == poly({1, 0, 1}));
  CHECK(P(TheoremId::OrdDeg, {.degrees = degs({3, 0, 1})}) == poly({1, 0, 0, 1}));
  CHECK(P(TheoremId::OrdDeg, {.degrees = degs({2, 2})}) == poly({1, 0, 1, 0, 1}));
  CHECK(P(TheoremId::Delta, {.delta = 1, .degrees = degs({2, 2})}) == poly({1}));
  CHECK(P(TheoremId::Delta, {.delta = 1, .degrees = degs({3, 0, 1})}) == poly({1}));
  CHECK(P(TheoremId::Delta, {.delta = 2, .degrees = degs({2, 2})}) == poly({1, 0, 1}));
  CHECK(P(TheoremId::TMij, {.i = 1, .j = 1}) == poly({1, 0, 1}) * poly({1, 1, 1}));
  CHECK(P(TheoremId::TMn, {.n = 2}).to_string() == "1 + 2q^2 + q^3 + 2q^4 + q^5 + 2q^6 + q^8");
  CHECK(P(TheoremId::TMd, {.j = 1, .degrees = degs({1, 0, 1})}) == q_int(4));
  CHECK(P(TheoremId::NcmRotation, {.j = 3}) == P(TheoremId::Ord, {.n = 3}));
}

TEST_CASE("infeasible parameters") {
  CHECK_THROWS_AS(build_instance(TheoremId::Int, {.n = 1, .k = 2}), InfeasibleParams);
  CHECK_THROWS_AS(build_instance(TheoremId::OrdLeaves, {.n = 3, .k = 5}), InfeasibleParams);
  CHECK_THROWS_AS(build_instance(TheoremId::Delta, {.delta = 3, .degrees = degs({2, 2})}), InfeasibleParams);
  CHECK_THROWS_AS(build_instance(TheoremId::TMij, {.i = 0, .j = 0}), InfeasibleParams);
  CHECK_THROWS_AS(build_instance(TheoremId::Ord, {.n = 0}), InfeasibleParams);
}

TEST_CASE("single-edge instances fall back to the count") {
  for (TheoremId id : {TheoremId::OrdLeaves, TheoremId::Ext}) {
    const auto inst = build_instance(id, {.n = 1, .k = 2});
    CHECK(inst.degenerate);
    CHECK(to_polynomial(inst.polynomial) == poly({1}));
    const auto rep = verify(inst, VerifyMode::AllExponents);
    CHECK(rep.overall);
    CHECK(rep.fallback);
  }
  CHECK_FALSE(build_instance(TheoremId::Ord, {.n = 1}).degenerate);
}

TEST_CASE("verification reports") {
  const auto rep = verify(build_instance(TheoremId::Ord, {.n = 3}), VerifyMode::AllExponents);
  std::vector<long> brute;
  for (auto& r : rep.rows) brute.push_back(r.brute.get_si());
  CHECK(brute == std::vector<long>{5, 0, 2, 3, 2, 0});
  CHECK(rep.overall);
  CHECK(rep.rows[4].d == 3);

  const auto div = verify(build_instance(TheoremId::Ord, {.n = 3}), VerifyMode::Divisors);
  std::vector<long> es;
  for (auto& r : div.rows) es.push_back(r.e);
  CHECK(es == std::vector<long>{0, 1, 2, 3});

  const auto tm = verify(build_instance(TheoremId::TMn, {.n = 2}), VerifyMode::AllExponents);
  brute.clear();
  for (auto& r : tm.rows) brute.push_back(r.brute.get_si());
  CHECK(brute == std::vector<long>{10, 0, 6, 0});

  const auto ext = verify(build_instance(TheoremId::Ext, {.n = 3, .k = 3}), VerifyMode::AllExponents);
  for (auto& r : ext.rows) CHECK(r.brute == 1);
  CHECK(ext.overall);
}

TEST_CASE("size guard") {
  const auto big = build_instance(TheoremId::Ord, {.n = 11});
  CHECK_THROWS_AS(verify(big, VerifyMode::Divisors), SizeGuardExceeded);
  CHECK(default_size_guard(build_instance(TheoremId::OrdDeg, {.degrees = degs({2, 2})})) == 9);
  CHECK(default_size_guard(build_instance(TheoremId::TMn, {.n = 2})) == 5);
  CHECK_THROWS_AS(verify(build_instance(TheoremId::TMn, {.n = 3}), VerifyMode::Divisors, 1, 2), SizeGuardExceeded);
  setenv("SIEVE_FOREST_SIZE_GUARD", "2", 1);
  CHECK(default_size_guard(big) == 2);
  CHECK_THROWS_AS(verify(build_instance(TheoremId::Ord, {.n = 3}), VerifyMode::Divisors), SizeGuardExceeded);
  unsetenv("SIEVE_FOREST_SIZE_GUARD");
  CHECK(default_size_guard(big) == 10);
}

TEST_CASE("every small sweep instance sieves") {
  for (TheoremId id : all_theorems()) {
    const auto params = sweep_params(id);
    CHECK(!params.empty());
    for (const auto& p : params) {
      const auto inst = build_instance(id, p);
      if (instance_size(inst) > 4) continue;
      const auto rep = verify(inst, VerifyMode::AllExponents, 2);
      INFO(theorem_name(id), " ", rep.family);
      CHECK(rep.overall);
    }
  }
}

TEST_CASE("polynomial invariants over the sweep") {
  for (TheoremId id : all_theorems()) {
    for (const auto& p : sweep_params(id)) {
      const auto inst = build_instance(id, p);
      INFO(theorem_name(id), " ", csp_family_label(inst.family));
      const PolyCheck c = check_poly_nonneg(inst);
      REQUIRE(c.ok());
      CHECK(c.reciprocal);
      const QPolynomial q = to_polynomial(inst.polynomial);
      const BigInt count = std::visit(
          [](const auto& f) -> BigInt {
            if constexpr (std::is_same_v<std::decay_t<decltype(f)>, TreeFamily>) return closed_count(f);
            else return closed_count_maps(f);
          },
          inst.family);
      CHECK(q.at_one() == count);
      if (instance_size(inst) <= 6) {
        const unsigned m = static_cast<unsigned>(inst.order);
        for (unsigned e = 0; e < m; ++e) {
          const unsigned d = m / std::gcd(e, m);
          CHECK(eval_at_power(q, m, e) == eval_at_primitive_root(q, d));
        }
      }
    }
  }
  CHECK_FALSE(check_poly_nonneg(build_instance(TheoremId::Ord, {.n = 3})).unimodal);
}

TEST_CASE("sweep ranges") {
  CHECK(sweep_params(TheoremId::Ord).size() == 12);
  CHECK(sweep_params(TheoremId::TMn).size() == 5);
  CHECK(sweep_params(TheoremId::NcmRotation).size() == 8);
  for (const auto& p : sweep_params(TheoremId::OrdLeaves)) CHECK(p.n <= 10);
}

TEST_CASE("summation identities") {
  const auto s = sum_identity_sides(SumIdentity::RefinedLeaves, 3);
  CHECK(s.lhs == poly({1, 0, 1, 1, 1, 0, 1}));
  const auto tm = sum_identity_sides(SumIdentity::ChuVandermondeTM, 2);
  CHECK(tm.rhs.to_string() == "1 + 2q^2 + q^3 + 2q^4 + q^5 + 2q^6 + q^8");
  for (int n = 2; n <= 10; ++n) CHECK(check_sum_identity(SumIdentity::RefinedLeaves, n));
  for (int n = 1; n <= 10; ++n) CHECK(check_sum_identity(SumIdentity::ChuVandermondeTM, n));
  CHECK_THROWS_AS(sum_identity_sides(SumIdentity::RefinedLeaves, 1), std::invalid_argument);
}
