#pragma once

// Cyclic sieving instances (family, rotation, polynomial) for every result
// covered by the library, the triple-agreement verifier, polynomial shape
// checks and the two summation identities.

#include "sieve/maps.hpp"
#include "sieve/qseries.hpp"
#include "sieve/rotations.hpp"
#include "sieve/trees.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sieve {

enum class TheoremId { Ord, OrdLeaves, Ext, Int, OrdDeg, Delta, IntDeg, TMij, TMn, TMd, BTij, BTd, NcmRotation };

const std::vector<TheoremId>& all_theorems();
/// "ord", "ord_leaves", "ext", "int", "ord_deg", "delta", "int_deg", "tmij",
/// "tmn", "tmd", "btij", "btd", "ncm".
std::string theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);

/// Union of every theorem's parameters; each theorem reads only its own.
/// n is the edge count for trees, the total edge count for tm_n, and the
/// tree edge count for b-trees; degrees describes the tree part.
struct TheoremParams {
  int n = 0, k = 0, i = 0, j = 0, b = 0, delta = 0;
  DegreeDistribution degrees;
  friend bool operator==(const TheoremParams&, const TheoremParams&) = default;
};

class InfeasibleParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using CspFamily = std::variant<TreeFamily, MapFamily>;

struct CspInstance {
  TheoremId theorem;
  TheoremParams params;
  CspFamily family;
  RotationKind kind;  ///< Ordinary for the map families
  long order = 0;
  QProductExpr polynomial;
  /// The product formula breaks down (a [0] factor) and the polynomial is the
  /// constant closed count instead.
  bool degenerate = false;
};

/// Throws InfeasibleParams when the family is empty or the group is trivial.
CspInstance build_instance(TheoremId id, const TheoremParams& params);

std::string csp_family_name(const CspFamily& f);
std::string csp_family_label(const CspFamily& f);
/// Edge count compared against the size guard.
int family_size(const CspFamily& f);
int instance_size(const CspInstance& inst);
/// 10 for tree, b-tree and matching families, 9 for degree-constrained tree
/// families, 5 for tree-rooted maps; SIEVE_FOREST_SIZE_GUARD overrides all.
int default_size_guard(const CspFamily& f);
int default_size_guard(const CspInstance& inst);

enum class VerifyMode { Divisors, AllExponents };

struct VerificationRow {
  long e = 0;
  long d = 1;  ///< order of omega^e
  BigInt brute, closed, poly;
  bool agree = false;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::Ord;
  TheoremParams params;
  std::string family;
  std::string kind;  ///< rotation kind name, "rotation" for the map families
  long order = 0;
  std::vector<VerificationRow> rows;
  bool overall = false;
  /// Closed counts or the polynomial came from enumeration.
  bool fallback = false;
  double seconds = 0;
};

/// guard <= 0 means default_size_guard. Throws SizeGuardExceeded.
VerificationReport verify(const CspInstance& inst, VerifyMode mode, int jobs = 1, int guard = 0);

struct PolyCheck {
  bool polynomial = false;
  bool nonneg = false;
  bool reciprocal = false;
  bool unimodal = false;
  bool ok() const { return polynomial && nonneg; }
};

PolyCheck check_poly_nonneg(const CspInstance& inst);

enum class SumIdentity { RefinedLeaves, ChuVandermondeTM };

struct SumIdentitySides {
  QPolynomial lhs, rhs;
};

/// RefinedLeaves: sum_k q^{k(k-2)} P_ord_leaves(n,k) against P_ord(n).
/// ChuVandermondeTM: sum_{i+j=n} q^{(n+1-i)j} P_tmij(i,j) against P_tmn(n).
SumIdentitySides sum_identity_sides(SumIdentity which, int n);
bool check_sum_identity(SumIdentity which, int n);

/// Parameter sets of the acceptance sweep for one theorem, all feasible.
std::vector<TheoremParams> sweep_params(TheoremId id);

}  // namespace sieve
