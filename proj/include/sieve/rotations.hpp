#pragma once

// The ordinary, leaf, internal and degree-delta rotations on plane trees,
// orbits, and brute-force and closed-form fixed-point counts.

#include "sieve/trees.hpp"

#include <string>
#include <variant>
#include <vector>

namespace sieve {

namespace kind {
struct Ordinary {};
struct Leaf {};
struct Internal {};
struct Degree { int delta; };
}  // namespace kind

using RotationKind = std::variant<kind::Ordinary, kind::Leaf, kind::Internal, kind::Degree>;

class IncompatibleKind : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoEligibleCorner : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "ordinary", "leaf", "internal", "degree(3)".
std::string kind_name(const RotationKind& k);

/// Ordinary works on any family; the constrained kinds need the matching
/// root constraint (Degree(1) also accepts the leaf-rooted families).
bool kind_compatible(const TreeFamily& f, const RotationKind& k);

/// 2n, k, 2n-k or delta*n_delta. Throws IncompatibleKind.
long rotation_order(const TreeFamily& f, const RotationKind& k);

/// Ordinary moves the root to the next corner in counterclockwise order; the
/// others skip corners whose node is not of the required degree class.
/// Negative steps go backwards. Throws NoEligibleCorner.
PlaneTree rotate(const PlaneTree& t, const RotationKind& k, long steps = 1);

/// The orbit starting at t, in rotation order. Throws IncompatibleKind when
/// the root corner itself is not of the kind's degree class.
std::vector<PlaneTree> orbit(const PlaneTree& t, const RotationKind& k);

struct FixQuery {
  TreeFamily family;
  RotationKind kind;
  long e = 0;
};

/// Number of members t with rotate(t, kind, e) == t. jobs > 1 splits the
/// members across threads.
BigInt fix_count_bruteforce(const FixQuery& q, int jobs = 1);

/// True when a closed fixed-point formula exists for this family and kind.
bool closed_fix_supported(const TreeFamily& f, const RotationKind& k);

/// Piecewise closed formula after reducing e to gcd(e, order). Degenerate
/// families (see formula_degenerate) are answered by enumeration.
/// Throws IncompatibleKind when no formula applies.
BigInt fix_count_closed(const FixQuery& q);

/// Member by member: R_x^e(t) == t iff R^f(t) == t with f = 2n/d and
/// d = order/gcd(e, order). Families must carry a root constraint.
bool check_rotation_transfer(const TreeFamily& f, long e);

/// The constrained kind that acts on a family with a root constraint,
/// Ordinary otherwise.
RotationKind natural_kind(const TreeFamily& f);

}  // namespace sieve
