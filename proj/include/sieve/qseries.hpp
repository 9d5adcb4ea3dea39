#pragma once

// Exact arithmetic on q-integers, q-multinomials, cyclotomic polynomials and
// evaluation at primitive roots of unity. Everything is over the integers
// (GMP); there is no floating point anywhere in this module.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace sieve {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when a product expression does not divide out to a polynomial.
class NotPolynomial : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when P(omega) is not a rational integer for the requested order.
class NonIntegerValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a product expression has a pole at the requested root.
class PoleAtRoot : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense polynomial in q with arbitrary-precision integer coefficients.
/// Index i of coeffs() is the coefficient of q^i; the leading coefficient is
/// never zero, and the zero polynomial has no coefficients at all.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);

  static QPolynomial constant(const BigInt& c);
  static QPolynomial monomial(unsigned exponent, const BigInt& c = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const;
  BigInt at_one() const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Ascending powers with explicit coefficients, e.g. "1 + 2q^2 + q^3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct PolyDivision {
  QPolynomial quotient;
  QPolynomial remainder;
};

/// Long division over Z. Throws NotPolynomial if some step needs a leading
/// coefficient that does not divide exactly (never happens for monic divisors).
PolyDivision divmod(const QPolynomial& num, const QPolynomial& den);

/// scalar * q^shift * prod_{a in num}[a]_q / prod_{b in den}[b]_q
struct QProductExpr {
  unsigned shift = 0;
  std::vector<unsigned> num;
  std::vector<unsigned> den;
  Rational scalar{1};

  QProductExpr& operator*=(const QProductExpr& rhs);
  friend QProductExpr operator*(QProductExpr a, const QProductExpr& b) { return a *= b; }
  /// Multiplies by [a]_q.
  QProductExpr& times_qint(unsigned a);
  /// Divides by [b]_q.
  QProductExpr& over_qint(unsigned b);

  /// The same value with common indices removed from num and den (both sorted).
  QProductExpr cancelled() const;
};

/// 1 + q + ... + q^(m-1). Throws std::invalid_argument for m = 0.
QPolynomial q_int(unsigned m);

/// [M]! / prod [parts_i]!. Throws std::invalid_argument if sum(parts) != M.
QProductExpr q_multinomial(unsigned total, const std::vector<unsigned>& parts);
QProductExpr q_binomial(unsigned top, unsigned bottom);

/// The d-th cyclotomic polynomial. Throws std::invalid_argument for d = 0.
QPolynomial cyclotomic(unsigned d);

/// Expands and divides exactly; throws NotPolynomial on a non-zero remainder.
QPolynomial to_polynomial(const QProductExpr& expr);

/// Multiplicity of Phi_d in the expression (negative means a pole). d >= 2.
int phi_multiplicity(const QProductExpr& expr, unsigned d);

/// Element of Z[q]/(Phi_d(q)), stored reduced (length < deg Phi_d).
class CyclotomicResidue {
 public:
  CyclotomicResidue(unsigned order, const QPolynomial& p);
  static CyclotomicResidue one(unsigned order);

  unsigned order() const { return order_; }
  const QPolynomial& representative() const { return rep_; }
  bool is_constant() const { return rep_.degree() <= 0; }
  /// Throws NonIntegerValue unless is_constant().
  BigInt constant_value() const;

  CyclotomicResidue& operator*=(const CyclotomicResidue& rhs);
  CyclotomicResidue& operator+=(const CyclotomicResidue& rhs);

 private:
  unsigned order_;
  QPolynomial rep_;
};

/// P evaluated at a primitive d-th root of unity, checked to be an integer.
/// d = 1 means q = 1.
BigInt eval_at_primitive_root(const QPolynomial& p, unsigned d);

/// Independent route to eval_at_primitive_root(to_polynomial(expr), d): pairs
/// q-integers congruent mod d and multiplies the limits of their ratios.
/// Falls back to the polynomial route when the pairing is impossible.
BigInt eval_expr_at_root(const QProductExpr& expr, unsigned d);

struct ShapeFlags {
  bool is_reciprocal = false;
  bool is_unimodal = false;
  bool nonneg = false;
};

ShapeFlags shape_predicates(const QPolynomial& p);

}  // namespace sieve
