#include "sieve/qseries.hpp"

#include "sieve/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace sieve {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::constant(const BigInt& c) { return QPolynomial({c}); }

QPolynomial QPolynomial::monomial(unsigned exponent, const BigInt& c) {
  std::vector<BigInt> v(exponent + 1, BigInt(0));
  v[exponent] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt QPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(out));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) { return *this = *this * rhs; }

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << "q";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

PolyDivision divmod(const QPolynomial& num, const QPolynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
  std::vector<BigInt> rem = num.coeffs();
  const auto& dc = den.coeffs();
  const std::size_t dn = dc.size();
  if (rem.size() < dn) return {QPolynomial{}, num};
  std::vector<BigInt> quot(rem.size() - dn + 1, BigInt(0));
  const BigInt& lead = dc.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + dn - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw NotPolynomial("divmod: leading coefficient does not divide over Z");
    }
    BigInt f = top / lead;
    quot[k] = f;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= f * dc[j];
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QProductExpr& QProductExpr::operator*=(const QProductExpr& rhs) {
  shift += rhs.shift;
  num.insert(num.end(), rhs.num.begin(), rhs.num.end());
  den.insert(den.end(), rhs.den.begin(), rhs.den.end());
  scalar *= rhs.scalar;
  return *this;
}

QProductExpr& QProductExpr::times_qint(unsigned a) {
  num.push_back(a);
  return *this;
}

QProductExpr& QProductExpr::over_qint(unsigned b) {
  den.push_back(b);
  return *this;
}

QProductExpr QProductExpr::cancelled() const {
  std::vector<unsigned> a = num, b = den;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  QProductExpr out;
  out.shift = shift;
  out.scalar = scalar;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.num));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out.den));
  return out;
}

QPolynomial q_int(unsigned m) {
  if (m == 0) throw std::invalid_argument("q_int: m must be >= 1");
  return QPolynomial(std::vector<BigInt>(m, BigInt(1)));
}

QProductExpr q_multinomial(unsigned total, const std::vector<unsigned>& parts) {
  unsigned sum = 0;
  for (unsigned p : parts) sum += p;
  if (sum != total) throw std::invalid_argument("q_multinomial: parts do not sum to the total");
  QProductExpr e;
  for (unsigned a = 1; a <= total; ++a) e.num.push_back(a);
  for (unsigned p : parts) {
    for (unsigned b = 1; b <= p; ++b) e.den.push_back(b);
  }
  return e;
}

QProductExpr q_binomial(unsigned top, unsigned bottom) {
  if (bottom > top) throw std::invalid_argument("q_binomial: bottom exceeds top");
  return q_multinomial(top, {bottom, top - bottom});
}

namespace {

std::mutex cyclotomic_mutex;
std::map<unsigned, QPolynomial> cyclotomic_cache;

QPolynomial cyclotomic_uncached(unsigned d) {
  QPolynomial p = QPolynomial::monomial(d) - QPolynomial::constant(1);
  for (unsigned k = 1; k < d; ++k) {
    if (d % k != 0) continue;
    auto [q, r] = divmod(p, cyclotomic(k));
    if (!r.is_zero()) throw std::logic_error("cyclotomic: inexact division");
    p = std::move(q);
  }
  return p;
}

QPolynomial expand_product(std::vector<unsigned> indices) {
  std::sort(indices.begin(), indices.end());
  QPolynomial acc = QPolynomial::constant(1);
  for (unsigned a : indices) acc *= q_int(a);
  return acc;
}

}  // namespace

QPolynomial cyclotomic(unsigned d) {
  if (d == 0) throw std::invalid_argument("cyclotomic: d must be >= 1");
  {
    std::lock_guard lock(cyclotomic_mutex);
    auto it = cyclotomic_cache.find(d);
    if (it != cyclotomic_cache.end()) return it->second;
  }
  QPolynomial p = cyclotomic_uncached(d);
  std::lock_guard lock(cyclotomic_mutex);
  cyclotomic_cache.emplace(d, p);
  return p;
}

QPolynomial to_polynomial(const QProductExpr& expr) {
  for (unsigned a : expr.num) {
    if (a == 0) throw std::invalid_argument("to_polynomial: q-integer index 0");
  }
  for (unsigned b : expr.den) {
    if (b == 0) throw std::invalid_argument("to_polynomial: q-integer index 0");
  }
  QProductExpr e = expr.cancelled();
  Rational s = e.scalar;
  s.canonicalize();
  QPolynomial top = expand_product(e.num) * QPolynomial::constant(s.get_num());
  QPolynomial bottom = expand_product(e.den);
  auto [quot, rem] = divmod(top, bottom);
  if (!rem.is_zero()) throw NotPolynomial("to_polynomial: non-zero remainder " + rem.to_string());
  std::vector<BigInt> c = quot.coeffs();
  const BigInt& sd = s.get_den();
  for (auto& x : c) {
    if (!mpz_divisible_p(x.get_mpz_t(), sd.get_mpz_t())) {
      throw NotPolynomial("to_polynomial: scalar leaves non-integer coefficients");
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), sd.get_mpz_t());
  }
  return QPolynomial(std::move(c)) * QPolynomial::monomial(e.shift);
}

int phi_multiplicity(const QProductExpr& expr, unsigned d) {
  if (d < 2) throw std::invalid_argument("phi_multiplicity: d must be >= 2");
  int m = 0;
  for (unsigned a : expr.num) m += (a % d == 0);
  for (unsigned b : expr.den) m -= (b % d == 0);
  return m;
}

CyclotomicResidue::CyclotomicResidue(unsigned order, const QPolynomial& p)
    : order_(order), rep_(divmod(p, cyclotomic(order)).remainder) {}

CyclotomicResidue CyclotomicResidue::one(unsigned order) {
  return CyclotomicResidue(order, QPolynomial::constant(1));
}

BigInt CyclotomicResidue::constant_value() const {
  if (!is_constant()) {
    throw NonIntegerValue("value at a primitive " + std::to_string(order_) +
                          "-th root of unity is not an integer: residue " + rep_.to_string());
  }
  return rep_.coeff(0);
}

CyclotomicResidue& CyclotomicResidue::operator*=(const CyclotomicResidue& rhs) {
  if (rhs.order_ != order_) throw std::invalid_argument("CyclotomicResidue: order mismatch");
  rep_ = divmod(rep_ * rhs.rep_, cyclotomic(order_)).remainder;
  return *this;
}

CyclotomicResidue& CyclotomicResidue::operator+=(const CyclotomicResidue& rhs) {
  if (rhs.order_ != order_) throw std::invalid_argument("CyclotomicResidue: order mismatch");
  rep_ += rhs.rep_;
  return *this;
}

BigInt eval_at_primitive_root(const QPolynomial& p, unsigned d) {
  if (d == 0) throw std::invalid_argument("eval_at_primitive_root: d must be >= 1");
  return CyclotomicResidue(d, p).constant_value();
}

BigInt eval_expr_at_root(const QProductExpr& expr, unsigned d) {
  if (d == 0) throw std::invalid_argument("eval_expr_at_root: d must be >= 1");
  if (d == 1) {
    Rational v = expr.scalar;
    for (unsigned a : expr.num) v *= a;
    for (unsigned b : expr.den) v /= b;
    v.canonicalize();
    if (v.get_den() != 1) throw NonIntegerValue("value at q = 1 is not an integer");
    return v.get_num();
  }
  const int mult = phi_multiplicity(expr, d);
  if (mult < 0) throw PoleAtRoot("pole of order " + std::to_string(-mult) + " at a primitive " +
                                 std::to_string(d) + "-th root of unity");
  if (mult > 0) return 0;

  std::map<unsigned, std::vector<unsigned>> top, bottom;
  for (unsigned a : expr.num) top[a % d].push_back(a);
  for (unsigned b : expr.den) bottom[b % d].push_back(b);
  bool pairable = top.size() == bottom.size();
  for (const auto& [r, xs] : top) {
    auto it = bottom.find(r);
    if (it == bottom.end() || it->second.size() != xs.size()) pairable = false;
  }
  if (!pairable) return eval_at_primitive_root(to_polynomial(expr), d);

  // Ratios [a]/[b] with a = b mod d tend to a/b when d | a, and to 1 otherwise.
  Rational value = expr.scalar;
  auto zero_class = top.find(0);
  if (zero_class != top.end()) {
    auto xs = zero_class->second;
    auto ys = bottom.at(0);
    std::sort(xs.rbegin(), xs.rend());
    std::sort(ys.rbegin(), ys.rend());
    for (std::size_t i = 0; i < xs.size(); ++i) value *= Rational(xs[i], ys[i]);
  }
  value.canonicalize();
  if (value == 0) return 0;
  if (value.get_den() != 1) throw NonIntegerValue("paired value is not an integer");
  CyclotomicResidue shifted(d, QPolynomial::monomial(expr.shift));
  return value.get_num() * shifted.constant_value();
}

ShapeFlags shape_predicates(const QPolynomial& p) {
  ShapeFlags f;
  const auto& c = p.coeffs();
  f.nonneg = std::all_of(c.begin(), c.end(), [](const BigInt& x) { return x >= 0; });
  f.is_reciprocal = std::equal(c.begin(), c.end(), c.rbegin());
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  f.is_unimodal = f.nonneg && i + 1 >= c.size();
  return f;
}

}  // namespace sieve
