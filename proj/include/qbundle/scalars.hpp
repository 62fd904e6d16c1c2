#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qbundle/error.hpp"

namespace qb {

/// Dense polynomial in q with arbitrary-precision integer coefficients,
/// lowest degree first. The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c);                       // NOLINT(google-explicit-constructor)
  IntPoly(const mpz_class& c);           // NOLINT(google-explicit-constructor)
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly monomial(const mpz_class& c, int degree);
  static IntPoly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& leading() const { return coeffs_.back(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(int k) const;
  /// Lowest degree with a nonzero coefficient; -1 for zero.
  int low_degree() const;
  bool is_monomial() const;

  mpz_class content() const;
  IntPoly primitive_part() const;
  IntPoly operator-() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  IntPoly scaled(const mpz_class& c) const;
  /// Exact division by an integer that divides every coefficient.
  IntPoly divided_exact(const mpz_class& c) const;
  /// Exact division by a polynomial known to divide this one.
  IntPoly divided_exact(const IntPoly& d) const;
  IntPoly shifted_down(int k) const;

  mpq_class evaluate(const mpq_class& x) const;

  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Element of Q(q) in canonical form: numerator and denominator share no
/// common factor in Z[q] and the denominator has positive leading coefficient.
class QRat {
 public:
  QRat() : num_(), den_(1) {}
  QRat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(const mpq_class& c);           // NOLINT(google-explicit-constructor)
  explicit QRat(IntPoly num) : num_(std::move(num)), den_(1) {}
  QRat(IntPoly num, IntPoly den);

  static QRat q() { return QRat(IntPoly::q()); }
  /// q^k for any integer k.
  static QRat q_pow(int k);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value as a rational number; only meaningful when is_constant().
  mpq_class constant_value() const;

  QRat operator-() const;
  QRat inverse() const;
  QRat pow(int k) const;

  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat& operator+=(const QRat& b) { return *this = *this + b; }
  QRat& operator-=(const QRat& b) { return *this = *this - b; }
  QRat& operator*=(const QRat& b) { return *this = *this * b; }
  QRat& operator/=(const QRat& b) { return *this = *this / b; }

  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

  /// Specialization at q = q0. Throws PoleError if the denominator vanishes.
  mpq_class evaluate(const mpq_class& q0) const;

  /// Canonical text in the shared scalar grammar.
  std::string to_string() const;
  /// True if to_string() needs parentheses when used as a coefficient.
  bool is_compound() const;

 private:
  void canonicalize();
  IntPoly num_;
  IntPoly den_;
};

enum class ArithOp { add, sub, mul, div };

QRat arith(const QRat& a, const QRat& b, ArithOp op);
mpq_class evaluate(const QRat& f, const mpq_class& q0);
/// Parses the scalar grammar: integers, q, + - * /, ^ with integer exponents,
/// parentheses. Throws ParseError with the offending position.
QRat parse_scalar(std::string_view text);
mpq_class parse_rational(std::string_view text);
std::string format_rational(const mpq_class& r);

}  // namespace qb
