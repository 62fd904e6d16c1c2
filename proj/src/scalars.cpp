#include "qbundle/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace qb {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

IntPoly::IntPoly(const mpz_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
  if (c == 0) return {};
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

int IntPoly::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

bool IntPoly::is_monomial() const {
  return !is_zero() && low_degree() == degree();
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class c = content();
  if (leading() < 0) c = -c;
  return divided_exact(c);
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

IntPoly IntPoly::divided_exact(const mpz_class& c) const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

IntPoly IntPoly::divided_exact(const IntPoly& d) const {
  if (d.is_zero()) throw DivisionByZero();
  if (is_zero()) return {};
  std::vector<mpz_class> rem = coeffs_;
  const int dd = d.degree();
  const int nd = degree();
  if (nd < dd) throw Error("IntPoly::divided_exact: divisor does not divide");
  std::vector<mpz_class> quot(static_cast<std::size_t>(nd - dd) + 1);
  for (int k = nd - dd; k >= 0; --k) {
    const mpz_class& top = rem[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.leading().get_mpz_t()))
      throw Error("IntPoly::divided_exact: divisor does not divide");
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
    quot[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * d.coeffs_[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem)
    if (r != 0) throw Error("IntPoly::divided_exact: divisor does not divide");
  return IntPoly(std::move(quot));
}

IntPoly IntPoly::shifted_down(int k) const {
  if (k <= 0 || is_zero()) return *this;
  return IntPoly(std::vector<mpz_class>(coeffs_.begin() + k, coeffs_.end()));
}

mpq_class IntPoly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  const mpz_class lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const mpz_class la = a.leading();
    a = a.scaled(lb) - IntPoly::monomial(la, shift) * b;
  }
  return a;
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part().scaled(b.is_zero() ? mpz_class(0) : b.content());
  if (b.is_zero()) return a.primitive_part().scaled(a.content());
  mpz_class cg;
  {
    const mpz_class ca = a.content();
    const mpz_class cb = b.content();
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  if (a.is_constant() || b.is_constant()) return IntPoly(cg);
  // Common power of q factors out cheaply.
  const int low = std::min(a.low_degree(), b.low_degree());
  IntPoly x = a.shifted_down(low).primitive_part();
  IntPoly y = b.shifted_down(low).primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.is_constant()) {
      x = IntPoly(1);
      break;
    }
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? IntPoly() : r.primitive_part();
  }
  return (x.primitive_part() * monomial(1, low)).scaled(cg);
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    mpz_class c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "q";
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- QRat

QRat::QRat(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

QRat::QRat(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

QRat QRat::q_pow(int k) {
  if (k >= 0) return QRat(IntPoly::monomial(1, k));
  return QRat(IntPoly(1), IntPoly::monomial(1, -k));
}

void QRat::canonicalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  if (!den_.is_one()) {
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!g.is_one()) {
      if (g.is_constant()) {
        num_ = num_.divided_exact(g.leading());
        den_ = den_.divided_exact(g.leading());
      } else {
        num_ = num_.divided_exact(g);
        den_ = den_.divided_exact(g);
      }
    }
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

mpq_class QRat::constant_value() const {
  mpq_class r(num_.coeff(0), den_.coeff(0));
  r.canonicalize();
  return r;
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat QRat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return QRat(den_, num_);
}

QRat QRat::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  QRat result(1);
  QRat base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

QRat operator+(const QRat& a, const QRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return QRat(a.num_ + b.num_);
    return QRat(a.num_ + b.num_, a.den_);
  }
  return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) return QRat(a.num_ * b.num_);
  return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) {
  if (b.is_zero()) throw DivisionByZero();
  return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

mpq_class QRat::evaluate(const mpq_class& q0) const {
  const mpq_class d = den_.evaluate(q0);
  if (d == 0) throw PoleError(q0.get_str());
  mpq_class r = num_.evaluate(q0) / d;
  r.canonicalize();
  return r;
}

bool QRat::is_compound() const {
  if (!den_.is_one()) return !(den_.is_monomial() && num_.is_monomial());
  int terms = 0;
  for (const auto& c : num_.coeffs())
    if (c != 0) ++terms;
  return terms > 1;
}

namespace {

std::string laurent_term(const mpq_class& c, int k, bool first) {
  std::ostringstream os;
  mpq_class a = abs(c);
  const bool neg = c < 0;
  if (first) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  if (k == 0) {
    os << a.get_str();
  } else {
    if (a != 1) os << a.get_str() << "*";
    os << "q";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace

std::string QRat::to_string() const {
  if (den_.is_one()) return num_.to_string();
  if (den_.is_monomial()) {
    // Laurent form: (sum c_k q^k) / (d q^m) printed as sum (c_k/d) q^(k-m).
    const int m = den_.degree();
    const mpz_class& d = den_.leading();
    std::string out;
    bool first = true;
    for (int k = num_.degree(); k >= 0; --k) {
      const mpz_class c = num_.coeff(k);
      if (c == 0) continue;
      mpq_class r(c, d);
      r.canonicalize();
      out += laurent_term(r, k - m, first);
      first = false;
    }
    return out;
  }
  std::string n = num_.to_string();
  bool n_simple = true;
  for (std::size_t i = 1; i < n.size(); ++i)
    if (n[i] == ' ') n_simple = false;
  return (n_simple ? n : "(" + n + ")") + "/(" + den_.to_string() + ")";
}

QRat arith(const QRat& a, const QRat& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  return {};
}

mpq_class evaluate(const QRat& f, const mpq_class& q0) { return f.evaluate(q0); }

mpq_class parse_rational(std::string_view text) {
  QRat r = parse_scalar(text);
  if (!r.is_constant()) throw ParseError("expected a rational number", 0);
  return r.constant_value();
}

std::string format_rational(const mpq_class& r) { return r.get_str(); }

}  // namespace qb
