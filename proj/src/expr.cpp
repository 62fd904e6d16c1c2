#include "qbundle/expr.hpp"

#include "qbundle/lexer.hpp"

namespace qb {

namespace {

using LegValue = std::map<int, NCPoly>;  // t-degree -> coefficient

void add_into(LegValue& acc, const LegValue& v, const QRat& sign) {
  for (const auto& [d, p] : v) {
    NCPoly& slot = acc[d];
    slot.add_scaled(p, sign);
    if (slot.is_zero()) acc.erase(d);
  }
}

class ExprParser {
 public:
  ExprParser(std::vector<const Presentation*> legs, std::string_view text, bool allow_t)
      : legs_(std::move(legs)), ts_(tokenize(text)), allow_t_(allow_t) {}

  TTensor parse() {
    TTensor acc;
    bool negate = false;
    if (ts_.accept_symbol("-")) negate = true;
    else ts_.accept_symbol("+");
    add_term(acc, negate);
    for (;;) {
      if (ts_.accept_symbol("+")) add_term(acc, false);
      else if (ts_.accept_symbol("-")) add_term(acc, true);
      else break;
    }
    if (!ts_.at_end()) fail("unexpected '" + ts_.peek().text + "'");
    return acc;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, ts_.peek().position); }

  void add_term(TTensor& acc, bool negate) {
    std::vector<LegValue> factors;
    factors.push_back(leg(0));
    while (ts_.peek().kind == TokenKind::tensor) {
      ts_.next();
      if (factors.size() >= legs_.size()) fail("too many tensor legs (expected " + std::to_string(legs_.size()) + ")");
      factors.push_back(leg(factors.size()));
    }
    if (factors.size() != legs_.size())
      fail("expected " + std::to_string(legs_.size()) + " tensor legs, found " + std::to_string(factors.size()));
    const QRat sign(negate ? -1 : 1);
    std::vector<NCPoly> pick(factors.size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int tdeg) {
      if (i == factors.size()) {
        auto it = acc.try_emplace(tdeg, TensorElem(legs_)).first;
        it->second.add_pure(sign, pick);
        if (it->second.is_zero()) acc.erase(it);
        return;
      }
      for (const auto& [d, p] : factors[i]) {
        pick[i] = p;
        rec(i + 1, tdeg + d);
      }
    };
    rec(0, 0);
  }

  static LegValue scalar_value(const QRat& c) {
    LegValue v;
    if (!c.is_zero()) v[0] = NCPoly(c);
    return v;
  }

  static bool is_scalar(const LegValue& v) {
    if (v.empty()) return true;
    return v.size() == 1 && v.begin()->first == 0 && v.begin()->second.is_scalar();
  }

  static QRat scalar_of(const LegValue& v) { return v.empty() ? QRat() : v.begin()->second.constant_term(); }

  LegValue multiply(std::size_t leg_index, const LegValue& a, const LegValue& b) const {
    LegValue out;
    const Presentation& p = *legs_[leg_index];
    for (const auto& [da, pa] : a)
      for (const auto& [db, pb] : b) add_into(out, {{da + db, p.multiply(pa, pb)}}, QRat(1));
    return out;
  }

  bool starts_factor() const {
    const Token& t = ts_.peek();
    return t.kind == TokenKind::number || t.kind == TokenKind::identifier ||
           (t.kind == TokenKind::symbol && t.text == "(");
  }

  LegValue leg(std::size_t leg_index) {
    LegValue acc = factor(leg_index);
    for (;;) {
      if (ts_.accept_symbol("*")) {
        acc = multiply(leg_index, acc, factor(leg_index));
      } else if (ts_.at_symbol("/")) {
        ts_.next();
        const std::size_t pos = ts_.peek().position;
        LegValue d = factor(leg_index);
        if (!is_scalar(d)) throw ParseError("division by a non-scalar", pos);
        QRat s = scalar_of(d);
        if (s.is_zero()) throw ParseError("division by zero", pos);
        acc = multiply(leg_index, acc, scalar_value(s.inverse()));
      } else if (starts_factor()) {
        acc = multiply(leg_index, acc, factor(leg_index));
      } else {
        break;
      }
    }
    return acc;
  }

  LegValue factor(std::size_t leg_index) {
    LegValue base = atom(leg_index);
    if (ts_.accept_symbol("^")) {
      const bool neg = ts_.accept_symbol("-");
      const Token& t = ts_.next();
      if (t.kind != TokenKind::number) throw ParseError("expected integer exponent", t.position);
      int k = std::stoi(t.text);
      if (neg) {
        if (!is_scalar(base)) throw ParseError("negative exponent on a non-scalar", t.position);
        QRat s = scalar_of(base);
        if (s.is_zero()) throw ParseError("negative power of zero", t.position);
        return scalar_value(s.pow(-k));
      }
      LegValue r = scalar_value(QRat(1));
      for (int i = 0; i < k; ++i) r = multiply(leg_index, r, base);
      return r;
    }
    return base;
  }

  LegValue atom(std::size_t leg_index) {
    const Token& t = ts_.next();
    if (t.kind == TokenKind::number) return scalar_value(QRat(IntPoly(mpz_class(t.text))));
    if (t.kind == TokenKind::identifier) {
      if (t.text == "q") return scalar_value(QRat::q());
      if (t.text == "t") {
        if (!allow_t_) throw ParseError("symbol t is only allowed in join expressions", t.position);
        LegValue v;
        v[1] = NCPoly::one();
        return v;
      }
      auto g = legs_[leg_index]->find(t.text);
      if (!g)
        throw ParseError("unknown generator '" + t.text + "' in " + legs_[leg_index]->name(), t.position);
      LegValue v;
      v[0] = legs_[leg_index]->normal_form(Word{*g});
      return v;
    }
    if (t.kind == TokenKind::symbol && t.text == "(") {
      LegValue acc;
      bool negate = false;
      if (ts_.accept_symbol("-")) negate = true;
      else ts_.accept_symbol("+");
      add_into(acc, leg(leg_index), QRat(negate ? -1 : 1));
      for (;;) {
        if (ts_.accept_symbol("+")) add_into(acc, leg(leg_index), QRat(1));
        else if (ts_.accept_symbol("-")) add_into(acc, leg(leg_index), QRat(-1));
        else break;
      }
      ts_.expect_symbol(")");
      return acc;
    }
    throw ParseError("unexpected '" + (t.kind == TokenKind::end ? std::string("end of input") : t.text) + "'",
                     t.position);
  }

  std::vector<const Presentation*> legs_;
  TokenStream ts_;
  bool allow_t_;
};

}  // namespace

NCPoly parse_expression(const Presentation& p, std::string_view text) {
  TensorElem t = parse_tensor({&p}, text);
  return t.as_poly();
}

TensorElem parse_tensor(const std::vector<const Presentation*>& legs, std::string_view text) {
  TTensor r = ExprParser(legs, text, false).parse();
  if (r.empty()) return TensorElem(legs);
  return r.at(0);
}

TTensor parse_t_tensor(const std::vector<const Presentation*>& legs, std::string_view text) {
  return ExprParser(legs, text, true).parse();
}

}  // namespace qb
