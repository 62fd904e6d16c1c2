#include "qbundle/lexer.hpp"

#include <cctype>

#include "qbundle/error.hpp"
#include "qbundle/scalars.hpp"

namespace qb {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({TokenKind::number, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      if (j < text.size() && text[j] == '*') {
        const bool operand_follows =
            j + 1 < text.size() && (ident_char(text[j + 1]) || text[j + 1] == '(');
        if (!operand_follows) ++j;
      }
      out.push_back({TokenKind::identifier, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (text.substr(i, 3) == "(x)") {
      out.push_back({TokenKind::tensor, "(x)", i});
      i += 3;
      continue;
    }
    switch (c) {
      case '+': case '-': case '*': case '/': case '^':
      case '(': case ')': case ',': case '=': case '<': case ':':
        out.push_back({TokenKind::symbol, std::string(1, c), i});
        ++i;
        continue;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({TokenKind::end, "", text.size()});
  return out;
}

void TokenStream::expect_symbol(std::string_view s) {
  if (!accept_symbol(s)) {
    const Token& t = peek();
    throw ParseError("expected '" + std::string(s) + "' but found '" +
                         (t.kind == TokenKind::end ? std::string("end of input") : t.text) + "'",
                     t.position);
  }
}

// ---------------------------------------------------------------- scalar grammar

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : ts_(tokenize(text)) {}

  QRat parse() {
    QRat v = expr();
    if (!ts_.at_end()) throw ParseError("unexpected '" + ts_.peek().text + "'", ts_.peek().position);
    return v;
  }

 private:
  QRat expr() {
    QRat acc;
    bool negate = false;
    if (ts_.accept_symbol("-")) negate = true;
    else ts_.accept_symbol("+");
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (ts_.accept_symbol("+")) acc += term();
      else if (ts_.accept_symbol("-")) acc -= term();
      else break;
    }
    return acc;
  }

  bool starts_factor() const {
    const Token& t = ts_.peek();
    return t.kind == TokenKind::number || t.kind == TokenKind::identifier || (t.kind == TokenKind::symbol && t.text == "(");
  }

  QRat term() {
    QRat acc = power();
    for (;;) {
      if (ts_.accept_symbol("*")) {
        acc *= power();
      } else if (ts_.at_symbol("/")) {
        const std::size_t pos = ts_.next().position;
        QRat d = power();
        if (d.is_zero()) throw ParseError("division by zero", pos);
        acc /= d;
      } else if (starts_factor()) {
        acc *= power();
      } else {
        break;
      }
    }
    return acc;
  }

  QRat power() {
    QRat base = atom();
    if (ts_.accept_symbol("^")) {
      bool neg = ts_.accept_symbol("-");
      const Token& t = ts_.next();
      if (t.kind != TokenKind::number) throw ParseError("expected integer exponent", t.position);
      int k = std::stoi(t.text);
      if (neg) {
        if (base.is_zero()) throw ParseError("negative power of zero", t.position);
        k = -k;
      }
      base = base.pow(k);
    }
    return base;
  }

  QRat atom() {
    const Token& t = ts_.next();
    if (t.kind == TokenKind::number) return QRat(IntPoly(mpz_class(t.text)));
    if (t.kind == TokenKind::identifier && t.text == "q") return QRat::q();
    if (t.kind == TokenKind::symbol && t.text == "(") {
      QRat v = expr();
      ts_.expect_symbol(")");
      return v;
    }
    throw ParseError("unexpected '" + (t.kind == TokenKind::end ? std::string("end of input") : t.text) + "'",
                     t.position);
  }

  TokenStream ts_;
};

}  // namespace

QRat parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace qb
