#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qb {

enum class TokenKind { number, identifier, symbol, tensor, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

/// Splits expression text into tokens. Identifiers may carry one trailing
/// `*` (the star partner convention, e.g. `alpha*`) when the star is not
/// immediately followed by an operand; `a*b` still lexes as a product.
/// `(x)` is the tensor separator.
std::vector<Token> tokenize(std::string_view text);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_symbol(std::string_view s) const {
    return peek().kind == TokenKind::symbol && peek().text == s;
  }
  bool accept_symbol(std::string_view s) {
    if (!at_symbol(s)) return false;
    next();
    return true;
  }
  void expect_symbol(std::string_view s);
  bool at_end() const { return peek().kind == TokenKind::end; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace qb
