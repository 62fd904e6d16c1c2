#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qbundle/scalars.hpp"

namespace qb {

using GenId = std::uint16_t;
/// Sequence of generator ids; the empty word is the unit.
using Word = std::vector<GenId>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (GenId g : w) h = (h ^ g) * 0x100000001b3ull;
    return h ^ w.size();
  }
};

Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);

/// Finite linear combination of words with QRat coefficients. Stored
/// coefficients are never zero. Whether the words are normal is up to the
/// presentation that produced the value.
class NCPoly {
 public:
  using Terms = std::map<Word, QRat>;

  NCPoly() = default;
  explicit NCPoly(const QRat& c) { add_term({}, c); }
  NCPoly(Word w, const QRat& c) { add_term(std::move(w), c); }

  static NCPoly one() { return NCPoly(QRat(1)); }
  static NCPoly word(Word w) { return NCPoly(std::move(w), QRat(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QRat coefficient(const Word& w) const;
  QRat constant_term() const { return coefficient({}); }
  /// True if only the empty word occurs.
  bool is_scalar() const;
  std::size_t max_length() const;

  void add_term(Word w, const QRat& c);
  void add_scaled(const NCPoly& p, const QRat& c);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& p);
  NCPoly& operator-=(const NCPoly& p);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const QRat& c, const NCPoly& p);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  /// Free (unreduced) concatenation product.
  static NCPoly free_product(const NCPoly& a, const NCPoly& b);

  NCPoly map_coefficients(const std::function<QRat(const QRat&)>& f) const;

 private:
  Terms terms_;
};

}  // namespace qb
