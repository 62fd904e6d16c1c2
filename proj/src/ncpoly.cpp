#include "qbundle/ncpoly.hpp"

#include <algorithm>

namespace qb {

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word concat(const Word& a, const Word& b, const Word& c) {
  Word w;
  w.reserve(a.size() + b.size() + c.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  w.insert(w.end(), c.begin(), c.end());
  return w;
}

QRat NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QRat() : it->second;
}

bool NCPoly::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::size_t NCPoly::max_length() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.size());
  return m;
}

void NCPoly::add_term(Word w, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void NCPoly::add_scaled(const NCPoly& p, const QRat& c) {
  if (c.is_zero()) return;
  for (const auto& [w, a] : p.terms_) add_term(w, c.is_one() ? a : a * c);
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& p) {
  for (const auto& [w, c] : p.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& p) {
  for (const auto& [w, c] : p.terms_) add_term(w, -c);
  return *this;
}

NCPoly operator*(const QRat& c, const NCPoly& p) {
  NCPoly r;
  r.add_scaled(p, c);
  return r;
}

NCPoly NCPoly::free_product(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
  return r;
}

NCPoly NCPoly::map_coefficients(const std::function<QRat(const QRat&)>& f) const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r.add_term(w, f(c));
  return r;
}

}  // namespace qb
