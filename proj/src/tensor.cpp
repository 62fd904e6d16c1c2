#include "qbundle/tensor.hpp"

#include <algorithm>

namespace qb {

TensorElem::TensorElem(std::vector<const Presentation*> legs) : legs_(std::move(legs)) {
  if (legs_.size() > max_degree) throw MismatchError("tensor degree above 3");
}

TensorElem TensorElem::pure(std::vector<const Presentation*> legs, const std::vector<NCPoly>& factors) {
  TensorElem t(std::move(legs));
  t.add_pure(QRat(1), factors);
  return t;
}

TensorElem TensorElem::unit(std::vector<const Presentation*> legs) {
  std::vector<NCPoly> ones(legs.size(), NCPoly::one());
  return pure(std::move(legs), ones);
}

TensorElem TensorElem::of(const Presentation& a, const NCPoly& x) { return pure({&a}, {x}); }

TensorElem TensorElem::of(const Presentation& a, const NCPoly& x, const Presentation& b, const NCPoly& y) {
  return pure({&a, &b}, {x, y});
}

TensorElem TensorElem::of(const Presentation& a, const NCPoly& x, const Presentation& b, const NCPoly& y,
                          const Presentation& c, const NCPoly& z) {
  return pure({&a, &b, &c}, {x, y, z});
}

QRat TensorElem::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? QRat() : it->second;
}

void TensorElem::add_term(Key k, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(k), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TensorElem::add_pure(const QRat& c, const std::vector<NCPoly>& factors) {
  if (factors.size() != legs_.size()) throw MismatchError("tensor factor count does not match degree");
  if (c.is_zero()) return;
  Key key(factors.size());
  std::function<void(std::size_t, const QRat&)> rec = [&](std::size_t i, const QRat& acc) {
    if (i == factors.size()) {
      add_term(key, acc);
      return;
    }
    for (const auto& [w, a] : factors[i].terms()) {
      key[i] = w;
      rec(i + 1, acc * a);
    }
  };
  rec(0, c);
}

void TensorElem::add_scaled(const TensorElem& t, const QRat& c) {
  check_same_legs(t);
  if (c.is_zero()) return;
  for (const auto& [k, a] : t.terms_) add_term(k, c.is_one() ? a : a * c);
}

void TensorElem::check_same_legs(const TensorElem& t) const {
  if (t.legs_ != legs_) throw MismatchError("tensor legs live in different presentations");
}

TensorElem TensorElem::operator-() const {
  TensorElem r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

TensorElem& TensorElem::operator+=(const TensorElem& t) {
  add_scaled(t, QRat(1));
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& t) {
  add_scaled(t, QRat(-1));
  return *this;
}

TensorElem operator*(const QRat& c, const TensorElem& t) {
  TensorElem r(t.legs_);
  r.add_scaled(t, c);
  return r;
}

bool operator==(const TensorElem& a, const TensorElem& b) {
  if (a.terms_.empty() && b.terms_.empty()) return a.legs_.size() == b.legs_.size();
  return a.legs_ == b.legs_ && a.terms_ == b.terms_;
}

NCPoly TensorElem::as_poly() const {
  if (degree() != 1) throw MismatchError("as_poly on a tensor of degree " + std::to_string(degree()));
  NCPoly p;
  for (const auto& [k, c] : terms_) p.add_term(k[0], c);
  return p;
}

QRat TensorElem::as_scalar() const {
  if (degree() != 0) throw MismatchError("as_scalar on a tensor of degree " + std::to_string(degree()));
  return coefficient({});
}

std::map<Word, TensorElem> TensorElem::split_leg(std::size_t leg) const {
  if (leg >= degree()) throw MismatchError("leg index out of range");
  std::vector<const Presentation*> rest = legs_;
  rest.erase(rest.begin() + static_cast<long>(leg));
  std::map<Word, TensorElem> out;
  for (const auto& [k, c] : terms_) {
    Key r = k;
    r.erase(r.begin() + static_cast<long>(leg));
    auto it = out.try_emplace(k[leg], TensorElem(rest)).first;
    it->second.add_term(std::move(r), c);
  }
  return out;
}

std::string TensorElem::to_string() const {
  if (terms_.empty()) return "0";
  if (degree() == 0) return as_scalar().to_string();
  // Group by key, print each term as "(coeff) w1 (x) w2".
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string cs = c.to_string();
    bool neg = false;
    if (!c.is_compound() && cs.front() == '-') {
      neg = true;
      cs.erase(0, 1);
    }
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (c.is_compound()) cs = "(" + cs + ")";
    if (cs != "1") out += cs + " ";
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) out += " (x) ";
      out += legs_[i]->format_word(k[i]);
    }
  }
  return out;
}

LegMap identity_leg_map(const Presentation& p) {
  LegMap m;
  m.source = &p;
  m.targets = {&p};
  m.on_word = [&p](const Word& w) { return TensorElem::of(p, NCPoly::word(w)); };
  return m;
}

TensorElem tensor_map_leg(const TensorElem& t, std::size_t leg, const LegMap& m) {
  if (leg >= t.degree()) throw MismatchError("leg index out of range");
  if (t.legs()[leg] != m.source)
    throw MismatchError("map source " + m.source->name() + " does not match leg presentation " +
                        t.legs()[leg]->name());
  std::vector<const Presentation*> legs;
  for (std::size_t i = 0; i < leg; ++i) legs.push_back(t.legs()[i]);
  legs.insert(legs.end(), m.targets.begin(), m.targets.end());
  for (std::size_t i = leg + 1; i < t.degree(); ++i) legs.push_back(t.legs()[i]);
  TensorElem out(legs);
  std::map<Word, TensorElem> image_cache;
  for (const auto& [k, c] : t.terms()) {
    auto it = image_cache.find(k[leg]);
    if (it == image_cache.end()) it = image_cache.emplace(k[leg], m.on_word(k[leg])).first;
    for (const auto& [ik, ic] : it->second.terms()) {
      TensorElem::Key key;
      for (std::size_t i = 0; i < leg; ++i) key.push_back(k[i]);
      key.insert(key.end(), ik.begin(), ik.end());
      for (std::size_t i = leg + 1; i < k.size(); ++i) key.push_back(k[i]);
      out.add_term(std::move(key), c * ic);
    }
  }
  return out;
}

TensorElem permute_legs(const TensorElem& t, const std::vector<std::size_t>& perm) {
  if (perm.size() != t.degree()) throw MismatchError("permutation size does not match tensor degree");
  std::vector<const Presentation*> legs;
  for (std::size_t i : perm) legs.push_back(t.legs().at(i));
  TensorElem out(legs);
  for (const auto& [k, c] : t.terms()) {
    TensorElem::Key key;
    for (std::size_t i : perm) key.push_back(k[i]);
    out.add_term(std::move(key), c);
  }
  return out;
}

TensorElem flip(const TensorElem& t) {
  if (t.degree() != 2) throw MismatchError("flip needs a degree-2 tensor");
  return permute_legs(t, {1, 0});
}

TensorElem tensor_mul(const TensorElem& s, const TensorElem& t) {
  if (s.legs() != t.legs()) {
    if (s.degree() != t.degree()) throw MismatchError("tensor_mul: degree mismatch");
    throw MismatchError("tensor_mul: leg presentations differ");
  }
  TensorElem out(s.legs());
  std::vector<NCPoly> factors(s.degree());
  for (const auto& [ks, cs] : s.terms()) {
    for (const auto& [kt, ct] : t.terms()) {
      for (std::size_t i = 0; i < ks.size(); ++i) factors[i] = s.legs()[i]->normal_form(concat(ks[i], kt[i]));
      out.add_pure(cs * ct, factors);
    }
  }
  return out;
}

NCPoly multiply_legs(const TensorElem& t) {
  if (t.degree() == 0) return NCPoly(t.as_scalar());
  const Presentation* p = t.legs()[0];
  for (auto* l : t.legs())
    if (l != p) throw MismatchError("multiply_legs: legs live in different presentations");
  NCPoly out;
  for (const auto& [k, c] : t.terms()) {
    Word w;
    for (const auto& part : k) w.insert(w.end(), part.begin(), part.end());
    out.add_scaled(p->normal_form(w), c);
  }
  return out;
}

TensorElem tensor_product(const TensorElem& s, const TensorElem& t) {
  std::vector<const Presentation*> legs = s.legs();
  legs.insert(legs.end(), t.legs().begin(), t.legs().end());
  TensorElem out(legs);
  for (const auto& [ks, cs] : s.terms()) {
    for (const auto& [kt, ct] : t.terms()) {
      TensorElem::Key key = ks;
      key.insert(key.end(), kt.begin(), kt.end());
      out.add_term(std::move(key), cs * ct);
    }
  }
  return out;
}

}  // namespace qb
