#include "qbundle/connection.hpp"

#include <algorithm>
#include <cstdlib>

namespace qb {

namespace {

std::map<Word, QRat> as_vec(const NCPoly& p) { return {p.terms().begin(), p.terms().end()}; }

NCPoly as_poly(const std::map<Word, QRat>& v) {
  NCPoly p;
  for (const auto& [w, c] : v) p.add_term(w, c);
  return p;
}

Echelon<Word, QRat>::PivotRule leading_word_rule(const Presentation* p) {
  return [p](const std::map<Word, QRat>& v) {
    const Word* best = nullptr;
    for (const auto& [w, c] : v)
      if (!best || p->word_less(*best, w)) best = &w;
    return *best;
  };
}

/// Σ x x' ⊗ y' y for s = Σ x⊗y and t = Σ x'⊗y'.
TensorElem nest(const TensorElem& s, const TensorElem& t) {
  const Presentation& A = *s.legs()[0];
  TensorElem out(s.legs());
  for (const auto& [ks, cs] : s.terms())
    for (const auto& [kt, ct] : t.terms())
      out.add_pure(cs * ct, {A.normal_form(NCPoly::word(concat(ks[0], kt[0]))),
                             A.normal_form(NCPoly::word(concat(kt[1], ks[1])))});
  return out;
}

}  // namespace

// ---------------------------------------------------------------- CoalgebraSpan

CoalgebraSpan::CoalgebraSpan(HopfPtr h, const std::vector<NCPoly>& spanning)
    : hopf_(std::move(h)), echelon_(leading_word_rule(hopf_->algebra.get())) {
  const Presentation& H = hopf_->alg();
  for (const NCPoly& x : spanning) {
    const NCPoly nx = H.normal_form(x);
    if (!nx.is_zero()) echelon_.insert(as_vec(nx));
  }
  auto rows = echelon_.rows();
  std::sort(rows.begin(), rows.end(), [&H](const auto& a, const auto& b) { return H.word_less(a.pivot, b.pivot); });
  for (const auto& row : rows) basis_.push_back(as_poly(row.vec));
}

bool CoalgebraSpan::contains(const NCPoly& h) const {
  return echelon_.contains(as_vec(hopf_->alg().normal_form(h)));
}

std::optional<std::vector<QRat>> CoalgebraSpan::coordinates(const NCPoly& h) const {
  const NCPoly nh = hopf_->alg().normal_form(h);
  if (!echelon_.contains(as_vec(nh))) return std::nullopt;
  std::vector<QRat> out;
  for (const NCPoly& b : basis_) out.push_back(nh.coefficient(*hopf_->alg().leading_word(b)));
  return out;
}

std::vector<std::string> CoalgebraSpan::closure_failures() const {
  std::vector<std::string> bad;
  const Presentation& H = hopf_->alg();
  for (const NCPoly& x : basis_) {
    const TensorElem d = apply_coproduct(*hopf_, x);
    bool ok = true;
    for (std::size_t leg : {0u, 1u})
      for (const auto& [w, slice] : d.split_leg(leg))
        if (!contains(slice.as_poly())) ok = false;
    if (!ok) bad.push_back("coproduct of " + H.format(x) + " leaves the span");
  }
  return bad;
}

CoalgebraSpan corep_span(const Corepresentation& v) {
  std::vector<NCPoly> elems{NCPoly::one()};
  for (const auto& row : v.c) elems.insert(elems.end(), row.begin(), row.end());
  return CoalgebraSpan(v.hopf, elems);
}

// ---------------------------------------------------------------- StrongConnection

StrongConnection::StrongConnection(std::string name, CoactionPtr coaction,
                                   const std::vector<std::pair<NCPoly, TensorElem>>& table)
    : name_(std::move(name)),
      coaction_(std::move(coaction)),
      domain_([&] {
        std::vector<NCPoly> elems{NCPoly::one()};
        for (const auto& [h, v] : table) elems.push_back(h);
        return CoalgebraSpan(coaction_->hopf, elems);
      }()) {
  const Presentation& A = coaction_->A();
  const Presentation& H = coaction_->H().alg();
  std::vector<std::pair<NCPoly, TensorElem>> entries;
  bool has_unit = false;
  for (const auto& [h, v] : table) {
    if (!v.is_zero() && v.legs() != std::vector<const Presentation*>{&A, &A})
      throw MismatchError("connection " + name_ + ": value of " + H.format(h) + " must lie in A (x) A");
    entries.emplace_back(H.normal_form(h), v.is_zero() ? TensorElem({&A, &A}) : v);
    if (entries.back().first == NCPoly::one()) has_unit = true;
  }
  if (!has_unit) entries.emplace_back(NCPoly::one(), TensorElem::unit({&A, &A}));

  Echelon<Word, QRat> inputs(leading_word_rule(&H));
  for (const auto& [h, v] : entries) {
    if (auto rel = inputs.insert(as_vec(h))) {
      TensorElem sum({&A, &A});
      for (const auto& [idx, c] : *rel) sum.add_scaled(entries[idx].second, c);
      if (!sum.is_zero())
        throw PreconditionError("connection " + name_ + " assigns inconsistent values to dependent elements");
    }
  }
  for (const NCPoly& b : domain_.basis()) {
    const auto combo = inputs.coordinates(as_vec(b));
    TensorElem value({&A, &A});
    for (const auto& [idx, c] : *combo) value.add_scaled(entries[idx].second, c);
    values_.push_back(std::move(value));
  }
}

StrongConnection::StrongConnection(std::string name, CoactionPtr coaction, CoalgebraSpan domain)
    : name_(std::move(name)), coaction_(std::move(coaction)), domain_(std::move(domain)), rule_(true) {
  if (coaction_->algebra != coaction_->hopf->algebra)
    throw PreconditionError("the trivial connection needs A = H");
}

TensorElem StrongConnection::operator()(const NCPoly& h) const {
  const Presentation& A = coaction_->A();
  if (rule_) {
    const HopfAlgebra& H = coaction_->H();
    return tensor_map_leg(apply_coproduct(H, h), 0, H.antipode.leg_map());
  }
  const auto coords = domain_.coordinates(h);
  if (!coords)
    throw CoverageError("connection " + name_ + " is not defined on " + coaction_->H().alg().format(h));
  TensorElem out({&A, &A});
  for (std::size_t k = 0; k < coords->size(); ++k)
    if (!(*coords)[k].is_zero()) out.add_scaled(values_[k], (*coords)[k]);
  return out;
}

TensorElem StrongConnection::apply_on_leg(const TensorElem& t, std::size_t leg) const {
  if (t.degree() != 2 || leg > 1) throw PreconditionError("apply_on_leg expects a degree-2 tensor");
  const std::size_t other = 1 - leg;
  const Presentation& A = coaction_->A();
  const Presentation& X = *t.legs()[other];
  std::vector<const Presentation*> legs = leg == 0 ? std::vector{&A, &A, &X} : std::vector{&X, &A, &A};
  TensorElem out(legs);
  for (const auto& [w, slice] : t.split_leg(other)) {
    const TensorElem lw = (*this)(slice.as_poly());
    const TensorElem ww = TensorElem::of(X, NCPoly::word(w));
    out += leg == 0 ? tensor_product(lw, ww) : tensor_product(ww, lw);
  }
  return out;
}

Report check_strong_connection(const StrongConnection& l) {
  Report r;
  const std::string prefix = "connection." + l.name() + ".";
  const Coaction& delta = l.coaction();
  const Presentation& A = delta.A();
  const HopfAlgebra& H = delta.H();
  const auto& basis = l.domain().basis();

  const auto closure = l.domain().closure_failures();
  r.add_sweep(prefix + "closure", closure, basis.size(), "elements");
  if (!closure.empty()) return r;

  const TensorElem at_one = l(NCPoly::one());
  r.add(prefix + "unital", at_one == TensorElem::unit({&A, &A}), "l(1) = " + at_one.to_string());

  const LegMap dA = delta.delta.leg_map();
  LegMap left;
  left.source = &A;
  left.targets = {&H.alg(), &A};
  left.on_word = [&delta](const Word& w) { return left_coaction(delta, NCPoly::word(w)); };

  std::vector<std::string> counit, right, leftc;
  for (const NCPoly& h : basis) {
    const std::string hs = H.alg().format(h);
    const TensorElem lh = l(h);
    const NCPoly m = lh.is_zero() ? NCPoly() : multiply_legs(lh);
    if (m != NCPoly(H.epsilon(h))) counit.push_back(hs + ": m(l) = " + A.format(m));
    const TensorElem dh = apply_coproduct(H, h);
    const TensorElem rl = lh.is_zero() ? TensorElem({&A, &A, &H.alg()}) : tensor_map_leg(lh, 1, dA);
    if (rl != l.apply_on_leg(dh, 0)) right.push_back(hs);
    const TensorElem ll = lh.is_zero() ? TensorElem({&H.alg(), &A, &A}) : tensor_map_leg(lh, 0, left);
    if (ll != l.apply_on_leg(dh, 1)) leftc.push_back(hs);
  }
  r.add_sweep(prefix + "counit", counit, basis.size(), "elements");
  r.add_sweep(prefix + "right_colinear", right, basis.size(), "elements");
  r.add_sweep(prefix + "left_colinear", leftc, basis.size(), "elements");
  return r;
}

ConnectionPtr trivial_connection(const CoactionPtr& regular, CoalgebraSpan domain) {
  return std::make_shared<StrongConnection>("trivial", regular, std::move(domain));
}

ConnectionPtr u1_power_connection(const CoactionPtr& coaction, int n, int coverage) {
  if (n == 0) throw PreconditionError("u1_power_connection needs n != 0");
  const Presentation& A = coaction->A();
  const Presentation& H = coaction->H().alg();
  const NCPoly al = A.generator("alpha"), ga = A.generator("gamma");
  const NCPoly als = A.generator("alpha*"), gas = A.generator("gamma*");
  const QRat q = QRat::q();
  const TensorElem plus = TensorElem::of(A, als, A, al) + TensorElem::of(A, gas, A, ga);
  const TensorElem minus = TensorElem::of(A, al, A, als) + q * q * TensorElem::of(A, ga, A, gas);

  const int K = std::max(std::abs(n), coverage);
  std::vector<std::pair<NCPoly, TensorElem>> table;
  const NCPoly u = H.generator("u"), us = H.generator("u*");
  TensorElem up = plus, down = minus;
  for (int k = 1; k <= K; ++k) {
    table.emplace_back(H.power(u, k), up);
    table.emplace_back(H.power(us, k), down);
    up = nest(plus, up);
    down = nest(minus, down);
  }
  return std::make_shared<StrongConnection>("u1_power", coaction, table);
}

Report check_equivariance(const MorphismData& f, const Coaction& delta, const Coaction& delta2) {
  Report r;
  const std::string name = "equivariance." + f.map.name();
  if (&f.source() != &delta.A() || &f.target() != &delta2.A() || delta.hopf != delta2.hopf) {
    r.add(name, false, "map and coactions do not match");
    return r;
  }
  std::vector<std::string> bad;
  const LegMap F = f.map.leg_map();
  for (GenId g = 0; g < f.source().generator_count(); ++g) {
    const TensorElem lhs = delta2.apply(f.map.apply_poly(NCPoly::word({g})));
    const TensorElem rhs = tensor_map_leg(delta.delta.apply(Word{g}), 0, F);
    if (lhs != rhs)
      bad.push_back(f.source().generators()[g].name + ": " + lhs.to_string() + " vs " + rhs.to_string());
  }
  r.add_sweep(name, bad, f.source().generator_count(), "generators");
  return r;
}

ConnectionPtr pullback_connection(const MorphismData& f, const StrongConnection& l, const CoactionPtr& target) {
  if (!f.verified) throw PreconditionError("morphism " + f.map.name() + " has not passed verification");
  const Report eq = check_equivariance(f, l.coaction(), *target);
  if (!eq.ok()) throw PreconditionError("morphism " + f.map.name() + " is not equivariant: " + eq.first_failure()->detail);
  const LegMap F = f.map.leg_map();
  std::vector<std::pair<NCPoly, TensorElem>> table;
  for (const NCPoly& b : l.domain().basis()) {
    TensorElem v = l(b);
    if (!v.is_zero()) v = tensor_map_leg(tensor_map_leg(v, 0, F), 1, F);
    table.emplace_back(b, v);
  }
  return std::make_shared<StrongConnection>(l.name() + "'", target, table);
}

Expansion expand_connection(const StrongConnection& l, const std::vector<NCPoly>& elements) {
  const Presentation& A = l.coaction().A();
  std::vector<std::map<Word, TensorElem>> slices;
  Echelon<Word, QRat> first_legs(leading_word_rule(&A));
  for (const NCPoly& c : elements) {
    slices.push_back(l(c).split_leg(1));
    for (const auto& [v, p] : slices.back()) first_legs.insert(as_vec(p.as_poly()));
  }
  auto rows = first_legs.rows();
  std::sort(rows.begin(), rows.end(), [&A](const auto& x, const auto& y) { return A.word_less(y.pivot, x.pivot); });
  Expansion e;
  for (const auto& row : rows) e.a.push_back(as_poly(row.vec));
  for (const auto& s : slices) {
    std::vector<NCPoly> r(rows.size());
    for (const auto& [v, p] : s) {
      const NCPoly pv = p.as_poly();
      for (std::size_t mu = 0; mu < rows.size(); ++mu) {
        const QRat c = pv.coefficient(rows[mu].pivot);
        if (!c.is_zero()) r[mu].add_term(v, c);
      }
    }
    e.r.push_back(std::move(r));
  }
  return e;
}

Expansion expand_connection(const StrongConnection& l, const std::vector<NCPoly>& elements,
                            const std::vector<NCPoly>& basis) {
  const Presentation& A = l.coaction().A();
  Echelon<Word, QRat> span(leading_word_rule(&A));
  for (const NCPoly& b : basis)
    if (span.insert(as_vec(A.normal_form(b)))) throw PreconditionError("expansion basis is linearly dependent");
  Expansion e;
  e.a = basis;
  for (const NCPoly& c : elements) {
    std::vector<NCPoly> r(basis.size());
    for (const auto& [v, p] : l(c).split_leg(1)) {
      const auto combo = span.coordinates(as_vec(p.as_poly()));
      if (!combo) throw CoverageError("first leg " + A.format(p.as_poly()) + " is outside the prescribed basis");
      for (const auto& [mu, coef] : *combo) r[mu].add_term(v, coef);
    }
    e.r.push_back(std::move(r));
  }
  return e;
}

}  // namespace qb
