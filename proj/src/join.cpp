#include "qbundle/join.hpp"

#include "qbundle/linalg.hpp"

namespace qb {

TensorElem JoinElement::at(const QRat& t0) const {
  TensorElem out(legs);
  for (const auto& [k, c] : coeffs) out.add_scaled(c, t0.pow(k));
  return out;
}

bool operator==(const JoinElement& a, const JoinElement& b) {
  return a.legs == b.legs && a.coeffs == b.coeffs;
}

JoinElement make_join(std::vector<const Presentation*> legs, TTensor coeffs) {
  JoinElement x{std::move(legs), {}};
  for (auto& [k, c] : coeffs) {
    if (c.is_zero()) continue;
    if (c.legs() != x.legs) throw MismatchError("join coefficient lives in the wrong tensor space");
    if (k < 0) throw MismatchError("negative power of t");
    x.coeffs.emplace(k, std::move(c));
  }
  return x;
}

JoinElement parse_join(const Coaction& delta, std::string_view text) {
  std::vector<const Presentation*> legs{&delta.A(), &delta.H().alg()};
  return make_join(legs, parse_t_tensor(legs, text));
}

JoinElement join_one(const Coaction& delta) {
  std::vector<const Presentation*> legs{&delta.A(), &delta.H().alg()};
  return make_join(legs, {{0, TensorElem::unit(legs)}});
}

namespace {

using Key = TensorElem::Key;

std::map<Key, QRat> as_vec(const TensorElem& t) { return {t.terms().begin(), t.terms().end()}; }

bool scalar_first_leg(const TensorElem& t) {
  for (const auto& [k, c] : t.terms())
    if (!k[0].empty()) return false;
  return true;
}

}  // namespace

Report join_membership(const Coaction& delta, const JoinElement& x, std::size_t dA) {
  Report r;
  const TensorElem x0 = x.at(QRat(0));
  r.add("join.boundary_0", scalar_first_leg(x0), "f(0) = " + x0.to_string());
  Echelon<Key, QRat> image;
  for (const Word& w : delta.A().basis_up_to_degree(dA)) image.insert(as_vec(delta.delta.apply(w)));
  const TensorElem x1 = x.at(QRat(1));
  r.add("join.boundary_1", image.contains(as_vec(x1)), "f(1) = " + x1.to_string());
  return r;
}

Report coacted_membership(const Coaction& delta, const JoinElement& z, std::size_t dA) {
  Report r;
  const TensorElem z0 = z.at(QRat(0));
  r.add("join.coacted_boundary_0", scalar_first_leg(z0), "z(0) = " + z0.to_string());
  Echelon<Key, QRat> image;
  const LegMap d = delta.delta.leg_map();
  for (const Word& w : delta.A().basis_up_to_degree(dA))
    image.insert(as_vec(tensor_map_leg(delta.delta.apply(w), 0, d)));
  const TensorElem z1 = z.at(QRat(1));
  r.add("join.coacted_boundary_1", image.contains(as_vec(z1)), "z(1) = " + z1.to_string());
  return r;
}

JoinElement join_product(const JoinElement& x, const JoinElement& y, int t_cap) {
  if (x.legs != y.legs) throw MismatchError("join elements live in different tensor spaces");
  if (x.t_degree() + y.t_degree() > t_cap)
    throw PreconditionError("join product exceeds the t-degree cap " + std::to_string(t_cap));
  TTensor out;
  for (const auto& [i, a] : x.coeffs)
    for (const auto& [j, b] : y.coeffs) {
      auto [it, fresh] = out.try_emplace(i + j, TensorElem(x.legs));
      it->second += tensor_mul(a, b);
    }
  return make_join(x.legs, std::move(out));
}

JoinElement join_star(const JoinElement& x) {
  TTensor out;
  for (const auto& [k, c] : x.coeffs) out.emplace(k, star_legs(c));
  return make_join(x.legs, std::move(out));
}

JoinElement join_coaction(const Coaction& delta, const JoinElement& x) {
  const Presentation* H = &delta.H().alg();
  const LegMap D = delta.H().coproduct.leg_map();
  TTensor out;
  for (const auto& [k, c] : x.coeffs) out.emplace(k, tensor_map_leg(c, 1, D));
  return make_join({x.legs[0], H, H}, std::move(out));
}

MorphismData counit_character(const HopfAlgebra& h) {
  MorphismData m(h.counit);
  verify_morphism(m);
  return m;
}

NCPoly chi_collapse(const JoinElement& x, const MorphismData& chi, const QRat& t0) {
  if (!chi.verified) throw PreconditionError("character " + chi.map.name() + " has not passed verification");
  const TensorElem v = x.at(t0);
  if (v.is_zero()) return {};
  return tensor_map_leg(v, 0, chi.map.leg_map()).as_poly();
}

TensorElem chi_collapse_coacted(const JoinElement& z, const MorphismData& chi, const QRat& t0) {
  if (!chi.verified) throw PreconditionError("character " + chi.map.name() + " has not passed verification");
  const TensorElem v = z.at(t0);
  if (v.is_zero()) return TensorElem({z.legs[1], z.legs[2]});
  return tensor_map_leg(v, 0, chi.map.leg_map());
}

}  // namespace qb
