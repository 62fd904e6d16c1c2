#pragma once

#include "qbundle/comodule.hpp"
#include "qbundle/expr.hpp"

namespace qb {

/// Element of the polynomial join model: a polynomial in the central
/// parameter t with coefficients in A⊗H (or A⊗H⊗H after the coaction).
struct JoinElement {
  std::vector<const Presentation*> legs;
  TTensor coeffs;

  int t_degree() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }
  /// Value at t = t0.
  TensorElem at(const QRat& t0) const;
  friend bool operator==(const JoinElement& a, const JoinElement& b);
};

JoinElement make_join(std::vector<const Presentation*> legs, TTensor coeffs);
/// Parses an expression in the shared grammar with `t` enabled.
JoinElement parse_join(const Coaction& delta, std::string_view text);
JoinElement join_one(const Coaction& delta);

/// f(0) ∈ k⊗H and f(1) ∈ δ_A(A_{≤dA}).
Report join_membership(const Coaction& delta, const JoinElement& x, std::size_t dA);
/// Boundary conditions of id⊗Δ applied to a join element: z(0) ∈ k⊗H⊗H and z(1) ∈ (δ_A⊗id)δ_A(A_{≤dA}).
Report coacted_membership(const Coaction& delta, const JoinElement& z, std::size_t dA);

/// Product with legwise multiplication; throws PreconditionError above the t-degree cap.
JoinElement join_product(const JoinElement& x, const JoinElement& y, int t_cap = 4);
JoinElement join_star(const JoinElement& x);
/// id⊗Δ on every coefficient.
JoinElement join_coaction(const Coaction& delta, const JoinElement& x);

/// The counit of H as a verified character.
MorphismData counit_character(const HopfAlgebra& h);
/// ev_{t0} ⊗ χ ⊗ id: evaluates at t0 and applies χ to the A-leg.
NCPoly chi_collapse(const JoinElement& x, const MorphismData& chi, const QRat& t0 = QRat(mpq_class(1, 2)));
/// Same on an A⊗H⊗H element, landing in H⊗H.
TensorElem chi_collapse_coacted(const JoinElement& z, const MorphismData& chi, const QRat& t0 = QRat(mpq_class(1, 2)));

}  // namespace qb
