#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qbundle/matrix.hpp"
#include "qbundle/structure.hpp"

namespace qb {

/// Right coaction δ: A → A⊗H of a Hopf algebra H on a presented algebra A.
struct Coaction {
  Coaction(std::string name, std::shared_ptr<const Presentation> a, HopfPtr h);

  std::string name;
  std::shared_ptr<const Presentation> algebra;
  HopfPtr hopf;
  AlgebraMap delta;

  const Presentation& A() const { return *algebra; }
  const HopfAlgebra& H() const { return *hopf; }
  TensorElem apply(const NCPoly& a) const { return delta.apply(A().normal_form(a)); }
};

using CoactionPtr = std::shared_ptr<const Coaction>;

/// The regular coaction δ = Δ of H on itself.
CoactionPtr regular_coaction(const HopfPtr& h);

/// Relations, coassociativity, counitality and *-compatibility on normal words of length <= d.
Report verify_coaction(const Coaction& c, std::size_t d);

struct InvariantBasis {
  std::size_t degree = 0;
  std::vector<NCPoly> elements;
};

/// {b ∈ A_{≤d} : δ(b) = b⊗1}, as a reduced echelon basis (leading words distinct, coefficient 1).
InvariantBasis invariant_subspace(const Coaction& c, std::size_t d);
bool is_invariant(const Coaction& c, const NCPoly& b);

/// Left corepresentation with coefficient matrix c over H: ϱ(v_i) = Σ_j c_ij ⊗ v_j.
struct Corepresentation {
  std::string name;
  HopfPtr hopf;
  PolyMatrix c;

  std::size_t dim() const { return c.size(); }
};

Corepresentation make_corep(std::string name, HopfPtr h, PolyMatrix c);
Report verify_corepresentation(const Corepresentation& c);
/// S applied entrywise to the transpose.
Corepresentation contragredient(const Corepresentation& c);
/// Checks Q c Q⁻¹ = c' entrywise. Throws MismatchError if Q is singular.
Report corep_equivalence(const Corepresentation& c, const Corepresentation& c2, const ScalarMatrix& Q);

/// Basis of {(x_1..x_n) ∈ (A_{≤d})^n : δ(x_j) = Σ_i x_i ⊗ c_ij}, echelonized on the first nonzero component.
std::vector<std::vector<NCPoly>> cotensor_basis(const Coaction& c, const Corepresentation& v, std::size_t d);
bool in_cotensor(const Coaction& c, const Corepresentation& v, const std::vector<NCPoly>& x);

/// (S⁻¹⊗id)∘flip∘δ, an element of H⊗A.
TensorElem left_coaction(const Coaction& c, const NCPoly& a);

}  // namespace qb
