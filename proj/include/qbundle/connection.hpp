#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbundle/comodule.hpp"
#include "qbundle/linalg.hpp"

namespace qb {

/// Finite-dimensional subspace of H, stored as a reduced echelon basis whose
/// pivots are leading words in the term order.
class CoalgebraSpan {
 public:
  CoalgebraSpan(HopfPtr h, const std::vector<NCPoly>& spanning);

  const HopfAlgebra& hopf() const { return *hopf_; }
  const HopfPtr& hopf_ptr() const { return hopf_; }
  const std::vector<NCPoly>& basis() const { return basis_; }
  bool contains(const NCPoly& h) const;
  /// Coordinates of h against basis(), or nullopt if h is outside the span.
  std::optional<std::vector<QRat>> coordinates(const NCPoly& h) const;

  /// Elements x of the basis with Δ(x) ∉ span⊗span.
  std::vector<std::string> closure_failures() const;

 private:
  HopfPtr hopf_;
  Echelon<Word, QRat> echelon_;
  std::vector<NCPoly> basis_;
};

/// Span of the coefficients c_ij together with the unit.
CoalgebraSpan corep_span(const Corepresentation& v);

/// A unital map ℓ: C → A⊗A on a finite coalgebra span C ⊂ H, given by a table
/// on spanning elements, or the rule ℓ(h) = S(h₁)⊗h₂ when A = H.
class StrongConnection {
 public:
  /// Table form. Pairs may be linearly dependent if their values agree; ℓ(1) = 1⊗1 is added when 1 is missing.
  StrongConnection(std::string name, CoactionPtr coaction, const std::vector<std::pair<NCPoly, TensorElem>>& table);
  /// Rule form (A = H, regular coaction), checked on `domain`.
  StrongConnection(std::string name, CoactionPtr coaction, CoalgebraSpan domain);

  const std::string& name() const { return name_; }
  const Coaction& coaction() const { return *coaction_; }
  const CoactionPtr& coaction_ptr() const { return coaction_; }
  const CoalgebraSpan& domain() const { return domain_; }
  bool is_rule() const { return rule_; }

  /// ℓ(h). Throws CoverageError when h is outside the domain of a table connection.
  TensorElem operator()(const NCPoly& h) const;
  /// ℓ applied to leg `leg` of a degree-2 tensor whose slices lie in the domain.
  TensorElem apply_on_leg(const TensorElem& t, std::size_t leg) const;

 private:
  std::string name_;
  CoactionPtr coaction_;
  CoalgebraSpan domain_;
  bool rule_ = false;
  std::vector<TensorElem> values_;  // ℓ of domain_.basis()
};

using ConnectionPtr = std::shared_ptr<const StrongConnection>;

/// Unitality, m∘ℓ = ε, right and left colinearity, and closure of the domain.
Report check_strong_connection(const StrongConnection& l);

ConnectionPtr trivial_connection(const CoactionPtr& regular, CoalgebraSpan domain);

/// ℓ on span{u^k : |k| <= max(|n|, coverage)} for the U(1)-coaction on SU_q(2):
/// ℓ(u) = α*⊗α + γ*⊗γ, ℓ(u⁻¹) = α⊗α* + q²γ⊗γ*, and the product recursion.
ConnectionPtr u1_power_connection(const CoactionPtr& coaction, int n, int coverage = 3);

/// δ'∘f = (f⊗id)∘δ on generators.
Report check_equivariance(const MorphismData& f, const Coaction& delta, const Coaction& delta2);

/// ℓ' = (f⊗f)∘ℓ on the same domain. f must be verified and equivariant.
ConnectionPtr pullback_connection(const MorphismData& f, const StrongConnection& l, const CoactionPtr& target);

/// ℓ(c) = Σ_μ a_μ ⊗ r_μ(c) over a set of elements c, with {a_μ} independent.
struct Expansion {
  std::vector<NCPoly> a;
  /// r[k][μ] = r_μ(elements[k]).
  std::vector<std::vector<NCPoly>> r;
};

/// Echelonizes the first legs of ℓ(c) for the given c; a_μ ordered by descending leading word.
Expansion expand_connection(const StrongConnection& l, const std::vector<NCPoly>& elements);
/// Same, against a prescribed independent family {a_μ}; throws CoverageError if a first leg leaves its span.
Expansion expand_connection(const StrongConnection& l, const std::vector<NCPoly>& elements,
                            const std::vector<NCPoly>& basis);

}  // namespace qb
