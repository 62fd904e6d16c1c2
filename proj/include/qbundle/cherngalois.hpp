#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qbundle/connection.hpp"

namespace qb {

/// Unital linear functional A → k.
struct Functional {
  std::string name;
  std::function<QRat(const NCPoly&)> eval;

  QRat operator()(const NCPoly& a) const { return eval(a); }
};

/// Coefficient of the empty word in normal form.
Functional constant_term_functional(const Presentation& p);
/// φ'∘f.
Functional pull_back_functional(const Functional& phi, const MorphismData& f);

/// σ(a) = a₍₀₎ ℓ(a₍₁₎)^⟨1⟩ φ(ℓ(a₍₁₎)^⟨2⟩), with δ the coaction of ℓ.
/// Throws CoverageError naming the H-element when δ(a) leaves ℓ's domain.
NCPoly sigma(const Functional& phi, const StrongConnection& l, const NCPoly& a);

/// Idempotent E_{(μ,i),(ν,j)} = σ(r_μ(c_ij) a_ν), indexed μ-major: (μ,i) ↦ μ·dim V + i.
struct Projector {
  ConnectionPtr connection;
  Functional functional;
  Corepresentation corep;
  std::vector<NCPoly> a;
  /// r[i·n + j][μ] = r_μ(c_ij).
  std::vector<std::vector<NCPoly>> r;
  PolyMatrix E;

  const Presentation& algebra() const { return connection->coaction().A(); }
  std::size_t size() const { return E.size(); }
};

Projector projector(const ConnectionPtr& l, const Corepresentation& c, const Functional& phi);
/// As projector(), expanding ℓ(c_ij) against a prescribed family {a_μ}.
Projector projector_with_basis(const ConnectionPtr& l, const Corepresentation& c, const Functional& phi,
                               const std::vector<NCPoly>& basis);
/// E² = E and δ(E_kl) = E_kl ⊗ 1.
Report certify_projector(const Projector& p, const std::string& name = "projector");

/// f applied entrywise.
PolyMatrix pullback_projector(const MorphismData& f, const PolyMatrix& E);

struct PullbackCertificate {
  /// Indices μ of the original a_μ whose images stay independent.
  std::vector<std::size_t> image_indices;
  /// Aligned family: the a_μ for μ in I, then complement elements with f(·) = 0.
  std::vector<NCPoly> aligned_basis;
  Projector aligned;
  PolyMatrix fE;
  PolyMatrix e_prime;
  PolyMatrix d;
  PolyMatrix T;
  Report checks;
};

/// Changes basis inside span{a_μ} so the image part comes first and the
/// complement lies in ker f, then certifies the block structure of f(E).
PullbackCertificate align_blocks(const MorphismData& f, const Projector& E);

struct PullbackResult {
  Report report;
  std::optional<Projector> E;
  std::optional<PullbackCertificate> certificate;
  /// E' from ℓ' = (f⊗f)ℓ expanded on {f(a_μ) : μ ∈ I}.
  std::optional<Projector> E_target;
  /// E' with its own extracted basis.
  std::optional<Projector> E_target_self;
};

/// All five clauses: σ-diagram on basis words <= sweep_degree, block form,
/// d·e' = d, conjugation by T, and e' = E'. A non-equivariant f stops after
/// the equivariance check.
PullbackResult verify_pullback_theorem(const MorphismData& f, const ConnectionPtr& l, const Corepresentation& c,
                                       const Functional& phi_target, const CoactionPtr& target,
                                       std::size_t sweep_degree = 3);

/// E_{c'} = (1⊗Q) E_c (1⊗Q)⁻¹ with c' = Q c Q⁻¹ and E_{c'} built on the same {a_μ}.
Report projector_similarity(const Projector& E, const Corepresentation& c2, const ScalarMatrix& Q);

/// Φ(b)_j = Σ b_(μ,i) r_μ(c_ij) from rows of E to A□V and Ψ(x)_(ν,j) = σ(x_j a_ν) back.
Report cotensor_compare(const Projector& E, std::size_t d);

NCPoly projector_trace(const Projector& E);
/// Trace evaluated under a character, optionally specialized at q0.
QRat trace_under(const NCPoly& trace, const AlgebraMap& character);
PolyMatrix specialize(const PolyMatrix& m, const mpq_class& q0);

}  // namespace qb
