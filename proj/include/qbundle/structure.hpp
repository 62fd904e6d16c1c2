#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qbundle/report.hpp"
#include "qbundle/tensor.hpp"

namespace qb {

enum class MapKind { homomorphism, anti_homomorphism };

/// A (anti-)multiplicative map given on generators and extended to words.
/// Images live in the tensor product of `targets`; a single target is an
/// ordinary algebra map, two targets cover coproducts and coactions, and an
/// empty target list is a character into the ground field.
class AlgebraMap {
 public:
  AlgebraMap(std::string name, const Presentation& source, std::vector<const Presentation*> targets,
             MapKind kind = MapKind::homomorphism);
  AlgebraMap(const AlgebraMap& other);
  AlgebraMap& operator=(const AlgebraMap& other);

  const std::string& name() const { return name_; }
  const Presentation& source() const { return *source_; }
  const std::vector<const Presentation*>& targets() const { return targets_; }
  MapKind kind() const { return kind_; }

  void set_image(GenId g, TensorElem image);
  /// Degree-1 shorthand.
  void set_image(GenId g, const NCPoly& image);
  bool has_image(GenId g) const { return has_image_.at(g); }
  const TensorElem& image(GenId g) const;
  bool complete() const;

  TensorElem apply(const Word& w) const;
  TensorElem apply(const NCPoly& p) const;
  /// For single-target maps.
  NCPoly apply_poly(const NCPoly& p) const;
  /// For maps into the ground field.
  QRat apply_scalar(const NCPoly& p) const;
  /// The map as a word-wise leg map; valid while this object lives.
  LegMap leg_map() const;

  /// Rules of the source whose two sides have different images.
  std::vector<std::string> relation_failures() const;
  /// Generators g with image(g*) != image(g)*, taking * legwise in the target.
  std::vector<std::string> star_failures() const;

 private:
  std::string name_;
  const Presentation* source_;
  std::vector<const Presentation*> targets_;
  MapKind kind_;
  std::vector<TensorElem> images_;
  std::vector<bool> has_image_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Word, TensorElem, WordHash> cache_;
};

/// Applies the involution to every leg.
TensorElem star_legs(const TensorElem& t);

/// An algebra map between presentations (or a character, when the target
/// is the ground field) together with its verification status.
struct MorphismData {
  explicit MorphismData(AlgebraMap m) : map(std::move(m)) {}
  AlgebraMap map;
  bool verified = false;

  const Presentation& source() const { return map.source(); }
  const Presentation& target() const;
};

MorphismData make_morphism(std::string name, const Presentation& source, const Presentation& target,
                           MapKind kind = MapKind::homomorphism);

/// Checks relations and star-compatibility; marks M verified on success.
Report verify_morphism(MorphismData& m);
/// Extends a verified morphism to an arbitrary element.
NCPoly extend_algebra_map(const MorphismData& m, const NCPoly& p);
/// g ∘ f, defined on generators of f's source. Unverified.
MorphismData compose(const MorphismData& g, const MorphismData& f);
MorphismData identity_morphism(const Presentation& p);

/// Hopf structure on a presentation: Δ, ε, S and S⁻¹ on generators.
struct HopfAlgebra {
  explicit HopfAlgebra(std::shared_ptr<const Presentation> algebra);

  std::shared_ptr<const Presentation> algebra;
  AlgebraMap coproduct;
  AlgebraMap counit;
  AlgebraMap antipode;
  AlgebraMap antipode_inv;

  const Presentation& alg() const { return *algebra; }
  QRat epsilon(const NCPoly& p) const { return counit.apply_scalar(p); }
  NCPoly S(const NCPoly& p) const { return antipode.apply_poly(p); }
  NCPoly S_inv(const NCPoly& p) const { return antipode_inv.apply_poly(p); }
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Δ (k = 2) or (Δ⊗id)∘Δ (k = 3) applied to p.
TensorElem apply_coproduct(const HopfAlgebra& h, const NCPoly& p, int k = 2);

/// Sweeps the Hopf axioms over all normal words of length <= d.
Report verify_hopf_axioms(const HopfAlgebra& h, std::size_t d);

}  // namespace qb
