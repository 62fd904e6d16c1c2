#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qbundle/presentation.hpp"

namespace qb {

/// Formal sum of scalar-weighted tuples of normal words. Each leg is tagged
/// with the presentation it lives in. Degree 0 is allowed as an
/// intermediate (a scalar); user-facing tensors have degree 1 to 3.
class TensorElem {
 public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, QRat>;

  static constexpr std::size_t max_degree = 3;

  TensorElem() = default;
  explicit TensorElem(std::vector<const Presentation*> legs);

  /// Outer product p_1 ⊗ ... ⊗ p_k of already normalized polynomials.
  static TensorElem pure(std::vector<const Presentation*> legs, const std::vector<NCPoly>& factors);
  static TensorElem unit(std::vector<const Presentation*> legs);
  static TensorElem of(const Presentation& a, const NCPoly& x);
  static TensorElem of(const Presentation& a, const NCPoly& x, const Presentation& b, const NCPoly& y);
  static TensorElem of(const Presentation& a, const NCPoly& x, const Presentation& b, const NCPoly& y,
                       const Presentation& c, const NCPoly& z);

  std::size_t degree() const { return legs_.size(); }
  const std::vector<const Presentation*>& legs() const { return legs_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QRat coefficient(const Key& k) const;

  void add_term(Key k, const QRat& c);
  void add_pure(const QRat& c, const std::vector<NCPoly>& factors);
  void add_scaled(const TensorElem& t, const QRat& c);

  TensorElem operator-() const;
  TensorElem& operator+=(const TensorElem& t);
  TensorElem& operator-=(const TensorElem& t);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  friend TensorElem operator*(const QRat& c, const TensorElem& t);
  friend bool operator==(const TensorElem& a, const TensorElem& b);
  friend bool operator!=(const TensorElem& a, const TensorElem& b) { return !(a == b); }

  /// For a degree-1 tensor, the underlying polynomial.
  NCPoly as_poly() const;
  /// For a degree-0 tensor, the scalar.
  QRat as_scalar() const;

  /// Splits along one leg: t = Σ_w (rest_w) with leg `leg` carrying word w.
  /// The returned tensors omit that leg.
  std::map<Word, TensorElem> split_leg(std::size_t leg) const;

  std::string to_string() const;

 private:
  void check_same_legs(const TensorElem& t) const;
  std::vector<const Presentation*> legs_;
  Terms terms_;
};

/// A linear map applied word-by-word to one tensor leg. `targets` lists the
/// presentations of the legs that replace the mapped leg; an empty list
/// means the map lands in the ground field and the leg disappears.
struct LegMap {
  const Presentation* source = nullptr;
  std::vector<const Presentation*> targets;
  std::function<TensorElem(const Word&)> on_word;
};

LegMap identity_leg_map(const Presentation& p);

/// Applies m to leg `leg` of t and renormalizes.
TensorElem tensor_map_leg(const TensorElem& t, std::size_t leg, const LegMap& m);
/// Reorders legs: result leg i is input leg perm[i].
TensorElem permute_legs(const TensorElem& t, const std::vector<std::size_t>& perm);
TensorElem flip(const TensorElem& t);
/// Legwise product, normalized in each leg's presentation.
TensorElem tensor_mul(const TensorElem& s, const TensorElem& t);
/// Multiplies all legs together (they must share one presentation).
NCPoly multiply_legs(const TensorElem& t);
/// Appends legs: s ⊗ t.
TensorElem tensor_product(const TensorElem& s, const TensorElem& t);

}  // namespace qb
