#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "qbundle/document.hpp"

namespace qb {

/// Presentation text of O(SU_q(2)) (algebra `suq2`) with its Hopf structure.
std::string_view suq2_text();
/// Presentation text of O(U(1)) (algebra `u1`).
std::string_view u1_text();
/// suq2 and u1, the coaction `hopf` (α ↦ α⊗u, γ ↦ γ⊗u), the regular coaction
/// `u1_regular` of u1, and the restriction morphism `f`: α ↦ u, γ ↦ 0.
std::string hopf_fibration_text();

/// Data needed to build and pull back an associated projector.
struct Bundle {
  Document doc;
  CoactionPtr coaction;
  ConnectionPtr connection;
  Corepresentation corep;
  /// Optional equivariant map out of the total space and the coaction on its target.
  std::shared_ptr<MorphismData> morphism;
  CoactionPtr target;
};

/// Hopf fibration with V = [u^n] and the u1_power connection.
Bundle podles_line(int n, int coverage = 3);
/// A = H = O(SU_q(2)) with the trivial connection; corep is "u", "u-dual" or "trivial".
Bundle trivial_base(const std::string& corep = "u");

/// "suq2" or "u1" as a standalone document.
Document preset_document(const std::string& name);

}  // namespace qb
