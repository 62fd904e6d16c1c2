#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qbundle/connection.hpp"

namespace qb {

/// Everything declared by one or more presentation files.
///
/// File format (one declaration per line, `#` starts a comment):
///
///   algebra NAME
///     generators g1 g2 ...          trailing `*` names pair with their base by default
///     star g h                      explicit star pairing
///     order g1 < g2 < ...           term-order precedence (default: listing order)
///     weight g N                    secondary term-order key
///     rel LHS = RHS
///     coproduct g = EXPR (x) EXPR ...
///     counit g = SCALAR
///     antipode g = EXPR
///     antipode_inv g = EXPR
///   coaction NAME : A -> A (x) H
///     delta g = EXPR (x) EXPR
///   corep NAME dim n [on H]
///     row e1, e2, ...
///   connection NAME on COACTION
///     L ELEM = EXPR (x) EXPR ...     or the two lines `trivial` and `domain e1, e2, ...`
///   morphism NAME : SRC -> TGT      TGT may be `k`, the ground field
///     map g = EXPR
///
/// Structure data missing on a starred generator is derived from its partner:
/// Δ(g*) = Δ(g)*, ε(g*) = ε(g), S(g*) = S⁻¹(g)*, S⁻¹(g*) = S(g)*, δ(g*) = δ(g)*, f(g*) = f(g)*.
struct Document {
  std::map<std::string, std::shared_ptr<const Presentation>> algebras;
  std::map<std::string, HopfPtr> hopf;
  std::map<std::string, CoactionPtr> coactions;
  std::map<std::string, Corepresentation> coreps;
  std::map<std::string, ConnectionPtr> connections;
  std::map<std::string, std::shared_ptr<MorphismData>> morphisms;
  /// Declaration order of each kind, for deterministic defaults.
  std::vector<std::string> corep_order, connection_order, morphism_order, coaction_order;

  const Presentation& algebra(const std::string& name) const;
  HopfPtr hopf_of(const std::string& algebra_name) const;
  CoactionPtr coaction(const std::string& name) const;
  const Corepresentation& corep(const std::string& name) const;
  ConnectionPtr connection(const std::string& name) const;
  std::shared_ptr<MorphismData> morphism(const std::string& name) const;
};

/// Parses `text` into `doc`. Throws ParseError carrying the 1-based line.
void load_text(Document& doc, std::string_view text);
Document load_file(const std::string& path);

}  // namespace qb
