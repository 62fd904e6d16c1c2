#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qbundle/ncpoly.hpp"

namespace qb {

struct Generator {
  std::string name;
  /// Name of the *-partner; equal to `name` for self-adjoint generators.
  std::string star_partner;
  /// Position in the term order; smaller is smaller.
  int precedence = 0;
  /// Secondary term-order key (see Presentation::word_less).
  int weight = 0;
};

struct Rule {
  Word lhs;
  NCPoly rhs;
};

struct OverlapCheck {
  Word word;
  std::size_t first_rule;
  std::size_t second_rule;
  NCPoly first_path;
  NCPoly second_path;
  bool resolved() const { return first_path == second_path; }
};

struct ConfluenceReport {
  std::size_t degree_bound = 0;
  std::vector<OverlapCheck> overlaps;
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

/// A finitely presented *-algebra over Q(q): generators with an involutive
/// star pairing and a terminating rewrite system.
///
/// Generator ids are assigned in precedence order, so comparing ids compares
/// precedence. Words are ordered by length, then by the sum of generator
/// weights, then lexicographically by id. Every rule rewrites a word to a
/// combination of strictly smaller words, which guarantees termination.
class Presentation {
 public:
  Presentation(std::string name, std::vector<Generator> generators);
  Presentation(const Presentation&) = delete;
  Presentation& operator=(const Presentation&) = delete;

  /// Adds the relation `p = 0`, orienting it by its leading word and
  /// inter-reducing the existing rules.
  void add_relation(const NCPoly& p);
  void add_relation(const NCPoly& lhs, const NCPoly& rhs) { add_relation(lhs - rhs); }

  const std::string& name() const { return name_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  std::optional<GenId> find(std::string_view name) const;
  GenId id(std::string_view name) const;
  GenId star(GenId g) const { return star_[g]; }
  const std::vector<Rule>& rules() const { return rules_; }
  /// Relations as entered, before orientation.
  const std::vector<NCPoly>& relations() const { return relations_; }

  bool word_less(const Word& a, const Word& b) const;
  std::optional<Word> leading_word(const NCPoly& p) const;
  /// Words of p sorted ascending in the term order.
  std::vector<Word> sorted_words(const NCPoly& p) const;

  bool is_normal(const Word& w) const;
  NCPoly normal_form(const Word& w) const;
  NCPoly normal_form(const NCPoly& p) const;
  NCPoly multiply(const NCPoly& a, const NCPoly& b) const;
  NCPoly power(const NCPoly& a, int k) const;
  NCPoly involution(const NCPoly& p) const;
  NCPoly generator(std::string_view name) const { return NCPoly::word({id(name)}); }

  /// All normal words of length <= d, ascending in the term order.
  std::vector<Word> basis_up_to_degree(std::size_t d) const;
  /// Normal words of length exactly n.
  std::vector<Word> basis_of_length(std::size_t n) const;

  ConfluenceReport check_local_confluence(std::size_t d) const;
  /// Indices of rules whose starred version is not a consequence of the system.
  std::vector<std::size_t> star_closure_failures() const;

  std::string format_word(const Word& w) const;
  std::string format(const NCPoly& p) const;
  /// Parses an expression in this presentation's generators and normalizes it.
  NCPoly parse(std::string_view text) const;

 private:
  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const;
  NCPoly reduce_step(const Word& w, std::size_t at, std::size_t rule) const;
  int weight(const Word& w) const;
  void rebuild_index();

  std::string name_;
  std::vector<Generator> generators_;
  std::vector<GenId> star_;
  std::vector<Rule> rules_;
  std::vector<NCPoly> relations_;
  std::vector<std::vector<std::size_t>> rules_by_first_;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Word, NCPoly, WordHash> cache_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// The ground field viewed as a presentation with no generators.
const Presentation& scalar_field();

}  // namespace qb
