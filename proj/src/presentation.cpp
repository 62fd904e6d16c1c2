#include "qbundle/presentation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "qbundle/expr.hpp"

namespace qb {

std::size_t ConfluenceReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(overlaps.begin(), overlaps.end(), [](const OverlapCheck& o) { return !o.resolved(); }));
}

Presentation::Presentation(std::string name, std::vector<Generator> generators)
    : name_(std::move(name)), generators_(std::move(generators)) {
  std::stable_sort(generators_.begin(), generators_.end(),
                   [](const Generator& a, const Generator& b) { return a.precedence < b.precedence; });
  if (generators_.size() > 0xFFFF) throw Error("too many generators");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    generators_[i].precedence = static_cast<int>(i);
    const auto& n = generators_[i].name;
    if (n == "q" || n == "t") throw Error("generator name '" + n + "' is reserved");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j].name == n) throw Error("duplicate generator '" + n + "'");
  }
  star_.resize(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    auto& g = generators_[i];
    if (g.star_partner.empty()) g.star_partner = g.name;
    auto partner = find(g.star_partner);
    if (!partner) throw Error("star partner '" + g.star_partner + "' of '" + g.name + "' is not a generator");
    star_[i] = *partner;
  }
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (star_[star_[i]] != i) throw Error("star pairing is not an involution at '" + generators_[i].name + "'");
  rebuild_index();
}

std::optional<GenId> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return static_cast<GenId>(i);
  return std::nullopt;
}

GenId Presentation::id(std::string_view name) const {
  auto g = find(name);
  if (!g) throw Error("unknown generator '" + std::string(name) + "' in " + name_);
  return *g;
}

int Presentation::weight(const Word& w) const {
  int s = 0;
  for (GenId g : w) s += generators_[g].weight;
  return s;
}

bool Presentation::word_less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  const int wa = weight(a);
  const int wb = weight(b);
  if (wa != wb) return wa < wb;
  return a < b;
}

std::optional<Word> Presentation::leading_word(const NCPoly& p) const {
  if (p.is_zero()) return std::nullopt;
  const Word* best = nullptr;
  for (const auto& [w, c] : p.terms())
    if (!best || word_less(*best, w)) best = &w;
  return *best;
}

std::vector<Word> Presentation::sorted_words(const NCPoly& p) const {
  std::vector<Word> out;
  out.reserve(p.size());
  for (const auto& [w, c] : p.terms()) out.push_back(w);
  std::sort(out.begin(), out.end(), [this](const Word& a, const Word& b) { return word_less(a, b); });
  return out;
}

void Presentation::rebuild_index() {
  rules_by_first_.assign(generators_.size(), {});
  for (std::size_t r = 0; r < rules_.size(); ++r) rules_by_first_[rules_[r].lhs.front()].push_back(r);
  std::lock_guard lock(cache_mutex_);
  cache_.clear();
}

void Presentation::add_relation(const NCPoly& p) {
  relations_.push_back(p);
  std::deque<NCPoly> pending{p};
  while (!pending.empty()) {
    NCPoly r = normal_form(pending.front());
    pending.pop_front();
    if (r.is_zero()) continue;
    Word lead = *leading_word(r);
    if (lead.empty()) throw Error("relation in " + name_ + " forces 1 = 0");
    const QRat lc = r.coefficient(lead);
    NCPoly rhs = r;
    rhs.add_term(lead, -lc);
    rhs = (QRat(-1) / lc) * rhs;
    // Rules whose left side contains the new leading word are no longer reduced.
    std::vector<Rule> kept;
    for (auto& old : rules_) {
      bool contains = old.lhs.size() >= lead.size() &&
                      std::search(old.lhs.begin(), old.lhs.end(), lead.begin(), lead.end()) != old.lhs.end();
      if (contains) {
        NCPoly back = NCPoly::word(old.lhs);
        back -= old.rhs;
        pending.push_back(std::move(back));
      } else {
        kept.push_back(std::move(old));
      }
    }
    rules_ = std::move(kept);
    rules_.push_back({std::move(lead), std::move(rhs)});
    rebuild_index();
  }
  for (auto& rule : rules_) rule.rhs = normal_form(rule.rhs);
  rebuild_index();
}

std::optional<std::pair<std::size_t, std::size_t>> Presentation::find_redex(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t r : rules_by_first_[w[i]]) {
      const Word& lhs = rules_[r].lhs;
      if (i + lhs.size() <= w.size() && std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<long>(i)))
        return std::make_pair(i, r);
    }
  }
  return std::nullopt;
}

bool Presentation::is_normal(const Word& w) const { return !find_redex(w).has_value(); }

NCPoly Presentation::reduce_step(const Word& w, std::size_t at, std::size_t rule) const {
  const Rule& r = rules_[rule];
  Word prefix(w.begin(), w.begin() + static_cast<long>(at));
  Word suffix(w.begin() + static_cast<long>(at + r.lhs.size()), w.end());
  NCPoly out;
  for (const auto& [rw, c] : r.rhs.terms()) out.add_term(concat(prefix, rw, suffix), c);
  return out;
}

NCPoly Presentation::normal_form(const Word& w) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  NCPoly result;
  auto redex = find_redex(w);
  if (!redex) {
    result = NCPoly::word(w);
  } else {
    NCPoly step = reduce_step(w, redex->first, redex->second);
    for (const auto& [sw, c] : step.terms()) result.add_scaled(normal_form(sw), c);
  }
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(w, result);
  return result;
}

NCPoly Presentation::normal_form(const NCPoly& p) const {
  NCPoly r;
  for (const auto& [w, c] : p.terms()) r.add_scaled(normal_form(w), c);
  return r;
}

NCPoly Presentation::multiply(const NCPoly& a, const NCPoly& b) const {
  NCPoly r;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) r.add_scaled(normal_form(concat(wa, wb)), ca * cb);
  return r;
}

NCPoly Presentation::power(const NCPoly& a, int k) const {
  if (k < 0) throw Error("negative power of an algebra element");
  NCPoly r = NCPoly::one();
  for (int i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

NCPoly Presentation::involution(const NCPoly& p) const {
  NCPoly r;
  for (const auto& [w, c] : p.terms()) {
    Word s(w.rbegin(), w.rend());
    for (auto& g : s) g = star_[g];
    r.add_scaled(normal_form(s), c);
  }
  return r;
}

std::vector<Word> Presentation::basis_up_to_degree(std::size_t d) const {
  std::vector<Word> all;
  std::vector<Word> layer{Word{}};
  all.push_back({});
  for (std::size_t n = 1; n <= d; ++n) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (GenId g = 0; g < generators_.size(); ++g) {
        Word x = w;
        x.push_back(g);
        // w is normal, so only redexes ending at the new letter can appear.
        bool reducible = false;
        for (std::size_t start = 0; start < x.size() && !reducible; ++start) {
          for (std::size_t r : rules_by_first_[x[start]]) {
            const Word& lhs = rules_[r].lhs;
            if (start + lhs.size() == x.size() &&
                std::equal(lhs.begin(), lhs.end(), x.begin() + static_cast<long>(start))) {
              reducible = true;
              break;
            }
          }
        }
        if (!reducible) next.push_back(std::move(x));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), [this](const Word& a, const Word& b) { return word_less(a, b); });
  return all;
}

std::vector<Word> Presentation::basis_of_length(std::size_t n) const {
  std::vector<Word> out;
  for (auto& w : basis_up_to_degree(n))
    if (w.size() == n) out.push_back(std::move(w));
  return out;
}

ConfluenceReport Presentation::check_local_confluence(std::size_t d) const {
  ConfluenceReport report;
  report.degree_bound = d;
  for (std::size_t a = 0; a < rules_.size(); ++a) {
    const Word& la = rules_[a].lhs;
    for (std::size_t b = 0; b < rules_.size(); ++b) {
      const Word& lb = rules_[b].lhs;
      // Overlaps: a proper suffix of la equals a proper prefix of lb.
      for (std::size_t k = 1; k < la.size() && k < lb.size(); ++k) {
        if (!std::equal(la.end() - static_cast<long>(k), la.end(), lb.begin())) continue;
        Word w = concat(la, Word(lb.begin() + static_cast<long>(k), lb.end()));
        if (w.size() > d) continue;
        report.overlaps.push_back({w, a, b, normal_form(reduce_step(w, 0, a)),
                                   normal_form(reduce_step(w, la.size() - k, b))});
      }
      // Inclusions: lb occurs inside la.
      if (a != b && lb.size() <= la.size() && la.size() <= d) {
        for (std::size_t i = 0; i + lb.size() <= la.size(); ++i) {
          if (!std::equal(lb.begin(), lb.end(), la.begin() + static_cast<long>(i))) continue;
          report.overlaps.push_back({la, a, b, normal_form(reduce_step(la, 0, a)),
                                     normal_form(reduce_step(la, i, b))});
        }
      }
    }
  }
  return report;
}

std::vector<std::size_t> Presentation::star_closure_failures() const {
  std::vector<std::size_t> bad;
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    NCPoly rel = NCPoly::word(rules_[r].lhs) - rules_[r].rhs;
    if (!involution(rel).is_zero()) bad.push_back(r);
  }
  return bad;
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += generators_[w[i]].name;
  }
  return s;
}

std::string Presentation::format(const NCPoly& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& w : sorted_words(p)) {
    const QRat& c = p.terms().at(w);
    std::string cs = c.to_string();
    bool neg = false;
    if (!c.is_compound() && cs.front() == '-') {
      neg = true;
      cs.erase(0, 1);
    }
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (c.is_compound()) cs = "(" + cs + ")";
    if (w.empty()) {
      out += cs;
    } else {
      if (cs != "1") out += cs + " ";
      out += format_word(w);
    }
  }
  return out;
}

NCPoly Presentation::parse(std::string_view text) const { return parse_expression(*this, text); }

const Presentation& scalar_field() {
  static const Presentation k("k", {});
  return k;
}

}  // namespace qb
