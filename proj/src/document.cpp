#include "qbundle/document.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "qbundle/expr.hpp"

namespace qb {

const Presentation& Document::algebra(const std::string& name) const {
  auto it = algebras.find(name);
  if (it == algebras.end()) throw PreconditionError("unknown algebra '" + name + "'");
  return *it->second;
}

HopfPtr Document::hopf_of(const std::string& name) const {
  auto it = hopf.find(name);
  if (it == hopf.end()) throw PreconditionError("algebra '" + name + "' has no Hopf structure");
  return it->second;
}

CoactionPtr Document::coaction(const std::string& name) const {
  auto it = coactions.find(name);
  if (it == coactions.end()) throw PreconditionError("unknown coaction '" + name + "'");
  return it->second;
}

const Corepresentation& Document::corep(const std::string& name) const {
  auto it = coreps.find(name);
  if (it == coreps.end()) throw PreconditionError("unknown corepresentation '" + name + "'");
  return it->second;
}

ConnectionPtr Document::connection(const std::string& name) const {
  auto it = connections.find(name);
  if (it == connections.end()) throw PreconditionError("unknown connection '" + name + "'");
  return it->second;
}

std::shared_ptr<MorphismData> Document::morphism(const std::string& name) const {
  auto it = morphisms.find(name);
  if (it == morphisms.end()) throw PreconditionError("unknown morphism '" + name + "'");
  return it->second;
}

namespace {

struct Line {
  std::size_t number;
  std::string text;
  std::size_t indent = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> words_of(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

/// Runs f, moving any parse error to `line` and shifting its column by `offset`.
template <class F>
auto at_line(const Line& line, std::size_t offset, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(e.message(), line.indent + offset + e.position(), line.number);
  } catch (const Error& e) {
    throw ParseError(e.what(), line.indent + offset, line.number);
  }
}

/// Splits "KEY NAME = EXPR"; returns NAME and EXPR with the column where EXPR starts.
struct Assignment {
  std::string name;
  std::string_view expr;
  std::size_t column;
};

Assignment assignment(const Line& line, std::string_view keyword) {
  std::string_view s = line.text;
  const auto eq = s.find('=');
  if (eq == std::string_view::npos) throw ParseError("expected '='", s.size(), line.number);
  const auto lhs = words_of(s.substr(keyword.size(), eq - keyword.size()));
  if (lhs.size() != 1) throw ParseError("expected a single name before '='", keyword.size(), line.number);
  std::size_t start = eq + 1;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  if (start >= s.size()) throw ParseError("missing expression after '='", s.size(), line.number);
  return {lhs[0], s.substr(start), start};
}

/// Comma-separated items at parenthesis depth 0, with their columns.
std::vector<std::pair<std::string_view, std::size_t>> comma_list(const Line& line, std::size_t from) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::string_view s = line.text;
  int depth = 0;
  std::size_t start = from;
  for (std::size_t i = from; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      std::string_view item = s.substr(start, i - start);
      std::size_t col = start;
      while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) {
        item.remove_prefix(1);
        ++col;
      }
      item = trim(item);
      if (item.empty()) throw ParseError("empty list entry", col, line.number);
      out.emplace_back(item, col);
      start = i + 1;
    }
  }
  return out;
}

GenId generator_at(const Presentation& p, const std::string& name, const Line& line) {
  auto g = p.find(name);
  if (!g) throw ParseError("'" + name + "' is not a generator of " + p.name(), 0, line.number);
  return *g;
}

bool starts_with_word(std::string_view s, std::string_view w) {
  return s.substr(0, w.size()) == w && (s.size() == w.size() || std::isspace(static_cast<unsigned char>(s[w.size()])));
}

/// Fills unset images on starred generators from their partners.
void derive_star_images(AlgebraMap& m, const std::function<TensorElem(GenId)>& from_partner) {
  const Presentation& P = m.source();
  for (GenId g = 0; g < P.generator_count(); ++g)
    if (!m.has_image(g) && m.has_image(P.star(g))) m.set_image(g, from_partner(P.star(g)));
}

TensorElem star_image(const AlgebraMap& m, GenId partner) {
  const TensorElem& img = m.image(partner);
  return img.is_zero() ? img : star_legs(img);
}

class Loader {
 public:
  explicit Loader(Document& doc) : doc_(doc) {}

  void run(std::string_view text) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto nl = text.find('\n', pos);
      std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++number;
      pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
      std::size_t indent = 0;
      while (indent < raw.size() && std::isspace(static_cast<unsigned char>(raw[indent]))) ++indent;
      if (indent == raw.size()) continue;
      Line line{number, std::string(raw.substr(indent)), indent};
      static const char* headers[] = {"algebra", "coaction", "corep", "connection", "morphism"};
      bool header = false;
      for (const char* h : headers) header = header || starts_with_word(line.text, h);
      if (header) {
        flush();
        head_ = line;
      } else {
        if (!head_) throw ParseError("declaration outside of a block", 0, line.number);
        body_.push_back(line);
      }
    }
    flush();
  }

 private:
  void flush() {
    if (!head_) return;
    const Line head = *head_;
    const auto w = words_of(head.text);
    if (w[0] == "algebra") algebra_block(head);
    else if (w[0] == "coaction") coaction_block(head);
    else if (w[0] == "corep") corep_block(head);
    else if (w[0] == "connection") connection_block(head);
    else morphism_block(head);
    head_.reset();
    body_.clear();
  }

  [[noreturn]] static void unknown(const Line& l) {
    throw ParseError("unknown declaration '" + words_of(l.text)[0] + "'", 0, l.number);
  }

  void algebra_block(const Line& head) {
    const auto hw = words_of(head.text);
    if (hw.size() != 2) throw ParseError("expected 'algebra NAME'", 0, head.number);
    const std::string name = hw[1];
    if (doc_.algebras.count(name)) throw ParseError("algebra '" + name + "' declared twice", 0, head.number);

    std::vector<std::string> names;
    std::map<std::string, std::string> star;
    std::map<std::string, int> order, weight;
    std::vector<Line> rels, hopf_lines;
    for (const Line& l : body_) {
      const auto w = words_of(l.text);
      if (w[0] == "generators") {
        names.insert(names.end(), w.begin() + 1, w.end());
      } else if (w[0] == "star") {
        if (w.size() != 3) throw ParseError("expected 'star g h'", 0, l.number);
        star[w[1]] = w[2];
        star[w[2]] = w[1];
      } else if (w[0] == "order") {
        int k = 0;
        for (std::size_t i = 1; i < w.size(); ++i) {
          if (w[i] == "<") continue;
          order[w[i]] = k++;
        }
      } else if (w[0] == "weight") {
        if (w.size() != 3) throw ParseError("expected 'weight g N'", 0, l.number);
        try {
          weight[w[1]] = std::stoi(w[2]);
        } catch (const std::exception&) {
          throw ParseError("weight must be an integer", 0, l.number);
        }
      } else if (w[0] == "rel") {
        rels.push_back(l);
      } else if (w[0] == "coproduct" || w[0] == "counit" || w[0] == "antipode" || w[0] == "antipode_inv") {
        hopf_lines.push_back(l);
      } else {
        unknown(l);
      }
    }
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < names.size(); ++i) {
      const std::string& n = names[i];
      Generator g{n, n, static_cast<int>(i), 0};
      if (star.count(n)) g.star_partner = star[n];
      else if (n.size() > 1 && n.back() == '*' && std::count(names.begin(), names.end(), n.substr(0, n.size() - 1)))
        g.star_partner = n.substr(0, n.size() - 1);
      else if (std::count(names.begin(), names.end(), n + "*"))
        g.star_partner = n + "*";
      if (!order.empty()) {
        if (!order.count(n)) throw ParseError("generator '" + n + "' missing from order", 0, head.number);
        g.precedence = order[n];
      }
      if (weight.count(n)) g.weight = weight[n];
      gens.push_back(g);
    }
    for (const auto& [n, k] : weight)
      if (!std::count(names.begin(), names.end(), n)) throw ParseError("weight of unknown generator '" + n + "'", 0, head.number);
    auto P = at_line(head, 0, [&] { return std::make_shared<Presentation>(name, gens); });
    for (const Line& l : rels) {
      const std::string_view s = l.text;
      const auto eq = s.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected 'rel LHS = RHS'", s.size(), l.number);
      const NCPoly lhs = at_line(l, 3, [&] { return parse_expression(*P, s.substr(3, eq - 3)); });
      const NCPoly rhs = at_line(l, eq + 1, [&] { return parse_expression(*P, s.substr(eq + 1)); });
      at_line(l, 0, [&] {
        P->add_relation(lhs, rhs);
        return 0;
      });
    }
    doc_.algebras[name] = P;
    if (hopf_lines.empty()) return;

    auto H = std::make_shared<HopfAlgebra>(P);
    for (const Line& l : hopf_lines) {
      const std::string kw = words_of(l.text)[0];
      const Assignment a = assignment(l, kw);
      const GenId g = generator_at(*P, a.name, l);
      if (kw == "coproduct") {
        H->coproduct.set_image(g, at_line(l, a.column, [&] { return parse_tensor({P.get(), P.get()}, a.expr); }));
      } else if (kw == "counit") {
        const NCPoly c = at_line(l, a.column, [&] { return parse_expression(scalar_field(), a.expr); });
        H->counit.set_image(g, c);
      } else {
        AlgebraMap& m = kw == "antipode" ? H->antipode : H->antipode_inv;
        m.set_image(g, at_line(l, a.column, [&] { return parse_expression(*P, a.expr); }));
      }
    }
    derive_star_images(H->coproduct, [&](GenId p) { return star_image(H->coproduct, p); });
    derive_star_images(H->counit, [&](GenId p) { return H->counit.image(p); });
    derive_star_images(H->antipode, [&](GenId p) { return star_image(H->antipode_inv, p); });
    derive_star_images(H->antipode_inv, [&](GenId p) { return star_image(H->antipode, p); });
    doc_.hopf[name] = H;
    last_hopf_ = name;
  }

  void coaction_block(const Line& head) {
    static const std::regex re(R"(^coaction\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)\s*\(x\)\s*(\S+)$)");
    std::smatch m;
    if (!std::regex_match(head.text, m, re)) throw ParseError("expected 'coaction NAME : A -> A (x) H'", 0, head.number);
    if (m[2] != m[3]) throw ParseError("coaction target must be A (x) H with the same A", 0, head.number);
    if (!doc_.algebras.count(m[2])) throw ParseError("unknown algebra '" + m[2].str() + "'", 0, head.number);
    const auto A = doc_.algebras.at(m[2]);
    const HopfPtr H = at_line(head, 0, [&] { return doc_.hopf_of(m[4]); });
    auto c = std::make_shared<Coaction>(m[1], A, H);
    for (const Line& l : body_) {
      if (words_of(l.text)[0] != "delta") unknown(l);
      const Assignment a = assignment(l, "delta");
      const GenId g = generator_at(*A, a.name, l);
      c->delta.set_image(g, at_line(l, a.column, [&] { return parse_tensor({A.get(), H->algebra.get()}, a.expr); }));
    }
    derive_star_images(c->delta, [&](GenId p) { return star_image(c->delta, p); });
    doc_.coactions[m[1]] = c;
    doc_.coaction_order.push_back(m[1]);
  }

  void corep_block(const Line& head) {
    static const std::regex re(R"(^corep\s+(\S+)\s+dim\s+(\d+)(?:\s+on\s+(\S+))?$)");
    std::smatch m;
    if (!std::regex_match(head.text, m, re)) throw ParseError("expected 'corep NAME dim n [on H]'", 0, head.number);
    const std::string hname = m[3].matched ? m[3].str() : last_hopf_;
    if (hname.empty()) throw ParseError("no Hopf algebra declared before corepresentation", 0, head.number);
    const HopfPtr H = at_line(head, 0, [&] { return doc_.hopf_of(hname); });
    const std::size_t n = std::stoul(m[2]);
    PolyMatrix rows;
    for (const Line& l : body_) {
      if (words_of(l.text)[0] != "row") unknown(l);
      std::vector<NCPoly> row;
      for (const auto& [item, col] : comma_list(l, 3))
        row.push_back(at_line(l, col, [&] { return parse_expression(H->alg(), item); }));
      if (row.size() != n) throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n), 0, l.number);
      rows.push_back(std::move(row));
    }
    if (rows.size() != n) throw ParseError("corepresentation needs " + std::to_string(n) + " rows", 0, head.number);
    doc_.coreps[m[1]] = make_corep(m[1], H, rows);
    doc_.corep_order.push_back(m[1]);
  }

  void connection_block(const Line& head) {
    static const std::regex re(R"(^connection\s+(\S+)\s+on\s+(\S+)$)");
    std::smatch m;
    if (!std::regex_match(head.text, m, re)) throw ParseError("expected 'connection NAME on COACTION'", 0, head.number);
    const CoactionPtr c = at_line(head, 0, [&] { return doc_.coaction(m[2]); });
    const Presentation& A = c->A();
    const Presentation& H = c->H().alg();
    bool trivial = false;
    std::vector<NCPoly> domain;
    std::vector<std::pair<NCPoly, TensorElem>> table;
    for (const Line& l : body_) {
      const auto w = words_of(l.text);
      if (w[0] == "trivial" && w.size() == 1) {
        trivial = true;
      } else if (w[0] == "domain") {
        for (const auto& [item, col] : comma_list(l, 6))
          domain.push_back(at_line(l, col, [&] { return parse_expression(H, item); }));
      } else if (w[0] == "L") {
        const std::string_view s = l.text;
        const auto eq = s.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'L ELEM = EXPR'", s.size(), l.number);
        const NCPoly h = at_line(l, 1, [&] { return parse_expression(H, s.substr(1, eq - 1)); });
        const TensorElem v = at_line(l, eq + 1, [&] { return parse_tensor({&A, &A}, s.substr(eq + 1)); });
        table.emplace_back(h, v);
      } else {
        unknown(l);
      }
    }
    ConnectionPtr conn;
    if (trivial) {
      if (!table.empty()) throw ParseError("a trivial connection takes no table", 0, head.number);
      conn = at_line(head, 0, [&] {
        return std::make_shared<const StrongConnection>(m[1], c, CoalgebraSpan(c->hopf, domain));
      });
    } else {
      conn = at_line(head, 0, [&] { return std::make_shared<const StrongConnection>(m[1], c, table); });
    }
    doc_.connections[m[1]] = conn;
    doc_.connection_order.push_back(m[1]);
  }

  void morphism_block(const Line& head) {
    static const std::regex re(R"(^morphism\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$)");
    std::smatch m;
    if (!std::regex_match(head.text, m, re)) throw ParseError("expected 'morphism NAME : SRC -> TGT'", 0, head.number);
    const Presentation& S = at_line(head, 0, [&]() -> const Presentation& { return doc_.algebra(m[2]); });
    const Presentation& T =
        m[3] == "k" ? scalar_field() : at_line(head, 0, [&]() -> const Presentation& { return doc_.algebra(m[3]); });
    auto f = std::make_shared<MorphismData>(make_morphism(m[1], S, T));
    for (const Line& l : body_) {
      if (words_of(l.text)[0] != "map") unknown(l);
      const Assignment a = assignment(l, "map");
      const GenId g = generator_at(S, a.name, l);
      const NCPoly img = at_line(l, a.column, [&] { return parse_expression(T, a.expr); });
      at_line(l, a.column, [&] {
        f->map.set_image(g, img);
        return 0;
      });
    }
    derive_star_images(f->map, [&](GenId p) { return star_image(f->map, p); });
    doc_.morphisms[m[1]] = f;
    doc_.morphism_order.push_back(m[1]);
  }

  Document& doc_;
  std::optional<Line> head_;
  std::vector<Line> body_;
  std::string last_hopf_;
};

}  // namespace

void load_text(Document& doc, std::string_view text) { Loader(doc).run(text); }

Document load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  Document doc;
  load_text(doc, ss.str());
  return doc;
}

}  // namespace qb
