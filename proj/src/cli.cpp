#include "qbundle/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qbundle/cherngalois.hpp"
#include "qbundle/presets.hpp"

namespace qb {

namespace fs = std::filesystem;

namespace {

struct InputError : Error {
  using Error::Error;
};

// Preset or parsed files, plus whatever bundle data the preset fixes.
struct Loaded {
  Bundle b;
  bool has_bundle = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Loaded load(const RunConfig& cfg) {
  if (cfg.preset.empty() == cfg.inputs.empty())
    throw InputError("give exactly one of --preset and --input");
  Loaded L;
  if (!cfg.preset.empty()) {
    if (cfg.preset == "podles-line") {
      L.b = podles_line(cfg.line_n, std::max(3, std::abs(cfg.line_n)));
      L.has_bundle = true;
    } else if (cfg.preset == "trivial-base") {
      L.b = trivial_base(cfg.corep.empty() ? "u" : cfg.corep);
      L.has_bundle = true;
    } else {
      L.b.doc = preset_document(cfg.preset);
    }
    return L;
  }
  for (const auto& path : cfg.inputs) {
    const std::string text = read_file(path);
    try {
      load_text(L.b.doc, text);
    } catch (const ParseError& e) {
      throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.message());
    }
  }
  return L;
}

void write_artifact(const RunConfig& cfg, const std::string& file, const std::string& text) {
  if (cfg.output.empty()) return;
  fs::create_directories(cfg.output);
  std::ofstream o(fs::path(cfg.output) / file);
  if (!o) throw InputError("cannot write " + (fs::path(cfg.output) / file).string());
  o << text;
}

int finish(const RunConfig& cfg, const Report& r, const std::string& extra, std::ostream& out) {
  out << r.to_lines() << extra;
  write_artifact(cfg, "report.txt", r.to_lines());
  return r.ok() ? 0 : 1;
}

std::string q_suffix(const mpq_class& q0) { return "(q=" + q0.get_str() + ")"; }

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  Loaded L = load(cfg);
  const Document& doc = L.b.doc;
  const std::size_t d = cfg.max_degree.value_or(4);
  Report r;
  for (const auto& [name, alg] : doc.algebras) {
    const ConfluenceReport cr = alg->check_local_confluence(std::max<std::size_t>(6, d));
    std::vector<std::string> bad;
    for (const auto& o : cr.overlaps)
      if (!o.resolved()) bad.push_back(alg->format_word(o.word));
    r.add_sweep("presentation." + name + ".confluence", bad, cr.overlaps.size(), "overlaps");
    std::vector<std::string> star_bad;
    for (std::size_t i : alg->star_closure_failures()) star_bad.push_back("rule " + std::to_string(i));
    r.add_sweep("presentation." + name + ".star_closed", star_bad, alg->rules().size(), "rules");
    r.add("presentation." + name + ".basis", true,
          std::to_string(alg->basis_up_to_degree(std::min<std::size_t>(d, 3)).size()) + " words of length <= " +
              std::to_string(std::min<std::size_t>(d, 3)));
  }
  for (const auto& [name, h] : doc.hopf) r.append(verify_hopf_axioms(*h, d), name + ".");
  for (const auto& name : doc.coaction_order) r.append(verify_coaction(*doc.coaction(name), d));
  for (const auto& name : doc.corep_order) r.append(verify_corepresentation(doc.corep(name)));
  for (const auto& name : doc.connection_order) r.append(check_strong_connection(*doc.connection(name)));
  for (const auto& name : doc.morphism_order) {
    MorphismData& m = *doc.morphism(name);
    r.append(verify_morphism(m));
    if (!m.verified || m.map.targets().empty()) continue;
    for (const auto& c1 : doc.coaction_order)
      for (const auto& c2 : doc.coaction_order) {
        const Coaction& s = *doc.coaction(c1);
        const Coaction& t = *doc.coaction(c2);
        if (&s.A() == &m.source() && &t.A() == &m.target() && &s.H() == &t.H())
          r.append(check_equivariance(m, s, t));
      }
  }
  return finish(cfg, r, "", out);
}

// ------------------------------------------------------------- projector

ConnectionPtr pick_connection(const RunConfig& cfg, const Loaded& L) {
  if (!cfg.connection.empty()) return L.b.doc.connection(cfg.connection);
  if (L.has_bundle) return L.b.connection;
  if (L.b.doc.connection_order.empty()) throw InputError("no connection declared");
  return L.b.doc.connection(L.b.doc.connection_order.front());
}

Corepresentation pick_corep(const RunConfig& cfg, const Loaded& L, const StrongConnection& l) {
  if (!cfg.corep.empty()) return L.b.doc.corep(cfg.corep);
  if (L.has_bundle) return L.b.corep;
  for (const auto& name : L.b.doc.corep_order) {
    const Corepresentation& c = L.b.doc.corep(name);
    if (c.hopf.get() == &l.coaction().H()) return c;
  }
  throw InputError("no corepresentation over the connection's Hopf algebra");
}

Functional pick_functional(const RunConfig& cfg, const Presentation& A) {
  if (cfg.functional != "constant-term") throw InputError("unknown functional '" + cfg.functional + "'");
  return constant_term_functional(A);
}

int cmd_projector(const RunConfig& cfg, std::ostream& out) {
  Loaded L = load(cfg);
  const ConnectionPtr l = pick_connection(cfg, L);
  const Corepresentation c = pick_corep(cfg, L, *l);
  const Presentation& A = l->coaction().A();
  const Functional phi = pick_functional(cfg, A);
  Report r;
  std::optional<Projector> P;
  try {
    P = projector(l, c, phi);
  } catch (const CoverageError& e) {
    r.add("projector.coverage", false, e.what());
    return finish(cfg, r, "", out);
  }
  r.append(certify_projector(*P));
  const NCPoly tr = projector_trace(*P);
  r.add("projector.trace", true, A.format(tr));
  r.append(cotensor_compare(*P, cfg.max_degree.value_or(1)));
  std::string extra = "E = " + format_matrix(A, P->E) + "\n";
  std::string trace_text = A.format(tr) + "\n";
  write_artifact(cfg, "E.txt", format_matrix(A, P->E) + "\n");
  if (cfg.q0) {
    const PolyMatrix Eq = specialize(P->E, *cfg.q0);
    const NCPoly trq = specialize({{tr}}, *cfg.q0)[0][0];
    r.add("projector.specialized_trace", true, q_suffix(*cfg.q0) + " " + A.format(trq));
    extra += "E" + q_suffix(*cfg.q0) + " = " + format_matrix(A, Eq) + "\n";
    trace_text += A.format(trq) + "\n";
    write_artifact(cfg, "E_q.txt", format_matrix(A, Eq) + "\n");
  }
  extra += "trace = " + A.format(tr) + "\n";
  write_artifact(cfg, "trace.txt", trace_text);
  return finish(cfg, r, extra, out);
}

// -------------------------------------------------------------- pullback

std::shared_ptr<MorphismData> pick_morphism(const RunConfig& cfg, Loaded& L, const StrongConnection& l) {
  Document& doc = L.b.doc;
  const std::string src = l.coaction().A().name();
  auto add = [&](const std::string& name, const std::string& body) {
    load_text(doc, "morphism " + name + " : " + src + " -> u1\n" + body);
    return doc.morphism(name);
  };
  if (cfg.map == "identity") {
    auto m = std::make_shared<MorphismData>(identity_morphism(l.coaction().A()));
    doc.morphisms["id"] = m;
    return m;
  }
  if (cfg.map == "reversed") return add("f_reversed", "  map alpha = u*\n  map gamma = 0\n");
  if (cfg.map == "skew") return add("g_skew", "  map alpha = u\n  map gamma = u\n");
  if (cfg.map != "collapse") throw InputError("unknown --map '" + cfg.map + "'");
  if (L.has_bundle && L.b.morphism) return L.b.morphism;
  for (const auto& name : doc.morphism_order) {
    auto m = doc.morphism(name);
    if (&m->source() == &l.coaction().A() && !m->map.targets().empty()) return m;
  }
  throw InputError("no morphism out of " + src);
}

CoactionPtr pick_target(const Loaded& L, const MorphismData& f, const StrongConnection& l) {
  if (&f.target() == &l.coaction().A()) return l.coaction_ptr();
  for (const auto& name : L.b.doc.coaction_order) {
    CoactionPtr c = L.b.doc.coaction(name);
    if (&c->A() == &f.target() && &c->H() == &l.coaction().H()) return c;
  }
  throw InputError("no coaction of " + l.coaction().H().alg().name() + " on " + f.target().name());
}

int cmd_pullback(const RunConfig& cfg, std::ostream& out) {
  Loaded L = load(cfg);
  const ConnectionPtr l = pick_connection(cfg, L);
  const Corepresentation c = pick_corep(cfg, L, *l);
  std::shared_ptr<MorphismData> f = pick_morphism(cfg, L, *l);
  Report r = verify_morphism(*f);
  if (!r.ok()) return finish(cfg, r, "", out);
  const CoactionPtr target = pick_target(L, *f, *l);
  const Functional phi = pick_functional(cfg, target->A());
  PullbackResult res;
  try {
    res = verify_pullback_theorem(*f, l, c, phi, target, cfg.max_degree.value_or(3));
  } catch (const CoverageError& e) {
    r.add("pullback.coverage", false, e.what());
    return finish(cfg, r, "", out);
  }
  r.append(res.report);
  std::string extra;
  if (res.certificate) {
    const Presentation& B = target->A();
    const auto& cert = *res.certificate;
    extra += "e' = " + format_matrix(B, cert.e_prime) + "\n";
    extra += "d = " + format_matrix(B, cert.d) + "\n";
    extra += "T = " + format_matrix(B, cert.T) + "\n";
    write_artifact(cfg, "e_prime.txt", format_matrix(B, cert.e_prime) + "\n");
    write_artifact(cfg, "d.txt", format_matrix(B, cert.d) + "\n");
    write_artifact(cfg, "T.txt", format_matrix(B, cert.T) + "\n");
    write_artifact(cfg, "fE.txt", format_matrix(B, cert.fE) + "\n");
    if (res.E_target_self) {
      extra += "E' = " + format_matrix(B, res.E_target_self->E) + "\n";
      write_artifact(cfg, "E_target.txt", format_matrix(B, res.E_target_self->E) + "\n");
    }
  }
  return finish(cfg, r, extra, out);
}

// ---------------------------------------------------------------- report

struct Line {
  std::string name;
  bool pass;
  std::string detail;
};

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw InputError("report needs exactly one --input directory");
  const fs::path dir = cfg.inputs.front();
  if (!fs::is_directory(dir)) throw InputError(dir.string() + " is not a directory");
  const fs::path file = dir / "report.txt";
  if (!fs::exists(file)) throw InputError("no report.txt in " + dir.string());
  std::istringstream in(read_file(file.string()));
  std::vector<Line> lines;
  std::string s;
  std::size_t lineno = 0;
  while (std::getline(in, s)) {
    ++lineno;
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string tag, name, status;
    ls >> tag >> name >> status;
    if (tag != "CHECK" || (status != "PASS" && status != "FAIL"))
      throw InputError(file.string() + ":" + std::to_string(lineno) + ": not a CHECK line");
    std::string detail;
    std::getline(ls >> std::ws, detail);
    lines.push_back({name, status == "PASS", detail});
  }
  if (lines.empty()) throw InputError(file.string() + " has no checks");
  std::size_t failed = 0;
  const Line* first = nullptr;
  for (const auto& ln : lines) {
    const std::string tag = formula_tag(ln.name);
    out << (ln.pass ? "PASS  " : "FAIL  ") << ln.name;
    if (!tag.empty()) out << "  [" << tag << "]";
    if (!ln.detail.empty()) out << "  " << ln.detail;
    out << "\n";
    if (!ln.pass && !failed++) first = &ln;
  }
  out << lines.size() << " checks, " << failed << " failed\n";
  if (first) {
    const std::string tag = formula_tag(first->name);
    out << "first failing identity: " << first->name;
    if (!tag.empty()) out << " [" << tag << "]";
    out << " " << first->detail << "\n";
  }
  return failed ? 1 : 0;
}

bool ends_with(const std::string& s, const std::string& t) {
  return s.size() >= t.size() && s.compare(s.size() - t.size(), t.size(), t) == 0;
}

bool starts_with(const std::string& s, const std::string& t) { return s.rfind(t, 0) == 0; }

}  // namespace

std::string formula_tag(const std::string& n) {
  struct Rule {
    const char* prefix;
    const char* suffix;
    const char* tag;
  };
  static const Rule rules[] = {
      {"presentation.", ".confluence", "overlap ambiguities resolve (diamond lemma)"},
      {"presentation.", ".star_closed", "(lhs - rhs)* reduces to 0"},
      {"presentation.", ".basis", "normal words span A"},
      {"", "hopf.coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ"},
      {"", "hopf.counit_left", "(ε⊗id)Δ = id"},
      {"", "hopf.counit_right", "(id⊗ε)Δ = id"},
      {"", "hopf.antipode_left", "m(S⊗id)Δ = ηε"},
      {"", "hopf.antipode_right", "m(id⊗S)Δ = ηε"},
      {"", "hopf.antipode_inverse", "S⁻¹S = SS⁻¹ = id"},
      {"", "hopf.star_coproduct", "Δ(h*) = Δ(h)*"},
      {"", ".relations", "relations map to 0"},
      {"", ".star", "f(x*) = f(x)*"},
      {"coaction.", ".unit", "δ(1) = 1⊗1"},
      {"coaction.", ".coassociativity", "(δ⊗id)δ = (id⊗Δ)δ"},
      {"coaction.", ".counit", "(id⊗ε)δ = id"},
      {"coaction.", ".defined", "δ given on every generator"},
      {"corep.equivalence.", "", "Q c Q⁻¹ = c'"},
      {"corep.", ".coproduct", "Δ(c_ij) = Σ c_ik⊗c_kj"},
      {"corep.", ".counit", "ε(c_ij) = δ_ij"},
      {"connection.", ".closure", "Δ(C) ⊆ C⊗C"},
      {"connection.", ".unital", "ℓ(1) = 1⊗1"},
      {"connection.", ".counit", "ℓ(h)⟨1⟩ℓ(h)⟨2⟩ = ε(h)"},
      {"connection.", ".right_colinear", "(id⊗δ)ℓ = (ℓ⊗id)Δ"},
      {"connection.", ".left_colinear", "(δ_L⊗id)ℓ = (id⊗ℓ)Δ"},
      {"equivariance.", "", "δ'∘f = (f⊗id)∘δ"},
      {"", "projector.idempotent", "e² = e"},
      {"", "projector.invariant", "δ(e_kl) = e_kl⊗1"},
      {"", "projector.trace", "tr e = Σ σ(r_μ(c_ii)a_μ)"},
      {"", "projector.specialized_trace", "tr e at q = q0"},
      {"", "projector.coverage", "δ(a) within the domain of ℓ"},
      {"cotensor.membership", "", "Φ(b) ∈ A□V"},
      {"cotensor.injective", "", "ΨΦ(b) = b"},
      {"cotensor.surjective", "", "ΦΨ(x) = x"},
      {"cotensor.row_space", "", "Ψ(x)e = Ψ(x)"},
      {"cotensor.span", "", "A□V ≅ B^N e"},
      {"pullback.sigma_diagram", "", "σ'∘f = f∘σ"},
      {"pullback.aligned_similar", "", "e ~ e in the aligned basis"},
      {"pullback.block_form", "", "f(e) = [[e',0],[d,0]]"},
      {"pullback.e_prime_idempotent", "", "e'² = e'"},
      {"pullback.de_equals_d", "", "d·e' = d"},
      {"pullback.conjugation", "", "f(e) = T diag(e',0) T⁻¹"},
      {"pullback.e_prime_matches", "", "e' = E'"},
      {"pullback.coverage", "", "δ(a) within the domain of ℓ"},
      {"similarity.conjugate", "", "e_c' = (1⊗Q) e_c (1⊗Q)⁻¹"},
      {"similarity.trace", "", "tr e_c' = tr e_c"},
      {"join.boundary_0", "", "f(0) ∈ k⊗H"},
      {"join.boundary_1", "", "f(1) ∈ δ(A)"},
      {"join.coacted_boundary_0", "", "z(0) ∈ k⊗H⊗H"},
      {"join.coacted_boundary_1", "", "z(1) ∈ (δ⊗id)δ(A)"},
  };
  for (const auto& r : rules) {
    if (starts_with(n, r.prefix) && ends_with(n, r.suffix))
      return r.tag;
  }
  return {};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qbundle: exact checks for quantum principal bundles"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::vector<std::string> preset;
  std::string q_text = "symbolic";
  long max_degree = -1;

  auto common = [&](CLI::App* sub, bool with_preset) {
    if (with_preset)
      sub->add_option("--preset", preset, "suq2 | u1 | podles-line N | trivial-base")->expected(1, 2);
    sub->add_option("--input", cfg.inputs, "presentation file(s); for report, an artifact directory");
    sub->add_option("--max-degree", max_degree, "sweep degree");
    sub->add_option("--q", q_text, "symbolic or a nonzero rational");
    sub->add_option("--functional", cfg.functional, "constant-term");
    sub->add_option("--corep", cfg.corep, "corepresentation name");
    sub->add_option("--connection", cfg.connection, "connection name");
    sub->add_option("--output", cfg.output, "artifact directory");
  };
  CLI::App* verify = app.add_subcommand("verify", "presentation, Hopf, coaction, corep and connection checks");
  CLI::App* proj = app.add_subcommand("projector", "Chern-Galois projector with certificates");
  CLI::App* pull = app.add_subcommand("pullback", "pullback of the projector along an equivariant map");
  CLI::App* rep = app.add_subcommand("report", "render a report directory");
  common(verify, true);
  common(proj, true);
  common(pull, true);
  pull->add_option("--map", cfg.map, "collapse | identity | reversed | skew");
  rep->add_option("--input", cfg.inputs, "artifact directory")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!preset.empty()) {
      std::string name = preset[0];
      std::string arg = preset.size() > 1 ? preset[1] : "";
      if (auto pos = name.find_first_of(":="); pos != std::string::npos) {
        arg = name.substr(pos + 1);
        name = name.substr(0, pos);
      }
      cfg.preset = name;
      if (name == "podles-line") {
        if (!arg.empty()) {
          std::size_t used = 0;
          try {
            cfg.line_n = std::stoi(arg, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used != arg.size()) throw InputError("podles-line needs an integer, got '" + arg + "'");
        }
      } else if (!arg.empty()) {
        throw InputError("preset " + name + " takes no argument");
      }
      if (name != "suq2" && name != "u1" && name != "podles-line" && name != "trivial-base")
        throw InputError("unknown preset '" + name + "'");
    }
    if (max_degree >= 0) cfg.max_degree = static_cast<std::size_t>(max_degree);
    else if (max_degree != -1) throw InputError("--max-degree must be >= 0");
    if (q_text != "symbolic") {
      mpq_class v;
      if (v.set_str(q_text, 10) != 0) throw InputError("--q expects symbolic or a rational, got '" + q_text + "'");
      v.canonicalize();
      if (v == 0) throw InputError("--q 0 is not allowed: q must be invertible");
      cfg.q0 = v;
    }
    if (*verify) return cmd_verify(cfg, out);
    if (*proj) return cmd_projector(cfg, out);
    if (*pull) return cmd_pullback(cfg, out);
    return cmd_report(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const MismatchError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace qb
