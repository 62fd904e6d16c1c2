// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qbundle/cli.hpp"
#include "qbundle/join.hpp"
#include "qbundle/presets.hpp"

using namespace qb;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
  void require(const Report& r, const std::string& what) {
    if (!r.ok()) require(false, what + ": " + r.first_failure()->name + " " + r.first_failure()->detail);
  }
};

PolyMatrix matrix(const Presentation& A, std::vector<std::vector<const char*>> rows) {
  PolyMatrix m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (const char* e : r) m.back().push_back(A.parse(e));
  }
  return m;
}

// ------------------------------------------------------------------ 1

Outcome rewriting() {
  Outcome o;
  Document doc = preset_document("suq2");
  const Presentation& A = doc.algebra("suq2");
  const ConfluenceReport cr = A.check_local_confluence(6);
  o.require(cr.ok(), std::to_string(cr.failures()) + " unresolved overlaps at d=6");
  o.require(!cr.overlaps.empty(), "no overlaps examined");
  const std::size_t n = A.basis_up_to_degree(3).size();
  o.require(n == 30, "basis_up_to_degree(3) has " + std::to_string(n) + " words");
  o.require(n == oracle::pbw_count(3), "PBW count disagrees");
  std::mt19937 rng(20261015);
  const mpq_class q0 = oracle::random_q(rng);
  o.require(n == oracle::free_quotient_dimension(3, q0), "free-algebra rank count disagrees at q=" + q0.get_str());
  o.note = o.pass ? std::to_string(cr.overlaps.size()) + " overlaps resolved, 30 basis words (PBW and rank oracle at q=" +
                        q0.get_str() + ")"
                  : o.note;
  return o;
}

// ------------------------------------------------------------------ 2

Outcome hopf_axioms() {
  Outcome o;
  Bundle b = podles_line(1);
  const Report s = verify_hopf_axioms(*b.doc.hopf_of("suq2"), 4);
  const Report u = verify_hopf_axioms(*b.doc.hopf_of("u1"), 6);
  o.require(s, "SU_q(2) d=4");
  o.require(u, "U(1) d=6");
  o.require(s.passed("hopf.antipode_left") && s.passed("hopf.antipode_right"), "antipode clauses missing");
  // m(S⊗id)Δ(α) = α*α + γ*γ, acted letter by letter, is 1.
  const HopfAlgebra& H = *b.doc.hopf_of("suq2");
  const Presentation& A = H.alg();
  NCPoly m;
  const TensorElem da = apply_coproduct(H, A.parse("alpha"));
  for (const auto& [k, c] : da.terms())
    m += c * NCPoly::free_product(H.S(NCPoly::word(k[0])), NCPoly::word(k[1]));
  o.require(oracle::same_action(A, m, NCPoly::one()), "m(S⊗id)Δ(α) != 1 in the ladder representation");
  if (o.pass) o.note = std::to_string(s.checks().size() + u.checks().size()) + " Hopf checks, symbolic q";
  return o;
}

// ------------------------------------------------------------------ 3

Outcome connections() {
  Outcome o;
  const char* clauses[] = {"unital", "counit", "right_colinear", "left_colinear"};
  Bundle t = trivial_base("u");
  const Report rt = check_strong_connection(*t.connection);
  o.require(rt, "trivial connection");
  for (const char* c : clauses) o.require(rt.passed("connection.trivial." + std::string(c)), "trivial: missing " + std::string(c));
  for (int n : {-2, -1, 1, 2}) {
    Bundle b = podles_line(n);
    const Report r = check_strong_connection(*b.connection);
    o.require(r, "u1_power n=" + std::to_string(n));
    for (const char* c : clauses)
      o.require(r.passed("connection.u1_power." + std::string(c)), "n=" + std::to_string(n) + ": missing " + c);
  }
  if (o.pass) o.note = "trivial on span(u) and u1_power for n = -2, -1, 1, 2";
  return o;
}

// ------------------------------------------------------------------ 4

Outcome podles_projector() {
  Outcome o;
  Bundle b = podles_line(1);
  const Presentation& A = b.doc.algebra("suq2");
  const Projector E = projector(b.connection, b.corep, constant_term_functional(A));
  o.require(E.E == matrix(A, {{"1 - q^2 gamma gamma*", "alpha gamma*"}, {"q alpha* gamma", "gamma gamma*"}}),
            "E = " + format_matrix(A, E.E));
  o.require(certify_projector(E), "certificate");
  o.require(oracle::idempotent_in_reps(A, E.E), "E^2 != E in the ladder representation");
  const NCPoly tr = projector_trace(E);
  o.require(tr == A.parse("1 + (1 - q^2) gamma gamma*"), "trace " + A.format(tr));
  const PolyMatrix E1 = specialize(E.E, 1);
  for (const auto& [a, c] : oracle::su2_points()) {
    const oracle::Cx w[2] = {a, c};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        o.require(oracle::evaluate_classical(A, E1[i][j], a, c) == w[i] * oracle::conj(w[j]),
                  "q=1 entry differs from the classical projector");
  }
  o.require(cotensor_compare(E, 1), "cotensor_compare d=1");
  if (o.pass) o.note = "E = " + format_matrix(A, E.E) + ", trace " + A.format(tr);
  return o;
}

// ------------------------------------------------------------------ 5

Outcome pullback() {
  Outcome o;
  Bundle b = podles_line(1);
  const PullbackResult r = verify_pullback_theorem(*b.morphism, b.connection, b.corep,
                                                   constant_term_functional(b.doc.algebra("u1")), b.target, 3);
  o.require(r.report, "pullback");
  for (const char* c : {"pullback.sigma_diagram", "pullback.block_form", "pullback.de_equals_d", "pullback.conjugation",
                        "pullback.e_prime_matches"})
    o.require(r.report.passed(c), std::string("missing ") + c);
  o.require(r.certificate && r.certificate->e_prime == PolyMatrix{{NCPoly::one()}}, "e' != [1]");
  const CheckResult* sd = r.report.find("pullback.sigma_diagram");
  if (o.pass) o.note = "five clauses PASS, sigma diagram on " + sd->detail + " of length <= 3, e' = [1]";
  return o;
}

// ------------------------------------------------------------------ 6

Outcome equivalence() {
  Outcome o;
  Bundle t = trivial_base("u");
  const ScalarMatrix Q{{QRat(0), -QRat::q()}, {QRat(1), QRat(0)}};
  const Corepresentation& u = t.doc.corep("u");
  const Corepresentation& dual = t.doc.corep("u-dual");
  o.require(dual.c == contragredient(u).c, "u-dual is not S(u^T)");
  o.require(corep_equivalence(u, dual, Q), "corep equivalence");
  const Projector E = projector(t.connection, u, constant_term_functional(t.doc.algebra("suq2")));
  o.require(projector_similarity(E, dual, Q), "projector similarity");
  if (o.pass) o.note = "Q u Q^-1 = u-dual and E_dual = (1⊗Q) E_u (1⊗Q)^-1, Q = [[0,-q],[1,0]]";
  return o;
}

// ------------------------------------------------------------------ 7

Outcome trivial_base_sanity() {
  Outcome o;
  Bundle t = trivial_base("u");
  const Presentation& A = t.doc.algebra("suq2");
  const Projector E = projector(t.connection, t.corep, constant_term_functional(A));
  o.require(E.size() == 8, "size " + std::to_string(E.size()));
  o.require(certify_projector(E), "certificate");
  o.require(projector_trace(E) == NCPoly(QRat(2)), "trace " + A.format(projector_trace(E)));
  const Projector one = projector(t.connection, t.doc.corep("trivial"), constant_term_functional(A));
  o.require(one.E == PolyMatrix{{NCPoly::one()}}, "V=[1] gives " + format_matrix(A, one.E));
  if (o.pass) o.note = "8x8 idempotent with trace 2; V=[1] gives [[1]]";
  return o;
}

// ------------------------------------------------------------------ 8

Outcome join_model() {
  Outcome o;
  Bundle t = trivial_base("u");
  const Coaction& d = *t.coaction;
  const HopfAlgebra& h = *t.doc.hopf_of("suq2");
  const Presentation& H = h.alg();
  const std::vector<const Presentation*> legs{&H, &H};
  std::mt19937 rng(8);
  const auto basis = H.basis_up_to_degree(1);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto element = [&] {
    NCPoly p;
    for (int i = 0; i < 2; ++i) p.add_term(basis[pick(rng)], QRat(coef(rng)) * QRat::q_pow(coef(rng) % 2));
    return p;
  };
  auto sample = [&] {
    const TensorElem start = TensorElem::of(H, NCPoly::one(), H, element());
    const TensorElem end = d.apply(element());
    const TensorElem mid = TensorElem::of(H, element(), H, element());
    return make_join(legs, {{0, start}, {1, end - start + mid}, {2, QRat(-1) * mid}});
  };
  const MorphismData chi = counit_character(h);
  const int samples = 20;
  for (int i = 0; i < samples; ++i) {
    const JoinElement x = sample(), y = sample();
    o.require(join_membership(d, x, 1), "sample membership");
    const JoinElement xy = join_product(x, y);
    o.require(join_membership(d, xy, 2), "product closure");
    o.require(xy.t_degree() == x.t_degree() + y.t_degree(), "t-degrees do not add");
    o.require(join_membership(d, join_star(x), 1), "star closure");
    o.require(coacted_membership(d, join_coaction(d, x), 1), "coacted boundary");
    o.require(apply_coproduct(h, chi_collapse(x, chi)) == chi_collapse_coacted(join_coaction(d, x), chi),
              "chi collapse is not equivariant");
    o.require(chi_collapse(xy, chi) == H.multiply(chi_collapse(x, chi), chi_collapse(y, chi)),
              "chi collapse is not multiplicative");
  }
  const JoinElement a = parse_join(d, "(1 - t) (x) alpha + t alpha (x) alpha - q t gamma* (x) gamma");
  o.require(join_membership(d, a, 1), "(1-t)(1⊗α) + tΔ(α) membership");
  o.require(chi_collapse(a, chi) == H.parse("alpha"), "chi_collapse((1-t)(1⊗α) + tΔ(α)) != α");
  o.require(!join_membership(d, parse_join(d, "alpha (x) 1"), 1).passed("join.boundary_0"), "α⊗1 accepted");
  if (o.pass) o.note = std::to_string(samples) + " random pairs: product, star, coaction, chi equivariance; chi(x_α) = α";
  return o;
}

// ------------------------------------------------------------------ 9

Outcome negative_controls() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "qbundle_acceptance";
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  const std::string groups = write("groups.qb", std::string(suq2_text()) + std::string(u1_text()));
  const std::string grading = "coaction hopf : suq2 -> suq2 (x) u1\n  delta alpha = alpha (x) u\n  delta gamma = gamma (x) u\n";
  struct Case {
    std::vector<std::string> args;
    std::string clause;
  };
  const std::vector<Case> cases = {
      {{"verify", "--input", groups,
        write("corrupted.qb", "coaction bad : suq2 -> suq2 (x) u1\n  delta alpha = alpha (x) u\n"
                              "  delta gamma = gamma (x) u*\n  delta gamma* = gamma* (x) u*\n")},
       "coaction.bad.relations"},
      {{"verify", "--input", groups,
        write("broken.qb", grading + "connection broken on hopf\n  L u = alpha* (x) alpha\n")},
       "connection.broken.counit"},
      {{"verify", "--input", groups,
        write("reversed.qb", grading + "coaction u1_regular : u1 -> u1 (x) u1\n  delta u = u (x) u\n"
                                       "morphism f_reversed : suq2 -> u1\n  map alpha = u*\n  map gamma = 0\n")},
       "equivariance.f_reversed"},
      {{"pullback", "--preset", "podles-line", "1", "--map", "reversed"}, "equivariance.f_reversed"},
      {{"verify", "--input", groups, write("skew.qb", "morphism g : suq2 -> u1\n  map alpha = u\n  map gamma = u\n")},
       "morphism.g.relations"},
  };
  for (const auto& c : cases) {
    std::ostringstream out, err;
    const int code = run_cli(c.args, out, err);
    const std::string s = out.str();
    o.require(code == 1, c.clause + ": exit " + std::to_string(code) + " " + err.str());
    o.require(s.find("CHECK " + c.clause + " FAIL") != std::string::npos, c.clause + " not reported as FAIL");
  }
  {
    std::ostringstream out, err;
    const int code = run_cli({"verify", "--input", write("bad.qb", "algebra x\n  generators a\n  rel a = = a\n")}, out, err);
    o.require(code == 2, "malformed input exit " + std::to_string(code));
  }
  fs::remove_all(dir);
  if (o.pass)
    o.note = "corrupted coaction, broken connection, non-equivariant map (verify and pullback), non-homomorphism: "
             "FAIL at the named clause, exit 1; malformed input exit 2";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, 10, "rewriting soundness", rewriting},
      {2, 30, "Hopf axioms", hopf_axioms},
      {3, 10, "strong connections", connections},
      {4, 10, "Chern-Galois projector", podles_projector},
      {5, 20, "pullback theorem", pullback},
      {6, 20, "corepresentation equivalence", equivalence},
      {7, 10, "trivial-base sanity", trivial_base_sanity},
      {8, 10, "join model", join_model},
      {9, 10, "negative controls", negative_controls},
  };
  int passed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = o.pass && secs < c.limit;
    if (o.pass && !ok) o.note = "over the time limit";
    passed += ok;
    std::cout << "CRITERION " << c.id << (ok ? " PASS " : " FAIL ") << std::fixed << std::setprecision(3) << secs
              << "s (< " << std::setprecision(0) << c.limit << "s) " << c.title << ": " << o.note << "\n";
  }
  std::cout << passed << "/" << all.size() << " criteria passed\n";
  return passed == static_cast<int>(all.size()) ? 0 : 1;
}
