#include <filesystem>
#include <fstream>
#include <sstream>

#include "../common.hpp"
#include "doctest.h"
#include "qbundle/cli.hpp"
#include "qbundle/matrix.hpp"

using namespace qb;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(QB_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qbundle_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("document") {
  TEST_CASE("derived starred data") {
    Document doc;
    load_text(doc, R"(algebra circle
  generators z z*
  rel z z* = 1
  rel z* z = 1
  coproduct z = z (x) z
  counit z = 1
  antipode z = z*
  antipode_inv z = z*
)");
    const HopfAlgebra& h = *doc.hopf_of("circle");
    const Presentation& C = doc.algebra("circle");
    CHECK(h.coproduct.apply(C.parse("z*")) == TensorElem::of(C, C.parse("z*"), C, C.parse("z*")));
    CHECK(h.epsilon(C.parse("z*")) == QRat(1));
    CHECK(h.S(C.parse("z*")) == C.parse("z"));
    CHECK(verify_hopf_axioms(h, 4).ok());
  }

  TEST_CASE("parse errors report the line") {
    Document doc;
    try {
      load_text(doc, "algebra a\n  generators x y\n  rel x y = = y x\n");
      FAIL("no throw");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    Document d2;
    CHECK_THROWS_AS(load_text(d2, "  rel x = y\n"), ParseError);
    Document d3;
    CHECK_THROWS_AS(load_text(d3, "algebra a\n  generators x\n  wibble x\n"), ParseError);
    Document d4;
    CHECK_THROWS_AS(load_text(d4, "corep v dim 1\n  row 1\n"), ParseError);
  }

  TEST_CASE("data files load") {
    Document doc = load_file(data("quantum_groups.qb"));
    load_text(doc, slurp(data("hopf_fibration.qb")));
    CHECK(doc.connection_order == std::vector<std::string>{"ell"});
    CHECK(check_strong_connection(*doc.connection("ell")).ok());
    CHECK(verify_coaction(*doc.coaction("hopf"), 3).ok());
    CHECK_THROWS_AS(load_file(data("missing.qb")), Error);
  }

  TEST_CASE("matrix serialization round-trips") {
    const PolyMatrix m{{P("1 - q^2 gamma gamma*"), P("alpha gamma*")}, {P("q alpha* gamma"), NCPoly()}};
    CHECK(parse_matrix(suq2(), format_matrix(suq2(), m)) == m);
    CHECK(format_matrix(suq2(), m) == R"([["1 - q^2 gamma gamma*", "alpha gamma*"], ["q alpha* gamma", "0"]])");
    CHECK_THROWS_AS(parse_matrix(suq2(), "[[\"alpha\"], [\"gamma\", \"1\"]]"), ParseError);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("verify presets") {
    const Run s = run({"verify", "--preset", "suq2", "--max-degree", "4"});
    CHECK_MESSAGE(s.code == 0, s.out);
    CHECK(has(s.out, "CHECK suq2.hopf.antipode_left PASS"));
    CHECK_FALSE(has(s.out, " FAIL"));
    CHECK(run({"verify", "--preset", "u1"}).code == 0);
    CHECK(run({"verify", "--preset", "podles-line", "2"}).code == 0);
    CHECK(run({"verify", "--preset", "trivial-base", "--max-degree", "2"}).code == 0);
  }

  TEST_CASE("input errors exit 2") {
    const Run m = run({"verify", "--input", data("quantum_groups.qb"), data("malformed.qb")});
    CHECK(m.code == 2);
    CHECK(has(m.err, "malformed.qb:3"));
    CHECK(run({"verify", "--input", data("missing.qb")}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "--preset", "nope"}).code == 2);
    CHECK(run({"projector", "--preset", "podles-line", "1", "--q", "0"}).code == 2);
    CHECK(run({"projector", "--preset", "podles-line", "1", "--q", "zero"}).code == 2);
    CHECK(run({"projector", "--preset", "podles-line", "1", "--functional", "haar"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
  }

  TEST_CASE("check failures exit 1") {
    const auto qg = data("quantum_groups.qb");
    const Run c = run({"verify", "--input", qg, data("corrupted_coaction.qb")});
    CHECK(c.code == 1);
    CHECK(has(c.out, "CHECK coaction.bad.relations FAIL"));
    const Run b = run({"verify", "--input", qg, data("broken_connection.qb")});
    CHECK(b.code == 1);
    CHECK(has(b.out, "CHECK connection.broken.counit FAIL"));
    const Run n = run({"verify", "--input", qg, data("nonequivariant.qb")});
    CHECK(n.code == 1);
    CHECK(has(n.out, "CHECK equivariance.f_reversed FAIL"));
    CHECK(run({"verify", "--input", qg, data("hopf_fibration.qb")}).code == 0);
  }

  TEST_CASE("projector") {
    const Run p = run({"projector", "--preset", "podles-line", "1"});
    CHECK(p.code == 0);
    CHECK(has(p.out, R"(E = [["1 - q^2 gamma gamma*", "alpha gamma*"], ["q alpha* gamma", "gamma gamma*"]])"));
    CHECK(has(p.out, "trace = 1 + (-q^2 + 1) gamma gamma*"));
    const Run t = run({"projector", "--preset", "trivial-base", "--corep", "u"});
    CHECK(t.code == 0);
    CHECK(has(t.out, "trace = 2\n"));
    const PolyMatrix E = parse_matrix(suq2(), t.out.substr(t.out.find("E = ") + 4, t.out.find('\n', t.out.find("E = ")) - t.out.find("E = ") - 4));
    CHECK(E.size() == 8);
    const Run c = run({"projector", "--preset", "podles-line", "1", "--q", "1"});
    CHECK(c.code == 0);
    CHECK(has(c.out, R"(E(q=1) = [["1 - gamma gamma*", "alpha gamma*"], ["alpha* gamma", "gamma gamma*"]])"));
    const Run f = run({"projector", "--input", data("quantum_groups.qb"), data("hopf_fibration.qb")});
    CHECK(f.code == 0);
    CHECK(has(f.out, "trace = 1 + (-q^2 + 1) gamma gamma*"));
  }

  TEST_CASE("pullback") {
    const Run p = run({"pullback", "--preset", "podles-line", "1"});
    CHECK_MESSAGE(p.code == 0, p.out);
    CHECK(has(p.out, "e' = [[\"1\"]]"));
    CHECK(run({"pullback", "--preset", "podles-line", "1", "--map", "identity"}).code == 0);
    const Run r = run({"pullback", "--preset", "podles-line", "1", "--map", "reversed"});
    CHECK(r.code == 1);
    CHECK(has(r.out, "CHECK equivariance.f_reversed FAIL"));
    CHECK_FALSE(has(r.out, "pullback.sigma_diagram"));
    const Run s = run({"pullback", "--preset", "podles-line", "1", "--map", "skew"});
    CHECK(s.code == 1);
    CHECK(has(s.out, "CHECK morphism.g_skew.relations FAIL"));
    // ell is given on u and u* only, so σ is defined on words of length 1.
    const auto qg = data("quantum_groups.qb"), hf = data("hopf_fibration.qb");
    CHECK(run({"pullback", "--input", qg, hf, "--max-degree", "1"}).code == 0);
    const Run wide = run({"pullback", "--input", qg, hf});
    CHECK(wide.code == 1);
    CHECK(has(wide.out, "connection ell is not defined on u u"));
  }

  TEST_CASE("report rendering") {
    const fs::path ok = scratch("ok");
    CHECK(run({"pullback", "--preset", "podles-line", "1", "--output", ok.string()}).code == 0);
    for (const char* f : {"report.txt", "e_prime.txt", "d.txt", "T.txt"}) CHECK(fs::exists(ok / f));
    const Run r = run({"report", "--input", ok.string()});
    CHECK(r.code == 0);
    CHECK(has(r.out, "PASS  pullback.de_equals_d  [d·e' = d]"));
    CHECK(has(r.out, "PASS  pullback.conjugation  [f(e) = T diag(e',0) T⁻¹]"));
    CHECK(has(r.out, "0 failed"));

    const fs::path bad = scratch("bad");
    CHECK(run({"verify", "--input", data("quantum_groups.qb"), data("broken_connection.qb"), "--output",
               bad.string()}).code == 1);
    const Run rb = run({"report", "--input", bad.string()});
    CHECK(rb.code == 1);
    CHECK(has(rb.out, "first failing identity: connection.broken.counit"));

    const fs::path empty = scratch("empty");
    fs::create_directories(empty);
    const Run re = run({"report", "--input", empty.string()});
    CHECK(re.code == 2);
    CHECK(has(re.err, "no report.txt"));
  }

  TEST_CASE("outputs are deterministic") {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    const Run ra = run({"projector", "--preset", "trivial-base", "--corep", "u-dual", "--output", a.string()});
    const Run rb = run({"projector", "--preset", "trivial-base", "--corep", "u-dual", "--output", b.string()});
    CHECK(ra.out == rb.out);
    for (const char* f : {"report.txt", "E.txt", "trace.txt"}) CHECK(slurp(a / f) == slurp(b / f));
  }

  TEST_CASE("formula tags") {
    CHECK(formula_tag("projector.idempotent") == "e² = e");
    CHECK(formula_tag("connection.ell.right_colinear") == "(id⊗δ)ℓ = (ℓ⊗id)Δ");
    CHECK(formula_tag("suq2.hopf.coassociativity") == "(Δ⊗id)Δ = (id⊗Δ)Δ");
    CHECK(formula_tag("corep.equivalence.u.u-dual") == "Q c Q⁻¹ = c'");
    CHECK(formula_tag("unheard.of").empty());
  }
}
