#include "../common.hpp"
#include "../oracles.hpp"
#include "doctest.h"
#include "qbundle/expr.hpp"

using namespace qb;

namespace {

std::vector<const Presentation*> AA() { return {&suq2(), &suq2()}; }

std::vector<const Presentation*> TT() {
  const Presentation& T = trivial_bundle().doc.algebra("suq2");
  return {&T, &T};
}

// m(ℓ(h)) computed as a free concatenation and acted on letter by letter.
bool multiplies_to(const TensorElem& l, const NCPoly& expect) {
  NCPoly free;
  for (const auto& [k, c] : l.terms()) free.add_term(concat(k[0], k[1]), c);
  return oracle::same_action(*l.legs()[0], free, expect);
}

}  // namespace

TEST_SUITE("connection") {
  TEST_CASE("trivial connection on the span of u") {
    const StrongConnection& l = *trivial_bundle().connection;
    const Report r = check_strong_connection(l);
    CHECK_MESSAGE(r.ok(), r.to_lines());
    CHECK(l(P("alpha")) == parse_tensor(TT(), "alpha* (x) alpha + gamma* (x) gamma"));
    CHECK(l(NCPoly::one()) == TensorElem::unit(TT()));
    // S(h1)⊗h2 with Δ(γ) = γ⊗α + α*⊗γ, S(γ) = -qγ, S(α*) = α.
    CHECK(l(P("gamma")) == parse_tensor(TT(), "-q gamma (x) alpha + alpha (x) gamma"));
    for (const auto& h : l.domain().basis())
      CHECK(multiplies_to(l(h), NCPoly(suq2_hopf().epsilon(h))));
  }

  TEST_CASE("U(1) connection powers") {
    const Presentation& A = suq2();
    for (int n : {-2, -1, 1, 2}) {
      CAPTURE(n);
      const Bundle b = podles_line(n);
      const Report r = check_strong_connection(*b.connection);
      CHECK_MESSAGE(r.ok(), r.to_lines());
      for (const auto& h : b.connection->domain().basis()) {
        const TensorElem v = (*b.connection)(h);
        CHECK(multiplies_to(v, NCPoly::one()));
        // Right colinearity for a grading: the second leg carries degree k when h = u^k.
        int k = 0;
        for (const auto& [w, c] : h.terms()) k = oracle::circle_degree(u1(), w);
        for (const auto& [key, c] : v.terms()) {
          CHECK(oracle::circle_degree(A, key[0]) == -k);
          CHECK(oracle::circle_degree(A, key[1]) == k);
        }
      }
    }
    const StrongConnection& l = *hopf_bundle().connection;
    CHECK(l(U("u")) == parse_tensor(AA(), "alpha* (x) alpha + gamma* (x) gamma"));
    CHECK(l(U("u*")) == parse_tensor(AA(), "alpha (x) alpha* + q^2 gamma (x) gamma*"));
    CHECK_THROWS_AS(l(U("u^5")), CoverageError);
  }

  TEST_CASE("corrupted connection fails on m(l) = eps") {
    const CoactionPtr c = hopf_bundle().coaction;
    const StrongConnection bad("bad", c, {{U("u"), parse_tensor(AA(), "alpha* (x) alpha")}});
    const Report r = check_strong_connection(bad);
    CHECK_FALSE(r.passed("connection.bad.counit"));
    CHECK(r.passed("connection.bad.unital"));
  }

  TEST_CASE("dependent table entries must agree") {
    const CoactionPtr c = hopf_bundle().coaction;
    CHECK_THROWS(StrongConnection("dup", c,
                                  {{U("u"), parse_tensor(AA(), "alpha* (x) alpha + gamma* (x) gamma")},
                                   {U("2 u"), parse_tensor(AA(), "alpha* (x) alpha")}}));
  }

  TEST_CASE("coalgebra spans") {
    const auto H = trivial_bundle().doc.hopf_of("suq2");
    CHECK(corep_span(trivial_bundle().doc.corep("u")).closure_failures().empty());
    CHECK(corep_span(trivial_bundle().doc.corep("u")).basis().size() == 5);
    const CoalgebraSpan only_alpha(H, {NCPoly::one(), P("alpha")});
    CHECK_FALSE(only_alpha.closure_failures().empty());
    CHECK(only_alpha.contains(P("2 alpha - 1")));
    CHECK_FALSE(only_alpha.contains(P("gamma")));
  }

  TEST_CASE("equivariance") {
    const Bundle& b = hopf_bundle();
    CHECK(check_equivariance(*b.morphism, *b.coaction, *b.target).ok());
    MorphismData id = identity_morphism(suq2());
    verify_morphism(id);
    CHECK(check_equivariance(id, *b.coaction, *b.coaction).ok());
    MorphismData rev = make_morphism("rev", suq2(), u1());
    rev.map.set_image(suq2().id("alpha"), U("u*"));
    rev.map.set_image(suq2().id("alpha*"), U("u"));
    rev.map.set_image(suq2().id("gamma"), NCPoly());
    rev.map.set_image(suq2().id("gamma*"), NCPoly());
    CHECK(verify_morphism(rev).ok());
    CHECK_FALSE(check_equivariance(rev, *b.coaction, *b.target).ok());
    CHECK_THROWS_AS(pullback_connection(rev, *b.connection, b.target), PreconditionError);
  }

  TEST_CASE("pullback connection") {
    const Bundle& b = hopf_bundle();
    const ConnectionPtr lp = pullback_connection(*b.morphism, *b.connection, b.target);
    const std::vector<const Presentation*> UU{&u1(), &u1()};
    CHECK((*lp)(U("u")) == parse_tensor(UU, "u* (x) u"));
    CHECK((*lp)(NCPoly::one()) == TensorElem::unit(UU));
    CHECK(check_strong_connection(*lp).ok());
    MorphismData id = identity_morphism(suq2());
    verify_morphism(id);
    const ConnectionPtr same = pullback_connection(id, *b.connection, b.coaction);
    for (const auto& h : b.connection->domain().basis()) CHECK((*same)(h) == (*b.connection)(h));
  }

  TEST_CASE("expansion") {
    const StrongConnection& l = *hopf_bundle().connection;
    const Expansion e = expand_connection(l, {U("u")});
    CHECK(e.a.size() == 2);
    TensorElem back(AA());
    for (std::size_t m = 0; m < e.a.size(); ++m) back += TensorElem::of(suq2(), e.a[m], suq2(), e.r[0][m]);
    CHECK(back == l(U("u")));
  }
}
