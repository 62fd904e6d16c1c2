#include "../common.hpp"
#include "../oracles.hpp"
#include "doctest.h"
#include "qbundle/expr.hpp"

using namespace qb;

namespace {

PolyMatrix poly_matrix(const Presentation& A, std::vector<std::vector<const char*>> rows) {
  PolyMatrix m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (const char* e : r) m.back().push_back(A.parse(e));
  }
  return m;
}

const Corepresentation& fundamental() { return trivial_bundle().doc.corep("u"); }

}  // namespace

TEST_SUITE("comodule") {
  TEST_CASE("coactions") {
    const Report r = verify_coaction(*hopf_bundle().coaction, 4);
    CHECK_MESSAGE(r.ok(), r.to_lines());
    CHECK(verify_coaction(*trivial_bundle().coaction, 3).ok());
    CHECK(verify_coaction(*hopf_bundle().target, 6).ok());
    CHECK(hopf_bundle().coaction->apply(NCPoly::one()) == TensorElem::unit({&suq2(), &u1()}));
  }

  TEST_CASE("corrupted coaction fails on relations") {
    Document doc;
    load_text(doc, hopf_fibration_text());
    load_text(doc, "coaction bad : suq2 -> suq2 (x) u1\n  delta alpha = alpha (x) u\n"
                   "  delta gamma = gamma (x) u*\n  delta gamma* = gamma* (x) u*\n");
    const Report r = verify_coaction(*doc.coaction("bad"), 3);
    CHECK_FALSE(r.passed("coaction.bad.relations"));
    CHECK(r.first_failure()->name == "coaction.bad.relations");
  }

  TEST_CASE("invariant subspaces") {
    const InvariantBasis inv = invariant_subspace(*hopf_bundle().coaction, 2);
    // Oracle: the coaction is the U(1)-grading, so invariants are the degree-0 normal words.
    std::size_t degree_zero = 0;
    for (const auto& w : suq2().basis_up_to_degree(2)) degree_zero += oracle::circle_degree(suq2(), w) == 0;
    CHECK(inv.elements.size() == 4);
    CHECK(inv.elements.size() == degree_zero);
    std::vector<NCPoly> expect{P("1"), P("alpha gamma*"), P("alpha* gamma"), P("gamma gamma*")};
    Echelon<Word, QRat> span;
    for (const auto& e : inv.elements) {
      CHECK(oracle::homogeneous_of_degree(suq2(), e, 0));
      CHECK(is_invariant(*hopf_bundle().coaction, e));
      span.insert({e.terms().begin(), e.terms().end()});
    }
    for (const auto& e : expect) CHECK(span.contains({e.terms().begin(), e.terms().end()}));

    CHECK(invariant_subspace(*trivial_bundle().coaction, 2).elements == std::vector<NCPoly>{NCPoly::one()});

    Coaction triv("triv", trivial_bundle().doc.algebras.at("suq2"), trivial_bundle().doc.hopf_of("suq2"));
    const Presentation& T = triv.A();
    for (GenId g = 0; g < T.generator_count(); ++g)
      triv.delta.set_image(g, TensorElem::of(T, NCPoly::word({g}), T, NCPoly::one()));
    CHECK(invariant_subspace(triv, 1).elements.size() == 5);
  }

  TEST_CASE("corepresentations") {
    CHECK(verify_corepresentation(fundamental()).ok());
    CHECK(verify_corepresentation(hopf_bundle().corep).ok());
    const auto H = trivial_bundle().doc.hopf_of("suq2");
    const Corepresentation bad = make_corep("bad", H, poly_matrix(suq2(), {{"alpha", "gamma"}, {"gamma", "alpha"}}));
    CHECK_FALSE(verify_corepresentation(bad).ok());
  }

  TEST_CASE("contragredient") {
    const Corepresentation v = contragredient(fundamental());
    CHECK(v.c == poly_matrix(suq2(), {{"alpha*", "-q gamma"}, {"gamma*", "alpha"}}));
    CHECK(verify_corepresentation(v).ok());
    const Corepresentation line = contragredient(hopf_bundle().corep);
    CHECK(line.c == PolyMatrix{{U("u*")}});
    const Corepresentation vv = contragredient(v);
    const HopfAlgebra& S = suq2_hopf();
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(vv.c[i][j] == S.S(S.S(fundamental().c[i][j])));
  }

  TEST_CASE("equivalence u ~ u-dual") {
    const ScalarMatrix Q{{QRat(0), -QRat::q()}, {QRat(1), QRat(0)}};
    const Corepresentation& dual = trivial_bundle().doc.corep("u-dual");
    CHECK(corep_equivalence(fundamental(), dual, Q).ok());
    CHECK(corep_equivalence(fundamental(), fundamental(), identity_matrix(2)).ok());
    CHECK_FALSE(corep_equivalence(fundamental(), dual, identity_matrix(2)).ok());
    CHECK_THROWS_AS(corep_equivalence(fundamental(), dual, ScalarMatrix{{QRat(1), QRat(1)}, {QRat(1), QRat(1)}}),
                    MismatchError);
    // Oracle: Q u = u-dual Q entrywise in the ladder representation.
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        NCPoly l, r;
        for (int k = 0; k < 2; ++k) {
          l += Q[i][k] * fundamental().c[k][j];
          r += Q[k][j] * dual.c[i][k];
        }
        CHECK(oracle::same_action(suq2(), l, r));
      }
  }

  TEST_CASE("cotensor products") {
    const auto b = cotensor_basis(*hopf_bundle().coaction, hopf_bundle().corep, 1);
    CHECK(b.size() == 2);
    Echelon<Word, QRat> span;
    for (const auto& x : b) span.insert({x[0].terms().begin(), x[0].terms().end()});
    for (const char* e : {"alpha", "gamma"}) {
      const NCPoly p = P(e);
      CHECK(span.contains({p.terms().begin(), p.terms().end()}));
    }

    const auto r = cotensor_basis(*trivial_bundle().coaction, fundamental(), 1);
    CHECK(r.size() == 2);
    for (int i = 0; i < 2; ++i) CHECK(in_cotensor(*trivial_bundle().coaction, fundamental(), fundamental().c[i]));

    const Corepresentation& one = trivial_bundle().doc.corep("trivial");
    const auto inv = cotensor_basis(*hopf_bundle().coaction, make_corep("one", hopf_bundle().doc.hopf_of("u1"),
                                                                       PolyMatrix{{NCPoly::one()}}),
                                    2);
    CHECK(inv.size() == invariant_subspace(*hopf_bundle().coaction, 2).elements.size());
    CHECK(cotensor_basis(*trivial_bundle().coaction, one, 2).size() == 1);
  }

  TEST_CASE("left coaction") {
    const Coaction& c = *hopf_bundle().coaction;
    CHECK(left_coaction(c, P("alpha")) == TensorElem::of(u1(), U("u*"), suq2(), P("alpha")));
    CHECK(left_coaction(c, NCPoly::one()) == TensorElem::unit({&u1(), &suq2()}));
    CHECK(left_coaction(c, P("gamma gamma*")) == TensorElem::of(u1(), NCPoly::one(), suq2(), P("gamma gamma*")));
  }
}
