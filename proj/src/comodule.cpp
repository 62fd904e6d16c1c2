#include "qbundle/comodule.hpp"

#include "qbundle/linalg.hpp"

namespace qb {

Coaction::Coaction(std::string n, std::shared_ptr<const Presentation> a, HopfPtr h)
    : name(std::move(n)),
      algebra(std::move(a)),
      hopf(std::move(h)),
      delta(name, *algebra, {algebra.get(), hopf->algebra.get()}) {}

CoactionPtr regular_coaction(const HopfPtr& h) {
  auto c = std::make_shared<Coaction>("regular", h->algebra, h);
  for (GenId g = 0; g < h->alg().generator_count(); ++g) c->delta.set_image(g, h->coproduct.image(g));
  return c;
}

Report verify_coaction(const Coaction& c, std::size_t d) {
  Report r;
  const std::string prefix = "coaction." + c.name + ".";
  const Presentation& A = c.A();
  std::vector<std::string> missing;
  for (GenId g = 0; g < A.generator_count(); ++g)
    if (!c.delta.has_image(g)) missing.push_back(A.generators()[g].name);
  r.add_sweep(prefix + "defined", missing, A.generator_count(), "generators");
  if (!missing.empty()) return r;
  r.add_sweep(prefix + "relations", c.delta.relation_failures(), A.rules().size(), "relations");
  r.add_sweep(prefix + "star", c.delta.star_failures(), A.generator_count(), "generators");
  const TensorElem one = c.delta.apply(NCPoly::one());
  r.add(prefix + "unit", one == TensorElem::unit(c.delta.targets()), "delta(1) = " + one.to_string());

  const auto basis = A.basis_up_to_degree(d);
  const LegMap dA = c.delta.leg_map();
  const LegMap dH = c.H().coproduct.leg_map();
  const LegMap eps = c.H().counit.leg_map();
  std::vector<std::string> coassoc, counit;
  for (const Word& w : basis) {
    const TensorElem x = c.delta.apply(w);
    if (tensor_map_leg(x, 0, dA) != tensor_map_leg(x, 1, dH)) coassoc.push_back(A.format_word(w));
    if (tensor_map_leg(x, 1, eps).as_poly() != NCPoly::word(w)) counit.push_back(A.format_word(w));
  }
  r.add_sweep(prefix + "coassociativity", coassoc, basis.size());
  r.add_sweep(prefix + "counit", counit, basis.size());
  return r;
}

bool is_invariant(const Coaction& c, const NCPoly& b) {
  const NCPoly nb = c.A().normal_form(b);
  return c.delta.apply(nb) == TensorElem::of(c.A(), nb, c.H().alg(), NCPoly::one());
}

InvariantBasis invariant_subspace(const Coaction& c, std::size_t d) {
  Corepresentation trivial{"trivial", c.hopf, {{NCPoly::one()}}};
  InvariantBasis out;
  out.degree = d;
  for (auto& v : cotensor_basis(c, trivial, d)) out.elements.push_back(std::move(v[0]));
  return out;
}

Corepresentation make_corep(std::string name, HopfPtr h, PolyMatrix c) {
  for (const auto& row : c)
    if (row.size() != c.size()) throw MismatchError("corepresentation " + name + " is not square");
  for (auto& row : c)
    for (auto& e : row) e = h->alg().normal_form(e);
  return Corepresentation{std::move(name), std::move(h), std::move(c)};
}

Report verify_corepresentation(const Corepresentation& v) {
  Report r;
  const HopfAlgebra& H = *v.hopf;
  const Presentation& P = H.alg();
  const std::size_t n = v.dim();
  std::vector<std::string> comult, counit;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::string at = "c" + std::to_string(i + 1) + std::to_string(j + 1);
      TensorElem rhs({&P, &P});
      for (std::size_t k = 0; k < n; ++k) rhs += TensorElem::of(P, v.c[i][k], P, v.c[k][j]);
      if (apply_coproduct(H, v.c[i][j]) != rhs) comult.push_back(at);
      if (H.epsilon(v.c[i][j]) != QRat(i == j ? 1 : 0)) counit.push_back(at);
    }
  }
  const std::string prefix = "corep." + v.name + ".";
  r.add_sweep(prefix + "coproduct", comult, n * n, "entries");
  r.add_sweep(prefix + "counit", counit, n * n, "entries");
  return r;
}

Corepresentation contragredient(const Corepresentation& v) {
  const std::size_t n = v.dim();
  PolyMatrix c = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = v.hopf->S(v.c[j][i]);
  return Corepresentation{v.name + "^v", v.hopf, std::move(c)};
}

Report corep_equivalence(const Corepresentation& v, const Corepresentation& w, const ScalarMatrix& Q) {
  Report r;
  const Presentation& P = v.hopf->alg();
  const ScalarMatrix Qinv = inverse(Q);
  const PolyMatrix conj = multiply(P, multiply(P, to_poly_matrix(Q), v.c), to_poly_matrix(Qinv));
  r.add_sweep("corep.equivalence." + v.name + "." + w.name, differing_entries(P, conj, w.c), v.dim() * v.dim(),
              "entries");
  return r;
}

namespace {

using CotKey = std::pair<std::size_t, TensorElem::Key>;

/// Residual δ(x_j) − Σ_i x_i⊗c_ij, keyed by (j, tensor key).
std::map<CotKey, QRat> cotensor_residual(const Coaction& c, const Corepresentation& v, std::size_t i,
                                         const NCPoly& x) {
  std::map<CotKey, QRat> out;
  const Presentation& A = c.A();
  const Presentation& H = c.H().alg();
  auto add = [&](std::size_t j, const TensorElem& t, const QRat& s) {
    for (const auto& [k, coef] : t.terms()) {
      auto [it, fresh] = out.try_emplace(CotKey{j, k}, s * coef);
      if (!fresh) {
        it->second += s * coef;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  };
  add(i, c.delta.apply(x), QRat(1));
  for (std::size_t j = 0; j < v.dim(); ++j)
    if (!v.c[i][j].is_zero()) add(j, TensorElem::of(A, x, H, v.c[i][j]), QRat(-1));
  return out;
}

}  // namespace

bool in_cotensor(const Coaction& c, const Corepresentation& v, const std::vector<NCPoly>& x) {
  if (x.size() != v.dim()) throw MismatchError("cotensor vector has the wrong length");
  std::map<CotKey, QRat> total;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const NCPoly xi = c.A().normal_form(x[i]);
    if (xi.is_zero()) continue;
    for (const auto& [k, coef] : cotensor_residual(c, v, i, xi)) {
      auto [it, fresh] = total.try_emplace(k, coef);
      if (!fresh) {
        it->second += coef;
        if (it->second.is_zero()) total.erase(it);
      }
    }
  }
  return total.empty();
}

std::vector<std::vector<NCPoly>> cotensor_basis(const Coaction& c, const Corepresentation& v, std::size_t d) {
  const Presentation& A = c.A();
  const auto basis = A.basis_up_to_degree(d);
  const std::size_t n = v.dim();
  // Unknown u = i * |basis| + w is the coefficient of word w in x_i.
  Echelon<CotKey, QRat> system;
  std::vector<std::map<std::size_t, QRat>> kernel_vectors;
  for (std::size_t i = 0; i < n; ++i)
    for (const Word& w : basis)
      if (auto k = system.insert(cotensor_residual(c, v, i, NCPoly::word(w)))) kernel_vectors.push_back(*k);

  // Canonical echelon form: pivot on the first nonzero component, at its leading word.
  using VKey = std::pair<std::size_t, Word>;
  Echelon<VKey, QRat> canon([&A](const std::map<VKey, QRat>& vec) {
    const VKey* best = nullptr;
    for (const auto& [k, coef] : vec) {
      if (best && k.first > best->first) break;
      if (!best || A.word_less(best->second, k.second)) best = &k;
    }
    return *best;
  });
  for (const auto& kv : kernel_vectors) {
    std::map<VKey, QRat> vec;
    for (const auto& [u, coef] : kv) vec.emplace(VKey{u / basis.size(), basis[u % basis.size()]}, coef);
    canon.insert(vec);
  }
  auto rows = canon.rows();
  std::sort(rows.begin(), rows.end(), [&A](const auto& a, const auto& b) {
    if (a.pivot.first != b.pivot.first) return a.pivot.first < b.pivot.first;
    return A.word_less(a.pivot.second, b.pivot.second);
  });
  std::vector<std::vector<NCPoly>> out;
  for (const auto& row : rows) {
    std::vector<NCPoly> x(n);
    for (const auto& [k, coef] : row.vec) x[k.first].add_term(k.second, coef);
    out.push_back(std::move(x));
  }
  return out;
}

TensorElem left_coaction(const Coaction& c, const NCPoly& a) {
  if (!c.H().antipode_inv.complete()) throw PreconditionError("left coaction needs S^-1 on " + c.H().alg().name());
  return tensor_map_leg(flip(c.apply(a)), 0, c.H().antipode_inv.leg_map());
}

}  // namespace qb
