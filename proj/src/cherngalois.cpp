#include "qbundle/cherngalois.hpp"

#include <memory>

namespace qb {

namespace {

std::map<Word, QRat> as_vec(const NCPoly& p) { return {p.terms().begin(), p.terms().end()}; }

PolyMatrix block(const PolyMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  PolyMatrix out;
  for (std::size_t i = r0; i < r1; ++i) out.emplace_back(m[i].begin() + c0, m[i].begin() + c1);
  return out;
}

std::vector<std::string> cap(std::vector<std::string> v, std::size_t n = 8) {
  if (v.size() > n) v.resize(n);
  return v;
}

}  // namespace

Functional constant_term_functional(const Presentation& p) {
  return Functional{"constant-term(" + p.name() + ")", [](const NCPoly& a) { return a.constant_term(); }};
}

Functional pull_back_functional(const Functional& phi, const MorphismData& f) {
  auto fm = std::make_shared<MorphismData>(f);
  return Functional{phi.name + " o " + f.map.name(),
                    [phi, fm](const NCPoly& a) { return phi(fm->map.apply_poly(a)); }};
}

NCPoly sigma(const Functional& phi, const StrongConnection& l, const NCPoly& a) {
  const Coaction& delta = l.coaction();
  const Presentation& A = delta.A();
  const NCPoly na = A.normal_form(a);
  if (na.is_zero()) return {};
  NCPoly out;
  for (const auto& [x, slice] : delta.delta.apply(na).split_leg(0)) {
    TensorElem lh;
    try {
      lh = l(slice.as_poly());
    } catch (const CoverageError& e) {
      throw CoverageError("sigma(" + A.format(na) + "): " + e.what());
    }
    for (const auto& [k, c] : lh.terms()) {
      const QRat v = phi(NCPoly::word(k[1]));
      if (!v.is_zero()) out.add_scaled(A.normal_form(NCPoly::word(concat(x, k[0]))), c * v);
    }
  }
  return out;
}

namespace {

Projector build_projector(const ConnectionPtr& l, const Corepresentation& c, const Functional& phi,
                          const std::vector<NCPoly>* basis) {
  const Presentation& A = l->coaction().A();
  const std::size_t n = c.dim();
  std::vector<NCPoly> elements;
  for (const auto& row : c.c) elements.insert(elements.end(), row.begin(), row.end());
  Expansion ex = basis ? expand_connection(*l, elements, *basis) : expand_connection(*l, elements);
  const std::size_t M = ex.a.size();
  Projector p{l, phi, c, ex.a, ex.r, zero_matrix(M * n, M * n)};
  for (std::size_t mu = 0; mu < M; ++mu)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t nu = 0; nu < M; ++nu)
        for (std::size_t j = 0; j < n; ++j)
          p.E[mu * n + i][nu * n + j] = sigma(phi, *l, A.multiply(ex.r[i * n + j][mu], ex.a[nu]));
  return p;
}

}  // namespace

Projector projector(const ConnectionPtr& l, const Corepresentation& c, const Functional& phi) {
  return build_projector(l, c, phi, nullptr);
}

Projector projector_with_basis(const ConnectionPtr& l, const Corepresentation& c, const Functional& phi,
                               const std::vector<NCPoly>& basis) {
  return build_projector(l, c, phi, &basis);
}

Report certify_projector(const Projector& p, const std::string& name) {
  Report r;
  const Presentation& A = p.algebra();
  const std::size_t N = p.size();
  r.add_sweep(name + ".idempotent", cap(differing_entries(A, multiply(A, p.E, p.E), p.E)), N * N, "entries");
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (!is_invariant(p.connection->coaction(), p.E[i][j]))
        bad.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  r.add_sweep(name + ".invariant", bad, N * N, "entries");
  return r;
}

PolyMatrix pullback_projector(const MorphismData& f, const PolyMatrix& E) {
  return map_entries(E, [&f](const NCPoly& x) { return extend_algebra_map(f, x); });
}

PullbackCertificate align_blocks(const MorphismData& f, const Projector& P) {
  if (&f.source() != &P.algebra()) throw MismatchError("morphism source is not the projector's algebra");
  const Presentation& A2 = f.target();
  const std::size_t M = P.a.size();
  const std::size_t n = P.corep.dim();
  const std::size_t N = M * n;

  PullbackCertificate cert;
  Echelon<Word, QRat> images;
  std::vector<std::vector<QRat>> complement_rows;
  for (std::size_t mu = 0; mu < M; ++mu) {
    if (auto rel = images.insert(as_vec(extend_algebra_map(f, P.a[mu])))) {
      std::vector<QRat> row(M);
      for (const auto& [k, c] : *rel) row[k] = c;
      complement_rows.push_back(std::move(row));
    } else {
      cert.image_indices.push_back(mu);
    }
  }
  // Change of basis b = C a: image rows are unit vectors, complement rows are kernel relations.
  ScalarMatrix C;
  for (std::size_t mu : cert.image_indices) {
    std::vector<QRat> row(M);
    row[mu] = QRat(1);
    C.push_back(std::move(row));
  }
  for (auto& row : complement_rows) C.push_back(std::move(row));
  for (const auto& row : C) {
    NCPoly b;
    for (std::size_t mu = 0; mu < M; ++mu)
      if (!row[mu].is_zero()) b.add_scaled(P.a[mu], row[mu]);
    cert.aligned_basis.push_back(b);
  }
  cert.aligned = projector_with_basis(P.connection, P.corep, P.functional, cert.aligned_basis);

  const Presentation& A = P.algebra();
  ScalarMatrix Ct(M, std::vector<QRat>(M));
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j) Ct[i][j] = C[j][i];
  const ScalarMatrix K = kronecker(Ct, identity_matrix(n));
  const PolyMatrix similar = multiply(A, multiply(A, to_poly_matrix(inverse(K)), P.E), to_poly_matrix(K));
  cert.checks.add_sweep("pullback.aligned_similar", cap(differing_entries(A, cert.aligned.E, similar)), N * N,
                        "entries");

  const std::size_t k = cert.image_indices.size() * n;
  cert.fE = pullback_projector(f, cert.aligned.E);
  std::vector<std::string> nonzero;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = k; j < N; ++j)
      if (!cert.fE[i][j].is_zero()) nonzero.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  cert.checks.add_sweep("pullback.block_form", cap(nonzero), N * (N - k), "complement entries");
  cert.e_prime = block(cert.fE, 0, k, 0, k);
  cert.d = block(cert.fE, k, N, 0, k);

  cert.checks.add_sweep("pullback.e_prime_idempotent",
                        cap(differing_entries(A2, multiply(A2, cert.e_prime, cert.e_prime), cert.e_prime)), k * k,
                        "entries");
  cert.checks.add_sweep("pullback.de_equals_d", cap(differing_entries(A2, multiply(A2, cert.d, cert.e_prime), cert.d)),
                        (N - k) * k, "entries");

  PolyMatrix Tinv = to_poly_matrix(identity_matrix(N));
  cert.T = Tinv;
  PolyMatrix D = zero_matrix(N, N);
  for (std::size_t i = k; i < N; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      cert.T[i][j] = cert.d[i - k][j];
      Tinv[i][j] = -cert.d[i - k][j];
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) D[i][j] = cert.e_prime[i][j];
  const PolyMatrix conj = multiply(A2, multiply(A2, cert.T, D), Tinv);
  cert.checks.add_sweep("pullback.conjugation", cap(differing_entries(A2, cert.fE, conj)), N * N, "entries");
  return cert;
}

PullbackResult verify_pullback_theorem(const MorphismData& f, const ConnectionPtr& l, const Corepresentation& c,
                                       const Functional& phi_target, const CoactionPtr& target,
                                       std::size_t sweep_degree) {
  PullbackResult out;
  if (!f.verified) throw PreconditionError("morphism " + f.map.name() + " has not passed verification");
  out.report.append(check_equivariance(f, l->coaction(), *target));
  if (!out.report.ok()) return out;

  const Functional phi = pull_back_functional(phi_target, f);
  out.E = projector(l, c, phi);
  out.report.append(certify_projector(*out.E, "pullback.source_projector"));
  const ConnectionPtr lp = pullback_connection(f, *l, target);
  out.report.append(check_strong_connection(*lp));

  const Presentation& A = l->coaction().A();
  const Presentation& A2 = target->A();
  std::vector<std::string> diagram;
  const auto words = A.basis_up_to_degree(sweep_degree);
  for (const Word& w : words) {
    const NCPoly a = NCPoly::word(w);
    try {
      const NCPoly lhs = sigma(phi_target, *lp, extend_algebra_map(f, a));
      const NCPoly rhs = extend_algebra_map(f, sigma(phi, *l, a));
      if (lhs != rhs) diagram.push_back(A.format_word(w) + ": " + A2.format(lhs) + " vs " + A2.format(rhs));
    } catch (const CoverageError& e) {
      diagram.push_back(A.format_word(w) + ": " + e.what());
    }
  }
  out.report.add_sweep("pullback.sigma_diagram", cap(diagram), words.size());

  out.certificate = align_blocks(f, *out.E);
  out.report.append(out.certificate->checks);

  std::vector<NCPoly> image_basis;
  const std::size_t nI = out.certificate->image_indices.size();
  for (std::size_t mu = 0; mu < nI; ++mu)
    image_basis.push_back(extend_algebra_map(f, out.certificate->aligned_basis[mu]));
  out.E_target = projector_with_basis(lp, c, phi_target, image_basis);
  out.report.add_sweep("pullback.e_prime_matches",
                       cap(differing_entries(A2, out.certificate->e_prime, out.E_target->E)),
                       out.E_target->size() * out.E_target->size(), "entries");
  out.E_target_self = projector(lp, c, phi_target);
  out.report.append(certify_projector(*out.E_target_self, "pullback.target_projector"));
  return out;
}

Report projector_similarity(const Projector& E, const Corepresentation& c2, const ScalarMatrix& Q) {
  Report r = corep_equivalence(E.corep, c2, Q);
  if (!r.ok()) return r;
  const Presentation& A = E.algebra();
  const std::size_t M = E.a.size();
  const Projector E2 = projector_with_basis(E.connection, c2, E.functional, E.a);
  const ScalarMatrix K = kronecker(identity_matrix(M), Q);
  const ScalarMatrix Kinv = kronecker(identity_matrix(M), inverse(Q));
  const PolyMatrix conj = multiply(A, multiply(A, to_poly_matrix(K), E.E), to_poly_matrix(Kinv));
  r.append(certify_projector(E2, "similarity.target_projector"));
  r.add_sweep("similarity.conjugate", cap(differing_entries(A, E2.E, conj)), E2.size() * E2.size(), "entries");
  const NCPoly t1 = projector_trace(E), t2 = projector_trace(E2);
  r.add("similarity.trace", t1 == t2, A.format(t1) + " vs " + A.format(t2));
  return r;
}

Report cotensor_compare(const Projector& P, std::size_t d) {
  Report r;
  const Coaction& delta = P.connection->coaction();
  const Presentation& A = delta.A();
  const std::size_t n = P.corep.dim();
  const std::size_t M = P.a.size();
  const std::size_t N = M * n;

  auto Phi = [&](const std::vector<NCPoly>& b) {
    std::vector<NCPoly> x(n);
    for (std::size_t mu = 0; mu < M; ++mu)
      for (std::size_t i = 0; i < n; ++i) {
        if (b[mu * n + i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) x[j] += A.multiply(b[mu * n + i], P.r[i * n + j][mu]);
      }
    return x;
  };
  auto Psi = [&](const std::vector<NCPoly>& x) {
    std::vector<NCPoly> y(N);
    for (std::size_t nu = 0; nu < M; ++nu)
      for (std::size_t j = 0; j < n; ++j) y[nu * n + j] = sigma(P.functional, *P.connection, A.multiply(x[j], P.a[nu]));
    return y;
  };
  auto fmt = [&](const std::vector<NCPoly>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + A.format(v[i]);
    return s + ")";
  };

  std::vector<std::string> member, left_inverse;
  std::vector<std::vector<NCPoly>> images;
  for (std::size_t k = 0; k < N; ++k) {
    const auto x = Phi(P.E[k]);
    if (!in_cotensor(delta, P.corep, x)) member.push_back("row " + std::to_string(k + 1) + " -> " + fmt(x));
    if (Psi(x) != P.E[k]) left_inverse.push_back("row " + std::to_string(k + 1));
    images.push_back(x);
  }
  r.add_sweep("cotensor.membership", cap(member), N, "rows");
  r.add_sweep("cotensor.injective", cap(left_inverse), N, "rows");

  const auto basis = cotensor_basis(delta, P.corep, d);
  std::vector<std::string> onto, in_rows;
  for (const auto& x : basis) {
    const auto y = Psi(x);
    if (Phi(y) != x) onto.push_back(fmt(x));
    PolyMatrix row{y};
    if (multiply(A, row, P.E)[0] != y) in_rows.push_back(fmt(x));
  }
  r.add_sweep("cotensor.surjective", cap(onto), basis.size(), "basis vectors");
  r.add_sweep("cotensor.row_space", cap(in_rows), basis.size(), "basis vectors");

  // Span comparison when every image lies inside the truncation.
  using VKey = std::pair<std::size_t, Word>;
  auto vec = [](const std::vector<NCPoly>& x) {
    std::map<VKey, QRat> v;
    for (std::size_t j = 0; j < x.size(); ++j)
      for (const auto& [w, c] : x[j].terms()) v.emplace(VKey{j, w}, c);
    return v;
  };
  bool truncated = true;
  for (const auto& x : images)
    for (const auto& xj : x)
      if (xj.max_length() > d) truncated = false;
  if (truncated) {
    Echelon<VKey, QRat> rows_span, both;
    for (const auto& x : images) {
      rows_span.insert(vec(x));
      both.insert(vec(x));
    }
    for (const auto& x : basis) both.insert(vec(x));
    const bool equal = rows_span.rank() == basis.size() && both.rank() == basis.size();
    r.add("cotensor.span", equal,
          "rank of images " + std::to_string(rows_span.rank()) + ", cotensor dimension " +
              std::to_string(basis.size()));
  }
  return r;
}

NCPoly projector_trace(const Projector& E) { return trace(E.E); }

QRat trace_under(const NCPoly& t, const AlgebraMap& character) { return character.apply_scalar(t); }

PolyMatrix specialize(const PolyMatrix& m, const mpq_class& q0) {
  return map_entries(m, [&q0](const NCPoly& p) {
    return p.map_coefficients([&q0](const QRat& c) { return QRat(c.evaluate(q0)); });
  });
}

}  // namespace qb
