#include "qbundle/structure.hpp"

namespace qb {

namespace {

TensorElem scalar_tensor(const QRat& c) {
  TensorElem t{std::vector<const Presentation*>{}};
  t.add_term({}, c);
  return t;
}

}  // namespace

// ---------------------------------------------------------------- AlgebraMap

AlgebraMap::AlgebraMap(std::string name, const Presentation& source, std::vector<const Presentation*> targets,
                       MapKind kind)
    : name_(std::move(name)),
      source_(&source),
      targets_(std::move(targets)),
      kind_(kind),
      images_(source.generator_count(), TensorElem(targets_)),
      has_image_(source.generator_count(), false) {}

AlgebraMap::AlgebraMap(const AlgebraMap& other)
    : name_(other.name_),
      source_(other.source_),
      targets_(other.targets_),
      kind_(other.kind_),
      images_(other.images_),
      has_image_(other.has_image_) {}

AlgebraMap& AlgebraMap::operator=(const AlgebraMap& other) {
  if (this == &other) return *this;
  name_ = other.name_;
  source_ = other.source_;
  targets_ = other.targets_;
  kind_ = other.kind_;
  images_ = other.images_;
  has_image_ = other.has_image_;
  std::lock_guard lock(cache_mutex_);
  cache_.clear();
  return *this;
}

void AlgebraMap::set_image(GenId g, TensorElem image) {
  if (image.legs() != targets_ && !image.is_zero())
    throw MismatchError("image of " + source_->generators().at(g).name + " under " + name_ +
                        " lives in the wrong tensor space");
  images_.at(g) = TensorElem(targets_);
  images_[g] += image.is_zero() ? TensorElem(targets_) : image;
  has_image_.at(g) = true;
  std::lock_guard lock(cache_mutex_);
  cache_.clear();
}

void AlgebraMap::set_image(GenId g, const NCPoly& image) {
  if (targets_.empty()) {
    if (!image.is_scalar()) throw MismatchError("character image must be a scalar");
    set_image(g, scalar_tensor(image.constant_term()));
    return;
  }
  if (targets_.size() != 1) throw MismatchError("polynomial image for a tensor-valued map " + name_);
  set_image(g, TensorElem::of(*targets_[0], targets_[0]->normal_form(image)));
}

const TensorElem& AlgebraMap::image(GenId g) const {
  if (!has_image_.at(g))
    throw PreconditionError("map " + name_ + " has no image for generator " + source_->generators()[g].name);
  return images_[g];
}

bool AlgebraMap::complete() const {
  for (bool b : has_image_)
    if (!b) return false;
  return true;
}

TensorElem AlgebraMap::apply(const Word& w) const {
  if (w.empty()) return TensorElem::unit(targets_);
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  TensorElem result;
  if (w.size() == 1) {
    result = image(w[0]);
  } else {
    Word prefix(w.begin(), w.end() - 1);
    const TensorElem head = apply(prefix);
    const TensorElem& last = image(w.back());
    result = kind_ == MapKind::homomorphism ? tensor_mul(head, last) : tensor_mul(last, head);
  }
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(w, result);
  return result;
}

TensorElem AlgebraMap::apply(const NCPoly& p) const {
  TensorElem out(targets_);
  for (const auto& [w, c] : p.terms()) out.add_scaled(apply(w), c);
  return out;
}

NCPoly AlgebraMap::apply_poly(const NCPoly& p) const {
  if (targets_.size() != 1) throw MismatchError("apply_poly on map " + name_ + " with tensor-valued images");
  return apply(p).as_poly();
}

QRat AlgebraMap::apply_scalar(const NCPoly& p) const {
  if (!targets_.empty()) throw MismatchError("apply_scalar on map " + name_ + " with algebra-valued images");
  return apply(p).as_scalar();
}

LegMap AlgebraMap::leg_map() const {
  LegMap m;
  m.source = source_;
  m.targets = targets_;
  m.on_word = [this](const Word& w) { return apply(w); };
  return m;
}

std::vector<std::string> AlgebraMap::relation_failures() const {
  std::vector<std::string> bad;
  for (const auto& rule : source_->rules()) {
    TensorElem diff = apply(rule.lhs) - apply(rule.rhs);
    if (!diff.is_zero())
      bad.push_back(source_->format_word(rule.lhs) + " = " + source_->format(rule.rhs) + " maps to " +
                    diff.to_string() + " != 0");
  }
  return bad;
}

TensorElem star_legs(const TensorElem& t) {
  TensorElem out(t.legs());
  std::vector<NCPoly> factors(t.degree());
  for (const auto& [k, c] : t.terms()) {
    for (std::size_t i = 0; i < k.size(); ++i) factors[i] = t.legs()[i]->involution(NCPoly::word(k[i]));
    out.add_pure(c, factors);
  }
  return out;
}

std::vector<std::string> AlgebraMap::star_failures() const {
  std::vector<std::string> bad;
  for (GenId g = 0; g < source_->generator_count(); ++g) {
    const TensorElem lhs = apply(Word{source_->star(g)});
    const TensorElem rhs = star_legs(apply(Word{g}));
    if (lhs != rhs)
      bad.push_back(name_ + "(" + source_->generators()[g].name + "*) = " + lhs.to_string() + " but " + name_ +
                    "(" + source_->generators()[g].name + ")* = " + rhs.to_string());
  }
  return bad;
}

// ---------------------------------------------------------------- morphisms

const Presentation& MorphismData::target() const {
  return map.targets().empty() ? scalar_field() : *map.targets()[0];
}

MorphismData make_morphism(std::string name, const Presentation& source, const Presentation& target,
                           MapKind kind) {
  std::vector<const Presentation*> targets;
  if (&target != &scalar_field()) targets.push_back(&target);
  return MorphismData(AlgebraMap(std::move(name), source, std::move(targets), kind));
}

Report verify_morphism(MorphismData& m) {
  Report r;
  const std::string prefix = "morphism." + m.map.name() + ".";
  std::vector<std::string> missing;
  for (GenId g = 0; g < m.source().generator_count(); ++g)
    if (!m.map.has_image(g)) missing.push_back(m.source().generators()[g].name);
  r.add_sweep(prefix + "defined", missing, m.source().generator_count(), "generators");
  if (missing.empty()) {
    r.add_sweep(prefix + "relations", m.map.relation_failures(), m.source().rules().size(), "relations");
    r.add_sweep(prefix + "star", m.map.star_failures(), m.source().generator_count(), "generators");
  }
  m.verified = r.ok();
  return r;
}

NCPoly extend_algebra_map(const MorphismData& m, const NCPoly& p) {
  if (!m.verified) throw PreconditionError("morphism " + m.map.name() + " has not passed verification");
  if (m.map.targets().empty()) return NCPoly(m.map.apply_scalar(p));
  return m.map.apply_poly(p);
}

MorphismData compose(const MorphismData& g, const MorphismData& f) {
  if (&f.target() != &g.source())
    throw MismatchError("cannot compose " + g.map.name() + " after " + f.map.name());
  MorphismData out = make_morphism(g.map.name() + "∘" + f.map.name(), f.source(), g.target());
  for (GenId x = 0; x < f.source().generator_count(); ++x) {
    const NCPoly fx = f.map.apply_poly(NCPoly::word({x}));
    out.map.set_image(x, g.map.apply(fx));
  }
  return out;
}

MorphismData identity_morphism(const Presentation& p) {
  MorphismData m = make_morphism("id", p, p);
  for (GenId g = 0; g < p.generator_count(); ++g) m.map.set_image(g, NCPoly::word({g}));
  return m;
}

// ---------------------------------------------------------------- Hopf data

HopfAlgebra::HopfAlgebra(std::shared_ptr<const Presentation> a)
    : algebra(std::move(a)),
      coproduct("coproduct", *algebra, {algebra.get(), algebra.get()}),
      counit("counit", *algebra, {}),
      antipode("antipode", *algebra, {algebra.get()}, MapKind::anti_homomorphism),
      antipode_inv("antipode_inv", *algebra, {algebra.get()}, MapKind::anti_homomorphism) {}

TensorElem apply_coproduct(const HopfAlgebra& h, const NCPoly& p, int k) {
  if (!h.coproduct.complete()) throw PreconditionError("missing Hopf data on " + h.alg().name());
  TensorElem d = h.coproduct.apply(h.alg().normal_form(p));
  if (k == 2) return d;
  if (k == 3) return tensor_map_leg(d, 0, h.coproduct.leg_map());
  throw PreconditionError("apply_coproduct supports k = 2 or 3");
}

Report verify_hopf_axioms(const HopfAlgebra& h, std::size_t d) {
  const Presentation& H = h.alg();
  Report r;
  for (const AlgebraMap* m : {&h.coproduct, &h.counit, &h.antipode, &h.antipode_inv}) {
    std::vector<std::string> missing;
    for (GenId g = 0; g < H.generator_count(); ++g)
      if (!m->has_image(g)) missing.push_back(H.generators()[g].name);
    r.add_sweep("hopf." + m->name() + ".defined", missing, H.generator_count(), "generators");
    if (!missing.empty()) return r;
  }
  for (const AlgebraMap* m : {&h.coproduct, &h.counit, &h.antipode, &h.antipode_inv})
    r.add_sweep("hopf." + m->name() + ".relations", m->relation_failures(), H.rules().size(), "relations");

  const auto basis = H.basis_up_to_degree(d);
  const LegMap delta = h.coproduct.leg_map();
  const LegMap eps = h.counit.leg_map();
  const LegMap S = h.antipode.leg_map();
  std::vector<std::string> coassoc, counit_l, counit_r, anti_l, anti_r, inv, star;
  for (const Word& w : basis) {
    const std::string ws = H.format_word(w);
    const NCPoly x = NCPoly::word(w);
    const TensorElem dw = h.coproduct.apply(w);
    if (tensor_map_leg(dw, 0, delta) != tensor_map_leg(dw, 1, delta)) coassoc.push_back(ws);
    if (tensor_map_leg(dw, 0, eps).as_poly() != x) counit_l.push_back(ws);
    if (tensor_map_leg(dw, 1, eps).as_poly() != x) counit_r.push_back(ws);
    const NCPoly eps_w(h.counit.apply(w).as_scalar());
    if (multiply_legs(tensor_map_leg(dw, 0, S)) != eps_w) anti_l.push_back(ws);
    if (multiply_legs(tensor_map_leg(dw, 1, S)) != eps_w) anti_r.push_back(ws);
    if (h.S_inv(h.S(x)) != x || h.S(h.S_inv(x)) != x) inv.push_back(ws);
    if (h.coproduct.apply(H.involution(x)) != star_legs(dw)) star.push_back(ws);
  }
  const std::size_t n = basis.size();
  r.add_sweep("hopf.coassociativity", coassoc, n);
  r.add_sweep("hopf.counit_left", counit_l, n);
  r.add_sweep("hopf.counit_right", counit_r, n);
  r.add_sweep("hopf.antipode_left", anti_l, n);
  r.add_sweep("hopf.antipode_right", anti_r, n);
  r.add_sweep("hopf.antipode_inverse", inv, n);
  r.add_sweep("hopf.star_coproduct", star, n);
  return r;
}

}  // namespace qb
