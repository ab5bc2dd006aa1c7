#include "cforge/diagram.hpp"

#include <algorithm>

#include "cforge/error.hpp"

namespace cforge {

namespace {

std::vector<int> chain_ids(std::initializer_list<MorphismId> ms) {
  std::vector<int> out;
  for (auto m : ms) out.push_back(m.index);
  return out;
}

// First basis column where two maps differ, or -1.
int first_difference(const Matrix& a, const Matrix& b) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, c) != b(r, c)) return static_cast<int>(c);
  return -1;
}

UnitalElement mul(const Algebra& A, const UnitalElement& x, const UnitalElement& y) {
  return A.multiply(x, y);
}

Report algebra_and_category_checks(const AlgebraDiagram& d) {
  Report rep;
  for (const auto& v : d.cat.check_laws()) rep.add("category " + v.law, v.morphisms);
  for (int o = 0; o < d.cat.object_count(); ++o)
    for (const auto& v : d.algebra(ObjectId{o}).check()) rep.add("algebra " + v.law, {o}, v.basis);
  return rep;
}

void hom_checks(const AlgebraDiagram& d, Report& rep) {
  bool star = d.has_star();
  for (int f = 0; f < d.cat.morphism_count(); ++f) {
    MorphismId m{f};
    auto h = check_hom(d.algebra(d.cat.src(m)), d.algebra(d.cat.tgt(m)), d.map(m), false, star);
    for (auto [i, j] : h.failing_pairs) rep.add("homomorphism", {f}, {i, j});
    for (int i : h.star_failures) rep.add("star equivariance", {f}, {i});
  }
}

}  // namespace

bool Report::has(const std::string& check) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.check == check; });
}

bool AlgebraDiagram::has_star() const {
  return !algebras.empty() &&
         std::all_of(algebras.begin(), algebras.end(), [](const Algebra& a) { return a.has_star(); });
}

void AlgebraDiagram::check_shapes() const {
  if (static_cast<int>(algebras.size()) != cat.object_count())
    throw ShapeError("diagram needs one algebra per object");
  if (static_cast<int>(maps.size()) != cat.morphism_count())
    throw ShapeError("diagram needs one linear map per morphism");
  for (int f = 0; f < cat.morphism_count(); ++f) {
    MorphismId m{f};
    if (map(m).rows() != dim(cat.tgt(m)) || map(m).cols() != dim(cat.src(m)))
      throw ShapeError("map of morphism " + std::to_string(f) + " has wrong shape");
  }
}

Report validate_diagram(const AlgebraDiagram& d) {
  d.check_shapes();
  Report rep = algebra_and_category_checks(d);
  hom_checks(d, rep);
  for (int o = 0; o < d.cat.object_count(); ++o) {
    MorphismId id = d.cat.identity(ObjectId{o});
    if (!d.map(id).is_identity()) rep.add("identity preservation", {id.index});
  }
  for (const auto& c : enumerate_chains(d.cat, 2)) {
    MorphismId psi = c.arrows[0], phi = c.arrows[1];
    Matrix lhs = d.map(psi) * d.map(phi);
    int col = first_difference(lhs, d.map(d.cat.compose(psi, phi)));
    if (col >= 0) rep.add("functoriality", chain_ids({psi, phi}), {col});
  }
  return rep;
}

UnitalElement SkewDiagram::u_at(MorphismId psi, MorphismId phi) const {
  auto it = u.find({psi.index, phi.index});
  if (it != u.end()) return it->second;
  return UnitalElement::one(base.dim(base.cat.tgt(psi)));
}

Report validate_skew(const SkewDiagram& s) {
  const AlgebraDiagram& d = s.base;
  d.check_shapes();
  Report rep = algebra_and_category_checks(d);
  hom_checks(d, rep);
  for (const auto& [key, val] : s.u) {
    MorphismId psi{key.first}, phi{key.second};
    if (key.first < 0 || key.first >= d.cat.morphism_count() || key.second < 0 ||
        key.second >= d.cat.morphism_count() || !d.cat.composable(psi, phi))
      throw IndexError("u given on a pair that is not a 2-chain");
    if (val.vector.size() != d.dim(d.cat.tgt(psi))) throw ShapeError("u element has wrong dimension");
  }
  bool star = d.has_star();
  for (const auto& c : enumerate_chains(d.cat, 2)) {
    MorphismId psi = c.arrows[0], phi = c.arrows[1];
    ObjectId M = d.cat.src(phi), P = d.cat.tgt(psi);
    const Algebra& AP = d.algebra(P);
    UnitalElement u = s.u_at(psi, phi);
    auto ids = chain_ids({psi, phi});
    std::optional<UnitalElement> u_inv;
    try {
      u_inv = invert_unital(AP, u);
    } catch (const NotInvertible&) {
      rep.add("u invertible", ids);
    }
    const Matrix& comp = d.map(d.cat.compose(psi, phi));
    Matrix twice = d.map(psi) * d.map(phi);
    for (std::size_t a = 0; a < d.dim(M); ++a) {
      auto lhs = mul(AP, UnitalElement::of(twice.column(a)), u);
      auto rhs = mul(AP, u, UnitalElement::of(comp.column(a)));
      if (!AP.same(lhs, rhs)) rep.add("intertwining", ids, {static_cast<int>(a)});
      if (u_inv) {
        auto ad = mul(AP, mul(AP, u, UnitalElement::of(comp.column(a))), *u_inv);
        if (!AP.same(UnitalElement::of(twice.column(a)), ad))
          rep.add("conjugation form", ids, {static_cast<int>(a)});
      }
    }
    if (star && !AP.same(mul(AP, AP.star(u), u), UnitalElement::one(AP.dim())))
      rep.add("u unitary", ids);
  }
  for (const auto& c : enumerate_chains(d.cat, 3)) {
    MorphismId chi = c.arrows[0], psi = c.arrows[1], phi = c.arrows[2];
    const Algebra& AQ = d.algebra(d.cat.tgt(chi));
    auto lhs = mul(AQ, apply(d.map(chi), s.u_at(psi, phi)), s.u_at(chi, d.cat.compose(psi, phi)));
    auto rhs = mul(AQ, s.u_at(chi, psi), s.u_at(d.cat.compose(chi, psi), phi));
    if (!AQ.same(lhs, rhs)) rep.add("u cocycle", chain_ids({chi, psi, phi}));
  }
  return rep;
}

SkewMorphism SkewMorphism::identity(const AlgebraDiagram& d) {
  SkewMorphism m;
  for (int o = 0; o < d.cat.object_count(); ++o) m.alpha.push_back(Matrix::identity(d.dim(ObjectId{o})));
  for (int f = 0; f < d.cat.morphism_count(); ++f)
    m.v.push_back(UnitalElement::one(d.dim(d.cat.tgt(MorphismId{f}))));
  return m;
}

Report check_skew_morphism(const SkewDiagram& src, const SkewDiagram& dst, const SkewMorphism& m) {
  const AlgebraDiagram& A = src.base;
  const AlgebraDiagram& B = dst.base;
  const FiniteCategory& cat = A.cat;
  if (m.alpha.size() != static_cast<std::size_t>(cat.object_count()) ||
      m.v.size() != static_cast<std::size_t>(cat.morphism_count()))
    throw ShapeError("skew morphism has wrong number of components");
  Report rep;
  for (int o = 0; o < cat.object_count(); ++o) {
    ObjectId M{o};
    const Matrix& al = m.alpha[static_cast<std::size_t>(o)];
    if (al.rows() != B.dim(M) || al.cols() != A.dim(M)) throw ShapeError("alpha has wrong shape");
    auto h = check_hom(A.algebra(M), B.algebra(M), al);
    for (auto [i, j] : h.failing_pairs) rep.add("alpha homomorphism", {o}, {i, j});
  }
  for (int f = 0; f < cat.morphism_count(); ++f) {
    MorphismId phi{f};
    ObjectId M = cat.src(phi), N = cat.tgt(phi);
    const Algebra& BN = B.algebra(N);
    const UnitalElement& v = m.v[static_cast<std::size_t>(f)];
    if (v.vector.size() != B.dim(N)) throw ShapeError("v element has wrong dimension");
    Matrix upper = m.alpha[static_cast<std::size_t>(N.index)] * A.map(phi);
    Matrix lower = B.map(phi) * m.alpha[static_cast<std::size_t>(M.index)];
    for (std::size_t a = 0; a < A.dim(M); ++a) {
      auto lhs = mul(BN, UnitalElement::of(upper.column(a)), v);
      auto rhs = mul(BN, v, UnitalElement::of(lower.column(a)));
      if (!BN.same(lhs, rhs)) rep.add("unnatural", {f}, {static_cast<int>(a)});
    }
  }
  for (const auto& c : enumerate_chains(cat, 2)) {
    MorphismId psi = c.arrows[0], phi = c.arrows[1];
    ObjectId P = cat.tgt(psi);
    const Algebra& BP = B.algebra(P);
    const Matrix& alP = m.alpha[static_cast<std::size_t>(P.index)];
    auto lhs = mul(BP, apply(alP, src.u_at(psi, phi)),
                   m.v[static_cast<std::size_t>(cat.compose(psi, phi).index)]);
    auto rhs = mul(BP,
                   mul(BP, m.v[static_cast<std::size_t>(psi.index)],
                       apply(B.map(psi), m.v[static_cast<std::size_t>(phi.index)])),
                   dst.u_at(psi, phi));
    if (!BP.same(lhs, rhs)) rep.add("morphism condition", chain_ids({psi, phi}));
  }
  return rep;
}

SkewMorphism compose_skew_morphisms(const SkewDiagram& c, const SkewMorphism& f, const SkewMorphism& g) {
  const AlgebraDiagram& C = c.base;
  if (f.alpha.size() != g.alpha.size() || f.v.size() != g.v.size())
    throw ShapeError("skew morphisms live over different categories");
  SkewMorphism out;
  for (std::size_t o = 0; o < f.alpha.size(); ++o) {
    if (g.alpha[o].cols() != f.alpha[o].rows())
      throw ShapeError("codomain of the first morphism is not the domain of the second");
    out.alpha.push_back(g.alpha[o] * f.alpha[o]);
  }
  for (std::size_t k = 0; k < f.v.size(); ++k) {
    ObjectId N = C.cat.tgt(MorphismId{static_cast<int>(k)});
    out.v.push_back(C.algebra(N).multiply(apply(g.alpha[static_cast<std::size_t>(N.index)], f.v[k]), g.v[k]));
  }
  return out;
}

SkewMorphism inverse_skew_morphism(const SkewDiagram& b, const SkewMorphism& m) {
  const AlgebraDiagram& B = b.base;
  SkewMorphism out;
  for (const auto& al : m.alpha) out.alpha.push_back(inverse(al));
  for (std::size_t k = 0; k < m.v.size(); ++k) {
    ObjectId N = B.cat.tgt(MorphismId{static_cast<int>(k)});
    UnitalElement vinv = invert_unital(B.algebra(N), m.v[k]);
    out.v.push_back(apply(out.alpha[static_cast<std::size_t>(N.index)], vinv));
  }
  return out;
}

SkewMorphism inner_skew_from_w(const AlgebraDiagram& d, const std::vector<UnitalElement>& w) {
  if (w.size() != static_cast<std::size_t>(d.cat.object_count()))
    throw ShapeError("need one w element per object");
  std::vector<UnitalElement> winv;
  for (int o = 0; o < d.cat.object_count(); ++o)
    winv.push_back(invert_unital(d.algebra(ObjectId{o}), w[static_cast<std::size_t>(o)]));
  SkewMorphism m;
  for (int o = 0; o < d.cat.object_count(); ++o) {
    const Algebra& A = d.algebra(ObjectId{o});
    std::size_t n = d.dim(ObjectId{o});
    Matrix al(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      auto img = mul(A, mul(A, w[static_cast<std::size_t>(o)], UnitalElement::of(basis_vec(n, a))),
                     winv[static_cast<std::size_t>(o)]);
      for (std::size_t r = 0; r < n; ++r) al(r, a) = img.vector[r];
    }
    m.alpha.push_back(std::move(al));
  }
  for (int f = 0; f < d.cat.morphism_count(); ++f) {
    MorphismId phi{f};
    ObjectId M = d.cat.src(phi), N = d.cat.tgt(phi);
    m.v.push_back(mul(d.algebra(N), w[static_cast<std::size_t>(N.index)],
                      apply(d.map(phi), winv[static_cast<std::size_t>(M.index)])));
  }
  return m;
}

bool same_skew_morphism(const AlgebraDiagram& target, const SkewMorphism& a, const SkewMorphism& b) {
  if (a.alpha != b.alpha || a.v.size() != b.v.size()) return false;
  for (std::size_t k = 0; k < a.v.size(); ++k) {
    const Algebra& BN = target.algebra(target.cat.tgt(MorphismId{static_cast<int>(k)}));
    if (!BN.same(a.v[k], b.v[k])) return false;
  }
  return true;
}

bool verify_inner(const AlgebraDiagram& d, const SkewMorphism& m, const std::vector<UnitalElement>& w) {
  try {
    return same_skew_morphism(d, m, inner_skew_from_w(d, w));
  } catch (const NotInvertible&) {
    return false;
  }
}

Modification Modification::identity(const AlgebraDiagram& target) {
  Modification m;
  for (int o = 0; o < target.cat.object_count(); ++o)
    m.w.push_back(UnitalElement::one(target.dim(ObjectId{o})));
  return m;
}

Report check_modification(const SkewDiagram& a, const SkewDiagram& b, const SkewMorphism& f,
                          const SkewMorphism& g, const Modification& w) {
  const AlgebraDiagram& A = a.base;
  const AlgebraDiagram& B = b.base;
  const FiniteCategory& cat = A.cat;
  if (w.w.size() != static_cast<std::size_t>(cat.object_count()))
    throw ShapeError("modification needs one element per object");
  Report rep;
  for (int o = 0; o < cat.object_count(); ++o) {
    ObjectId M{o};
    const Algebra& BM = B.algebra(M);
    const UnitalElement& wm = w.w[static_cast<std::size_t>(o)];
    for (std::size_t x = 0; x < A.dim(M); ++x) {
      auto lhs = mul(BM, wm, UnitalElement::of(f.alpha[static_cast<std::size_t>(o)].column(x)));
      auto rhs = mul(BM, UnitalElement::of(g.alpha[static_cast<std::size_t>(o)].column(x)), wm);
      if (!BM.same(lhs, rhs)) rep.add("modification intertwining", {o}, {static_cast<int>(x)});
    }
  }
  for (int k = 0; k < cat.morphism_count(); ++k) {
    MorphismId phi{k};
    ObjectId M = cat.src(phi), N = cat.tgt(phi);
    const Algebra& BN = B.algebra(N);
    auto lhs = mul(BN, g.v[static_cast<std::size_t>(k)], apply(B.map(phi), w.w[static_cast<std::size_t>(M.index)]));
    auto rhs = mul(BN, w.w[static_cast<std::size_t>(N.index)], f.v[static_cast<std::size_t>(k)]);
    if (!BN.same(lhs, rhs)) rep.add("modification naturality", {k});
  }
  return rep;
}

Modification vertical_compose(const AlgebraDiagram& b, const Modification& w1, const Modification& w2) {
  if (w1.w.size() != w2.w.size()) throw ShapeError("modifications over different categories");
  Modification out;
  for (std::size_t o = 0; o < w1.w.size(); ++o)
    out.w.push_back(b.algebra(ObjectId{static_cast<int>(o)}).multiply(w2.w[o], w1.w[o]));
  return out;
}

Modification horizontal_compose(const AlgebraDiagram& c, const Modification& w1, const Modification& w2,
                                const SkewMorphism& h) {
  if (w1.w.size() != w2.w.size() || h.alpha.size() != w1.w.size())
    throw ShapeError("modifications over different categories");
  Modification out;
  for (std::size_t o = 0; o < w1.w.size(); ++o)
    out.w.push_back(c.algebra(ObjectId{static_cast<int>(o)}).multiply(w2.w[o], apply(h.alpha[o], w1.w[o])));
  return out;
}

bool same_modification(const AlgebraDiagram& target, const Modification& a, const Modification& b) {
  if (a.w.size() != b.w.size()) return false;
  for (std::size_t o = 0; o < a.w.size(); ++o)
    if (!target.algebra(ObjectId{static_cast<int>(o)}).same(a.w[o], b.w[o])) return false;
  return true;
}

Report check_aqft_axioms(const AlgebraDiagram& d, const AqftAxioms& axioms) {
  d.check_shapes();
  Report rep;
  for (auto [i1, i2] : axioms.spacelike) {
    if (d.cat.tgt(i1) != d.cat.tgt(i2)) throw ShapeError("spacelike pair must share a target");
    const Algebra& T = d.algebra(d.cat.tgt(i1));
    const Matrix& f1 = d.map(i1);
    const Matrix& f2 = d.map(i2);
    for (std::size_t a = 0; a < f1.cols(); ++a)
      for (std::size_t b = 0; b < f2.cols(); ++b) {
        Vec x = f1.column(a), y = f2.column(b);
        if (T.multiply(x, y) != T.multiply(y, x))
          rep.add("einstein causality", {i1.index, i2.index}, {static_cast<int>(a), static_cast<int>(b)});
      }
  }
  for (int f = 0; f < d.cat.morphism_count(); ++f)
    if (rank(d.map(MorphismId{f})) != d.map(MorphismId{f}).cols()) rep.add("isotony", {f});
  for (auto f : axioms.cauchy) {
    const Matrix& m = d.map(f);
    if (m.rows() != m.cols() || rank(m) != m.cols()) rep.add("time slice", {f.index});
  }
  return rep;
}

}  // namespace cforge
