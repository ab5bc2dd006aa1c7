#include "cforge/deformation.hpp"

#include <algorithm>

#include "cforge/error.hpp"

namespace cforge {

namespace {

constexpr std::size_t kMaxWitnesses = 8;

std::vector<int> chain_ids(const Chain& c) {
  if (c.arrows.empty()) return {c.object.index};
  std::vector<int> ids;
  for (auto f : c.arrows) ids.push_back(f.index);
  return ids;
}

Matrix matrix_of(const Tensor& t) {
  if (t.arity() != 1) throw ShapeError("expected a linear map");
  Matrix m(t.out_dim(), t.in_dim());
  for (std::size_t r = 0; r < t.out_dim(); ++r)
    for (std::size_t c = 0; c < t.in_dim(); ++c) m(r, c) = t.at(r * t.in_dim() + c);
  return m;
}

Tensor tensor_of(const Matrix& m) {
  Tensor t(m.rows(), m.cols(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) t.ref(r * m.cols() + c) = m(r, c);
  return t;
}

// [[a, 0], [b, a]] on the basis (e_i, t e_i).
Matrix jet_matrix(const Matrix& a, const Matrix& b) {
  Matrix m(2 * a.rows(), 2 * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      m(r, c) = a(r, c);
      m(r + a.rows(), c + a.cols()) = a(r, c);
      m(r + a.rows(), c) = b(r, c);
    }
  return m;
}

UnitalElement jet_unital(const Vec& tpart) {
  Vec v(2 * tpart.size());
  std::copy(tpart.begin(), tpart.end(), v.begin() + static_cast<std::ptrdiff_t>(tpart.size()));
  return {Scalar(1), std::move(v)};
}

ComponentCheck inspect(const Bicomplex& cx, const BiCochain& g, std::string structure) {
  ComponentCheck cc;
  cc.p = g.p;
  cc.q = g.q;
  cc.structure = std::move(structure);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    const Tensor& t = g.values[i];
    if (!t.is_dense()) continue;
    for (std::size_t e = 0; e < t.size(); ++e) {
      const Scalar& x = t.raw()[e];
      if (x.is_zero()) continue;
      ++cc.nonzero;
      if (cc.witnesses.size() >= kMaxWitnesses) continue;
      std::size_t out = e / t.input_count(), in = e % t.input_count();
      std::vector<int> basis(static_cast<std::size_t>(t.arity()));
      for (int k = t.arity() - 1; k >= 0; --k) {
        basis[static_cast<std::size_t>(k)] = static_cast<int>(in % t.in_dim());
        in /= t.in_dim();
      }
      cc.witnesses.push_back({cc.structure, chain_ids(cx.chain(g.p, i)), std::move(basis),
                              "output " + std::to_string(out) + " = " + x.to_string()});
    }
  }
  return cc;
}

std::size_t chain_index(const Bicomplex& cx, std::vector<MorphismId> arrows) {
  return cx.nerve().index_of(Chain{std::move(arrows), {}});
}

bool star_related(const Report& r) {
  return std::any_of(r.violations.begin(), r.violations.end(), [](const Violation& v) {
    return v.check.find("star") != std::string::npos || v.check == "u unitary";
  });
}

TruncatedDiagram assemble_jet(const Bicomplex& cx, const FirstOrderDeformation& d, bool with_star) {
  const AlgebraDiagram& base = cx.diagram();
  const FiniteCategory& cat = base.cat;
  AlgebraDiagram out{cat, {}, {}};
  for (int o = 0; o < cat.object_count(); ++o) {
    ObjectId obj{o};
    const Algebra& A = base.algebra(obj);
    const int n = A.dim();
    const auto un = static_cast<std::size_t>(n);
    const Tensor& md = d.mdot.values.at(cx.nerve().index_of(Chain{{}, obj}));
    std::vector<StructureConstant> sc;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Vec& prod = A.product(i, j);
        for (int k = 0; k < n; ++k) {
          const Scalar& c = prod[static_cast<std::size_t>(k)];
          if (!c.is_zero()) {
            sc.push_back({i, j, k, c});
            sc.push_back({i, n + j, n + k, c});
            sc.push_back({n + i, j, n + k, c});
          }
          auto flat = (static_cast<std::size_t>(k) * un + static_cast<std::size_t>(i)) * un +
                      static_cast<std::size_t>(j);
          Scalar dot = md.at(flat);
          if (!dot.is_zero()) sc.push_back({i, j, n + k, dot});
        }
      }
    std::optional<Matrix> star;
    if (with_star && A.has_star()) star = jet_matrix(A.star_matrix(), Matrix(un, un));
    out.algebras.emplace_back(2 * n, sc, std::nullopt, std::move(star));
  }
  for (int f = 0; f < cat.morphism_count(); ++f) {
    MorphismId m{f};
    const Tensor& mud = d.mudot.values.at(chain_index(cx, {m}));
    Matrix dot = mud.is_dense() ? matrix_of(mud) : Matrix(base.map(m).rows(), base.map(m).cols());
    out.maps.push_back(jet_matrix(base.map(m), dot));
  }
  TruncatedDiagram t;
  t.skew = d.udot.has_value();
  t.star_kept = with_star && out.has_star();
  t.diagram.base = std::move(out);
  if (d.udot) {
    for (std::size_t i = 0; i < cx.chain_count(2); ++i) {
      const Tensor& v = d.udot->values.at(i);
      if (v.is_zero()) continue;
      const Chain& c = cx.chain(2, i);
      t.diagram.u[{c.arrows[0].index, c.arrows[1].index}] = jet_unital(v.column(0));
    }
  }
  return t;
}

void check_bidegree(const Bicomplex& cx, const BiCochain& g, int p, int q, const char* name) {
  if (g.p != p || g.q != q)
    throw ShapeError(std::string(name) + " must sit at (" + std::to_string(p) + "," + std::to_string(q) + ")");
  if (g.values.size() != cx.chain_count(p)) throw ShapeError(std::string(name) + " has the wrong chain count");
}

}  // namespace

FirstOrderDeformation FirstOrderDeformation::zero(const Bicomplex& cx, bool skew) {
  FirstOrderDeformation d{BiCochain::zero(cx, 0, 2), BiCochain::zero(cx, 1, 1), std::nullopt};
  if (skew) d.udot = BiCochain::zero(cx, 2, 0);
  return d;
}

FirstOrderDeformation FirstOrderDeformation::from_total(const TotalCochain& d, bool skew) {
  if (d.n != 2 || d.parts.size() < 2) throw ShapeError("a first-order deformation has total degree 2");
  FirstOrderDeformation out{d.part(0), d.part(1), std::nullopt};
  if (d.parts.size() > 2 && (skew || !d.part(2).is_zero())) out.udot = d.part(2);
  else if (skew) throw ShapeError("skew deformation needs the (2,0) part");
  return out;
}

TotalCochain FirstOrderDeformation::to_total(const Bicomplex& cx) const {
  check_bidegree(cx, mdot, 0, 2, "mdot");
  check_bidegree(cx, mudot, 1, 1, "mudot");
  TotalCochain t = TotalCochain::zero(cx, 2);
  t.add(mdot);
  t.add(mudot);
  if (udot) {
    check_bidegree(cx, *udot, 2, 0, "udot");
    t.add(*udot);
  }
  return t;
}

bool FirstOrderReport::ok() const {
  return std::all_of(components.begin(), components.end(), [](const ComponentCheck& c) { return c.ok(); });
}

FirstOrderReport check_first_order(const Bicomplex& cx, const FirstOrderDeformation& d) {
  cx.require_degree(3);
  TotalCochain dd = delta(cx, d.to_total(cx));
  FirstOrderReport rep;
  rep.components.push_back(inspect(cx, dd.part(0), "associativity"));
  rep.components.push_back(inspect(cx, dd.part(1), "hom"));
  rep.components.push_back(inspect(cx, dd.part(2), d.udot ? "intertwining" : "functoriality"));
  if (d.udot) rep.components.push_back(inspect(cx, dd.part(3), "u-cocycle"));
  return rep;
}

TruncatedDiagram build_truncated_unchecked(const Bicomplex& cx, const FirstOrderDeformation& d) {
  d.to_total(cx);  // shape checks
  TruncatedDiagram t = assemble_jet(cx, d, true);
  if (t.star_kept && star_related(validate(t))) t = assemble_jet(cx, d, false);
  return t;
}

TruncatedDiagram build_truncated(const Bicomplex& cx, const FirstOrderDeformation& d) {
  auto rep = check_first_order(cx, d);
  for (const auto& c : rep.components)
    if (!c.ok())
      throw FirstOrderObstruction("(" + std::to_string(c.p) + "," + std::to_string(c.q) + ") " + c.structure +
                                  " component has " + std::to_string(c.nonzero) + " nonzero entries");
  return build_truncated_unchecked(cx, d);
}

Report validate(const TruncatedDiagram& t) {
  return t.skew ? validate_skew(t.diagram) : validate_diagram(t.diagram.base);
}

SkewMorphism jet_isomorphism(const Bicomplex& cx, const TotalCochain& eta, const Scalar& sign) {
  if (eta.n != 1) throw ShapeError("the isomorphism is built from a degree-1 cochain");
  const AlgebraDiagram& base = cx.diagram();
  const FiniteCategory& cat = base.cat;
  SkewMorphism m;
  for (int o = 0; o < cat.object_count(); ++o) {
    ObjectId obj{o};
    std::size_t n = base.dim(obj);
    const Tensor& xi = eta.part(0).values.at(cx.nerve().index_of(Chain{{}, obj}));
    Matrix x = xi.is_dense() ? sign * matrix_of(xi) : Matrix(n, n);
    m.alpha.push_back(jet_matrix(Matrix::identity(n), x));
  }
  for (int f = 0; f < cat.morphism_count(); ++f) {
    MorphismId mor{f};
    std::size_t n = base.dim(cat.tgt(mor));
    Vec ups(n);
    if (eta.parts.size() > 1) {
      const Tensor& t = eta.part(1).values.at(chain_index(cx, {mor}));
      ups = t.column(0);
      for (auto& x : ups) x *= sign;
    }
    m.v.push_back(jet_unital(ups));
  }
  return m;
}

Report check_inner_isomorphism(const Bicomplex& cx, const TotalCochain& eta) {
  auto deformed = build_truncated_unchecked(cx, FirstOrderDeformation::from_total(delta(cx, eta), true));
  auto flat = build_truncated_unchecked(cx, FirstOrderDeformation::zero(cx, true));
  SkewMorphism fwd = jet_isomorphism(cx, eta, Scalar(1));
  SkewMorphism back = jet_isomorphism(cx, eta, Scalar(-1));
  Report rep = check_skew_morphism(deformed.diagram, flat.diagram, fwd);
  rep.merge(check_skew_morphism(flat.diagram, deformed.diagram, back));
  const AlgebraDiagram& dt = deformed.diagram.base;
  const AlgebraDiagram& d0 = flat.diagram.base;
  if (!same_skew_morphism(dt, compose_skew_morphisms(deformed.diagram, fwd, back), SkewMorphism::identity(dt)))
    rep.add("iso roundtrip", {}, {}, "back after forward is not the identity");
  if (!same_skew_morphism(d0, compose_skew_morphisms(flat.diagram, back, fwd), SkewMorphism::identity(d0)))
    rep.add("iso roundtrip", {}, {}, "forward after back is not the identity");
  return rep;
}

McObstruction mc_obstruction(const Bicomplex& cx, const FirstOrderDeformation& d) {
  TotalCochain total = d.to_total(cx);
  if (!is_cocycle(cx, total)) throw NotACocycle("first-order deformation is not closed");
  McObstruction out;
  out.variant = d.udot ? Variant::full : Variant::asimplicial;
  out.bracket = bracket(cx, total, total);
  out.bracket_closed = is_cocycle(cx, out.bracket);
  if (!out.bracket_closed) return out;
  CoboundarySolver solver(cx, out.variant, Caps::from_env());
  if (auto w = solver.witness(out.bracket)) {
    w->scale(Scalar(-1));
    out.candidate = std::move(*w);
  }
  return out;
}

McVerification verify_mc_with_witness(const Bicomplex& cx, const McWitnessPair& pair) {
  check_bidegree(cx, pair.xi, 1, 1, "Xi");
  check_bidegree(cx, pair.psi, 1, 1, "Psi");
  McVerification v;
  BiCochain twice_circ = circ(cx, pair.xi, pair.xi);
  BiCochain twice_bullet = bullet(cx, pair.xi, pair.xi);
  twice_circ.scale(Scalar(2));
  twice_bullet.scale(Scalar(2));
  v.defect21 = delta_s(cx, pair.psi) + twice_circ;
  v.defect12 = delta_h(cx, pair.psi) + twice_bullet;
  auto tally = [](const BiCochain& g, std::size_t& count, std::vector<std::size_t>& chains) {
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      std::size_t nz = g.values[i].nonzero_count();
      if (nz == 0) continue;
      count += nz;
      chains.push_back(i);
    }
  };
  tally(v.defect21, v.nonzero21, v.chains21);
  tally(v.defect12, v.nonzero12, v.chains12);
  return v;
}

std::vector<Matrix> derivation_basis(const Algebra& A) {
  const auto n = static_cast<std::size_t>(A.dim());
  // Unknown D(k, l) at column k*n + l; one row per (i, j, k).
  Matrix eq(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t row = (i * n + j) * n + k;
        const Vec& ij = A.product(static_cast<int>(i), static_cast<int>(j));
        for (std::size_t l = 0; l < n; ++l) {
          eq(row, k * n + l) += ij[l];
          eq(row, l * n + i) -= A.product(static_cast<int>(l), static_cast<int>(j))[k];
          eq(row, l * n + j) -= A.product(static_cast<int>(i), static_cast<int>(l))[k];
        }
      }
  std::vector<Matrix> out;
  for (const Vec& v : kernel_basis(eq)) {
    Matrix d(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) d(k, l) = v[k * n + l];
    out.push_back(std::move(d));
  }
  return out;
}

McWitnessPair mc_pair_from_derivations(const Bicomplex& cx, const BiCochain& derivations) {
  check_bidegree(cx, derivations, 0, 1, "derivations");
  const AlgebraDiagram& base = cx.diagram();
  std::vector<Matrix> dm;
  for (int o = 0; o < base.cat.object_count(); ++o) {
    ObjectId obj{o};
    const Tensor& t = derivations.values.at(cx.nerve().index_of(Chain{{}, obj}));
    dm.push_back(t.is_dense() ? matrix_of(t) : Matrix(base.dim(obj), base.dim(obj)));
  }
  McWitnessPair pair{BiCochain::zero(cx, 1, 1), BiCochain::zero(cx, 1, 1)};
  for (std::size_t i = 0; i < cx.chain_count(1); ++i) {
    MorphismId f = cx.chain(1, i).arrows[0];
    const Matrix& a = base.map(f);
    const Matrix& dn = dm[static_cast<std::size_t>(base.cat.tgt(f).index)];
    const Matrix& ds = dm[static_cast<std::size_t>(base.cat.src(f).index)];
    Matrix xi = dn * a - a * ds;
    Matrix psi = dn * dn * a - Scalar(2) * (dn * a * ds) + (a * ds * ds);
    pair.xi.values[i] = tensor_of(xi);
    pair.psi.values[i] = tensor_of(psi);
  }
  return pair;
}

std::optional<BiCochain> solve_mc_partner(const Bicomplex& cx, const BiCochain& xi) {
  check_bidegree(cx, xi, 1, 1, "Xi");
  ComplexAssembly asmb(cx, Variant::full);
  IncrementalEchelon ech;
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (chain, entry) per tag
  for (std::size_t i = 0; i < cx.chain_count(1); ++i) {
    const Chain& c = cx.chain(1, i);
    std::size_t size = cx.end_dim(c) * cx.begin_dim(c);
    for (std::size_t e = 0; e < size; ++e) {
      BiCochain b = BiCochain::zero(cx, 1, 1);
      b.values[i].ref(e) = Scalar(1);
      ech.insert(asmb.flatten(delta(cx, b, Exec::serial)), slots.size());
      slots.emplace_back(i, e);
    }
  }
  TotalCochain target = bracket(cx, xi, xi);
  target.scale(Scalar(-1));
  auto combo = ech.express(asmb.flatten(target));
  if (!combo) return std::nullopt;
  BiCochain psi = BiCochain::zero(cx, 1, 1);
  for (const auto& [tag, x] : *combo) psi.values[slots[tag].first].ref(slots[tag].second) = x;
  for (auto& t : psi.values) t.compact();
  if (!(delta(cx, psi) == target)) throw Error("MC partner failed re-verification");
  return psi;
}

}  // namespace cforge
