#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cforge/algebra.hpp"
#include "cforge/fincat.hpp"

namespace cforge {

/// One failed check with its witness: morphism indices of the chain (or the
/// object index for objects) and basis indices of the offending inputs.
struct Violation {
  std::string check;
  std::vector<int> chain;
  std::vector<int> basis;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string check, std::vector<int> chain, std::vector<int> basis = {},
           std::string detail = {}) {
    violations.push_back({std::move(check), std::move(chain), std::move(basis), std::move(detail)});
  }
  void merge(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
  bool has(const std::string& check) const;
};

/// Functor from a finite category to algebras: one algebra per object, one
/// linear map per morphism (matrix of shape dim tgt x dim src).
struct AlgebraDiagram {
  FiniteCategory cat;
  std::vector<Algebra> algebras;
  std::vector<LinearMap> maps;

  const Algebra& algebra(ObjectId o) const { return algebras.at(static_cast<std::size_t>(o.index)); }
  const LinearMap& map(MorphismId f) const { return maps.at(static_cast<std::size_t>(f.index)); }
  std::size_t dim(ObjectId o) const { return static_cast<std::size_t>(algebra(o).dim()); }
  /// True when every algebra carries ★.
  bool has_star() const;
  /// Throws ShapeError when counts or matrix shapes disagree with the category.
  void check_shapes() const;
};

/// Category laws, algebra laws, hom property (with ★ when all algebras have
/// one), functoriality on 2-chains and identity preservation.
Report validate_diagram(const AlgebraDiagram& d);

/// Pseudofunctor data: maps need not compose on the nose; u(ψ,φ) in the
/// unitalization of 𝔄(P) intertwines them. Missing u entries are 1.
struct SkewDiagram {
  AlgebraDiagram base;
  std::map<std::pair<int, int>, UnitalElement> u;  // keyed by (ψ, φ)

  static SkewDiagram trivial(AlgebraDiagram d) { return {std::move(d), {}}; }
  UnitalElement u_at(MorphismId psi, MorphismId phi) const;
};

/// Intertwining on 2-chains, nonabelian 2-cocycle law on 3-chains,
/// invertibility and the conjugation form as a cross-check; unitarity of u
/// when every algebra has ★.
Report validate_skew(const SkewDiagram& s);

/// (α, v): α per object, v per morphism (in the unitalization of the target
/// algebra at the morphism's codomain).
struct SkewMorphism {
  std::vector<LinearMap> alpha;
  std::vector<UnitalElement> v;

  static SkewMorphism identity(const AlgebraDiagram& d);
};

Report check_skew_morphism(const SkewDiagram& src, const SkewDiagram& dst, const SkewMorphism& m);

/// g after f, where f : A -> B and g : B -> C; `c` is the final target.
SkewMorphism compose_skew_morphisms(const SkewDiagram& c, const SkewMorphism& f,
                                    const SkewMorphism& g);

/// Two-sided inverse of m : A -> B, built from the inverse homomorphisms.
/// Throws NotInvertible.
SkewMorphism inverse_skew_morphism(const SkewDiagram& b, const SkewMorphism& m);

/// α(M; a) = w(M) a w(M)^{-1}, v(φ) = w(N) 𝔄(φ; w(M)^{-1}).
SkewMorphism inner_skew_from_w(const AlgebraDiagram& d, const std::vector<UnitalElement>& w);

/// Witness check for the quotient by inner skew automorphisms: true when
/// m coincides with inner_skew_from_w(d, w).
bool verify_inner(const AlgebraDiagram& d, const SkewMorphism& m, const std::vector<UnitalElement>& w);

bool same_skew_morphism(const AlgebraDiagram& target, const SkewMorphism& a, const SkewMorphism& b);

/// 2-morphism between skew morphisms with common endpoints.
struct Modification {
  std::vector<UnitalElement> w;

  static Modification identity(const AlgebraDiagram& target);
};

/// w : (α, v) => (β, v') with both morphisms A -> B.
Report check_modification(const SkewDiagram& a, const SkewDiagram& b, const SkewMorphism& f,
                          const SkewMorphism& g, const Modification& w);

/// (w2 • w1)(M) = w2(M) w1(M), both living over B.
Modification vertical_compose(const AlgebraDiagram& b, const Modification& w1,
                              const Modification& w2);

/// w1 : f => g between A -> B, w2 : h => k between B -> C. Result
/// (h∘f) => (k∘g) with components w2(M) h(M; w1(M)).
Modification horizontal_compose(const AlgebraDiagram& c, const Modification& w1,
                                const Modification& w2, const SkewMorphism& h);

bool same_modification(const AlgebraDiagram& target, const Modification& a, const Modification& b);

struct AqftAxioms {
  std::vector<std::pair<MorphismId, MorphismId>> spacelike;
  std::vector<MorphismId> cauchy;
};

/// Causality on declared pairs, isotony for every morphism, time slice for
/// the declared Cauchy morphisms.
Report check_aqft_axioms(const AlgebraDiagram& d, const AqftAxioms& axioms);

}  // namespace cforge
