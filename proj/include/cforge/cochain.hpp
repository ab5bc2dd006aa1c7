#pragma once

#include <span>
#include <vector>

#include "cforge/diagram.hpp"
#include "cforge/exec.hpp"
#include "cforge/fincat.hpp"
#include "cforge/tensor.hpp"

namespace cforge {

struct BiCochain;

/// A diagram together with its nerve up to a fixed degree and the cached
/// per-morphism bimodule data the coboundaries need.
class Bicomplex {
 public:
  Bicomplex(AlgebraDiagram d, int max_degree);

  const AlgebraDiagram& diagram() const { return diagram_; }
  const FiniteCategory& cat() const { return diagram_.cat; }
  const Nerve& nerve() const { return nerve_; }
  int max_degree() const { return nerve_.max_degree(); }
  const Chain& chain(int p, std::size_t i) const { return nerve_.chains(p)[i]; }
  std::size_t chain_count(int p) const { return nerve_.count(p); }

  std::size_t end_dim(const Chain& c) const { return diagram_.dim(cat().chain_end(c)); }
  std::size_t begin_dim(const Chain& c) const { return diagram_.dim(cat().chain_begin(c)); }
  const Matrix& map(MorphismId f) const { return diagram_.map(f); }
  const Algebra& algebra(ObjectId o) const { return diagram_.algebra(o); }

  /// x -> 𝔄(f; e_i) x and x -> x 𝔄(f; e_i) on the target algebra of f.
  const std::vector<Matrix>& left_action(MorphismId f) const;
  const std::vector<Matrix>& right_action(MorphismId f) const;
  const ProductPreimages& preimages(ObjectId o) const;

  /// Γ evaluated on the sub-chain through `kept`, with the output pushed
  /// forward along the arrows before the first kept vertex and every input
  /// pulled back along the arrows after the last one.
  Tensor restrict(const BiCochain& g, const Chain& sigma, std::span<const int> kept) const;

  /// Throws IndexError when chains of degree p are not cached.
  void require_degree(int p) const;

 private:
  AlgebraDiagram diagram_;
  Nerve nerve_;
  std::vector<std::vector<Matrix>> left_;
  std::vector<std::vector<Matrix>> right_;
  std::vector<ProductPreimages> preimages_;
};

/// Element of C^{p,q}: one tensor per p-chain, in nerve order.
struct BiCochain {
  int p = 0;
  int q = 0;
  std::vector<Tensor> values;

  static BiCochain zero(const Bicomplex& cx, int p, int q);

  bool is_zero() const;
  std::size_t nonzero_count() const;
  BiCochain& operator+=(const BiCochain& o);
  BiCochain& operator-=(const BiCochain& o);
  BiCochain& scale(const Scalar& s);
  friend BiCochain operator+(BiCochain a, const BiCochain& b) { return a += b; }
  friend BiCochain operator-(BiCochain a, const BiCochain& b) { return a -= b; }
  friend bool operator==(const BiCochain& a, const BiCochain& b) = default;
};

/// Element of C^n = ⊕_{p+q=n} C^{p,q}; parts[p] has bidegree (p, n-p).
struct TotalCochain {
  int n = 0;
  std::vector<BiCochain> parts;

  static TotalCochain zero(const Bicomplex& cx, int n);
  static TotalCochain from(const Bicomplex& cx, const BiCochain& g);

  BiCochain& part(int p) { return parts.at(static_cast<std::size_t>(p)); }
  const BiCochain& part(int p) const { return parts.at(static_cast<std::size_t>(p)); }
  bool is_zero() const;
  /// Adds g into the matching part.
  TotalCochain& add(const BiCochain& g);
  TotalCochain& operator+=(const TotalCochain& o);
  TotalCochain& operator-=(const TotalCochain& o);
  TotalCochain& scale(const Scalar& s);
  friend TotalCochain operator+(TotalCochain a, const TotalCochain& b) { return a += b; }
  friend TotalCochain operator-(TotalCochain a, const TotalCochain& b) { return a -= b; }
  friend bool operator==(const TotalCochain& a, const TotalCochain& b) = default;
};

/// The products at (0,2) and the morphism maps at (1,1).
BiCochain structure_m(const Bicomplex& cx);
BiCochain structure_mu(const Bicomplex& cx);

BiCochain delta_h(const Bicomplex& cx, const BiCochain& g, Exec exec = Exec::parallel);
BiCochain delta_s(const Bicomplex& cx, const BiCochain& g, Exec exec = Exec::parallel);
/// δ^S_i alone (0 <= i <= p+1), unsigned.
BiCochain delta_s_face(const Bicomplex& cx, const BiCochain& g, int i, Exec exec = Exec::parallel);
TotalCochain delta(const Bicomplex& cx, const BiCochain& g, Exec exec = Exec::parallel);
TotalCochain delta(const Bicomplex& cx, const TotalCochain& g, Exec exec = Exec::parallel);

/// (Δ·Γ)(σ; a, b) = Δ(σ; a) Γ(σ; b); both of the same simplicial degree.
BiCochain naive_product(const Bicomplex& cx, const BiCochain& d, const BiCochain& g,
                        Exec exec = Exec::parallel);

BiCochain cup(const Bicomplex& cx, const BiCochain& g, const BiCochain& d, Exec exec = Exec::parallel);
/// Partial composition, 1 <= j <= q.
BiCochain circ_j(const Bicomplex& cx, const BiCochain& g, const BiCochain& d, int j,
                 Exec exec = Exec::parallel);
/// Signed sum of the partial compositions; zero when q = 0. Throws
/// ShapeError when q = q' = 0 (the result would have negative arity).
BiCochain circ(const Bicomplex& cx, const BiCochain& g, const BiCochain& d, Exec exec = Exec::parallel);
/// 1 <= i <= p, p' >= 1.
BiCochain bullet_i(const Bicomplex& cx, const BiCochain& g, const BiCochain& d, int i,
                   Exec exec = Exec::parallel);
/// Zero when p = 0 or p' = 0. Throws ShapeError when p = p' = 0.
BiCochain bullet(const Bicomplex& cx, const BiCochain& g, const BiCochain& d, Exec exec = Exec::parallel);

/// ∘ + •, landing in total degree (p+q) + (p'+q') - 1.
TotalCochain bar_circ(const Bicomplex& cx, const BiCochain& g, const BiCochain& d,
                      Exec exec = Exec::parallel);
TotalCochain bracket(const Bicomplex& cx, const BiCochain& g, const BiCochain& d,
                     Exec exec = Exec::parallel);
/// Throws MissingStar unless every algebra has ★.
BiCochain star(const Bicomplex& cx, const BiCochain& g, Exec exec = Exec::parallel);

/// Bilinear extensions to total cochains.
TotalCochain cup(const Bicomplex& cx, const TotalCochain& g, const TotalCochain& d,
                 Exec exec = Exec::parallel);
TotalCochain circ(const Bicomplex& cx, const TotalCochain& g, const TotalCochain& d,
                  Exec exec = Exec::parallel);
TotalCochain bullet(const Bicomplex& cx, const TotalCochain& g, const TotalCochain& d,
                    Exec exec = Exec::parallel);
TotalCochain bar_circ(const Bicomplex& cx, const TotalCochain& g, const TotalCochain& d,
                      Exec exec = Exec::parallel);
TotalCochain bracket(const Bicomplex& cx, const TotalCochain& g, const TotalCochain& d,
                     Exec exec = Exec::parallel);
TotalCochain star(const Bicomplex& cx, const TotalCochain& g, Exec exec = Exec::parallel);

}  // namespace cforge
