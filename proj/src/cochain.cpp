#include "cforge/cochain.hpp"

#include <numeric>

#include "cforge/error.hpp"

namespace cforge {

namespace {

Scalar sign(long exponent) { return Scalar(exponent % 2 == 0 ? 1 : -1); }

std::vector<int> vertex_range(int first, int last) {
  std::vector<int> v;
  for (int k = first; k <= last; ++k) v.push_back(k);
  return v;
}

void check_shape(const Bicomplex& cx, const BiCochain& g) {
  cx.require_degree(g.p);
  if (g.q < 0) throw ShapeError("negative multilinear degree");
  if (g.values.size() != cx.chain_count(g.p))
    throw ShapeError("cochain has " + std::to_string(g.values.size()) + " entries, expected " +
                     std::to_string(cx.chain_count(g.p)) + " at p=" + std::to_string(g.p));
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    const Chain& c = cx.chain(g.p, i);
    const Tensor& t = g.values[i];
    if (t.out_dim() != cx.end_dim(c) || t.in_dim() != cx.begin_dim(c) || t.arity() != g.q)
      throw ShapeError("tensor at chain " + std::to_string(i) + " has the wrong shape for (" +
                       std::to_string(g.p) + "," + std::to_string(g.q) + ")");
  }
}

// Fills every chain of bidegree (p, q) from a per-chain kernel.
template <class Kernel>
BiCochain build(const Bicomplex& cx, int p, int q, Exec exec, Kernel&& kernel) {
  cx.require_degree(p);
  BiCochain out;
  out.p = p;
  out.q = q;
  out.values.resize(cx.chain_count(p));
  for_each_index(exec, out.values.size(), [&](std::size_t i) {
    const Chain& sigma = cx.chain(p, i);
    Tensor t = kernel(sigma);
    if (t.out_dim() != cx.end_dim(sigma) || t.in_dim() != cx.begin_dim(sigma) || t.arity() != q)
      throw ShapeError("internal shape mismatch");
    t.compact();
    out.values[i] = std::move(t);
  });
  return out;
}

}  // namespace

Bicomplex::Bicomplex(AlgebraDiagram d, int max_degree)
    : diagram_(std::move(d)), nerve_(diagram_.cat, max_degree) {
  diagram_.check_shapes();
  int m = diagram_.cat.morphism_count();
  left_.resize(static_cast<std::size_t>(m));
  right_.resize(static_cast<std::size_t>(m));
  for (int f = 0; f < m; ++f) {
    MorphismId id{f};
    const Algebra& T = diagram_.algebra(diagram_.cat.tgt(id));
    const Matrix& F = diagram_.map(id);
    for (std::size_t i = 0; i < F.cols(); ++i) {
      Vec img = F.column(i);
      left_[static_cast<std::size_t>(f)].push_back(T.left_mult(img));
      right_[static_cast<std::size_t>(f)].push_back(T.right_mult(img));
    }
  }
  for (const auto& A : diagram_.algebras) preimages_.push_back(product_preimages(A));
}

const std::vector<Matrix>& Bicomplex::left_action(MorphismId f) const {
  return left_.at(static_cast<std::size_t>(f.index));
}

const std::vector<Matrix>& Bicomplex::right_action(MorphismId f) const {
  return right_.at(static_cast<std::size_t>(f.index));
}

const ProductPreimages& Bicomplex::preimages(ObjectId o) const {
  return preimages_.at(static_cast<std::size_t>(o.index));
}

void Bicomplex::require_degree(int p) const {
  if (p < 0) throw IndexError("negative simplicial degree");
  if (p > max_degree())
    throw IndexError("simplicial degree " + std::to_string(p) + " exceeds the nerve degree " +
                     std::to_string(max_degree()));
}

Tensor Bicomplex::restrict(const BiCochain& g, const Chain& sigma, std::span<const int> kept) const {
  int P = sigma.degree();
  Chain tau = restrict_to_vertices(cat(), sigma, kept);
  if (tau.degree() != g.p) throw ShapeError("restriction does not match the cochain degree");
  const Tensor& t = g.values[nerve_.index_of(tau)];
  const Matrix* post = kept.front() > 0 ? &map(segment_composite(cat(), sigma, 0, kept.front())) : nullptr;
  const Matrix* pre = kept.back() < P ? &map(segment_composite(cat(), sigma, kept.back(), P)) : nullptr;
  return transform(t, post, pre);
}

BiCochain BiCochain::zero(const Bicomplex& cx, int p, int q) {
  cx.require_degree(p);
  if (q < 0) throw ShapeError("negative multilinear degree");
  BiCochain g;
  g.p = p;
  g.q = q;
  for (const auto& c : cx.nerve().chains(p)) g.values.emplace_back(cx.end_dim(c), cx.begin_dim(c), q);
  return g;
}

bool BiCochain::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Tensor& t) { return t.is_zero(); });
}

std::size_t BiCochain::nonzero_count() const {
  return std::accumulate(values.begin(), values.end(), std::size_t{0},
                         [](std::size_t acc, const Tensor& t) { return acc + t.nonzero_count(); });
}

BiCochain& BiCochain::operator+=(const BiCochain& o) {
  if (p != o.p || q != o.q || values.size() != o.values.size())
    throw ShapeError("adding cochains of different bidegree");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

BiCochain& BiCochain::operator-=(const BiCochain& o) {
  if (p != o.p || q != o.q || values.size() != o.values.size())
    throw ShapeError("subtracting cochains of different bidegree");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

BiCochain& BiCochain::scale(const Scalar& s) {
  for (auto& t : values) t.scale(s);
  return *this;
}

TotalCochain TotalCochain::zero(const Bicomplex& cx, int n) {
  if (n < 0) throw ShapeError("negative total degree");
  TotalCochain t;
  t.n = n;
  for (int p = 0; p <= std::min(n, cx.max_degree()); ++p) t.parts.push_back(BiCochain::zero(cx, p, n - p));
  return t;
}

TotalCochain TotalCochain::from(const Bicomplex& cx, const BiCochain& g) {
  TotalCochain t = zero(cx, g.p + g.q);
  t.add(g);
  return t;
}

bool TotalCochain::is_zero() const {
  return std::all_of(parts.begin(), parts.end(), [](const BiCochain& g) { return g.is_zero(); });
}

TotalCochain& TotalCochain::add(const BiCochain& g) {
  if (g.p + g.q != n) throw ShapeError("bidegree does not match the total degree");
  if (g.p >= static_cast<int>(parts.size())) {
    if (g.is_zero()) return *this;
    throw IndexError("simplicial degree exceeds the nerve degree");
  }
  part(g.p) += g;
  return *this;
}

TotalCochain& TotalCochain::operator+=(const TotalCochain& o) {
  if (n != o.n || parts.size() != o.parts.size()) throw ShapeError("adding cochains of different degree");
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] += o.parts[i];
  return *this;
}

TotalCochain& TotalCochain::operator-=(const TotalCochain& o) {
  if (n != o.n || parts.size() != o.parts.size()) throw ShapeError("subtracting cochains of different degree");
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] -= o.parts[i];
  return *this;
}

TotalCochain& TotalCochain::scale(const Scalar& s) {
  for (auto& g : parts) g.scale(s);
  return *this;
}

BiCochain structure_m(const Bicomplex& cx) {
  BiCochain m = BiCochain::zero(cx, 0, 2);
  for (std::size_t i = 0; i < m.values.size(); ++i) {
    const Algebra& A = cx.algebra(cx.chain(0, i).object);
    auto n = static_cast<std::size_t>(A.dim());
    for (const auto& sc : A.structure_constants())
      m.values[i].ref(static_cast<std::size_t>(sc.k) * n * n + static_cast<std::size_t>(sc.i) * n +
                      static_cast<std::size_t>(sc.j)) = sc.c;
    m.values[i].compact();
  }
  return m;
}

BiCochain structure_mu(const Bicomplex& cx) {
  BiCochain mu = BiCochain::zero(cx, 1, 1);
  for (std::size_t i = 0; i < mu.values.size(); ++i) {
    const Matrix& F = cx.map(cx.chain(1, i).arrows[0]);
    for (std::size_t r = 0; r < F.rows(); ++r)
      for (std::size_t c = 0; c < F.cols(); ++c)
        if (!F(r, c).is_zero()) mu.values[i].ref(r * F.cols() + c) = F(r, c);
    mu.values[i].compact();
  }
  return mu;
}

BiCochain delta_h(const Bicomplex& cx, const BiCochain& g, Exec exec) {
  check_shape(cx, g);
  return build(cx, g.p, g.q + 1, exec, [&](const Chain& sigma) {
    const Tensor& t = g.values[cx.nerve().index_of(sigma)];
    MorphismId F = cx.cat().chain_composite(sigma);
    Tensor out = hochschild(t, cx.left_action(F), cx.right_action(F),
                            cx.preimages(cx.cat().chain_begin(sigma)));
    if (g.p % 2 == 1) out.scale(Scalar(-1));
    return out;
  });
}

BiCochain delta_s_face(const Bicomplex& cx, const BiCochain& g, int i, Exec exec) {
  check_shape(cx, g);
  if (i < 0 || i > g.p + 1) throw IndexError("face index out of range");
  return build(cx, g.p + 1, g.q, exec, [&](const Chain& sigma) {
    std::vector<int> kept;
    for (int k = 0; k <= g.p + 1; ++k)
      if (k != i) kept.push_back(k);
    return cx.restrict(g, sigma, kept);
  });
}

BiCochain delta_s(const Bicomplex& cx, const BiCochain& g, Exec exec) {
  check_shape(cx, g);
  return build(cx, g.p + 1, g.q, exec, [&](const Chain& sigma) {
    Tensor acc(cx.end_dim(sigma), cx.begin_dim(sigma), g.q);
    std::vector<int> kept;
    for (int i = 0; i <= g.p + 1; ++i) {
      kept.clear();
      for (int k = 0; k <= g.p + 1; ++k)
        if (k != i) kept.push_back(k);
      Tensor term = cx.restrict(g, sigma, kept);
      if (i % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    return acc;
  });
}

TotalCochain delta(const Bicomplex& cx, const BiCochain& g, Exec exec) {
  TotalCochain out = TotalCochain::zero(cx, g.p + g.q + 1);
  out.add(delta_h(cx, g, exec));
  out.add(delta_s(cx, g, exec));
  return out;
}

TotalCochain delta(const Bicomplex& cx, const TotalCochain& g, Exec exec) {
  TotalCochain out = TotalCochain::zero(cx, g.n + 1);
  for (const auto& part : g.parts) {
    if (part.is_zero()) continue;
    out += delta(cx, part, exec);
  }
  return out;
}

BiCochain naive_product(const Bicomplex& cx, const BiCochain& d, const BiCochain& g, Exec exec) {
  check_shape(cx, d);
  check_shape(cx, g);
  if (d.p != g.p) throw ShapeError("naive product needs equal simplicial degrees");
  return build(cx, d.p, d.q + g.q, exec, [&](const Chain& sigma) {
    std::size_t i = cx.nerve().index_of(sigma);
    return naive_product(cx.algebra(cx.cat().chain_end(sigma)), d.values[i], g.values[i]);
  });
}

BiCochain cup(const Bicomplex& cx, const BiCochain& g, const BiCochain& d, Exec exec) {
  check_shape(cx, g);
  check_shape(cx, d);
  int p = g.p, pp = d.p;
  Scalar s = sign(static_cast<long>(g.q) * pp);
  auto front = vertex_range(0, p);
  auto back = vertex_range(p, p + pp);
  return build(cx, p + pp, g.q + d.q, exec, [&](const Chain& sigma) {
    Tensor t = naive_product(cx.algebra(cx.cat().chain_end(sigma)), cx.restrict(g, sigma, front),
                             cx.restrict(d, sigma, back));
    return t.scale(s);
  });
}

BiCochain circ_j(const Bicomplex& cx, const BiCochain& g, const BiCochain& d, int j, Exec exec) {
  check_shape(cx, g);
  check_shape(cx, d);
  if (j < 1 || j > g.q) throw IndexError("partial composition index out of range");
  int p = g.p, pp = d.p;
  auto front = vertex_range(0, p);
  auto back = vertex_range(p, p + pp);
  return build(cx, p + pp, g.q + d.q - 1, exec, [&](const Chain& sigma) {
    const FiniteCategory& cat = cx.cat();
    const Tensor& gt = g.values[cx.nerve().index_of(restrict_to_vertices(cat, sigma, front))];
    const Tensor& dt = d.values[cx.nerve().index_of(restrict_to_vertices(cat, sigma, back))];
    const Matrix* transport = pp > 0 ? &cx.map(segment_composite(cat, sigma, p, p + pp)) : nullptr;
    return insert(gt, j - 1, dt, transport);
  });
}

BiCochain circ(const Bicomplex& cx, const BiCochain& g, const BiCochain& d, Exec exec) {
  if (g.q + d.q - 1 < 0) throw ShapeError("composition of two q=0 cochains has negative arity");
  BiCochain out = BiCochain::zero(cx, g.p + d.p, g.q + d.q - 1);
  for (int j = 1; j <= g.q; ++j) {
    BiCochain term = circ_j(cx, g, d, j, exec);
    long e = static_cast<long>(g.q - 1) * d.p + static_cast<long>(d.q - 1) * (g.q - j);
    out += term.scale(sign(e));
  }
  return out;
}

BiCochain bullet_i(const Bicomplex& cx, const BiCochain& g, const BiCochain& d, int i, Exec exec) {
  check_shape(cx, g);
  check_shape(cx, d);
  int p = g.p, pp = d.p;
  if (i < 1 || i > p) throw IndexError("bullet index out of range");
  if (pp < 1) throw IndexError("bullet needs p' >= 1");
  auto mid = vertex_range(i - 1, i + pp - 1);
  auto outer = vertex_range(0, i - 1);
  for (int k = i + pp - 1; k <= p + pp - 1; ++k) outer.push_back(k);
  return build(cx, p + pp - 1, g.q + d.q, exec, [&](const Chain& sigma) {
    return naive_product(cx.algebra(cx.cat().chain_end(sigma)), cx.restrict(d, sigma, mid),
                         cx.restrict(g, sigma, outer));
  });
}

BiCochain bullet(const Bicomplex& cx, const BiCochain& g, const BiCochain& d, Exec exec) {
  if (g.p + d.p - 1 < 0) throw ShapeError("bullet of two p=0 cochains has negative degree");
  BiCochain out = BiCochain::zero(cx, g.p + d.p - 1, g.q + d.q);
  if (d.p == 0) return out;
  for (int i = 1; i <= g.p; ++i) {
    BiCochain term = bullet_i(cx, g, d, i, exec);
    long e = static_cast<long>(g.q) * d.q + static_cast<long>(d.p - 1) * (g.p + g.q - i);
    out += term.scale(sign(e));
  }
  return out;
}

TotalCochain bar_circ(const Bicomplex& cx, const BiCochain& g, const BiCochain& d, Exec exec) {
  int n = g.p + g.q + d.p + d.q - 1;
  if (n < 0) throw ShapeError("composition of two degree-0 cochains");
  TotalCochain out = TotalCochain::zero(cx, n);
  if (g.q > 0) out.add(circ(cx, g, d, exec));
  if (g.p > 0 && d.p > 0) out.add(bullet(cx, g, d, exec));
  return out;
}

TotalCochain bracket(const Bicomplex& cx, const BiCochain& g, const BiCochain& d, Exec exec) {
  TotalCochain out = bar_circ(cx, g, d, exec);
  long e = static_cast<long>(g.p + g.q - 1) * (d.p + d.q - 1);
  TotalCochain back = bar_circ(cx, d, g, exec);
  if (e % 2 == 0)
    out -= back;
  else
    out += back;
  return out;
}

BiCochain star(const Bicomplex& cx, const BiCochain& g, Exec exec) {
  check_shape(cx, g);
  if (!cx.diagram().has_star()) throw MissingStar("every algebra needs an involution");
  long p = g.p, q = g.q;
  Scalar s = sign(p * q + p * (p + 1) / 2);
  return build(cx, g.p, g.q, exec, [&](const Chain& sigma) {
    const Tensor& t = g.values[cx.nerve().index_of(sigma)];
    const Matrix& s_in = cx.algebra(cx.cat().chain_begin(sigma)).star_matrix();
    const Matrix& s_out = cx.algebra(cx.cat().chain_end(sigma)).star_matrix();
    Tensor r = reverse_inputs(transform(t, nullptr, &s_in)).conj();
    return transform(r, &s_out, nullptr).scale(s);
  });
}

namespace {

template <class Op>
TotalCochain bilinear(const Bicomplex& cx, const TotalCochain& g, const TotalCochain& d, int n, Op&& op) {
  TotalCochain out = TotalCochain::zero(cx, n);
  for (const auto& a : g.parts) {
    if (a.is_zero()) continue;
    for (const auto& b : d.parts) {
      if (b.is_zero()) continue;
      op(out, a, b);
    }
  }
  return out;
}

}  // namespace

TotalCochain cup(const Bicomplex& cx, const TotalCochain& g, const TotalCochain& d, Exec exec) {
  return bilinear(cx, g, d, g.n + d.n, [&](TotalCochain& out, const BiCochain& a, const BiCochain& b) {
    out.add(cup(cx, a, b, exec));
  });
}

TotalCochain circ(const Bicomplex& cx, const TotalCochain& g, const TotalCochain& d, Exec exec) {
  return bilinear(cx, g, d, g.n + d.n - 1, [&](TotalCochain& out, const BiCochain& a, const BiCochain& b) {
    if (a.q > 0) out.add(circ(cx, a, b, exec));
  });
}

TotalCochain bullet(const Bicomplex& cx, const TotalCochain& g, const TotalCochain& d, Exec exec) {
  return bilinear(cx, g, d, g.n + d.n - 1, [&](TotalCochain& out, const BiCochain& a, const BiCochain& b) {
    if (a.p > 0 && b.p > 0) out.add(bullet(cx, a, b, exec));
  });
}

TotalCochain bar_circ(const Bicomplex& cx, const TotalCochain& g, const TotalCochain& d, Exec exec) {
  return bilinear(cx, g, d, g.n + d.n - 1, [&](TotalCochain& out, const BiCochain& a, const BiCochain& b) {
    out += bar_circ(cx, a, b, exec);
  });
}

TotalCochain bracket(const Bicomplex& cx, const TotalCochain& g, const TotalCochain& d, Exec exec) {
  return bilinear(cx, g, d, g.n + d.n - 1, [&](TotalCochain& out, const BiCochain& a, const BiCochain& b) {
    out += bracket(cx, a, b, exec);
  });
}

TotalCochain star(const Bicomplex& cx, const TotalCochain& g, Exec exec) {
  TotalCochain out = TotalCochain::zero(cx, g.n);
  for (std::size_t p = 0; p < g.parts.size(); ++p) out.parts[p] = star(cx, g.parts[p], exec);
  return out;
}

}  // namespace cforge
