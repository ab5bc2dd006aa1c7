#include "cforge/random.hpp"

#include "cforge/deformation.hpp"
#include "cforge/error.hpp"

namespace cforge {

namespace {

long draw(Rng& rng, long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

}  // namespace

Rational random_rational(Rng& rng, const RandomOptions& o) {
  Rational r(draw(rng, -o.range, o.range), draw(rng, 1, std::max(1, o.denominator)));
  r.canonicalize();
  return r;
}

Scalar random_scalar(Rng& rng, const RandomOptions& o) {
  if (draw(rng, 0, 99) < o.zero_percent) return Scalar();
  Rational re = random_rational(rng, o);
  Rational im = o.complex ? random_rational(rng, o) : Rational(0);
  return Scalar(re, im);
}

Vec random_vec(Rng& rng, std::size_t n, const RandomOptions& o) {
  Vec v(n);
  for (auto& x : v) x = random_scalar(rng, o);
  return v;
}

Tensor random_tensor(Rng& rng, std::size_t out, std::size_t in, int arity, const RandomOptions& o) {
  Tensor t(out, in, arity);
  for (std::size_t k = 0; k < t.size(); ++k) {
    Scalar x = random_scalar(rng, o);
    if (!x.is_zero()) t.ref(k) = x;
  }
  return t;
}

BiCochain random_bicochain(const Bicomplex& cx, int p, int q, Rng& rng, const RandomOptions& o) {
  BiCochain g = BiCochain::zero(cx, p, q);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    const Chain& c = cx.chain(p, i);
    g.values[i] = random_tensor(rng, cx.end_dim(c), cx.begin_dim(c), q, o);
  }
  return g;
}

TotalCochain random_total(const Bicomplex& cx, int n, Rng& rng, const RandomOptions& o, Variant variant) {
  TotalCochain t = TotalCochain::zero(cx, n);
  for (auto& part : t.parts)
    if (variant == Variant::full || part.q > 0) part = random_bicochain(cx, part.p, part.q, rng, o);
  return t;
}

UnitalElement random_invertible(const Algebra& A, Rng& rng, const RandomOptions& o) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    UnitalElement u{random_scalar(rng, o), random_vec(rng, static_cast<std::size_t>(A.dim()), o)};
    try {
      invert_unital(A, u);
      return u;
    } catch (const NotInvertible&) {
    }
  }
  throw NotInvertible("no invertible element drawn after 1000 attempts");
}

BiCochain random_derivations(const Bicomplex& cx, Rng& rng, const RandomOptions& o) {
  BiCochain g = BiCochain::zero(cx, 0, 1);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    const Algebra& A = cx.algebra(cx.chain(0, i).object);
    auto n = static_cast<std::size_t>(A.dim());
    Matrix d(n, n);
    for (const auto& b : derivation_basis(A)) d = d + random_scalar(rng, o) * b;
    Tensor t(n, n, 1);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!d(r, c).is_zero()) t.ref(r * n + c) = d(r, c);
    g.values[i] = std::move(t);
  }
  return g;
}

}  // namespace cforge
