#pragma once

#include <cstdint>
#include <random>

#include "cforge/cochain.hpp"
#include "cforge/cohomology.hpp"

namespace cforge {

/// Engine used by every seeded generator; draws are reduced with plain
/// modular arithmetic so sequences are identical across standard libraries.
using Rng = std::mt19937_64;

struct RandomOptions {
  int range = 3;           // integer parts drawn from [-range, range]
  int denominator = 2;     // denominators drawn from [1, denominator]
  bool complex = false;    // also draw imaginary parts
  int zero_percent = 30;   // chance of an exact zero entry
};

Rational random_rational(Rng& rng, const RandomOptions& o = {});
Scalar random_scalar(Rng& rng, const RandomOptions& o = {});
Vec random_vec(Rng& rng, std::size_t n, const RandomOptions& o = {});
Tensor random_tensor(Rng& rng, std::size_t out, std::size_t in, int arity, const RandomOptions& o = {});
BiCochain random_bicochain(const Bicomplex& cx, int p, int q, Rng& rng, const RandomOptions& o = {});
/// Parts outside the variant stay zero.
TotalCochain random_total(const Bicomplex& cx, int n, Rng& rng, const RandomOptions& o = {},
                          Variant variant = Variant::full);
/// Invertible element s·1 + a of the unitalization (retries until found).
UnitalElement random_invertible(const Algebra& A, Rng& rng, const RandomOptions& o = {});
/// (0,1) cochain whose value at each object is a random derivation.
BiCochain random_derivations(const Bicomplex& cx, Rng& rng, const RandomOptions& o = {});

}  // namespace cforge
