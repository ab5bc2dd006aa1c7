#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "cforge/cochain.hpp"
#include "cforge/exec.hpp"
#include "cforge/sparse.hpp"

namespace cforge {

/// full: the whole total complex. asimplicial: the q = 0 row removed.
enum class Variant { full, asimplicial };

std::string_view to_string(Variant v);
/// Throws ParseError on anything but "full" / "asimplicial".
Variant parse_variant(std::string_view s);

/// Upper bounds on the assembled coboundary matrices.
struct Caps {
  std::size_t rows = 20000;
  std::size_t cols = 20000;

  /// COCHAIN_FORGE_CAP=N caps both, COCHAIN_FORGE_CAP=RxC each.
  static Caps from_env(Caps fallback);
  static Caps from_env() { return from_env(Caps{}); }
};

/// Canonical flat coordinates of total cochains: p ascending, then chains in
/// nerve order, then tensor entries row-major (output index most
/// significant). Degrees up to the nerve degree of the complex are indexed.
class ComplexAssembly {
 public:
  ComplexAssembly(const Bicomplex& cx, Variant variant);

  const Bicomplex& complex() const { return *cx_; }
  Variant variant() const { return variant_; }
  bool includes([[maybe_unused]] int p, int q) const { return variant_ == Variant::full || q > 0; }

  /// Zero for n < 0; IndexError beyond the nerve degree.
  std::size_t dim(int n) const;
  /// ShapeError when g has nonzero entries outside the chosen variant.
  SparseVec flatten(const TotalCochain& g) const;
  TotalCochain unflatten(int n, const SparseVec& v) const;
  TotalCochain basis_cochain(int n, std::size_t index) const;

 private:
  struct Block {
    int p;
    std::size_t chain;
    std::size_t offset;
    std::size_t size;
  };
  const std::vector<Block>& blocks(int n) const;

  const Bicomplex* cx_;
  Variant variant_;
  std::vector<std::vector<Block>> blocks_;
  std::vector<std::size_t> dims_;
};

/// Matrix of δ: C^n -> C^{n+1} in the canonical coordinates. Needs the
/// nerve up to degree n+1; throws ResourceLimit(n) past the caps.
SparseMatrix assemble_coboundary_matrix(const ComplexAssembly& asmb, int n, const Caps& caps = {},
                                        Exec exec = Exec::parallel);

struct DegreeCohomology {
  int n = 0;
  std::size_t dim_c = 0;
  std::size_t dim_z = 0;
  std::size_t dim_b = 0;
  std::size_t dim_h = 0;
  /// Cocycles whose classes form a basis of H^n (when requested).
  std::vector<TotalCochain> representatives;
};

struct CohomologyReport {
  Variant variant = Variant::full;
  int max_degree = 0;
  std::vector<DegreeCohomology> degrees;
  /// M_{n+1} M_n = 0 for every assembled pair.
  bool integrity = true;
};

struct CohomologyOptions {
  Variant variant = Variant::full;
  bool representatives = false;
  Caps caps{};
  Exec exec = Exec::parallel;
};

/// H^0 .. H^{n_max}; builds its own complex with nerve degree n_max + 1.
CohomologyReport cohomology_dims(const AlgebraDiagram& d, int n_max, const CohomologyOptions& opts = {});
/// Same on an existing complex, whose nerve must reach n_max + 1.
CohomologyReport cohomology_dims(const Bicomplex& cx, int n_max, const CohomologyOptions& opts = {});

/// δΓ = 0 exactly.
bool is_cocycle(const Bicomplex& cx, const TotalCochain& g, Exec exec = Exec::parallel);

/// Solves δη = Γ against cached eliminations of the coboundary matrices.
/// Not safe for concurrent use.
class CoboundarySolver {
 public:
  explicit CoboundarySolver(const Bicomplex& cx, Variant variant = Variant::full, Caps caps = {});

  /// Throws NotACocycle unless δΓ = 0. Degree 0: the empty cochain of
  /// degree -1 when Γ = 0, nullopt otherwise. Every returned η is re-checked.
  std::optional<TotalCochain> witness(const TotalCochain& g);
  /// Throws NotACocycle unless both are cocycles.
  bool classes_equal(const TotalCochain& a, const TotalCochain& b);

  const ComplexAssembly& assembly() const { return asmb_; }

 private:
  const IncrementalEchelon& echelon(int n);

  const Bicomplex* cx_;
  ComplexAssembly asmb_;
  Caps caps_;
  std::map<int, IncrementalEchelon> cache_;
};

std::optional<TotalCochain> coboundary_witness(const Bicomplex& cx, const TotalCochain& g,
                                               Variant variant = Variant::full);
bool classes_equal(const Bicomplex& cx, const TotalCochain& a, const TotalCochain& b,
                   Variant variant = Variant::full);

}  // namespace cforge
