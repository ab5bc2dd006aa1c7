#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cforge/matrix.hpp"
#include "cforge/scalar.hpp"

namespace cforge {

struct StructureConstant {
  int i = 0;
  int j = 0;
  int k = 0;
  Scalar c;
};

using LinearMap = Matrix;

/// s·1 + a in the unitalization; the adjoined unit is formal even when the
/// algebra has its own unit (see `fold`).
struct UnitalElement {
  Scalar scalar;
  Vec vector;

  static UnitalElement one(std::size_t dim) { return {Scalar(1), Vec(dim)}; }
  static UnitalElement of(Vec v) { return {Scalar(0), std::move(v)}; }
  friend bool operator==(const UnitalElement&, const UnitalElement&) = default;
};

struct AlgebraViolation {
  std::string law;
  std::vector<int> basis;  // witness basis indices
};

/// Finite-dimensional associative algebra over Q(i) given by structure
/// constants e_i e_j = sum_k c[i][j][k] e_k. Optional unit and ★, where
/// a★ = S·conj(a).
class Algebra {
 public:
  Algebra() = default;
  Algebra(int dim, const std::vector<StructureConstant>& constants,
          std::optional<Vec> unit = std::nullopt, std::optional<Matrix> star = std::nullopt);

  /// Full matrix algebra M_n with basis e_ij at index i*n+j and ★ the
  /// conjugate transpose.
  static Algebra matrix_algebra(int n);
  /// Q[x]/(x^2) with basis {1, x}, ★ fixing x.
  static Algebra dual_numbers();
  /// Q^n with pointwise product, ★ = coefficient conjugation.
  static Algebra diagonal(int n);

  int dim() const { return dim_; }
  const Vec& product(int i, int j) const {
    return table_[static_cast<std::size_t>(i * dim_ + j)];
  }
  std::vector<StructureConstant> structure_constants() const;

  bool has_unit() const { return unit_.has_value(); }
  const Vec& unit() const { return unit_.value(); }
  bool has_star() const { return star_.has_value(); }
  const Matrix& star_matrix() const { return star_.value(); }

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec star(const Vec& a) const;
  /// Matrix of x -> a x.
  Matrix left_mult(const Vec& a) const;
  Matrix right_mult(const Vec& a) const;

  /// Exhaustive checks of associativity and, where present, unit and ★ laws.
  std::vector<AlgebraViolation> check() const;

  /// Unitalization arithmetic.
  UnitalElement multiply(const UnitalElement& u, const UnitalElement& v) const;
  UnitalElement star(const UnitalElement& u) const;
  /// Image of s·1 + a in the algebra itself, for unital algebras.
  UnitalElement fold(const UnitalElement& u) const;
  /// Equality in the unitalization, modulo the identification 1 = unit when
  /// the algebra is unital.
  bool same(const UnitalElement& u, const UnitalElement& v) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  int dim_ = 0;
  std::vector<Vec> table_;
  std::optional<Vec> unit_;
  std::optional<Matrix> star_;
};

Vec multiply(const Algebra& A, const Vec& a, const Vec& b);

/// Exact basis of {z : za = az for all a}.
std::vector<Vec> center(const Algebra& A);

/// v with uv = vu = 1 in the unitalization. Throws NotInvertible.
UnitalElement invert_unital(const Algebra& A, const UnitalElement& u);

/// Applies a linear map to s·1 + a as s·1 + f(a).
UnitalElement apply(const LinearMap& f, const UnitalElement& u);

struct HomReport {
  bool ok = true;
  std::vector<std::pair<int, int>> failing_pairs;  // basis pairs (i, j)
  bool unit_ok = true;
  std::vector<int> star_failures;  // basis indices
};

/// Multiplicativity on all basis pairs; unit preservation and ★-equivariance
/// when requested.
HomReport check_hom(const Algebra& A, const Algebra& B, const LinearMap& f, bool unital = false,
                    bool star = false);

}  // namespace cforge
