#include "cforge/algebra.hpp"

#include "cforge/error.hpp"

namespace cforge {

Algebra::Algebra(int dim, const std::vector<StructureConstant>& constants, std::optional<Vec> unit,
                 std::optional<Matrix> star)
    : dim_(dim), unit_(std::move(unit)), star_(std::move(star)) {
  if (dim < 0) throw ShapeError("negative algebra dimension");
  auto d = static_cast<std::size_t>(dim);
  table_.assign(d * d, Vec(d));
  for (const auto& sc : constants) {
    if (sc.i < 0 || sc.i >= dim || sc.j < 0 || sc.j >= dim || sc.k < 0 || sc.k >= dim)
      throw IndexError("structure constant index out of range");
    table_[static_cast<std::size_t>(sc.i * dim + sc.j)][static_cast<std::size_t>(sc.k)] += sc.c;
  }
  if (unit_ && unit_->size() != d) throw ShapeError("unit has wrong length");
  if (star_ && (star_->rows() != d || star_->cols() != d))
    throw ShapeError("star matrix has wrong shape");
}

Algebra Algebra::matrix_algebra(int n) {
  std::vector<StructureConstant> sc;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) sc.push_back({i * n + j, j * n + l, i * n + l, Scalar(1)});
  Vec unit(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) unit[static_cast<std::size_t>(i * n + i)] = Scalar(1);
  Matrix star(static_cast<std::size_t>(n * n), static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) star(static_cast<std::size_t>(j * n + i), static_cast<std::size_t>(i * n + j)) = Scalar(1);
  return Algebra(n * n, sc, unit, star);
}

Algebra Algebra::dual_numbers() {
  std::vector<StructureConstant> sc{{0, 0, 0, Scalar(1)}, {0, 1, 1, Scalar(1)}, {1, 0, 1, Scalar(1)}};
  return Algebra(2, sc, Vec{Scalar(1), Scalar(0)}, Matrix::identity(2));
}

Algebra Algebra::diagonal(int n) {
  std::vector<StructureConstant> sc;
  for (int i = 0; i < n; ++i) sc.push_back({i, i, i, Scalar(1)});
  return Algebra(n, sc, Vec(static_cast<std::size_t>(n), Scalar(1)),
                 Matrix::identity(static_cast<std::size_t>(n)));
}

std::vector<StructureConstant> Algebra::structure_constants() const {
  std::vector<StructureConstant> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const Vec& v = product(i, j);
      for (int k = 0; k < dim_; ++k)
        if (!v[static_cast<std::size_t>(k)].is_zero()) out.push_back({i, j, k, v[static_cast<std::size_t>(k)]});
    }
  return out;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  auto d = static_cast<std::size_t>(dim_);
  if (a.size() != d || b.size() != d) throw ShapeError("element dimension mismatch");
  Vec out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      const Vec& e = table_[i * d + j];
      for (std::size_t k = 0; k < d; ++k) out[k].add_product(ab, e[k]);
    }
  }
  return out;
}

Vec Algebra::star(const Vec& a) const {
  if (!star_) throw MissingStar("algebra has no involution");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i].conj();
  return star_->apply(c);
}

Matrix Algebra::left_mult(const Vec& a) const {
  auto d = static_cast<std::size_t>(dim_);
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec col = multiply(a, basis_vec(d, j));
    for (std::size_t k = 0; k < d; ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix Algebra::right_mult(const Vec& a) const {
  auto d = static_cast<std::size_t>(dim_);
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec col = multiply(basis_vec(d, j), a);
    for (std::size_t k = 0; k < d; ++k) m(k, j) = col[k];
  }
  return m;
}

std::vector<AlgebraViolation> Algebra::check() const {
  std::vector<AlgebraViolation> out;
  auto d = static_cast<std::size_t>(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        Vec ek = basis_vec(d, static_cast<std::size_t>(k));
        Vec lhs = multiply(product(i, j), ek);
        Vec rhs = multiply(basis_vec(d, static_cast<std::size_t>(i)), product(j, k));
        if (lhs != rhs) out.push_back({"associativity", {i, j, k}});
      }
  if (unit_) {
    for (int i = 0; i < dim_; ++i) {
      Vec ei = basis_vec(d, static_cast<std::size_t>(i));
      if (multiply(*unit_, ei) != ei || multiply(ei, *unit_) != ei) out.push_back({"unit", {i}});
    }
  }
  if (star_) {
    for (int i = 0; i < dim_; ++i) {
      Vec ei = basis_vec(d, static_cast<std::size_t>(i));
      if (star(star(ei)) != ei) out.push_back({"star involutive", {i}});
      for (int j = 0; j < dim_; ++j) {
        Vec ej = basis_vec(d, static_cast<std::size_t>(j));
        if (star(product(i, j)) != multiply(star(ej), star(ei)))
          out.push_back({"star antimultiplicative", {i, j}});
      }
    }
  }
  return out;
}

UnitalElement Algebra::multiply(const UnitalElement& u, const UnitalElement& v) const {
  UnitalElement out{u.scalar * v.scalar, multiply(u.vector, v.vector)};
  for (std::size_t k = 0; k < out.vector.size(); ++k) {
    out.vector[k].add_product(u.scalar, v.vector[k]);
    out.vector[k].add_product(v.scalar, u.vector[k]);
  }
  return out;
}

UnitalElement Algebra::star(const UnitalElement& u) const {
  return {u.scalar.conj(), star(u.vector)};
}

UnitalElement Algebra::fold(const UnitalElement& u) const {
  if (!unit_ || u.scalar.is_zero()) return u;
  UnitalElement out{Scalar(0), u.vector};
  for (std::size_t k = 0; k < out.vector.size(); ++k) out.vector[k].add_product(u.scalar, (*unit_)[k]);
  return out;
}

bool Algebra::same(const UnitalElement& u, const UnitalElement& v) const {
  return fold(u) == fold(v);
}

Vec multiply(const Algebra& A, const Vec& a, const Vec& b) { return A.multiply(a, b); }

std::vector<Vec> center(const Algebra& A) {
  auto d = static_cast<std::size_t>(A.dim());
  // Rows: for each basis a = e_j, the coordinates of z e_j - e_j z.
  Matrix stacked(d * d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec ej = basis_vec(d, j);
    for (std::size_t c = 0; c < d; ++c) {
      Vec zc = basis_vec(d, c);
      Vec diff = A.multiply(zc, ej);
      Vec other = A.multiply(ej, zc);
      for (std::size_t k = 0; k < d; ++k) stacked(j * d + k, c) = diff[k] - other[k];
    }
  }
  auto basis = kernel_basis(stacked);
  for (const auto& z : basis)
    for (std::size_t j = 0; j < d; ++j) {
      Vec ej = basis_vec(d, j);
      if (A.multiply(z, ej) != A.multiply(ej, z)) throw Error("center: kernel element fails post-check");
    }
  return basis;
}

UnitalElement invert_unital(const Algebra& A, const UnitalElement& u) {
  auto d = static_cast<std::size_t>(A.dim());
  if (u.vector.size() != d) throw ShapeError("unital element has wrong dimension");
  // Left-regular representation of s·1 + a on the unitalization, basis (1, e_0, ...).
  Matrix reg(d + 1, d + 1);
  for (std::size_t c = 0; c <= d; ++c) {
    UnitalElement x = c == 0 ? UnitalElement::one(d) : UnitalElement::of(basis_vec(d, c - 1));
    UnitalElement ux = A.multiply(u, x);
    reg(0, c) = ux.scalar;
    for (std::size_t k = 0; k < d; ++k) reg(k + 1, c) = ux.vector[k];
  }
  Vec rhs(d + 1);
  rhs[0] = Scalar(1);
  auto sol = solve(reg, rhs);
  UnitalElement one = UnitalElement::one(d);
  if (sol) {
    UnitalElement v{(*sol)[0], Vec(sol->begin() + 1, sol->end())};
    if (A.multiply(u, v) == one && A.multiply(v, u) == one) return v;
  }
  if (!A.has_unit()) throw NotInvertible("element is not invertible in the unitalization");
  // With a genuine unit the formal 1 is identified with it; solve inside A.
  Vec a = A.fold(u).vector;
  auto inner = solve(A.left_mult(a), A.unit());
  if (!inner) throw NotInvertible("element is not invertible");
  UnitalElement v = UnitalElement::of(*inner);
  if (!A.same(A.multiply(u, v), one) || !A.same(A.multiply(v, u), one))
    throw NotInvertible("element has only a one-sided inverse");
  return v;
}

UnitalElement apply(const LinearMap& f, const UnitalElement& u) {
  return {u.scalar, f.apply(u.vector)};
}

HomReport check_hom(const Algebra& A, const Algebra& B, const LinearMap& f, bool unital, bool star) {
  auto da = static_cast<std::size_t>(A.dim());
  auto db = static_cast<std::size_t>(B.dim());
  if (f.rows() != db || f.cols() != da) throw ShapeError("homomorphism matrix has wrong shape");
  HomReport rep;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      Vec lhs = f.apply(A.product(static_cast<int>(i), static_cast<int>(j)));
      Vec rhs = B.multiply(f.column(i), f.column(j));
      if (lhs != rhs) rep.failing_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  if (unital) {
    if (!A.has_unit() || !B.has_unit()) throw ShapeError("unit check requires unital algebras");
    rep.unit_ok = f.apply(A.unit()) == B.unit();
  }
  if (star) {
    for (std::size_t i = 0; i < da; ++i) {
      Vec ei = basis_vec(da, i);
      if (f.apply(A.star(ei)) != B.star(f.apply(ei))) rep.star_failures.push_back(static_cast<int>(i));
    }
  }
  rep.ok = rep.failing_pairs.empty() && rep.unit_ok && rep.star_failures.empty();
  return rep;
}

}  // namespace cforge
