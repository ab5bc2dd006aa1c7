#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "cforge/algebra.hpp"
#include "cforge/matrix.hpp"
#include "cforge/scalar.hpp"

namespace cforge {

/// Multilinear map V_in^{⊗q} -> V_out stored row-major with the output index
/// most significant: entry (o, i_1, ..., i_q) at ((o*n + i_1)*n + ...)*n + i_q.
/// An empty data vector stands for the zero map.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t out_dim, std::size_t in_dim, int arity);
  Tensor(std::size_t out_dim, std::size_t in_dim, int arity, std::vector<Scalar> data);

  std::size_t out_dim() const { return out_; }
  std::size_t in_dim() const { return in_; }
  int arity() const { return arity_; }
  /// in_dim^arity.
  std::size_t input_count() const { return inputs_; }
  std::size_t size() const { return out_ * inputs_; }

  bool is_zero() const;
  bool is_dense() const { return !data_.empty(); }
  Scalar at(std::size_t flat) const { return data_.empty() ? Scalar() : data_[flat]; }
  /// Materialises zero storage on first write.
  Scalar& ref(std::size_t flat);
  const std::vector<Scalar>& raw() const { return data_; }
  /// Drops storage when every entry is zero.
  void compact();

  /// Value on basis inputs given as a flat input index.
  Vec column(std::size_t input) const;
  /// Value on arbitrary inputs.
  Vec apply(const std::vector<Vec>& args) const;
  std::size_t nonzero_count() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& scale(const Scalar& s);
  Tensor conj() const;

  /// Same shape and same entries; zero storage compares equal to explicit zeros.
  friend bool operator==(const Tensor& a, const Tensor& b);

 private:
  void check_same_shape(const Tensor& o) const;

  std::size_t out_ = 0;
  std::size_t in_ = 0;
  int arity_ = 0;
  std::size_t inputs_ = 1;
  std::vector<Scalar> data_;
};

/// (x, y, c) with e_x e_y having coefficient c on e_k, grouped by k.
using ProductPreimages = std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>>;
ProductPreimages product_preimages(const Algebra& A);

/// post ∘ T ∘ (pre ⊗ ... ⊗ pre); a null matrix means identity.
Tensor transform(const Tensor& t, const Matrix* post, const Matrix* pre);

/// (X·Y)(a..., b...) = X(a...) Y(b...) multiplied in A.
Tensor naive_product(const Algebra& A, const Tensor& x, const Tensor& y);

/// G with D inserted at input slot `slot` (0-based); the other inputs of G
/// are first pre-composed with `transport` (null means identity).
Tensor insert(const Tensor& g, int slot, const Tensor& d, const Matrix* transport);

/// Unsigned Hochschild coboundary of G: V_src^{⊗q} -> V_tgt where V_tgt is a
/// bimodule through a homomorphism F. `left[i]`/`right[i]` are the matrices
/// of x -> F(e_i) x and x -> x F(e_i) on V_tgt.
Tensor hochschild(const Tensor& g, const std::vector<Matrix>& left,
                  const std::vector<Matrix>& right, const ProductPreimages& src_products);

/// Reverses the input order.
Tensor reverse_inputs(const Tensor& t);

}  // namespace cforge
