#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cforge/scalar.hpp"

namespace cforge {

/// Sorted (index, value) pairs with no explicit zeros.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

SparseVec sparse_from_dense(const Vec& v);
Vec dense_from_sparse(const SparseVec& v, std::size_t n);

/// Column-major sparse matrix.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVec> columns;

  std::size_t nonzeros() const;
  SparseVec apply(const SparseVec& x) const;
  bool is_zero() const;
};

/// a * b; throws ShapeError on mismatch.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

/// "rows cols nnz" header, then one "row col re im" line per nonzero.
void write_triplets(std::ostream& os, const SparseMatrix& m);

/// Exact incremental row echelon over Q(i) by field elimination. Each stored
/// row remembers the combination of inserted vectors it came from, so
/// dependencies (kernel vectors) and solutions come out directly.
class IncrementalEchelon {
 public:
  /// nullopt when v was independent (its pivot row is kept); otherwise a
  /// relation r with sum r_t inserted_t = 0 and r_tag = 1.
  std::optional<SparseVec> insert(const SparseVec& v, std::size_t tag);
  /// Coefficients over tags with v = sum c_t inserted_t, or nullopt.
  std::optional<SparseVec> express(const SparseVec& v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    SparseVec v;      // leading entry 1 at the pivot
    SparseVec combo;  // in terms of tags
  };
  // Returns true when v reduced to zero; combo accumulates -coefficients.
  bool reduce(SparseVec& v, SparseVec& combo) const;

  std::vector<Row> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

}  // namespace cforge
