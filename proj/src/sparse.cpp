#include "cforge/sparse.hpp"

#include <map>
#include <ostream>

#include "cforge/error.hpp"

namespace cforge {

namespace {

using Work = std::map<std::size_t, Scalar>;

void axpy(Work& w, const Scalar& coef, const SparseVec& v) {
  for (const auto& [idx, val] : v) {
    auto [it, fresh] = w.try_emplace(idx);
    it->second -= coef * val;
    if (it->second.is_zero()) w.erase(it);
  }
}

SparseVec to_vec(const Work& w) { return SparseVec(w.begin(), w.end()); }

}  // namespace

SparseVec sparse_from_dense(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

Vec dense_from_sparse(const SparseVec& v, std::size_t n) {
  Vec d(n);
  for (const auto& [i, x] : v) d.at(i) = x;
  return d;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  Work w;
  for (const auto& [c, val] : x) {
    if (c >= cols) throw ShapeError("sparse vector index out of range");
    axpy(w, -val, columns[c]);
  }
  return to_vec(w);
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : columns)
    if (!c.empty()) return false;
  return true;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw ShapeError("sparse product dimension mismatch");
  SparseMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.columns.reserve(b.cols);
  for (const auto& col : b.columns) out.columns.push_back(a.apply(col));
  return out;
}

void write_triplets(std::ostream& os, const SparseMatrix& m) {
  os << m.rows << ' ' << m.cols << ' ' << m.nonzeros() << '\n';
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c])
      os << r << ' ' << c << ' ' << format_rational(v.re()) << ' ' << format_rational(v.im()) << '\n';
}

bool IncrementalEchelon::reduce(SparseVec& v, SparseVec& combo) const {
  Work work(v.begin(), v.end());
  Work comb(combo.begin(), combo.end());
  auto it = work.begin();
  while (it != work.end()) {
    auto pr = pivot_row_.find(it->first);
    if (pr == pivot_row_.end()) {
      ++it;
      continue;
    }
    std::size_t pivot = it->first;
    Scalar coef = it->second;
    const Row& row = rows_[pr->second];
    axpy(work, coef, row.v);
    axpy(comb, coef, row.combo);
    it = work.upper_bound(pivot);
  }
  v = to_vec(work);
  combo = to_vec(comb);
  return v.empty();
}

std::optional<SparseVec> IncrementalEchelon::insert(const SparseVec& v, std::size_t tag) {
  SparseVec work = v;
  SparseVec combo{{tag, Scalar(1)}};
  if (reduce(work, combo)) return combo;
  Scalar inv = work.front().second.inverse();
  for (auto& [i, x] : work) x *= inv;
  for (auto& [i, x] : combo) x *= inv;
  pivot_row_.emplace(work.front().first, rows_.size());
  rows_.push_back({std::move(work), std::move(combo)});
  return std::nullopt;
}

std::optional<SparseVec> IncrementalEchelon::express(const SparseVec& v) const {
  SparseVec work = v;
  SparseVec combo;
  if (!reduce(work, combo)) return std::nullopt;
  for (auto& [i, x] : combo) x = -x;
  return combo;
}

}  // namespace cforge
