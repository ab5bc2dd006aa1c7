#include "cforge/tensor.hpp"

#include <algorithm>

#include "cforge/error.hpp"

namespace cforge {

namespace {

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Dense array with per-mode extents; mode 0 is the output.
struct NdArray {
  std::vector<std::size_t> dims;
  std::vector<Scalar> data;  // empty: zero

  std::size_t size() const {
    std::size_t s = 1;
    for (auto d : dims) s *= d;
    return s;
  }
};

NdArray to_nd(const Tensor& t) {
  NdArray a;
  a.dims.push_back(t.out_dim());
  for (int i = 0; i < t.arity(); ++i) a.dims.push_back(t.in_dim());
  a.data = t.raw();
  return a;
}

// Nonzeros of a matrix grouped by the index being contracted.
// input_side: contract over rows (x -> x∘m on an input slot), new extent cols.
// otherwise: contract over cols (m∘x on the output), new extent rows.
std::vector<std::vector<std::pair<std::size_t, Scalar>>> contraction_lists(const Matrix& m,
                                                                           bool input_side) {
  std::size_t old_extent = input_side ? m.rows() : m.cols();
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> lists(old_extent);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& v = m(r, c);
      if (v.is_zero()) continue;
      if (input_side)
        lists[r].emplace_back(c, v);
      else
        lists[c].emplace_back(r, v);
    }
  return lists;
}

NdArray mode_product(const NdArray& a, std::size_t mode, const Matrix& m, bool input_side) {
  std::size_t old_extent = a.dims[mode];
  if ((input_side ? m.rows() : m.cols()) != old_extent)
    throw ShapeError("linear map does not match tensor slot dimension");
  NdArray out;
  out.dims = a.dims;
  out.dims[mode] = input_side ? m.cols() : m.rows();
  if (a.data.empty()) return out;
  auto lists = contraction_lists(m, input_side);
  std::size_t outer = 1, inner = 1;
  for (std::size_t k = 0; k < mode; ++k) outer *= a.dims[k];
  for (std::size_t k = mode + 1; k < a.dims.size(); ++k) inner *= a.dims[k];
  std::size_t neu = out.dims[mode];
  out.data.assign(outer * neu * inner, Scalar());
  bool any = false;
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t c = 0; c < old_extent; ++c) {
      const auto& list = lists[c];
      if (list.empty()) continue;
      std::size_t base = (o * old_extent + c) * inner;
      for (std::size_t i = 0; i < inner; ++i) {
        const Scalar& v = a.data[base + i];
        if (v.is_zero()) continue;
        any = true;
        for (const auto& [r, mv] : list) out.data[(o * neu + r) * inner + i].add_product(mv, v);
      }
    }
  if (!any) out.data.clear();
  return out;
}

std::vector<std::pair<std::size_t, Vec>> nonzero_columns(const Tensor& t) {
  std::vector<std::pair<std::size_t, Vec>> cols;
  if (!t.is_dense()) return cols;
  for (std::size_t in = 0; in < t.input_count(); ++in) {
    Vec c = t.column(in);
    if (!is_zero(c)) cols.emplace_back(in, std::move(c));
  }
  return cols;
}

}  // namespace

Tensor::Tensor(std::size_t out_dim, std::size_t in_dim, int arity)
    : out_(out_dim), in_(in_dim), arity_(arity), inputs_(ipow(in_dim, arity)) {
  if (arity < 0) throw ShapeError("negative tensor arity");
}

Tensor::Tensor(std::size_t out_dim, std::size_t in_dim, int arity, std::vector<Scalar> data)
    : Tensor(out_dim, in_dim, arity) {
  if (!data.empty() && data.size() != size())
    throw ShapeError("tensor data has " + std::to_string(data.size()) + " entries, expected " +
                     std::to_string(size()));
  data_ = std::move(data);
}

bool Tensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar& Tensor::ref(std::size_t flat) {
  if (data_.empty()) data_.assign(size(), Scalar());
  return data_.at(flat);
}

void Tensor::compact() {
  if (!data_.empty() && is_zero()) data_.clear();
}

Vec Tensor::column(std::size_t input) const {
  Vec v(out_);
  if (data_.empty()) return v;
  for (std::size_t o = 0; o < out_; ++o) v[o] = data_[o * inputs_ + input];
  return v;
}

Vec Tensor::apply(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != arity_) throw ShapeError("wrong number of arguments");
  for (const auto& a : args)
    if (a.size() != in_) throw ShapeError("argument dimension mismatch");
  Vec out(out_);
  if (data_.empty()) return out;
  for (std::size_t in = 0; in < inputs_; ++in) {
    Scalar coeff(1);
    std::size_t rest = in;
    for (int k = arity_ - 1; k >= 0 && !coeff.is_zero(); --k) {
      coeff *= args[static_cast<std::size_t>(k)][rest % in_];
      rest /= in_;
    }
    if (coeff.is_zero()) continue;
    for (std::size_t o = 0; o < out_; ++o) out[o].add_product(coeff, data_[o * inputs_ + in]);
  }
  return out;
}

std::size_t Tensor::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Scalar& s) { return !s.is_zero(); }));
}

void Tensor::check_same_shape(const Tensor& o) const {
  if (out_ != o.out_ || in_ != o.in_ || arity_ != o.arity_)
    throw ShapeError("tensor shapes differ");
}

Tensor& Tensor::operator+=(const Tensor& o) {
  check_same_shape(o);
  if (o.data_.empty()) return *this;
  if (data_.empty()) {
    data_ = o.data_;
    return *this;
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  check_same_shape(o);
  if (o.data_.empty()) return *this;
  if (data_.empty()) data_.assign(size(), Scalar());
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor& Tensor::scale(const Scalar& s) {
  if (s.is_zero()) {
    data_.clear();
    return *this;
  }
  for (auto& v : data_) v *= s;
  return *this;
}

Tensor Tensor::conj() const {
  Tensor t = *this;
  for (auto& v : t.data_) v = v.conj();
  return t;
}

bool operator==(const Tensor& a, const Tensor& b) {
  if (a.out_ != b.out_ || a.in_ != b.in_ || a.arity_ != b.arity_) return false;
  if (a.data_.empty()) return b.is_zero();
  if (b.data_.empty()) return a.is_zero();
  return a.data_ == b.data_;
}

ProductPreimages product_preimages(const Algebra& A) {
  ProductPreimages pre(static_cast<std::size_t>(A.dim()));
  for (const auto& sc : A.structure_constants())
    pre[static_cast<std::size_t>(sc.k)].emplace_back(sc.i, sc.j, sc.c);
  return pre;
}

Tensor transform(const Tensor& t, const Matrix* post, const Matrix* pre) {
  std::size_t out = post ? post->rows() : t.out_dim();
  std::size_t in = pre ? pre->cols() : t.in_dim();
  if (!t.is_dense()) {
    if (post && post->cols() != t.out_dim()) throw ShapeError("post-composition shape mismatch");
    if (pre && pre->rows() != t.in_dim()) throw ShapeError("pre-composition shape mismatch");
    return Tensor(out, in, t.arity());
  }
  NdArray a = to_nd(t);
  if (pre)
    for (std::size_t mode = 1; mode <= static_cast<std::size_t>(t.arity()); ++mode)
      a = mode_product(a, mode, *pre, true);
  if (post) a = mode_product(a, 0, *post, false);
  return Tensor(out, in, t.arity(), std::move(a.data));
}

Tensor naive_product(const Algebra& A, const Tensor& x, const Tensor& y) {
  auto d = static_cast<std::size_t>(A.dim());
  if (x.out_dim() != d || y.out_dim() != d) throw ShapeError("product outputs must lie in the algebra");
  if (x.in_dim() != y.in_dim() && x.arity() > 0 && y.arity() > 0)
    throw ShapeError("product operands have different input spaces");
  std::size_t in = x.arity() > 0 ? x.in_dim() : y.in_dim();
  Tensor out(d, in, x.arity() + y.arity());
  auto xs = nonzero_columns(x);
  auto ys = nonzero_columns(y);
  if (xs.empty() || ys.empty()) return out;
  std::size_t nb = y.input_count();
  std::size_t total = out.input_count();
  for (const auto& [a, xa] : xs)
    for (const auto& [b, yb] : ys) {
      Vec prod = A.multiply(xa, yb);
      for (std::size_t o = 0; o < d; ++o)
        if (!prod[o].is_zero()) out.ref(o * total + a * nb + b) = std::move(prod[o]);
    }
  return out;
}

Tensor insert(const Tensor& g, int slot, const Tensor& d, const Matrix* transport) {
  int q = g.arity();
  if (slot < 0 || slot >= q) throw IndexError("insertion slot out of range");
  NdArray a = to_nd(g);
  if (transport && a.data.size() > 0) {
    for (int k = 0; k < q; ++k)
      if (k != slot) a = mode_product(a, static_cast<std::size_t>(k + 1), *transport, true);
  } else if (transport) {
    for (int k = 0; k < q; ++k)
      if (k != slot) a.dims[static_cast<std::size_t>(k + 1)] = transport->cols();
  }
  if (g.in_dim() != d.out_dim()) throw ShapeError("inserted map lands in the wrong algebra");
  std::size_t n = d.in_dim();
  for (int k = 0; k < q; ++k)
    if (k != slot && a.dims[static_cast<std::size_t>(k + 1)] != n)
      throw ShapeError("inputs of composed maps live in different algebras");
  int qd = d.arity();
  Tensor out(g.out_dim(), n, q + qd - 1);
  if (a.data.empty() || !d.is_dense()) return out;
  std::size_t n_before = ipow(n, slot);
  std::size_t n_after = ipow(n, q - 1 - slot);
  std::size_t nb = d.input_count();
  std::size_t k_ext = g.in_dim();
  std::size_t total_in = out.input_count();
  // Rows of d: nonzeros of d(e_k).
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows(k_ext);
  for (std::size_t k = 0; k < k_ext; ++k)
    for (std::size_t b = 0; b < nb; ++b) {
      Scalar v = d.at(k * nb + b);
      if (!v.is_zero()) rows[k].emplace_back(b, std::move(v));
    }
  std::size_t in_total_g = n_before * k_ext * n_after;
  for (std::size_t o = 0; o < g.out_dim(); ++o)
    for (std::size_t idx = 0; idx < in_total_g; ++idx) {
      const Scalar& v = a.data[o * in_total_g + idx];
      if (v.is_zero()) continue;
      std::size_t after = idx % n_after;
      std::size_t k = (idx / n_after) % k_ext;
      std::size_t before = idx / (n_after * k_ext);
      for (const auto& [b, dv] : rows[k])
        out.ref(o * total_in + (before * nb + b) * n_after + after).add_product(v, dv);
    }
  out.compact();
  return out;
}

Tensor hochschild(const Tensor& g, const std::vector<Matrix>& left, const std::vector<Matrix>& right,
                  const ProductPreimages& src_products) {
  std::size_t n = g.in_dim();
  std::size_t d0 = g.out_dim();
  int q = g.arity();
  if (left.size() != n || right.size() != n || src_products.size() != n)
    throw ShapeError("bimodule data does not match the source algebra");
  Tensor out(d0, n, q + 1);
  if (!g.is_dense()) return out;
  std::size_t nq = g.input_count();
  std::size_t total = out.input_count();
  auto cols = nonzero_columns(g);
  // a_1 acting on the left.
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [rest, col] : cols) {
      Vec v = left[i].apply(col);
      for (std::size_t o = 0; o < d0; ++o)
        if (!v[o].is_zero()) out.ref(o * total + i * nq + rest) += v[o];
    }
  // Inner products a_j a_{j+1} (1-based j), sign (-1)^j.
  for (int j = 1; j <= q; ++j) {
    bool negative = j % 2 == 1;
    std::size_t n_after = ipow(n, q - j);
    for (std::size_t o = 0; o < d0; ++o)
      for (std::size_t in = 0; in < nq; ++in) {
        Scalar v = g.at(o * nq + in);
        if (v.is_zero()) continue;
        if (negative) v = -v;
        std::size_t after = in % n_after;
        std::size_t k = (in / n_after) % n;
        std::size_t before = in / (n_after * n);
        for (const auto& [x, y, c] : src_products[k])
          out.ref(o * total + ((before * n + x) * n + y) * n_after + after).add_product(v, c);
      }
  }
  // a_{q+1} acting on the right, sign (-1)^{q+1}.
  bool negative = (q + 1) % 2 == 1;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [rest, col] : cols) {
      Vec v = right[i].apply(col);
      for (std::size_t o = 0; o < d0; ++o) {
        if (v[o].is_zero()) continue;
        if (negative)
          out.ref(o * total + rest * n + i) -= v[o];
        else
          out.ref(o * total + rest * n + i) += v[o];
      }
    }
  out.compact();
  return out;
}

Tensor reverse_inputs(const Tensor& t) {
  if (!t.is_dense() || t.arity() < 2) return t;
  std::size_t n = t.in_dim();
  int q = t.arity();
  std::size_t nq = t.input_count();
  std::vector<Scalar> data(t.size());
  for (std::size_t in = 0; in < nq; ++in) {
    std::size_t rest = in, rev = 0;
    for (int k = 0; k < q; ++k) {
      rev = rev * n + rest % n;
      rest /= n;
    }
    for (std::size_t o = 0; o < t.out_dim(); ++o) data[o * nq + rev] = t.at(o * nq + in);
  }
  return Tensor(t.out_dim(), n, q, std::move(data));
}

}  // namespace cforge
