#include "cforge/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "cforge/error.hpp"

namespace cforge {

std::string_view to_string(Variant v) { return v == Variant::full ? "full" : "asimplicial"; }

Variant parse_variant(std::string_view s) {
  if (s == "full") return Variant::full;
  if (s == "asimplicial") return Variant::asimplicial;
  throw ParseError("unknown variant '" + std::string(s) + "'");
}

Caps Caps::from_env(Caps fallback) {
  const char* raw = std::getenv("COCHAIN_FORGE_CAP");
  if (!raw || !*raw) return fallback;
  std::string s(raw);
  try {
    auto x = s.find_first_of("xX");
    std::size_t used = 0;
    if (x == std::string::npos) {
      auto v = std::stoull(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    auto r = std::stoull(s.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(s);
    auto tail = s.substr(x + 1);
    auto c = std::stoull(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(s);
    return {r, c};
  } catch (const std::logic_error&) {
    throw ParseError("COCHAIN_FORGE_CAP must be N or RxC, got '" + s + "'");
  }
}

ComplexAssembly::ComplexAssembly(const Bicomplex& cx, Variant variant) : cx_(&cx), variant_(variant) {
  for (int n = 0; n <= cx.max_degree(); ++n) {
    std::vector<Block> bl;
    std::size_t offset = 0;
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      if (!includes(p, q)) continue;
      for (std::size_t i = 0; i < cx.chain_count(p); ++i) {
        const Chain& c = cx.chain(p, i);
        std::size_t size = cx.end_dim(c);
        for (int k = 0; k < q; ++k) size *= cx.begin_dim(c);
        if (size == 0) continue;
        bl.push_back({p, i, offset, size});
        offset += size;
      }
    }
    blocks_.push_back(std::move(bl));
    dims_.push_back(offset);
  }
}

const std::vector<ComplexAssembly::Block>& ComplexAssembly::blocks(int n) const {
  if (n < 0 || n > cx_->max_degree())
    throw IndexError("degree " + std::to_string(n) + " is outside the indexed range 0.." +
                     std::to_string(cx_->max_degree()));
  return blocks_[static_cast<std::size_t>(n)];
}

std::size_t ComplexAssembly::dim(int n) const {
  if (n < 0) return 0;
  blocks(n);
  return dims_[static_cast<std::size_t>(n)];
}

SparseVec ComplexAssembly::flatten(const TotalCochain& g) const {
  const auto& bl = blocks(g.n);
  if (g.parts.size() != static_cast<std::size_t>(std::min(g.n, cx_->max_degree())) + 1)
    throw ShapeError("total cochain has the wrong number of parts");
  for (const auto& part : g.parts)
    if (!includes(part.p, part.q) && !part.is_zero())
      throw ShapeError("cochain has a nonzero (" + std::to_string(part.p) + "," + std::to_string(part.q) +
                       ") part outside the asimplicial complex");
  SparseVec out;
  for (const auto& b : bl) {
    const BiCochain& part = g.part(b.p);
    if (part.values.size() != cx_->chain_count(b.p)) throw ShapeError("cochain part has the wrong chain count");
    const Tensor& t = part.values[b.chain];
    if (t.size() != b.size) throw ShapeError("tensor has the wrong size");
    if (!t.is_dense()) continue;
    for (std::size_t k = 0; k < b.size; ++k)
      if (!t.raw()[k].is_zero()) out.emplace_back(b.offset + k, t.raw()[k]);
  }
  return out;
}

TotalCochain ComplexAssembly::unflatten(int n, const SparseVec& v) const {
  const auto& bl = blocks(n);
  TotalCochain g = TotalCochain::zero(*cx_, n);
  auto it = bl.begin();
  for (const auto& [idx, x] : v) {
    if (idx >= dims_[static_cast<std::size_t>(n)]) throw IndexError("flat index out of range");
    while (idx >= it->offset + it->size) ++it;
    g.part(it->p).values[it->chain].ref(idx - it->offset) = x;
  }
  return g;
}

TotalCochain ComplexAssembly::basis_cochain(int n, std::size_t index) const {
  return unflatten(n, {{index, Scalar(1)}});
}

SparseMatrix assemble_coboundary_matrix(const ComplexAssembly& asmb, int n, const Caps& caps, Exec exec) {
  const Bicomplex& cx = asmb.complex();
  if (n < 0) throw IndexError("negative degree");
  if (n + 1 > cx.max_degree())
    throw IndexError("coboundary at degree " + std::to_string(n) + " needs chains of degree " +
                     std::to_string(n + 1) + "; the nerve stops at " + std::to_string(cx.max_degree()));
  SparseMatrix m;
  m.rows = asmb.dim(n + 1);
  m.cols = asmb.dim(n);
  if (m.rows > caps.rows || m.cols > caps.cols)
    throw ResourceLimit("coboundary matrix at degree " + std::to_string(n) + " is " + std::to_string(m.rows) +
                            "x" + std::to_string(m.cols) + ", caps are " + std::to_string(caps.rows) + "x" +
                            std::to_string(caps.cols),
                        n);
  m.columns.resize(m.cols);
  for_each_index(exec, m.cols, [&](std::size_t c) {
    m.columns[c] = asmb.flatten(delta(cx, asmb.basis_cochain(n, c), Exec::serial));
  });
  return m;
}

CohomologyReport cohomology_dims(const AlgebraDiagram& d, int n_max, const CohomologyOptions& opts) {
  if (n_max < 0) throw IndexError("negative maximal degree");
  Bicomplex cx(d, n_max + 1);
  return cohomology_dims(cx, n_max, opts);
}

CohomologyReport cohomology_dims(const Bicomplex& cx, int n_max, const CohomologyOptions& opts) {
  if (n_max < 0) throw IndexError("negative maximal degree");
  ComplexAssembly asmb(cx, opts.variant);
  CohomologyReport rep;
  rep.variant = opts.variant;
  rep.max_degree = n_max;

  std::optional<SparseMatrix> prev;  // M_{n-1}
  std::size_t prev_rank = 0;
  for (int n = 0; n <= n_max; ++n) {
    SparseMatrix m = assemble_coboundary_matrix(asmb, n, opts.caps, opts.exec);
    if (prev && !multiply(m, *prev).is_zero()) rep.integrity = false;

    IncrementalEchelon ech;
    std::vector<SparseVec> kernel;
    for (std::size_t c = 0; c < m.cols; ++c)
      if (auto rel = ech.insert(m.columns[c], c)) kernel.push_back(std::move(*rel));

    DegreeCohomology deg;
    deg.n = n;
    deg.dim_c = m.cols;
    deg.dim_z = m.cols - ech.rank();
    deg.dim_b = prev_rank;
    if (deg.dim_z < deg.dim_b) {
      rep.integrity = false;
      deg.dim_h = 0;
    } else {
      deg.dim_h = deg.dim_z - deg.dim_b;
    }
    if (opts.representatives && deg.dim_h > 0) {
      IncrementalEchelon span;
      std::size_t tag = 0;
      if (prev)
        for (const auto& col : prev->columns) span.insert(col, tag++);
      for (const auto& z : kernel)
        if (!span.insert(z, tag++)) deg.representatives.push_back(asmb.unflatten(n, z));
    }
    rep.degrees.push_back(std::move(deg));
    prev_rank = ech.rank();
    prev = std::move(m);
  }
  return rep;
}

bool is_cocycle(const Bicomplex& cx, const TotalCochain& g, Exec exec) { return delta(cx, g, exec).is_zero(); }

CoboundarySolver::CoboundarySolver(const Bicomplex& cx, Variant variant, Caps caps)
    : cx_(&cx), asmb_(cx, variant), caps_(caps) {}

const IncrementalEchelon& CoboundarySolver::echelon(int n) {
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;
  SparseMatrix m = assemble_coboundary_matrix(asmb_, n, caps_);
  IncrementalEchelon ech;
  for (std::size_t c = 0; c < m.cols; ++c) ech.insert(m.columns[c], c);
  return cache_.emplace(n, std::move(ech)).first->second;
}

std::optional<TotalCochain> CoboundarySolver::witness(const TotalCochain& g) {
  if (!is_cocycle(*cx_, g)) throw NotACocycle("degree " + std::to_string(g.n) + " input is not closed");
  SparseVec target = asmb_.flatten(g);
  if (g.n == 0) {
    if (!target.empty()) return std::nullopt;
    return TotalCochain{-1, {}};
  }
  auto combo = echelon(g.n - 1).express(target);
  if (!combo) return std::nullopt;
  TotalCochain eta = asmb_.unflatten(g.n - 1, *combo);
  if (!(delta(*cx_, eta) == g)) throw Error("coboundary witness failed re-verification");
  return eta;
}

bool CoboundarySolver::classes_equal(const TotalCochain& a, const TotalCochain& b) {
  if (!is_cocycle(*cx_, a) || !is_cocycle(*cx_, b)) throw NotACocycle("class comparison needs cocycles");
  return witness(a - b).has_value();
}

std::optional<TotalCochain> coboundary_witness(const Bicomplex& cx, const TotalCochain& g, Variant variant) {
  CoboundarySolver s(cx, variant, Caps::from_env());
  return s.witness(g);
}

bool classes_equal(const Bicomplex& cx, const TotalCochain& a, const TotalCochain& b, Variant variant) {
  CoboundarySolver s(cx, variant, Caps::from_env());
  return s.classes_equal(a, b);
}

}  // namespace cforge
