#include "cforge/fincat.hpp"

#include <algorithm>

#include "cforge/error.hpp"

namespace cforge {

namespace {

std::vector<int> chain_key(const Chain& c) {
  if (c.arrows.empty()) return {c.object.index};
  std::vector<int> key;
  key.reserve(c.arrows.size());
  for (auto f : c.arrows) key.push_back(f.index);
  return key;
}

ObjectId vertex_object(const FiniteCategory& cat, const Chain& c, int k) {
  int p = c.degree();
  if (p == 0) return c.object;
  if (k == p) return cat.src(c.arrows[static_cast<std::size_t>(p - 1)]);
  return cat.tgt(c.arrows[static_cast<std::size_t>(k)]);
}

}  // namespace

FiniteCategory FiniteCategory::create(int object_count, std::vector<Arrow> arrows,
                                      std::vector<MorphismId> identities,
                                      const std::map<std::pair<int, int>, int>& composites) {
  if (object_count < 0) throw IndexError("negative object count");
  FiniteCategory cat;
  cat.object_count_ = object_count;
  int m = static_cast<int>(arrows.size());
  for (const auto& a : arrows)
    if (a.src.index < 0 || a.src.index >= object_count || a.tgt.index < 0 ||
        a.tgt.index >= object_count)
      throw IndexError("morphism endpoint out of range");
  if (static_cast<int>(identities.size()) != object_count)
    throw IndexError("identity list must have one entry per object");
  for (int o = 0; o < object_count; ++o) {
    auto id = identities[static_cast<std::size_t>(o)];
    if (id.index < 0 || id.index >= m) throw IndexError("identity morphism out of range");
    const auto& a = arrows[static_cast<std::size_t>(id.index)];
    if (a.src.index != o || a.tgt.index != o)
      throw IndexError("identity of object " + std::to_string(o) + " is not an endomorphism of it");
  }
  cat.arrows_ = std::move(arrows);
  cat.identities_ = std::move(identities);
  cat.compose_.assign(static_cast<std::size_t>(m * m), -1);
  for (const auto& [key, h] : composites) {
    auto [g, f] = key;
    if (g < 0 || g >= m || f < 0 || f >= m || h < 0 || h >= m)
      throw IndexError("composition entry out of range");
    if (!cat.composable(MorphismId{g}, MorphismId{f}))
      throw IndexError("composite given for non-composable pair (" + std::to_string(g) + ", " +
                       std::to_string(f) + ")");
    if (cat.src(MorphismId{h}) != cat.src(MorphismId{f}) ||
        cat.tgt(MorphismId{h}) != cat.tgt(MorphismId{g}))
      throw IndexError("composite of (" + std::to_string(g) + ", " + std::to_string(f) +
                       ") has wrong endpoints");
    cat.compose_[static_cast<std::size_t>(g * m + f)] = h;
  }
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (cat.composable(MorphismId{g}, MorphismId{f}) &&
          cat.compose_[static_cast<std::size_t>(g * m + f)] < 0)
        throw IndexError("missing composite for (" + std::to_string(g) + ", " +
                         std::to_string(f) + ")");
  return cat;
}

FiniteCategory FiniteCategory::from_group(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  int unit = -1;
  for (int e = 0; e < n && unit < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < n; ++g)
      ok = ok && table[static_cast<std::size_t>(e)][static_cast<std::size_t>(g)] == g &&
           table[static_cast<std::size_t>(g)][static_cast<std::size_t>(e)] == g;
    if (ok) unit = e;
  }
  if (unit < 0) throw IndexError("group table has no unit");
  std::vector<Arrow> arrows(static_cast<std::size_t>(n), Arrow{ObjectId{0}, ObjectId{0}});
  std::map<std::pair<int, int>, int> comp;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      comp[{g, h}] = table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
  return create(1, std::move(arrows), {MorphismId{unit}}, comp);
}

FiniteCategory FiniteCategory::chain_poset(int n) {
  std::vector<Arrow> arrows;
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      index[{i, j}] = static_cast<int>(arrows.size());
      arrows.push_back({ObjectId{i}, ObjectId{j}});
    }
  std::vector<MorphismId> ids;
  for (int i = 0; i < n; ++i) ids.push_back(MorphismId{index[{i, i}]});
  std::map<std::pair<int, int>, int> comp;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) comp[{index[{j, k}], index[{i, j}]}] = index[{i, k}];
  return create(n, std::move(arrows), std::move(ids), comp);
}

bool FiniteCategory::is_identity(MorphismId f) const {
  return identity(src(f)) == f;
}

MorphismId FiniteCategory::compose(MorphismId g, MorphismId f) const {
  int m = morphism_count();
  if (g.index < 0 || g.index >= m || f.index < 0 || f.index >= m)
    throw IndexError("morphism id out of range");
  int h = compose_[static_cast<std::size_t>(g.index * m + f.index)];
  if (h < 0)
    throw IndexError("morphisms " + std::to_string(g.index) + " and " + std::to_string(f.index) +
                     " are not composable");
  return MorphismId{h};
}

ObjectId FiniteCategory::chain_begin(const Chain& c) const {
  return c.arrows.empty() ? c.object : src(c.arrows.back());
}

ObjectId FiniteCategory::chain_end(const Chain& c) const {
  return c.arrows.empty() ? c.object : tgt(c.arrows.front());
}

MorphismId FiniteCategory::chain_composite(const Chain& c) const {
  return segment_composite(*this, c, 0, c.degree());
}

bool FiniteCategory::is_valid_chain(const Chain& c) const {
  if (c.arrows.empty()) return c.object.index >= 0 && c.object.index < object_count_;
  for (auto f : c.arrows)
    if (f.index < 0 || f.index >= morphism_count()) return false;
  for (std::size_t i = 0; i + 1 < c.arrows.size(); ++i)
    if (!composable(c.arrows[i], c.arrows[i + 1])) return false;
  return true;
}

std::vector<CategoryViolation> FiniteCategory::check_laws() const {
  std::vector<CategoryViolation> out;
  int m = morphism_count();
  for (int f = 0; f < m; ++f) {
    MorphismId fm{f};
    if (compose(identity(tgt(fm)), fm) != fm) out.push_back({"left identity", {f}});
    if (compose(fm, identity(src(fm))) != fm) out.push_back({"right identity", {f}});
  }
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      if (!composable(MorphismId{h}, MorphismId{g})) continue;
      for (int f = 0; f < m; ++f) {
        if (!composable(MorphismId{g}, MorphismId{f})) continue;
        auto lhs = compose(compose(MorphismId{h}, MorphismId{g}), MorphismId{f});
        auto rhs = compose(MorphismId{h}, compose(MorphismId{g}, MorphismId{f}));
        if (lhs != rhs) out.push_back({"associativity", {h, g, f}});
      }
    }
  return out;
}

std::vector<Chain> enumerate_chains(const FiniteCategory& cat, int p) {
  if (p < 0) throw IndexError("negative chain degree");
  std::vector<Chain> out;
  if (p == 0) {
    for (int o = 0; o < cat.object_count(); ++o) out.push_back(Chain{{}, ObjectId{o}});
    return out;
  }
  std::vector<MorphismId> current;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == p) {
      out.push_back(Chain{current, ObjectId{}});
      return;
    }
    for (int f = 0; f < cat.morphism_count(); ++f) {
      if (!current.empty() && !cat.composable(current.back(), MorphismId{f})) continue;
      current.push_back(MorphismId{f});
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

MorphismId segment_composite(const FiniteCategory& cat, const Chain& c, int to, int from) {
  if (to > from || to < 0 || from > c.degree()) throw IndexError("bad chain segment");
  if (to == from) return cat.identity(vertex_object(cat, c, to));
  MorphismId acc = c.arrows[static_cast<std::size_t>(from - 1)];
  for (int k = from - 1; k > to; --k) acc = cat.compose(c.arrows[static_cast<std::size_t>(k - 1)], acc);
  return acc;
}

Chain restrict_to_vertices(const FiniteCategory& cat, const Chain& c, std::span<const int> kept) {
  if (kept.empty()) throw IndexError("a face must keep at least one vertex");
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] < 0 || kept[i] > c.degree()) throw IndexError("vertex out of range");
    if (i > 0 && kept[i] <= kept[i - 1]) throw IndexError("vertices must be increasing");
  }
  Chain out;
  if (kept.size() == 1) {
    out.object = vertex_object(cat, c, kept[0]);
    return out;
  }
  for (std::size_t i = 0; i + 1 < kept.size(); ++i)
    out.arrows.push_back(segment_composite(cat, c, kept[i], kept[i + 1]));
  return out;
}

Chain face(const FiniteCategory& cat, const Chain& c, int i) {
  int p = c.degree();
  if (p < 1) throw IndexError("face of a 0-chain");
  if (i < 0 || i > p) throw IndexError("face index " + std::to_string(i) + " out of range");
  SkipRange r{i, i};
  return face_multi(cat, c, std::span<const SkipRange>(&r, 1));
}

Chain face_multi(const FiniteCategory& cat, const Chain& c, std::span<const SkipRange> skip) {
  int p = c.degree();
  std::vector<bool> skipped(static_cast<std::size_t>(p + 1), false);
  for (const auto& r : skip) {
    if (r.first > r.last || r.first < 0 || r.last > p)
      throw IndexError("malformed skip range [" + std::to_string(r.first) + ", " +
                       std::to_string(r.last) + "]");
    for (int v = r.first; v <= r.last; ++v) {
      if (skipped[static_cast<std::size_t>(v)]) throw IndexError("overlapping skip ranges");
      skipped[static_cast<std::size_t>(v)] = true;
    }
  }
  std::vector<int> kept;
  for (int v = 0; v <= p; ++v)
    if (!skipped[static_cast<std::size_t>(v)]) kept.push_back(v);
  return restrict_to_vertices(cat, c, kept);
}

Nerve::Nerve(const FiniteCategory& cat, int max_degree) {
  if (max_degree < 0) throw IndexError("negative nerve degree");
  for (int p = 0; p <= max_degree; ++p) {
    chains_.push_back(enumerate_chains(cat, p));
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t i = 0; i < chains_.back().size(); ++i) idx[chain_key(chains_.back()[i])] = i;
    lookup_.push_back(std::move(idx));
  }
}

const std::vector<Chain>& Nerve::chains(int p) const {
  if (p < 0 || p > max_degree())
    throw IndexError("chain degree " + std::to_string(p) + " exceeds nerve degree " +
                     std::to_string(max_degree()));
  return chains_[static_cast<std::size_t>(p)];
}

std::size_t Nerve::index_of(const Chain& c) const {
  int p = c.degree();
  if (p > max_degree()) throw IndexError("chain degree exceeds nerve degree");
  const auto& idx = lookup_[static_cast<std::size_t>(p)];
  auto it = idx.find(chain_key(c));
  if (it == idx.end()) throw IndexError("not a chain of this category");
  return it->second;
}

}  // namespace cforge
