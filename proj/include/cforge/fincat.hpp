#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cforge {

struct ObjectId {
  int index = 0;
  auto operator<=>(const ObjectId&) const = default;
};

struct MorphismId {
  int index = 0;
  auto operator<=>(const MorphismId&) const = default;
};

/// An element of the nerve: composable arrows (phi_1, ..., phi_p) written
/// right to left, so src(phi_i) == tgt(phi_{i+1}). Vertices are numbered
/// 0..p with vertex 0 the end (target of phi_1) and vertex p the beginning.
/// A 0-chain is a bare object.
struct Chain {
  std::vector<MorphismId> arrows;
  ObjectId object;  // meaningful only when arrows is empty

  int degree() const { return static_cast<int>(arrows.size()); }
  auto operator<=>(const Chain&) const = default;
};

/// Inclusive range of skipped vertex indices for generalized faces.
struct SkipRange {
  int first = 0;
  int last = 0;
};

struct CategoryViolation {
  std::string law;
  std::vector<int> morphisms;
};

/// Small category with a total composition table. Immutable once built.
class FiniteCategory {
 public:
  struct Arrow {
    ObjectId src;
    ObjectId tgt;
  };

  /// `composites` maps (g, f) with tgt(f) == src(g) to g∘f. Throws IndexError
  /// on malformed tables (out-of-range ids, missing or ill-typed entries).
  static FiniteCategory create(int object_count, std::vector<Arrow> arrows,
                               std::vector<MorphismId> identities,
                               const std::map<std::pair<int, int>, int>& composites);

  /// One object, morphisms are group elements; `table[g][h]` = g*h.
  static FiniteCategory from_group(const std::vector<std::vector<int>>& table);
  /// Objects 0..n-1 with a unique arrow i -> j whenever i <= j.
  static FiniteCategory chain_poset(int n);

  int object_count() const { return object_count_; }
  int morphism_count() const { return static_cast<int>(arrows_.size()); }
  ObjectId src(MorphismId f) const { return arrows_.at(static_cast<std::size_t>(f.index)).src; }
  ObjectId tgt(MorphismId f) const { return arrows_.at(static_cast<std::size_t>(f.index)).tgt; }
  MorphismId identity(ObjectId o) const {
    return identities_.at(static_cast<std::size_t>(o.index));
  }
  bool is_identity(MorphismId f) const;
  bool composable(MorphismId g, MorphismId f) const { return tgt(f) == src(g); }
  /// g∘f; throws IndexError when tgt(f) != src(g).
  MorphismId compose(MorphismId g, MorphismId f) const;

  ObjectId chain_begin(const Chain& c) const;
  ObjectId chain_end(const Chain& c) const;
  /// phi_1∘...∘phi_p, or the identity of the object for a 0-chain.
  MorphismId chain_composite(const Chain& c) const;
  bool is_valid_chain(const Chain& c) const;

  /// Associativity and identity laws, checked exhaustively.
  std::vector<CategoryViolation> check_laws() const;

 private:
  int object_count_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<MorphismId> identities_;
  std::vector<int> compose_;  // m*m table, -1 where undefined
};

/// All p-chains, lexicographic by morphism index (objects by index for p=0).
std::vector<Chain> enumerate_chains(const FiniteCategory& cat, int p);

/// The i-th face, 0 <= i <= p, p >= 1.
Chain face(const FiniteCategory& cat, const Chain& c, int i);

/// Face skipping the given vertex ranges. Covers interior composition
/// ∂_{i..j} and two-sided truncation ∂_{0..i,j..p}; throws IndexError on
/// overlapping, out-of-range or all-skipping ranges.
Chain face_multi(const FiniteCategory& cat, const Chain& c, std::span<const SkipRange> skip);

/// Sub-chain through the listed vertices (strictly increasing, within 0..p).
Chain restrict_to_vertices(const FiniteCategory& cat, const Chain& c,
                           std::span<const int> kept);
/// Composite of the arrows between vertices `from` >= `to` (identity when equal).
MorphismId segment_composite(const FiniteCategory& cat, const Chain& c, int to, int from);

/// Cached nerve up to a maximum degree with index lookup.
class Nerve {
 public:
  Nerve(const FiniteCategory& cat, int max_degree);

  int max_degree() const { return static_cast<int>(chains_.size()) - 1; }
  const std::vector<Chain>& chains(int p) const;
  std::size_t count(int p) const { return chains(p).size(); }
  /// Index of `c` in chains(c.degree()); throws IndexError when absent.
  std::size_t index_of(const Chain& c) const;

 private:
  std::vector<std::vector<Chain>> chains_;
  std::vector<std::map<std::vector<int>, std::size_t>> lookup_;
};

}  // namespace cforge
