#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cforge/cochain.hpp"
#include "cforge/cohomology.hpp"
#include "cforge/diagram.hpp"

namespace cforge {

/// First-order data: products at (0,2), morphisms at (1,1) and, for skew
/// deformations, the u-term at (2,0).
struct FirstOrderDeformation {
  BiCochain mdot;
  BiCochain mudot;
  std::optional<BiCochain> udot;

  static FirstOrderDeformation zero(const Bicomplex& cx, bool skew = false);
  /// Reads the parts of a degree-2 total cochain; udot is kept when nonzero
  /// or when `skew` is set.
  static FirstOrderDeformation from_total(const TotalCochain& d, bool skew = false);
  TotalCochain to_total(const Bicomplex& cx) const;
};

struct ComponentCheck {
  int p = 0;
  int q = 0;
  std::string structure;  // associativity / hom / functoriality / intertwining / u-cocycle
  std::size_t nonzero = 0;
  /// A few offending entries: chain morphisms and the input basis indices.
  std::vector<Violation> witnesses;
  bool ok() const { return nonzero == 0; }
};

struct FirstOrderReport {
  std::vector<ComponentCheck> components;
  bool ok() const;
};

/// Each graded component of δ(mdot + mudot [+ udot]) separately. The complex
/// must reach nerve degree 3.
FirstOrderReport check_first_order(const Bicomplex& cx, const FirstOrderDeformation& d);

/// The base diagram over Q(i)[t]/(t^2), realised as a diagram of algebras of
/// twice the dimension with basis (e_i, t e_i).
struct TruncatedDiagram {
  SkewDiagram diagram;
  bool skew = false;
  /// ★ extended t-linearly survives only when the jet is compatible with it.
  bool star_kept = false;
};

/// Throws FirstOrderObstruction when check_first_order fails.
TruncatedDiagram build_truncated(const Bicomplex& cx, const FirstOrderDeformation& d);
/// No pre-check; validate() on the result decides.
TruncatedDiagram build_truncated_unchecked(const Bicomplex& cx, const FirstOrderDeformation& d);
/// validate_skew for skew jets, validate_diagram otherwise.
Report validate(const TruncatedDiagram& t);

/// (id + tξ, 1 + tυ) for η = ξ + υ in C^{0,1} ⊕ C^{1,0}; a skew morphism
/// from the jet of δη to the jet of the zero deformation.
SkewMorphism jet_isomorphism(const Bicomplex& cx, const TotalCochain& eta, const Scalar& sign = Scalar(1));

/// Builds both jets, checks the forward and backward morphisms and that they
/// compose to identities in both orders.
Report check_inner_isomorphism(const Bicomplex& cx, const TotalCochain& eta);

struct McObstruction {
  TotalCochain bracket;  // [d, d]
  bool bracket_closed = false;
  Variant variant = Variant::full;
  /// -η with δη = [d, d]; nullopt when no witness exists or [d, d] is not closed.
  std::optional<TotalCochain> candidate;
};

/// Throws NotACocycle unless δd = 0. Solves asimplicially without udot and
/// in the full complex with it. Needs nerve degree 4.
McObstruction mc_obstruction(const Bicomplex& cx, const FirstOrderDeformation& d);

struct McWitnessPair {
  BiCochain xi;   // (1,1)
  BiCochain psi;  // (1,1)
};

struct McVerification {
  BiCochain defect21;  // δ^S Ψ + 2 Ξ∘Ξ
  BiCochain defect12;  // δ^H Ψ + 2 Ξ•Ξ
  std::size_t nonzero21 = 0;
  std::size_t nonzero12 = 0;
  /// Chain indices carrying a nonzero defect, per component.
  std::vector<std::size_t> chains21;
  std::vector<std::size_t> chains12;
  bool ok() const { return nonzero21 == 0 && nonzero12 == 0; }
};

/// Throws ShapeError unless both cochains sit at (1,1).
McVerification verify_mc_with_witness(const Bicomplex& cx, const McWitnessPair& pair);

/// Basis of the derivations of A as matrices (column i = D(e_i)).
std::vector<Matrix> derivation_basis(const Algebra& A);

/// For a (0,1) cochain D of derivations: Ξ and Ψ are the first and second
/// t-derivatives at 0 of exp(t D_N) 𝔄(φ) exp(-t D_M).
McWitnessPair mc_pair_from_derivations(const Bicomplex& cx, const BiCochain& derivations);

/// Ψ in C^{1,1} with δΨ = -[Ξ, Ξ], when one exists.
std::optional<BiCochain> solve_mc_partner(const Bicomplex& cx, const BiCochain& xi);

}  // namespace cforge
