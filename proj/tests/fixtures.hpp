#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "cforge/diagram.hpp"

namespace cforge::fixtures {

/// One object, trivial category.
AlgebraDiagram single(const Algebra& A);
AlgebraDiagram m2();
AlgebraDiagram dual_numbers();
/// Two objects, one non-identity arrow, Q -> Q by the identity.
AlgebraDiagram arrow_qq();
/// Z/2 acting on M_2 by conjugation with diag(1, -1).
AlgebraDiagram z2_m2_conjugation();
/// Z/2 acting on Q ⊕ Q by swapping the summands.
AlgebraDiagram z2_qq_swap();
/// Z/2 acting on M_2 through Ad diag(1, i); u(g, g) = diag(1, -1).
SkewDiagram z2_m2_projective();
/// As above with u(g, g) = diag(2, -2): intertwines but is not unitary.
SkewDiagram z2_m2_nonunitary();
/// Two spacelike regions inside a common one and its Cauchy development.
AlgebraDiagram aqft_m2_pair();
AqftAxioms aqft_m2_pair_axioms();

/// The five diagrams every property suite sweeps over.
std::vector<std::pair<std::string, AlgebraDiagram>> standard();

std::filesystem::path path(const std::string& name);

}  // namespace cforge::fixtures
