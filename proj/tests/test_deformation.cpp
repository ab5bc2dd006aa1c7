#include <gtest/gtest.h>

#include "cforge/deformation.hpp"
#include "cforge/error.hpp"
#include "cforge/random.hpp"
#include "fixtures.hpp"
#include "oracle/gerstenhaber.hpp"

using namespace cforge;

namespace {

// ṁ(x, x) = 1 on the dual numbers, basis (1, x).
FirstOrderDeformation dual_square_to_one(const Bicomplex& cx) {
  auto d = FirstOrderDeformation::zero(cx);
  std::vector<Scalar> data(8);
  data[3] = Scalar(1);
  d.mdot.values[0] = Tensor(2, 2, 2, data);
  return d;
}

FirstOrderDeformation rescaled_product(const Bicomplex& cx, long c) {
  auto d = FirstOrderDeformation::zero(cx);
  d.mdot = structure_m(cx);
  d.mdot.scale(Scalar(c));
  return d;
}

}  // namespace

TEST(FirstOrder, CoboundariesAreDeformations) {
  for (const auto& [name, diag] : fixtures::standard()) {
    Bicomplex cx(diag, 3);
    Rng rng(50);
    for (int k = 0; k < 5; ++k) {
      TotalCochain eta = random_total(cx, 1, rng);
      auto d = FirstOrderDeformation::from_total(delta(cx, eta));
      auto rep = check_first_order(cx, d);
      EXPECT_TRUE(rep.ok()) << name;
      EXPECT_EQ(rep.components.size(), d.udot ? 4u : 3u);
    }
  }
}

TEST(FirstOrder, RescaledProductIsADeformation) {
  for (const auto& [name, diag] : fixtures::standard()) {
    Bicomplex cx(diag, 3);
    auto d = rescaled_product(cx, 3);
    EXPECT_TRUE(check_first_order(cx, d).ok()) << name;
    auto jet = build_truncated(cx, d);
    EXPECT_TRUE(validate(jet).ok()) << name;
    EXPECT_FALSE(jet.skew);
  }
}

TEST(FirstOrder, RandomProductFailsAssociativityWithWitness) {
  Bicomplex cx(fixtures::m2(), 3);
  Rng rng(51);
  auto d = FirstOrderDeformation::zero(cx);
  d.mdot = random_bicochain(cx, 0, 2, rng);
  auto rep = check_first_order(cx, d);
  ASSERT_FALSE(rep.ok());
  const auto& assoc = rep.components[0];
  EXPECT_EQ(assoc.structure, "associativity");
  EXPECT_EQ(assoc.p, 0);
  EXPECT_EQ(assoc.q, 3);
  EXPECT_GT(assoc.nonzero, 0u);
  ASSERT_FALSE(assoc.witnesses.empty());
  EXPECT_EQ(assoc.witnesses[0].basis.size(), 3u);
  EXPECT_THROW(build_truncated(cx, d), FirstOrderObstruction);
  // the unchecked jet is built and fails validation
  EXPECT_FALSE(validate(build_truncated_unchecked(cx, d)).ok());
}

TEST(FirstOrder, BrokenHomComponentIsLocalised) {
  Bicomplex cx(fixtures::z2_m2_conjugation(), 3);
  Rng rng(52);
  auto d = FirstOrderDeformation::zero(cx);
  d.mudot = random_bicochain(cx, 1, 1, rng);
  auto rep = check_first_order(cx, d);
  EXPECT_TRUE(rep.components[0].ok());
  EXPECT_FALSE(rep.components[1].ok() && rep.components[2].ok());
  EXPECT_EQ(rep.components[1].structure, "hom");
}

TEST(FirstOrder, WrongShapesRejected) {
  Bicomplex cx(fixtures::m2(), 3);
  auto d = FirstOrderDeformation::zero(cx);
  d.mdot = BiCochain::zero(cx, 1, 1);
  EXPECT_THROW(check_first_order(cx, d), ShapeError);
  EXPECT_THROW(FirstOrderDeformation::from_total(TotalCochain::zero(cx, 1)), ShapeError);
  Bicomplex small(fixtures::m2(), 2);
  EXPECT_THROW(check_first_order(small, FirstOrderDeformation::zero(small)), Error);
}

TEST(FirstOrder, TotalRoundTrip) {
  Bicomplex cx(fixtures::z2_m2_conjugation(), 3);
  Rng rng(53);
  TotalCochain g = random_total(cx, 2, rng);
  EXPECT_EQ(FirstOrderDeformation::from_total(g).to_total(cx), g);
  auto plain = FirstOrderDeformation::from_total(TotalCochain::zero(cx, 2));
  EXPECT_FALSE(plain.udot.has_value());
  EXPECT_TRUE(FirstOrderDeformation::from_total(TotalCochain::zero(cx, 2), true).udot.has_value());
}

TEST(Jets, ZeroDeformationReproducesBase) {
  Bicomplex cx(fixtures::z2_m2_conjugation(), 3);
  auto jet = build_truncated(cx, FirstOrderDeformation::zero(cx));
  EXPECT_TRUE(validate(jet).ok());
  EXPECT_TRUE(jet.star_kept);
  EXPECT_EQ(jet.diagram.base.algebras[0].dim(), 8);
  EXPECT_EQ(jet.diagram.base.maps.size(), cx.diagram().maps.size());
}

TEST(Jets, SkewJetFromUpsilon) {
  Bicomplex cx(fixtures::z2_m2_conjugation(), 3);
  Rng rng(54);
  TotalCochain eta = TotalCochain::zero(cx, 1);
  eta.add(random_bicochain(cx, 1, 0, rng));
  TotalCochain deta = delta(cx, eta);
  ASSERT_FALSE(deta.part(2).is_zero());
  auto d = FirstOrderDeformation::from_total(deta, true);
  auto rep = check_first_order(cx, d);
  EXPECT_TRUE(rep.ok());
  ASSERT_EQ(rep.components.size(), 4u);
  EXPECT_EQ(rep.components[3].structure, "u-cocycle");
  auto jet = build_truncated(cx, d);
  EXPECT_TRUE(jet.skew);
  EXPECT_TRUE(validate(jet).ok());
}

TEST(Jets, InnerIsomorphism) {
  for (const auto& [name, diag] : fixtures::standard()) {
    Bicomplex cx(diag, 3);
    Rng rng(55);
    for (int k = 0; k < 3; ++k) {
      Report r = check_inner_isomorphism(cx, random_total(cx, 1, rng));
      EXPECT_TRUE(r.ok()) << name << " " << (r.ok() ? "" : r.violations[0].check);
    }
  }
}

TEST(Jets, IsomorphismNeedsDegreeOne) {
  Bicomplex cx(fixtures::m2(), 3);
  EXPECT_THROW(jet_isomorphism(cx, TotalCochain::zero(cx, 2)), ShapeError);
}

TEST(Obstruction, ZeroAndCoboundary) {
  Bicomplex cx(fixtures::m2(), 4);
  auto zero = mc_obstruction(cx, FirstOrderDeformation::zero(cx));
  EXPECT_TRUE(zero.bracket.is_zero());
  EXPECT_TRUE(zero.bracket_closed);
  ASSERT_TRUE(zero.candidate.has_value());
  EXPECT_TRUE(zero.candidate->is_zero());
  EXPECT_EQ(zero.variant, Variant::asimplicial);

  Rng rng(56);
  TotalCochain eta = TotalCochain::zero(cx, 1);
  eta.add(random_bicochain(cx, 0, 1, rng));
  auto d = FirstOrderDeformation::from_total(delta(cx, eta));
  auto ob = mc_obstruction(cx, d);
  EXPECT_TRUE(ob.bracket_closed);
  ASSERT_TRUE(ob.candidate.has_value());
  TotalCochain back = delta(cx, *ob.candidate);
  back.scale(Scalar(-1));
  EXPECT_EQ(back, ob.bracket);
}

TEST(Obstruction, DualNumbersSquareToOne) {
  Bicomplex cx(fixtures::dual_numbers(), 4);
  auto d = dual_square_to_one(cx);
  ASSERT_TRUE(check_first_order(cx, d).ok());
  auto ob = mc_obstruction(cx, d);
  EXPECT_TRUE(ob.bracket_closed);
  // frozen: the self-bracket vanishes on the nose, in agreement with the
  // classical formula; x^2 = t extends to all orders
  auto classical = oracle::from_bicochain(d.mdot, 2);
  EXPECT_EQ(oracle::bracket(classical, classical), oracle::Classical::zero(2, 3));
  EXPECT_TRUE(ob.bracket.is_zero());
  ASSERT_TRUE(ob.candidate.has_value());
  EXPECT_TRUE(ob.candidate->is_zero());
}

TEST(Obstruction, RejectsNonCocycle) {
  Bicomplex cx(fixtures::m2(), 4);
  Rng rng(57);
  auto d = FirstOrderDeformation::zero(cx);
  d.mdot = random_bicochain(cx, 0, 2, rng);
  EXPECT_THROW(mc_obstruction(cx, d), NotACocycle);
}

TEST(McWitness, ZeroPairVerifies) {
  Bicomplex cx(fixtures::z2_m2_conjugation(), 3);
  McWitnessPair z{BiCochain::zero(cx, 1, 1), BiCochain::zero(cx, 1, 1)};
  EXPECT_TRUE(verify_mc_with_witness(cx, z).ok());
  McWitnessPair bad{BiCochain::zero(cx, 0, 2), BiCochain::zero(cx, 1, 1)};
  EXPECT_THROW(verify_mc_with_witness(cx, bad), ShapeError);
}

TEST(McWitness, DerivationPairsVerify) {
  for (const auto& [name, diag] : fixtures::standard()) {
    Bicomplex cx(diag, 3);
    Rng rng(58);
    for (int k = 0; k < 4; ++k) {
      auto pair = mc_pair_from_derivations(cx, random_derivations(cx, rng));
      auto v = verify_mc_with_witness(cx, pair);
      EXPECT_TRUE(v.ok()) << name << " " << v.nonzero21 << " " << v.nonzero12;
      auto psi = solve_mc_partner(cx, pair.xi);
      ASSERT_TRUE(psi.has_value()) << name;
      TotalCochain lhs = delta(cx, TotalCochain::from(cx, *psi));
      TotalCochain rhs = bracket(cx, TotalCochain::from(cx, pair.xi), TotalCochain::from(cx, pair.xi));
      rhs.scale(Scalar(-1));
      EXPECT_EQ(lhs, rhs) << name;
    }
  }
}

TEST(McWitness, PerturbedPsiLocalised) {
  Bicomplex cx(fixtures::z2_m2_conjugation(), 3);
  Rng rng(59);
  auto pair = mc_pair_from_derivations(cx, random_derivations(cx, rng));
  ASSERT_TRUE(verify_mc_with_witness(cx, pair).ok());
  // bump one entry on the non-identity arrow
  std::size_t chain = 0;
  for (std::size_t i = 0; i < cx.chain_count(1); ++i)
    if (!cx.diagram().cat.is_identity(cx.chain(1, i).arrows[0])) chain = i;
  pair.psi.values[chain].ref(1) += Scalar(1);
  auto v = verify_mc_with_witness(cx, pair);
  EXPECT_FALSE(v.ok());
  EXPECT_GT(v.nonzero21 + v.nonzero12, 0u);
  for (std::size_t c : v.chains21) {
    const auto& arrows = cx.chain(2, c).arrows;
    EXPECT_TRUE(arrows[0].index == cx.chain(1, chain).arrows[0].index ||
                arrows[1].index == cx.chain(1, chain).arrows[0].index);
  }
}

TEST(Derivations, BasisDimensions) {
  EXPECT_EQ(derivation_basis(Algebra::matrix_algebra(2)).size(), 3u);
  EXPECT_EQ(derivation_basis(Algebra::dual_numbers()).size(), 1u);
  EXPECT_EQ(derivation_basis(Algebra::diagonal(2)).size(), 0u);
  const Algebra A = Algebra::matrix_algebra(2);
  for (const Matrix& D : derivation_basis(A))
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Vec ei = basis_vec(4, static_cast<std::size_t>(i)), ej = basis_vec(4, static_cast<std::size_t>(j));
        Vec rhs = A.multiply(D.apply(ei), ej);
        Vec other = A.multiply(ei, D.apply(ej));
        for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += other[k];
        EXPECT_EQ(D.apply(A.multiply(ei, ej)), rhs);
      }
}
