#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cforge/cohomology.hpp"
#include "cforge/error.hpp"
#include "cforge/random.hpp"
#include "fixtures.hpp"
#include "oracle/gerstenhaber.hpp"

using namespace cforge;

namespace {

std::vector<std::size_t> dims_h(const CohomologyReport& r) {
  std::vector<std::size_t> out;
  for (const auto& d : r.degrees) out.push_back(d.dim_h);
  return out;
}

TotalCochain degree0(const Bicomplex& cx, const std::vector<Vec>& values) {
  TotalCochain z = TotalCochain::zero(cx, 0);
  for (std::size_t o = 0; o < values.size(); ++o)
    z.part(0).values[o] = Tensor(values[o].size(), values[o].size(), 0, values[o]);
  return z;
}

Vec scalar_matrix(long s) {
  Vec v(4);
  v[0] = v[3] = Scalar(s);
  return v;
}

// Equivariant derivations of M_2 under the fixture's group action, by
// solving the linear conditions on a 4x4 matrix D directly.
std::size_t equivariant_derivations(const AlgebraDiagram& d) {
  const Algebra& A = d.algebras[0];
  std::size_t n = 4, unknowns = n * n;
  std::vector<std::vector<Scalar>> rows;
  auto var = [&](std::size_t r, std::size_t c) { return r * n + c; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // D(e_i e_j) - D(e_i) e_j - e_i D(e_j) = 0, one row per output coordinate
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Scalar> row(unknowns);
        const Vec& prod = A.product(static_cast<int>(i), static_cast<int>(j));
        for (std::size_t s = 0; s < n; ++s) row[var(k, s)] += prod[s];
        for (std::size_t s = 0; s < n; ++s) {
          row[var(s, i)] -= A.product(static_cast<int>(s), static_cast<int>(j))[k];
          row[var(s, j)] -= A.product(static_cast<int>(i), static_cast<int>(s))[k];
        }
        rows.push_back(row);
      }
    }
  for (const auto& g : d.maps)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        // (g D - D g)(r, c) = 0
        std::vector<Scalar> row(unknowns);
        for (std::size_t s = 0; s < n; ++s) {
          row[var(s, c)] += g(r, s);
          row[var(r, s)] -= g(s, c);
        }
        rows.push_back(row);
      }
  return unknowns - oracle::dense_rank(rows);
}

}  // namespace

TEST(Dims, MatrixAlgebraAgreesWithBarComplex) {
  auto r = cohomology_dims(fixtures::m2(), 2);
  EXPECT_EQ(dims_h(r), (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_EQ(dims_h(r), oracle::hochschild_dims(Algebra::matrix_algebra(2), 2));
  EXPECT_TRUE(r.integrity);
}

TEST(Dims, DualNumbersFrozenValues) {
  auto r = cohomology_dims(fixtures::dual_numbers(), 3);
  // frozen from the bar-complex oracle
  EXPECT_EQ(dims_h(r), (std::vector<std::size_t>{2, 1, 1, 1}));
  EXPECT_EQ(dims_h(r), oracle::hochschild_dims(Algebra::dual_numbers(), 3));
}

TEST(Dims, InvariantCenter) {
  EXPECT_EQ(cohomology_dims(fixtures::z2_m2_conjugation(), 0).degrees[0].dim_h, 1u);
  EXPECT_EQ(cohomology_dims(fixtures::z2_qq_swap(), 0).degrees[0].dim_h, 1u);
  EXPECT_EQ(cohomology_dims(fixtures::arrow_qq(), 0).degrees[0].dim_h, 1u);
}

TEST(Dims, ArrowCategoryRankAtZero) {
  Bicomplex cx(fixtures::arrow_qq(), 1);
  ComplexAssembly asmb(cx, Variant::full);
  SparseMatrix m = assemble_coboundary_matrix(asmb, 0);
  IncrementalEchelon ech;
  for (std::size_t c = 0; c < m.cols; ++c) ech.insert(m.columns[c], c);
  EXPECT_EQ(ech.rank(), 1u);
}

TEST(Dims, TrivialAlgebraRankZero) {
  Bicomplex cx(fixtures::single(Algebra::diagonal(1)), 1);
  SparseMatrix m = assemble_coboundary_matrix(ComplexAssembly(cx, Variant::full), 0);
  EXPECT_TRUE(m.is_zero());
}

TEST(Dims, IntegrityAndBounds) {
  for (const auto& [name, d] : fixtures::standard()) {
    auto r = cohomology_dims(d, 2);
    EXPECT_TRUE(r.integrity) << name;
    for (const auto& g : r.degrees) {
      EXPECT_EQ(g.dim_h, g.dim_z - g.dim_b) << name;
      EXPECT_LE(g.dim_z, g.dim_c);
    }
    Bicomplex cx(d, 3);
    ComplexAssembly asmb(cx, Variant::full);
    for (int n = 0; n + 1 < 3; ++n)
      EXPECT_TRUE(multiply(assemble_coboundary_matrix(asmb, n + 1), assemble_coboundary_matrix(asmb, n)).is_zero());
  }
}

TEST(Dims, SerialAndParallelAssemblyAgree) {
  Bicomplex cx(fixtures::z2_m2_conjugation(), 2);
  ComplexAssembly asmb(cx, Variant::full);
  auto a = assemble_coboundary_matrix(asmb, 1, {}, Exec::serial);
  auto b = assemble_coboundary_matrix(asmb, 1, {}, Exec::parallel);
  EXPECT_EQ(a.columns, b.columns);
}

TEST(Dims, AsimplicialDegreeOneCountsEquivariantDerivations) {
  for (auto d : {fixtures::z2_m2_conjugation(), fixtures::m2()}) {
    CohomologyOptions o;
    o.variant = Variant::asimplicial;
    auto r = cohomology_dims(d, 1, o);
    EXPECT_EQ(r.degrees[0].dim_c, 0u);
    EXPECT_EQ(r.degrees[1].dim_h, equivariant_derivations(d));
  }
}

TEST(Dims, RepresentativesAreIndependentCocycles) {
  Bicomplex cx(fixtures::dual_numbers(), 3);
  CohomologyOptions o;
  o.representatives = true;
  auto r = cohomology_dims(cx, 2, o);
  CoboundarySolver solver(cx);
  for (const auto& g : r.degrees) {
    ASSERT_EQ(g.representatives.size(), g.dim_h);
    for (const auto& x : g.representatives) {
      EXPECT_TRUE(is_cocycle(cx, x));
      if (g.n > 0) EXPECT_FALSE(solver.witness(x).has_value());
    }
    for (std::size_t i = 0; i < g.representatives.size(); ++i)
      for (std::size_t j = i + 1; j < g.representatives.size(); ++j)
        EXPECT_FALSE(solver.classes_equal(g.representatives[i], g.representatives[j]));
  }
}

TEST(Assembly, FlatDimensionsAndRoundTrip) {
  Bicomplex cx(fixtures::arrow_qq(), 2);
  ComplexAssembly full(cx, Variant::full), asim(cx, Variant::asimplicial);
  // arrow category of Q: chains 2, 3, 4 in degrees 0, 1, 2; every block is 1x1
  EXPECT_EQ(full.dim(0), 2u);
  EXPECT_EQ(full.dim(1), 3u + 2u);
  EXPECT_EQ(asim.dim(1), 2u);
  EXPECT_EQ(full.dim(-1), 0u);
  EXPECT_THROW(full.dim(3), IndexError);
  Rng rng(40);
  TotalCochain g = random_total(cx, 2, rng);
  EXPECT_EQ(full.unflatten(2, full.flatten(g)), g);
  EXPECT_THROW(asim.flatten(g.part(2).is_zero() ? delta(cx, random_total(cx, 1, rng)) : g), ShapeError);
}

TEST(Assembly, ResourceCapsAreExplicit) {
  Bicomplex cx(fixtures::z2_m2_conjugation(), 3);
  CohomologyOptions o;
  o.caps = Caps{10, 10};
  try {
    cohomology_dims(cx, 2, o);
    FAIL() << "expected ResourceLimit";
  } catch (const ResourceLimit& e) {
    EXPECT_EQ(e.degree(), 0);
  }
}

TEST(Assembly, CapsFromEnvironment) {
  setenv("COCHAIN_FORGE_CAP", "300x40", 1);
  Caps c = Caps::from_env();
  EXPECT_EQ(c.rows, 300u);
  EXPECT_EQ(c.cols, 40u);
  setenv("COCHAIN_FORGE_CAP", "77", 1);
  EXPECT_EQ(Caps::from_env().cols, 77u);
  setenv("COCHAIN_FORGE_CAP", "lots", 1);
  EXPECT_THROW(Caps::from_env(), ParseError);
  unsetenv("COCHAIN_FORGE_CAP");
  EXPECT_EQ(Caps::from_env(Caps{5, 6}).rows, 5u);
}

TEST(Assembly, TripletExport) {
  SparseMatrix m{2, 2, {{{0, Scalar(1)}}, {{1, Scalar(Rational(1, 2), Rational(-3))}}}};
  std::ostringstream os;
  write_triplets(os, m);
  EXPECT_EQ(os.str(), "2 2 2\n0 0 1 0\n1 1 1/2 -3\n");
}

TEST(Cocycles, CoboundariesAreClosedRandomIsNot) {
  Bicomplex cx(fixtures::m2(), 3);
  Rng rng(41);
  EXPECT_TRUE(is_cocycle(cx, delta(cx, random_total(cx, 1, rng))));
  EXPECT_FALSE(is_cocycle(cx, random_total(cx, 1, rng)));
}

TEST(Witness, CoboundariesAreSolved) {
  for (const auto& [name, d] : fixtures::standard()) {
    Bicomplex cx(d, 3);
    CoboundarySolver solver(cx);
    Rng rng(42);
    for (int n = 1; n <= 2; ++n) {
      TotalCochain g = delta(cx, random_total(cx, n - 1, rng));
      auto eta = solver.witness(g);
      ASSERT_TRUE(eta.has_value()) << name;
      EXPECT_EQ(delta(cx, *eta), g) << name;
    }
  }
}

TEST(Witness, DerivationsOfM2AreInner) {
  Bicomplex cx(fixtures::m2(), 2);
  // D = [x, .] for x = e_12 written as a (0,1) cochain
  const Algebra& A = cx.algebra(ObjectId{0});
  Vec x = basis_vec(4, 1);
  Matrix D = A.left_mult(x) - A.right_mult(x);
  TotalCochain g = TotalCochain::zero(cx, 1);
  std::vector<Scalar> data(16);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) data[r * 4 + c] = D(r, c);
  g.part(0).values[0] = Tensor(4, 4, 1, data);
  auto eta = coboundary_witness(cx, g);
  ASSERT_TRUE(eta.has_value());
  EXPECT_EQ(delta(cx, *eta), g);
}

TEST(Witness, DegreeZero) {
  Bicomplex cx(fixtures::z2_m2_conjugation(), 1);
  EXPECT_FALSE(coboundary_witness(cx, degree0(cx, {scalar_matrix(3)})).has_value());
  auto zero = coboundary_witness(cx, TotalCochain::zero(cx, 0));
  ASSERT_TRUE(zero.has_value());
  EXPECT_EQ(zero->n, -1);
}

TEST(Witness, NonCocycleThrows) {
  Bicomplex cx(fixtures::m2(), 2);
  Rng rng(43);
  EXPECT_THROW(coboundary_witness(cx, random_total(cx, 1, rng)), NotACocycle);
  EXPECT_THROW(classes_equal(cx, random_total(cx, 1, rng), TotalCochain::zero(cx, 1)), NotACocycle);
}

TEST(Classes, EqualityExamples) {
  Bicomplex cx(fixtures::z2_m2_conjugation(), 2);
  Rng rng(44);
  TotalCochain g = delta(cx, random_total(cx, 0, rng));
  EXPECT_TRUE(classes_equal(cx, g, g + delta(cx, random_total(cx, 0, rng))));
  EXPECT_FALSE(classes_equal(cx, degree0(cx, {scalar_matrix(1)}), degree0(cx, {scalar_matrix(2)})));
  EXPECT_TRUE(classes_equal(cx, degree0(cx, {scalar_matrix(2)}), degree0(cx, {scalar_matrix(2)})));
}

TEST(Classes, CupClassIndependentOfRepresentative) {
  Bicomplex cx(fixtures::dual_numbers(), 3);
  CohomologyOptions o;
  o.representatives = true;
  auto r = cohomology_dims(cx, 1, o);
  const TotalCochain& a = r.degrees[1].representatives.at(0);
  Rng rng(45);
  CoboundarySolver solver(cx);
  for (int k = 0; k < 3; ++k) {
    TotalCochain shifted = a + delta(cx, random_total(cx, 0, rng));
    EXPECT_TRUE(solver.classes_equal(cup(cx, a, a), cup(cx, shifted, a)));
    EXPECT_TRUE(solver.classes_equal(cup(cx, a, a), cup(cx, a, shifted)));
  }
}

TEST(Sparse, EchelonRelationsAndExpress) {
  IncrementalEchelon e;
  SparseVec a{{0, Scalar(1)}, {2, Scalar(2)}}, b{{1, Scalar(1)}}, c{{0, Scalar(2)}, {1, Scalar(3)}, {2, Scalar(4)}};
  EXPECT_FALSE(e.insert(a, 0).has_value());
  EXPECT_FALSE(e.insert(b, 1).has_value());
  auto rel = e.insert(c, 2);
  ASSERT_TRUE(rel.has_value());
  // c - 2a - 3b = 0
  EXPECT_EQ(*rel, (SparseVec{{0, Scalar(-2)}, {1, Scalar(-3)}, {2, Scalar(1)}}));
  auto x = e.express(SparseVec{{0, Scalar(1)}, {1, Scalar(1)}, {2, Scalar(2)}});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (SparseVec{{0, Scalar(1)}, {1, Scalar(1)}}));
  EXPECT_FALSE(e.express(SparseVec{{3, Scalar(1)}}).has_value());
  EXPECT_EQ(e.rank(), 2u);
}
