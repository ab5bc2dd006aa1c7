#include "fixtures.hpp"

namespace cforge::fixtures {

namespace {

const std::vector<std::vector<int>> kZ2{{0, 1}, {1, 0}};

// e_jk -> d_j conj(d_k) e_jk on M_2.
Matrix diagonal_conjugation(const Scalar& d0, const Scalar& d1) {
  Scalar d[2] = {d0, d1};
  Matrix m(4, 4);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) m(static_cast<std::size_t>(2 * j + k), static_cast<std::size_t>(2 * j + k)) = d[j] * d[k].conj();
  return m;
}

UnitalElement diag2(long a, long b) {
  Vec v(4);
  v[0] = Scalar(a);
  v[3] = Scalar(b);
  return UnitalElement::of(v);
}

}  // namespace

AlgebraDiagram single(const Algebra& A) {
  return {FiniteCategory::from_group({{0}}), {A}, {Matrix::identity(static_cast<std::size_t>(A.dim()))}};
}

AlgebraDiagram m2() { return single(Algebra::matrix_algebra(2)); }
AlgebraDiagram dual_numbers() { return single(Algebra::dual_numbers()); }

AlgebraDiagram arrow_qq() {
  auto cat = FiniteCategory::chain_poset(2);
  std::vector<Matrix> maps(static_cast<std::size_t>(cat.morphism_count()), Matrix::identity(1));
  return {cat, {Algebra::diagonal(1), Algebra::diagonal(1)}, maps};
}

AlgebraDiagram z2_m2_conjugation() {
  return {FiniteCategory::from_group(kZ2), {Algebra::matrix_algebra(2)},
          {Matrix::identity(4), diagonal_conjugation(Scalar(1), Scalar(-1))}};
}

AlgebraDiagram z2_qq_swap() {
  Matrix swap(2, 2);
  swap(0, 1) = Scalar(1);
  swap(1, 0) = Scalar(1);
  return {FiniteCategory::from_group(kZ2), {Algebra::diagonal(2)}, {Matrix::identity(2), swap}};
}

SkewDiagram z2_m2_projective() {
  AlgebraDiagram d{FiniteCategory::from_group(kZ2), {Algebra::matrix_algebra(2)},
                   {Matrix::identity(4), diagonal_conjugation(Scalar(1), Scalar(0, 1))}};
  SkewDiagram s{std::move(d), {}};
  s.u[{1, 1}] = diag2(1, -1);
  return s;
}

SkewDiagram z2_m2_nonunitary() {
  SkewDiagram s = z2_m2_projective();
  s.u[{1, 1}] = diag2(2, -2);
  return s;
}

AlgebraDiagram aqft_m2_pair() {
  // Objects O1, O2, O12, D. Morphisms: 0-3 identities, 4: O1->O12, 5: O2->O12,
  // 6: O12->D, 7: O1->D, 8: O2->D.
  std::vector<FiniteCategory::Arrow> arrows{{{0}, {0}}, {{1}, {1}}, {{2}, {2}}, {{3}, {3}}, {{0}, {2}},
                                            {{1}, {2}}, {{2}, {3}}, {{0}, {3}}, {{1}, {3}}};
  std::map<std::pair<int, int>, int> comp;
  for (int f = 0; f < 9; ++f) {
    int s = arrows[static_cast<std::size_t>(f)].src.index, t = arrows[static_cast<std::size_t>(f)].tgt.index;
    comp[{t, f}] = f;
    comp[{f, s}] = f;
  }
  comp[{6, 4}] = 7;
  comp[{6, 5}] = 8;
  auto cat = FiniteCategory::create(4, arrows, {{0}, {1}, {2}, {3}}, comp);
  // M_2 ⊗ M_2 = M_4 with e_ij ⊗ e_kl -> e_{2i+k, 2j+l}.
  Matrix left(16, 4), right(16, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        left(static_cast<std::size_t>((2 * i + k) * 4 + (2 * j + k)), static_cast<std::size_t>(2 * i + j)) = Scalar(1);
        right(static_cast<std::size_t>((2 * k + i) * 4 + (2 * k + j)), static_cast<std::size_t>(2 * i + j)) = Scalar(1);
      }
  auto m2a = Algebra::matrix_algebra(2);
  auto m4 = Algebra::matrix_algebra(4);
  return {cat,
          {m2a, m2a, m4, m4},
          {Matrix::identity(4), Matrix::identity(4), Matrix::identity(16), Matrix::identity(16), left, right,
           Matrix::identity(16), left, right}};
}

AqftAxioms aqft_m2_pair_axioms() { return {{{MorphismId{4}, MorphismId{5}}}, {MorphismId{6}}}; }

std::vector<std::pair<std::string, AlgebraDiagram>> standard() {
  return {{"m2", m2()},
          {"dual_numbers", dual_numbers()},
          {"arrow_qq", arrow_qq()},
          {"z2_m2_conjugation", z2_m2_conjugation()},
          {"z2_qq_swap", z2_qq_swap()}};
}

std::filesystem::path path(const std::string& name) { return std::filesystem::path(CFORGE_FIXTURE_DIR) / name; }

}  // namespace cforge::fixtures
