#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilcoh/free_cover.hpp"
#include "nilcoh/linear_system.hpp"

using namespace nilcoh;

namespace {

Vec basis_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = Scalar::one(f);
  return v;
}

std::vector<Vec> standard_gens(const Field& f, std::size_t dim, std::size_t n) {
  std::vector<Vec> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(basis_vec(f, dim, i));
  return g;
}

LiePtr filiform4(const Field& f) {
  SparseVec e3{{2, Scalar::one(f)}}, e4{{3, Scalar::one(f)}};
  return std::make_shared<const LieAlgebra>(
      f, std::vector<std::string>{"e1", "e2", "e3", "e4"},
      std::vector<std::tuple<std::size_t, std::size_t, SparseVec>>{{0, 1, e3}, {0, 2, e4}});
}

/// Dense reference: the same cover built as a full free nilpotent algebra
/// with its Chevalley-Eilenberg complex.
struct DenseCover {
  FreePtr fn;
  AlgebraHom pi;
  GModule pulled;
};

DenseCover dense_cover(const LiePtr& g, const GModule& m, const std::vector<Vec>& gens,
                       std::size_t r) {
  FreePtr fn = FreeNilpotent::build(gens.size(), r, g->field());
  AlgebraHom pi = fn->universal_hom(g, gens);
  GModule pulled = GModule::pullback(pi, m);
  return {fn, std::move(pi), std::move(pulled)};
}

void check_against_dense(const LiePtr& g, const GModule& m, const std::vector<Vec>& gens,
                         std::size_t r, bool with_hom = true) {
  FreeCoverSolver solver(g, m, gens, r);
  DenseCover d = dense_cover(g, m, gens, r);
  CAPTURE(r);

  CohomologyResult h1 = ce_cohomology(d.fn->algebra(), d.pulled, 1);
  CHECK(solver.z1_dim() == h1.z_dim);
  CHECK(solver.h1_dim() == h1.h_dim);

  H2Chart chart(g, m);
  InducedH2 ind = induced_map_h2(d.pi, m, chart);
  FilteredH2 ker = solver.pullback_kernel(chart);
  CHECK(ker.dim == ind.kernel_dim);
  CHECK(ker.in_chart == ind.kernel_in_chart);

  if (with_hom) {
    InducedModule quot = induced_quotient_module(d.pi);
    CHECK(solver.kernel_hom_dim() == equivariant_hom_basis(quot.module, m).size());
  }
}

}  // namespace

TEST_CASE("linear system kernel matches dense nullspace") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-4, 4);
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 8;
      Matrix a(f, rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = Scalar::from_int(f, d(rng));
      LinearSystem sys(f, cols);
      for (std::size_t i = 0; i < rows; ++i) sys.add_row(a.row(i));
      CHECK(sys.kernel() == Subspace::span(f, cols, a.nullspace_basis()));
    }
  }
}

TEST_CASE("linear system with no rows and zero width") {
  Field q = Field::rationals();
  LinearSystem empty(q, 3);
  CHECK(empty.kernel() == Subspace::full(q, 3));
  LinearSystem none(q, 0);
  CHECK(none.kernel().dim() == 0);
}

TEST_CASE("cover solver validates its input") {
  Field q = Field::rationals();
  LiePtr h = heisenberg(q, 1);
  GModule triv = GModule::trivial(h, 1);
  // step below the class of the target
  CHECK_THROWS_AS(FreeCoverSolver(h, triv, standard_gens(q, 3, 2), 1), error);
  // images that do not generate
  std::vector<Vec> bad{basis_vec(q, 3, 0), basis_vec(q, 3, 2)};
  CHECK_THROWS_AS(FreeCoverSolver(h, triv, bad, 2), error);
}

TEST_CASE("heisenberg covers match the dense computation") {
  Field q = Field::rationals();
  LiePtr h = heisenberg(q, 1);
  std::vector<Vec> gens = standard_gens(q, 3, 2);
  for (std::size_t r = 2; r <= 4; ++r) {
    check_against_dense(h, GModule::trivial(h, 1), gens, r);
    check_against_dense(h, GModule::adjoint(h), gens, r);
  }
}

TEST_CASE("abelian target covers match the dense computation") {
  Field q = Field::rationals();
  LiePtr a = abelian_algebra(q, 2);
  std::vector<Vec> gens = standard_gens(q, 2, 2);
  for (std::size_t r = 1; r <= 3; ++r) check_against_dense(a, GModule::trivial(a, 1), gens, r);
  check_against_dense(a, GModule::trivial(a, 2), gens, 2);
}

TEST_CASE("filiform cover matches the dense computation") {
  Field q = Field::rationals();
  LiePtr g = filiform4(q);
  std::vector<Vec> gens = standard_gens(q, 4, 2);
  check_against_dense(g, GModule::trivial(g, 1), gens, 3);
  check_against_dense(g, GModule::trivial(g, 1), gens, 4);
  check_against_dense(g, GModule::adjoint(g), gens, 3);
}

TEST_CASE("four generator heisenberg cover, trivial coefficients") {
  Field q = Field::rationals();
  LiePtr h = heisenberg(q, 2);
  std::vector<Vec> gens = standard_gens(q, 5, 4);
  check_against_dense(h, GModule::trivial(h, 1), gens, 2);
  check_against_dense(h, GModule::trivial(h, 1), gens, 3);
}

TEST_CASE("redundant generator set still matches") {
  // five generators for the three dimensional Heisenberg algebra
  Field q = Field::rationals();
  LiePtr h = heisenberg(q, 1);
  std::vector<Vec> gens = standard_gens(q, 3, 2);
  gens.push_back(add(gens[0], gens[1]));
  check_against_dense(h, GModule::trivial(h, 1), gens, 2);
  check_against_dense(h, GModule::adjoint(h), gens, 2);
}

TEST_CASE("prime field covers match the dense computation") {
  for (long pr : {5L, 7L}) {
    Field f = Field::prime(pr);
    LiePtr h = heisenberg(f, 1);
    std::vector<Vec> gens = standard_gens(f, 3, 2);
    check_against_dense(h, GModule::trivial(h, 1), gens, 2);
    check_against_dense(h, GModule::trivial(h, 1), gens, 3);
    check_against_dense(h, GModule::adjoint(h), gens, 3);
  }
}

TEST_CASE("pullback kernel over the maximal step kills every class") {
  // at r = p + q the whole H^2 lies in the filtration, so the kernel of the
  // pullback to the free cover is all of H^2
  Field q = Field::rationals();
  LiePtr h = heisenberg(q, 1);
  GModule triv = GModule::trivial(h, 1);
  H2Chart chart(h, triv);
  FreeCoverSolver solver(h, triv, standard_gens(q, 3, 2), 3);
  FilteredH2 ker = solver.pullback_kernel(chart);
  CHECK(ker.dim == chart.dim());
}
