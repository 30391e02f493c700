#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilcoh/lie.hpp"

using namespace nilcoh;

namespace {

SparseVec sv1(const Field& f, std::size_t k, long c = 1) {
  return SparseVec{{k, Scalar::from_int(f, c)}};
}

// Filiform algebra of dim 4: [e1,e2] = e3, [e1,e3] = e4.
LiePtr filiform4(const Field& f) {
  return std::make_shared<const LieAlgebra>(
      f, std::vector<std::string>{"e1", "e2", "e3", "e4"},
      std::vector<std::tuple<std::size_t, std::size_t, SparseVec>>{
          {0, 1, sv1(f, 2)}, {0, 2, sv1(f, 3)}});
}

Vec rand_vec(const Field& f, std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-3, 3);
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::from_int(f, d(rng)));
  return v;
}

}  // namespace

TEST_CASE("construction rejects Jacobi violations") {
  Field q = Field::rationals();
  // [e1,e2] = e3, [e1,e3] = e1 fails on the triple (e1,e2,e3)
  CHECK_THROWS_AS(LieAlgebra(q, {"e1", "e2", "e3"},
                             {{0, 1, sv1(q, 2)}, {0, 2, sv1(q, 0)}}),
                  error);
}

TEST_CASE("bracket is bilinear, antisymmetric, satisfies Jacobi on vectors") {
  std::mt19937_64 rng(42);
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    LiePtr g = filiform4(f);
    for (int t = 0; t < 20; ++t) {
      Vec u = rand_vec(f, rng, 4), v = rand_vec(f, rng, 4), w = rand_vec(f, rng, 4);
      CHECK(g->bracket(u, v) == sub(zero_vec(f, 4), g->bracket(v, u)));
      CHECK(g->bracket(u, v) == g->ad(u).apply(v));
      Vec jac = add(add(g->bracket(g->bracket(u, v), w), g->bracket(g->bracket(v, w), u)),
                    g->bracket(g->bracket(w, u), v));
      CHECK(is_zero(jac));
      CHECK(g->bracket(add(u, v), w) == add(g->bracket(u, w), g->bracket(v, w)));
    }
  }
}

TEST_CASE("heisenberg invariants") {
  Field q = Field::rationals();
  for (std::size_t n : {1u, 2u, 3u}) {
    LiePtr h = heisenberg(q, n);
    CHECK(h->dim() == 2 * n + 1);
    CHECK(h->nilpotency_class() == 2);
    CHECK(h->type() == std::vector<std::size_t>{2 * n, 1});
    CHECK(h->center().dim() == 1);
    CHECK(h->derived().dim() == 1);
    Vec z = zero_vec(q, 2 * n + 1);
    z[2 * n] = Scalar::one(q);
    CHECK(h->center().contains(z));
  }
}

TEST_CASE("lower central series of filiform4") {
  Field q = Field::rationals();
  LiePtr g = filiform4(q);
  auto lcs = g->lower_central_series();
  REQUIRE(lcs.size() == 4);
  CHECK(lcs[0].dim() == 4);
  CHECK(lcs[1].dim() == 2);
  CHECK(lcs[2].dim() == 1);
  CHECK(lcs[3].dim() == 0);
  CHECK(g->nilpotency_class() == 3);
  CHECK(g->type() == std::vector<std::size_t>{2, 1, 1});
  CHECK(g->center().dim() == 1);
}

TEST_CASE("non-nilpotent input is rejected by the series") {
  Field q = Field::rationals();
  // sl2 with basis e, f, h
  auto sl2 = std::make_shared<const LieAlgebra>(
      q, std::vector<std::string>{"e", "f", "h"},
      std::vector<std::tuple<std::size_t, std::size_t, SparseVec>>{
          {0, 1, sv1(q, 2)}, {0, 2, sv1(q, 0, -2)}, {1, 2, sv1(q, 1, 2)}});
  CHECK_THROWS_AS(sl2->lower_central_series(), error);
  CHECK_THROWS_AS(sl2->nilpotency_class(), error);
}

TEST_CASE("derivations") {
  Field q = Field::rationals();
  // abelian: every endomorphism is a derivation, none inner
  LiePtr a3 = abelian_algebra(q, 3);
  CHECK(a3->derivation_algebra_dim() == 9);
  CHECK(a3->inner_derivations_dim() == 0);
  CHECK(a3->h1_adjoint_dim() == 9);
  // heisenberg h_1: D free on x, y; value on z forced. Hand computed.
  LiePtr h = heisenberg(q, 1);
  CHECK(h->derivation_algebra_dim() == 6);
  CHECK(h->inner_derivations_dim() == 2);
  CHECK(h->h1_adjoint_dim() == 4);
}

TEST_CASE("ideal closure and quotients") {
  Field q = Field::rationals();
  LiePtr g = filiform4(q);
  Vec e2 = zero_vec(q, 4);
  e2[1] = Scalar::one(q);
  Subspace cl = g->ideal_closure({e2});
  CHECK(cl.dim() == 3);
  CHECK(g->is_ideal(cl));
  Vec e3 = zero_vec(q, 4);
  e3[2] = Scalar::one(q);
  CHECK(cl.contains(e3));
  CHECK_FALSE(g->is_ideal(Subspace::span(q, 4, {e2})));

  // filiform4 / span(e4) has the heisenberg multiplication table
  Vec e4 = zero_vec(q, 4);
  e4[3] = Scalar::one(q);
  Quotient quo = quotient_algebra(g, Subspace::span(q, 4, {e4}));
  CHECK(quo.algebra->dim() == 3);
  CHECK(quo.algebra->nilpotency_class() == 2);
  CHECK(quo.kept == std::vector<std::size_t>{0, 1, 2});
  CHECK(quo.projection.is_surjective());
  CHECK(quo.projection.kernel().dim() == 1);

  CHECK_THROWS_AS(quotient_algebra(g, Subspace::span(q, 4, {e2})), error);
}

TEST_CASE("homomorphism validation") {
  Field q = Field::rationals();
  LiePtr h = heisenberg(q, 1);
  LiePtr a2 = abelian_algebra(q, 2);
  // abelianization x,y is a hom; swapping in z is not enough to break it
  Matrix m(q, 2, 3);
  m.at(0, 0) = Scalar::one(q);
  m.at(1, 1) = Scalar::one(q);
  AlgebraHom ab(h, a2, m);
  CHECK(ab.is_surjective());
  CHECK(ab.kernel().dim() == 1);
  // identity-shaped map into the abelian algebra of the same dim is not a hom
  LiePtr a3 = abelian_algebra(q, 3);
  CHECK_THROWS_AS(AlgebraHom(h, a3, Matrix::identity(q, 3)), error);
}
