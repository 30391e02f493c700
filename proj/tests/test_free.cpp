#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcoh/free_nilpotent.hpp"

using namespace nilcoh;

TEST_CASE("witt dimensions") {
  CHECK(witt_dim(2, 2) == 1);
  CHECK(witt_dim(2, 3) == 2);
  CHECK(witt_dim(3, 3) == 8);
  CHECK(witt_dim(2, 4) == 3);
  CHECK(witt_dim(3, 2) == 3);
  CHECK(witt_dim(4, 3) == 20);
  // |H_2(n)| = n(n-1)/2, |H_3(n)| = 2*C(n+1,3)
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(witt_dim(n, 1) == n);
    CHECK(witt_dim(n, 2) == n * (n - 1) / 2);
    CHECK(witt_dim(n, 3) == 2 * ((n + 1) * n * (n - 1) / 6));
  }
}

TEST_CASE("hall enumeration matches witt dimensions") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto counts = FreeNilpotent::hall_degree_counts(n, 6);
    REQUIRE(counts.size() == 6);
    for (std::size_t i = 1; i <= 6; ++i) CHECK(counts[i - 1] == witt_dim(n, i));
  }
}

TEST_CASE("f_{2,3} basis and brackets") {
  Field q = Field::rationals();
  FreePtr f = FreeNilpotent::build(2, 3, q);
  REQUIRE(f->dim() == 5);
  CHECK(f->word_label(0) == "x1");
  CHECK(f->word_label(1) == "x2");
  CHECK(f->word_label(2) == "[x2,x1]");
  CHECK(f->word_label(3) == "[[x2,x1],x1]");
  CHECK(f->word_label(4) == "[[x2,x1],x2]");

  // [x2,x1] is the basis word, [x1,x2] its negative
  SparseVec b21 = f->normalize_bracket(1, 0);
  REQUIRE(b21.size() == 1);
  CHECK(b21[0].first == 2);
  CHECK(b21[0].second == Scalar::one(q));
  SparseVec b12 = f->normalize_bracket(0, 1);
  REQUIRE(b12.size() == 1);
  CHECK(b12[0].second == -Scalar::one(q));

  SparseVec deep = f->normalize_bracket(2, 0);
  REQUIRE(deep.size() == 1);
  CHECK(deep[0].first == 3);
  CHECK(deep[0].second == Scalar::one(q));

  // truncation kills degree 3 and above
  CHECK(f->normalize_bracket(3, 1).empty());
  CHECK(f->normalize_bracket(2, 3).empty());
}

TEST_CASE("small free algebras") {
  Field q = Field::rationals();
  FreePtr f22 = FreeNilpotent::build(2, 2, q);
  CHECK(f22->dim() == 3);
  CHECK(f22->algebra()->nilpotency_class() == 2);
  CHECK(f22->algebra()->type() == std::vector<std::size_t>{2, 1});

  FreePtr f42 = FreeNilpotent::build(4, 2, q);
  CHECK(f42->dim() == 10);
  CHECK(witt_dim(4, 3) == 20);

  FreePtr f33 = FreeNilpotent::build(3, 3, q);
  CHECK(f33->dim() == 3 + 3 + 8);
  CHECK(f33->algebra()->nilpotency_class() == 3);
}

TEST_CASE("grading is multiplicative") {
  Field q = Field::rationals();
  for (auto [n, p] : {std::pair<std::size_t, std::size_t>{2, 4}, {3, 3}}) {
    FreePtr f = FreeNilpotent::build(n, p, q);
    const LieAlgebra& g = *f->algebra();
    for (std::size_t i = 1; i <= p; ++i)
      for (std::size_t j = i; j <= p; ++j) {
        Subspace prod = g.product_subspace(f->graded_piece(i), f->graded_piece(j));
        if (i + j > p)
          CHECK(prod.dim() == 0);
        else
          CHECK(f->graded_piece(i + j).contains(prod));
      }
    // lower central series agrees with the grading tail
    auto lcs = g.lower_central_series();
    for (std::size_t d = 2; d <= p; ++d) {
      std::size_t tail = f->dim() - f->degree_start()[d];
      CHECK(lcs[d - 1].dim() == tail);
    }
  }
}

TEST_CASE("resource cap") {
  Field q = Field::rationals();
  CHECK_THROWS_AS(FreeNilpotent::build(6, 6, q), error);
  CHECK_THROWS_AS(FreeNilpotent::build(2, 3, q, 4), error);
}

TEST_CASE("projection and inclusion between truncation levels") {
  Field q = Field::rationals();
  FreePtr f23 = FreeNilpotent::build(2, 3, q);
  FreePtr f22 = FreeNilpotent::build(2, 2, q);
  AlgebraHom pr = f23->truncation_projection(*f22);
  CHECK(pr.is_surjective());
  CHECK(pr.kernel().dim() == 2);
  CHECK(pr.kernel() == f23->graded_piece(3));
  Matrix inc = f22->canonical_inclusion(*f23);
  CHECK(pr.matrix() * inc == Matrix::identity(q, 3));

  // inclusion is not a homomorphism: a degree-2 word bracketed with a
  // generator becomes nonzero upstairs
  FreePtr f32 = FreeNilpotent::build(3, 2, q);
  FreePtr f33 = FreeNilpotent::build(3, 3, q);
  Matrix i33 = f32->canonical_inclusion(*f33);
  Vec w = zero_vec(q, f32->dim());
  w[3] = Scalar::one(q);  // [x2,x1]
  Vec x3 = zero_vec(q, f33->dim());
  x3[2] = Scalar::one(q);
  CHECK_FALSE(is_zero(f33->algebra()->bracket(i33.apply(w), x3)));
}

TEST_CASE("universal property") {
  Field q = Field::rationals();
  FreePtr f23 = FreeNilpotent::build(2, 3, q);
  LiePtr h = heisenberg(q, 1);
  Vec x = zero_vec(q, 3), y = zero_vec(q, 3);
  x[0] = Scalar::one(q);
  y[1] = Scalar::one(q);
  AlgebraHom phi = f23->universal_hom(h, {x, y});
  CHECK(phi.is_surjective());
  CHECK(phi.kernel().dim() == 2);

  // evaluation of [x2,x1] lands on -z
  Vec img = phi.matrix().col(2);
  CHECK(img == h->bracket(y, x));
}

TEST_CASE("degree-3 monomials expand to an independent set") {
  Field q = Field::rationals();
  for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
    FreePtr f = FreeNilpotent::build(n, 3, q);
    auto mons = degree3_monomial_basis(*f);
    std::size_t expect = 2 * ((n + 1) * n * (n - 1) / 6);
    CHECK(mons.size() == expect);
    std::vector<Vec> vecs;
    for (auto& [label, v] : mons) {
      CHECK(f->graded_piece(3).contains(v));
      vecs.push_back(v);
    }
    CHECK(Subspace::span(q, f->dim(), vecs).dim() == expect);
    CHECK(expect == witt_dim(n, 3));
  }
}
