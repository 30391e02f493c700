#include "nilcoh/catalog.hpp"

#include "nilcoh/free_nilpotent.hpp"

namespace nilcoh {

namespace {

LiePtr degree2_quotient(const Field& k, std::size_t n, const std::vector<std::size_t>& words) {
  FreePtr f = FreeNilpotent::build(n, 2, k);
  Vec x = zero_vec(k, f->dim());
  for (std::size_t w : words) x[w] = Scalar::one(k);
  // class 2 kills [f, x], so the ideal is the line through x
  return quotient_algebra(f->algebra(), Subspace::span(k, f->dim(), {x})).algebra;
}

LiePtr free23_degree2_quotient(const Field& k) {
  FreePtr f = FreeNilpotent::build(2, 3, k);
  Vec x = zero_vec(k, f->dim());
  x[2] = Scalar::one(k);  // word 2 = [x2, x1]
  return quotient_algebra(f->algebra(), f->algebra()->ideal_closure({x})).algebra;
}

}  // namespace

std::vector<CatalogEntry> standard_catalog(const Field& f) {
  std::vector<CatalogEntry> cat;
  for (std::size_t m = 1; m <= 5; ++m)
    cat.push_back({"abelian" + std::to_string(m), abelian_algebra(f, m)});
  for (std::size_t n = 1; n <= 3; ++n)
    cat.push_back({"heisenberg" + std::to_string(n), heisenberg(f, n)});
  cat.push_back({"free_2_3", FreeNilpotent::build(2, 3, f)->algebra()});
  cat.push_back({"free_3_2", FreeNilpotent::build(3, 2, f)->algebra()});
  cat.push_back({"free_2_4", FreeNilpotent::build(2, 4, f)->algebra()});
  // one-relation quotients of f_{n,2}; degree-2 words of f_{4,2} sit at
  // indices 4..9 in the order [x2,x1] [x3,x1] [x4,x1] [x3,x2] [x4,x2] [x4,x3]
  cat.push_back({"quotient3_len1", degree2_quotient(f, 3, {3})});
  cat.push_back({"quotient4_len1", degree2_quotient(f, 4, {4})});
  cat.push_back({"quotient4_len2", degree2_quotient(f, 4, {4, 9})});
  cat.push_back({"free23_mod_deg2", free23_degree2_quotient(f)});
  return cat;
}

}  // namespace nilcoh
