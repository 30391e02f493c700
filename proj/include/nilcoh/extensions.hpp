#pragma once

#include "nilcoh/ce.hpp"

namespace nilcoh {

/// Abelian extension 0 -> M -> e -> g -> 0. The inclusion columns are the
/// images of the module basis in e; exactness and the action compatibility
/// [y, i(m)] = i(pi(y) m) are verified by validate_extension.
struct AbelianExtension {
  LiePtr g;
  GModule module;
  LiePtr total;
  Matrix inclusion;       // total dim x module dim
  AlgebraHom projection;  // total -> g
};

void validate_extension(const AbelianExtension& e);

/// Total algebra on M + g with [(m,x),(n,y)] = (xn - ym + w(x^y), [x,y]);
/// module block first. Requires d2 w = 0.
AbelianExtension extension_from_cocycle(const LiePtr& g, const GModule& m, const Vec& omega);

/// Cocycle of an adapted section s (pi o s = id, s(g^i) in e^i, built
/// degreewise along the lower central series): f(x^y) = [s(x),s(y)] - s([x,y]).
/// Lands in F_r C^2 with r the class of the total algebra.
Vec cocycle_from_extension(const AbelianExtension& e);

bool extensions_equivalent(const AbelianExtension& a, const AbelianExtension& b);
bool extension_splits(const AbelianExtension& e);

/// Fiber product {(x,y) in e x q : pi(x) = p(y)} for p: q -> g, with the
/// comparison map psi1 back to the original total algebra.
struct PullbackExtension {
  AbelianExtension ext;
  Matrix psi1;  // e coords <- pullback total coords
};
PullbackExtension pullback_extension(const AbelianExtension& e, const AlgebraHom& p);

/// Nilpotency class of the total algebra with the sandwich p <= r <= p+q.
struct ExtensionClass {
  std::size_t r;
  std::size_t p;  // class of g
  std::size_t q;  // nilpotency degree of M
};
ExtensionClass class_of_extension(const AbelianExtension& e);

}  // namespace nilcoh
