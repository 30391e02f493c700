#pragma once

#include "nilcoh/lie.hpp"

namespace nilcoh {

struct CatalogEntry {
  std::string name;
  LiePtr algebra;
};

/// Bundled algebras: abelian k^m (m <= 5), the Heisenberg algebras h_1..h_3,
/// small free nilpotent algebras, one-relation quotients of f_{n,2} for
/// n = 3, 4 (one per bracket-length class), and a degree-2 quotient of
/// f_{2,3}. All structure constants are integers, so the catalog instantiates
/// over any coefficient field.
std::vector<CatalogEntry> standard_catalog(const Field& f);

}  // namespace nilcoh
