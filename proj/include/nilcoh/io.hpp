#pragma once

#include <string>

#include "nilcoh/lie.hpp"

namespace nilcoh {

/// On-disk algebra description: {"name", "field": {"type": "rational"} or
/// {"type": "prime", "p"}, "dim", "basis": [labels], "brackets": [{i, j,
/// "coeffs": {index: scalar string}}]} with i < j, 0-based. Scalar strings
/// round trip bit-exactly.
struct AlgebraFile {
  std::string name;
  LiePtr algebra;
};

AlgebraFile parse_algebra_json(const std::string& text);
AlgebraFile read_algebra_file(const std::string& path);
std::string algebra_to_json(const std::string& name, const LieAlgebra& g);
void write_algebra_file(const std::string& path, const std::string& name, const LieAlgebra& g);

}  // namespace nilcoh
