#pragma once

#include <cstdint>
#include <vector>

#include "mckay/int_matrix.hpp"

namespace mckay {

// U * source * V = diagonal, with U and V unimodular and the diagonal
// entries nonnegative, each dividing the next, trailing zeros last.
struct SmithDecomposition {
  IntMatrix left;      // U
  IntMatrix diagonal;  // D
  IntMatrix right;     // V
  IntMatrix source;

  // Nonzero diagonal entries, in order.
  std::vector<Int> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Invariant factors > 1 of the torsion part of Z^cols / (row span of m).
std::vector<Int> cokernel_torsion_invariants(const IntMatrix& m);

// Presentation of the finite quotient Z^k / (column span of a), where a is
// a k x m matrix whose column span has finite index (rank k).  Classes are
// identified by coordinates over the invariant factors > 1.
struct ColumnQuotient {
  std::vector<std::int64_t> factors;  // invariant factors > 1
  IntMatrix transform;                // U from the Smith decomposition
  std::vector<std::size_t> kept_rows; // rows of U giving nontrivial coordinates

  std::int64_t order() const;
  // Coordinates of the class of v in Z^k; v given as int64 entries.
  std::vector<std::int64_t> coords(const std::vector<std::int64_t>& v) const;
};

ColumnQuotient quotient_by_columns(const IntMatrix& a);

}  // namespace mckay
