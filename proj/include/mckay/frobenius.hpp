#pragma once

#include <cstdint>
#include <vector>

#include "mckay/abelian.hpp"
#include "mckay/root_datum.hpp"
#include "mckay/smith.hpp"

namespace mckay {

// Power of the standard split Frobenius: q = p^n is the level of the
// ambient rational structure, and F_j = F_0^j (j | n) the power under
// consideration; j = n is F itself.  F_j raises torus coordinates to the
// p^j-th power, so every finite piece of torus data sees it as
// multiplication by p^j.
struct SplitFrobenius {
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::int64_t j = 0;

  SplitFrobenius(std::int64_t p_, std::int64_t n_, std::int64_t j_);
  static SplitFrobenius full(std::int64_t p, std::int64_t n) { return {p, n, n}; }

  std::int64_t q() const;        // p^n
  std::int64_t level_q() const;  // p^j
  SplitFrobenius at_level(std::int64_t lvl) const { return {p, n, lvl}; }
};

// |T^{F_j}| = (q_j - 1)^rank for the split maximal torus.
std::int64_t torus_fixed_order(const RootDatum& d, const SplitFrobenius& fr);

// The stabilizer in T of a product of root-subgroup elements with support
// J: the diagonalizable group cut out by the characters in J.  The Smith
// decomposition of the J-row submatrix provides the deterministic basis
// splitting it as (free torus) x (component group H_J).
struct StabilizerTorus {
  std::vector<std::size_t> subset;      // J, sorted 0-based indices
  std::size_t free_rank = 0;            // rank - |J|
  FiniteAbelianGroup component_group;   // H_J
  SmithDecomposition row_snf;           // of the |J| x rank submatrix
  std::size_t ambient_rank = 0;
};

StabilizerTorus stabilizer_torus(const RootDatum& d, const std::vector<std::size_t>& subset);

// |T_J^{F_j}| = (q_j - 1)^{free rank} * |H_J^{F_j}|.
std::int64_t stabilizer_fixed_order(const StabilizerTorus& st, const SplitFrobenius& fr);

// Fixed-point data of T_J^{F_j} in coordinates: generator orders for the
// torsion part (gcd(d_i, q_j - 1), kept when > 1) followed by free_rank
// copies of q_j - 1, plus the coordinates of the generators of Z^{F_j}
// under the inclusion Z^{F_j} <= T_J^{F_j}.  Torus elements are tracked
// as exponent vectors for a fixed generator of F_{q_j}^x.
struct FixedTorusEmbedding {
  std::vector<std::int64_t> orders;                        // T_J^{F_j} generator orders
  std::size_t torsion_count = 0;                           // leading torsion coordinates
  std::vector<std::int64_t> center_orders;                 // invariant factors of Z^{F_j}
  std::vector<std::vector<std::int64_t>> center_coords;    // one row per Z^{F_j} generator
};

FixedTorusEmbedding fixed_torus_embedding(const RootDatum& d, const StabilizerTorus& st,
                                          const SplitFrobenius& fr);

// Invariant factors of Z^{F_j} (fixed points of multiplication by q_j on
// the center).
FiniteAbelianGroup center_fixed_points(const RootDatum& d, const SplitFrobenius& fr);

// H^1(F_j, Z) = Z / (q_j - 1) Z as a Lang quotient.
FiniteAbelianGroup h1_center(const RootDatum& d, const SplitFrobenius& fr);

enum class NormClass { trivial, surjective };

// Classification of the norm Z^F -> Z^{F_j} (sum of the first n/j powers
// of F_j); requires the center to be trivial or of prime order, where the
// trivial/surjective dichotomy is exhaustive.
NormClass norm_map_classification(const RootDatum& d, std::int64_t p, std::int64_t n,
                                  std::int64_t j);

}  // namespace mckay
