#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mckay/abelian.hpp"
#include "mckay/int_matrix.hpp"

#include "json.hpp"

namespace mckay {

enum class LieFamily { A, B, C, D, E, F, G };

std::string family_name(LieFamily f);

// Root datum of a simple, simply connected group, split over F_q.  The
// character lattice is the weight lattice, so the coordinate rows of the
// simple roots in the fundamental-weight basis are exactly the rows of
// the Cartan matrix.  Simple-root numbering follows Bourbaki; for C_n the
// first n-1 simple roots are short and row n carries the -2 entries.
class RootDatum {
 public:
  RootDatum(LieFamily family, std::size_t rank);

  LieFamily family() const { return family_; }
  std::size_t rank() const { return rank_; }
  std::string label() const;
  const IntMatrix& cartan() const { return cartan_; }

  bool operator==(const RootDatum& other) const = default;

 private:
  LieFamily family_;
  std::size_t rank_;
  IntMatrix cartan_;
};

// Parses labels like "A1", "C2", "E7".
RootDatum build_root_datum(const std::string& label);

// Positive roots as integer coefficient vectors over the simple roots,
// generated by closing the simple roots under simple reflections.
struct PositiveRootSet {
  std::vector<std::vector<std::int64_t>> roots;

  std::size_t size() const { return roots.size(); }
};

PositiveRootSet positive_roots(const RootDatum& d);

// Coefficients of the highest root over the simple roots.
std::vector<std::int64_t> highest_root(const RootDatum& d);

// Torsion of X(T) / <simple roots> = fundamental group of the adjoint form.
FiniteAbelianGroup center(const RootDatum& d);

// H_J: torsion of X(T) / <rows indexed by J>, the component group of the
// center of the standard Levi for J.  J holds 0-based simple root indices.
FiniteAbelianGroup levi_center_component_group(const RootDatum& d,
                                               const std::vector<std::size_t>& subset);

// p does not divide any coefficient of the highest root.
bool is_good_prime(const RootDatum& d, std::int64_t p);

// Excludes (p=2, types B/C/F4/G2) and (p=3, type G2).
bool is_nonsingular_prime(const RootDatum& d, std::int64_t p);

// Exponents m_1 <= ... <= m_r, recovered from the height distribution of
// the positive roots (conjugate partition).
std::vector<std::int64_t> exponents(const RootDatum& d);

// |G^F| = q^{|Phi+|} * prod_i (q^{m_i + 1} - 1).
Int group_order(const RootDatum& d, std::int64_t q);

void to_json(nlohmann::json& j, const RootDatum& d);
RootDatum root_datum_from_json(const nlohmann::json& j);

}  // namespace mckay
