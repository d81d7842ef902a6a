#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mckay/abelian.hpp"
#include "mckay/fq.hpp"
#include "mckay/frobenius.hpp"
#include "mckay/root_datum.hpp"
#include "mckay/smith.hpp"

#include "json.hpp"

namespace mckay {

// Character of the product of simple root subgroups over F_q: one field
// coefficient per simple root, pairing through psi_1(Tr(c*u)) for a fixed
// nontrivial character psi_1 of F_p.  The support (nonzero coordinates)
// singles out the subset J the character lives on.
struct UnipotentCharacterIndex {
  std::vector<std::int64_t> coeffs;  // field element indices, one per simple root

  std::uint32_t support_mask() const;
};

// Label for one p'-character of the Borel subgroup: the support subset J,
// the diagonal-orbit index (an element of the finite quotient classifying
// torus orbits on support-J characters), and a character of the orbit
// stabilizer T_J^F in Smith-basis coordinates.
struct BorelLabel {
  std::uint32_t subset_mask = 0;
  std::vector<std::int64_t> orbit;  // coordinates in the orbit quotient of J
  std::vector<std::int64_t> psi;    // coordinates over the T_J^F generator orders

  bool operator==(const BorelLabel&) const = default;
  auto operator<=>(const BorelLabel&) const = default;
};

// Orbit of labels under the diagonal-automorphism group: all labels with
// the same (J, psi).  Size is the number of orbit-index values for J.
struct DiagonalOrbit {
  std::uint32_t subset_mask = 0;
  std::vector<std::int64_t> psi;
  std::int64_t size = 0;
  std::vector<std::int64_t> nu;  // shared central character, index over Z^F
};

struct OrbitCensus {
  std::int64_t singleton_count = 0;  // orbits of size 1
  std::int64_t full_count = 0;       // orbits of size d = |Z^F|
};

// All per-level data needed to enumerate and act on Borel labels for a
// split group at q = p^n.
class BorelContext {
 public:
  BorelContext(const RootDatum& datum, std::int64_t p, std::int64_t n);

  const RootDatum& datum() const { return datum_; }
  const SplitFrobenius& frobenius() const { return fr_; }
  const FqContext& field() const { return field_; }
  const FiniteAbelianGroup& center_group() const { return center_fixed_; }
  std::int64_t center_order() const { return center_fixed_.order(); }

  struct SubsetData {
    std::vector<std::size_t> subset;
    StabilizerTorus torus;
    FixedTorusEmbedding embed;
    ColumnQuotient orbit_quotient;           // torus orbits on support-J characters
    std::vector<std::int64_t> diag_shift;    // orbit translation of the diagonal generator
    std::int64_t orbit_index_count = 0;      // i(J) = |H_J^F|
    std::int64_t stabilizer_order = 0;       // |T_J^F|
  };

  const SubsetData& subset_data(std::uint32_t mask) const { return subsets_[mask]; }
  std::size_t subset_count() const { return subsets_.size(); }

  // Exponent vector (discrete logs) of the multiplier through which the
  // chosen diagonal generator scales the simple root subgroups.
  const std::vector<std::int64_t>& diagonal_multiplier_dlog() const { return diag_dlog_; }

  std::int64_t closed_form_total() const;
  std::vector<BorelLabel> enumerate_labels() const;

  std::vector<std::int64_t> restriction_to_center(const BorelLabel& label) const;
  BorelLabel frobenius_on_label(const BorelLabel& label, std::int64_t level) const;
  BorelLabel diagonal_on_label(const BorelLabel& label) const;

  std::vector<DiagonalOrbit> diagonal_orbits() const;

  std::int64_t per_nu_count(const std::vector<std::int64_t>& nu) const;
  OrbitCensus d_orbit_census(const std::vector<std::int64_t>& nu) const;

  // F_level-stable orbits of the given size over mu.
  std::int64_t fixed_label_census(std::int64_t level, std::int64_t size,
                                  const std::vector<std::int64_t>& mu) const;

  UnipotentCharacterIndex find_stable_regular_character(std::int64_t level) const;

  // Sum over torus orbits on all q^r characters of the stabilizer order;
  // independent of the label parametrization.
  std::int64_t brute_force_count(std::int64_t state_bound = 1000000) const;

  nlohmann::json labels_to_json() const;
  std::string labels_to_tsv() const;

 private:
  RootDatum datum_;
  SplitFrobenius fr_;
  FqContext field_;
  FiniteAbelianGroup center_fixed_;
  std::vector<SubsetData> subsets_;
  std::vector<std::int64_t> diag_dlog_;

  std::vector<std::size_t> mask_to_subset(std::uint32_t mask) const;
  bool orbit_quotients_prime_or_trivial() const;
};

}  // namespace mckay
