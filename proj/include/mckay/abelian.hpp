#pragma once

#include <cstdint>
#include <vector>

#include "mckay/int_matrix.hpp"
#include "mckay/smith.hpp"

namespace mckay {

// Finite abelian group in invariant-factor form: Z/d_1 x ... x Z/d_k with
// d_1 | d_2 | ... | d_k, every d_i >= 2.  The empty list is the trivial
// group.  Elements and characters are coordinate vectors, entry i taken
// modulo d_i; all pairing arithmetic stays in modular integers.
class FiniteAbelianGroup {
 public:
  using Element = std::vector<std::int64_t>;

  FiniteAbelianGroup() = default;  // trivial group
  explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);
  static FiniteAbelianGroup from_invariants(const std::vector<Int>& factors);

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::size_t generator_count() const { return factors_.size(); }
  std::int64_t order() const;
  std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  bool is_trivial() const { return factors_.empty(); }

  bool operator==(const FiniteAbelianGroup& other) const = default;

  Element zero() const { return Element(factors_.size(), 0); }
  Element reduce(Element e) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(std::int64_t k, const Element& a) const;

  // All elements in mixed-radix order (last coordinate fastest).
  std::vector<Element> elements() const;

  // chi_c(h) as an exponent of a fixed primitive exponent()-th root of
  // unity: sum_i c_i h_i (exponent/d_i) mod exponent.
  std::int64_t pairing_exponent(const Element& chi, const Element& h) const;

 private:
  std::vector<std::int64_t> factors_;
};

// Endomorphism of a FiniteAbelianGroup given by an integer matrix acting
// on generator coordinates (column-vector convention).  Well-definedness
// on the quotient (d_i | m_ij * d_j for all i, j) is checked at
// construction and is an error, not a latent invariant.
class AbelianEndomorphism {
 public:
  AbelianEndomorphism(FiniteAbelianGroup group, IntMatrix matrix);
  static AbelianEndomorphism multiplication(FiniteAbelianGroup group, const Int& scalar);
  static AbelianEndomorphism identity(FiniteAbelianGroup group);

  const FiniteAbelianGroup& group() const { return group_; }
  const IntMatrix& matrix() const { return matrix_; }

  FiniteAbelianGroup::Element apply(const FiniteAbelianGroup::Element& e) const;
  AbelianEndomorphism compose(const AbelianEndomorphism& inner) const;

  // Action on character indices: (chi . phi)(h) = chi(phi(h)).
  AbelianEndomorphism dual() const;

  bool operator==(const AbelianEndomorphism& other) const = default;

 private:
  FiniteAbelianGroup group_;
  IntMatrix matrix_;  // entries reduced: row i modulo d_i
};

// |{h : phi(h) = h}|, computed from the Smith form of [phi - id | diag(d)];
// equals the cokernel order of phi - id since the group is finite.
std::int64_t fixed_point_order(const AbelianEndomorphism& phi);

// H / (phi - 1)H in invariant-factor form.
FiniteAbelianGroup lang_quotient(const AbelianEndomorphism& phi);

// id + phi + ... + phi^(m-1).
AbelianEndomorphism norm_endomorphism(const AbelianEndomorphism& phi, std::int64_t m);

// Character indices of H; |H| of them, in element enumeration order.
std::vector<FiniteAbelianGroup::Element> characters(const FiniteAbelianGroup& h);

}  // namespace mckay
