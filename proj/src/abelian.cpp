#include "mckay/abelian.hpp"

#include <limits>
#include <stdexcept>

#include "mckay/errors.hpp"

namespace mckay {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw std::invalid_argument("invariant factor < 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

FiniteAbelianGroup FiniteAbelianGroup::from_invariants(const std::vector<Int>& factors) {
  std::vector<std::int64_t> out;
  for (const Int& f : factors) {
    if (f <= 1) continue;
    if (f > std::numeric_limits<std::int64_t>::max())
      throw resource_bound_exceeded("invariant factor exceeds 64-bit range");
    out.push_back(static_cast<std::int64_t>(f));
  }
  return FiniteAbelianGroup(std::move(out));
}

std::int64_t FiniteAbelianGroup::order() const {
  std::int64_t o = 1;
  for (std::int64_t f : factors_) {
    if (o > std::numeric_limits<std::int64_t>::max() / f)
      throw resource_bound_exceeded("group order exceeds 64-bit range");
    o *= f;
  }
  return o;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::reduce(Element e) const {
  if (e.size() != factors_.size()) throw std::invalid_argument("element size mismatch");
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] %= factors_[i];
    if (e[i] < 0) e[i] += factors_[i];
  }
  return e;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  Element out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (out[i] + b[i]) % factors_[i];
  return out;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::scale(std::int64_t k, const Element& a) const {
  Element out(factors_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::int64_t r = (k % factors_[i]) * (a[i] % factors_[i]) % factors_[i];
    out[i] = r < 0 ? r + factors_[i] : r;
  }
  return out;
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order()));
  Element cur = zero();
  for (;;) {
    out.push_back(cur);
    std::size_t i = factors_.size();
    while (i > 0) {
      --i;
      if (++cur[i] < factors_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

std::int64_t FiniteAbelianGroup::pairing_exponent(const Element& chi, const Element& h) const {
  std::int64_t e = exponent();
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::int64_t w = e / factors_[i];
    acc = (acc + (chi[i] % e) * ((h[i] * w) % e)) % e;
  }
  return acc < 0 ? acc + e : acc;
}

namespace {

IntMatrix reduce_rows(const FiniteAbelianGroup& g, IntMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int r = m.at(i, j) % g.invariant_factors()[i];
      if (r < 0) r += g.invariant_factors()[i];
      m.at(i, j) = r;
    }
  return m;
}

IntMatrix factor_diagonal(const FiniteAbelianGroup& g) {
  std::size_t k = g.generator_count();
  IntMatrix d(k, k);
  for (std::size_t i = 0; i < k; ++i) d.at(i, i) = g.invariant_factors()[i];
  return d;
}

}  // namespace

AbelianEndomorphism::AbelianEndomorphism(FiniteAbelianGroup group, IntMatrix matrix)
    : group_(std::move(group)) {
  std::size_t k = group_.generator_count();
  if (matrix.rows() != k || matrix.cols() != k)
    throw std::invalid_argument("endomorphism matrix shape mismatch");
  const auto& d = group_.invariant_factors();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if ((matrix.at(i, j) * d[j]) % d[i] != 0)
        throw std::invalid_argument("endomorphism not well defined on the quotient");
  matrix_ = reduce_rows(group_, std::move(matrix));
}

AbelianEndomorphism AbelianEndomorphism::multiplication(FiniteAbelianGroup group, const Int& scalar) {
  std::size_t k = group.generator_count();
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = scalar;
  return AbelianEndomorphism(std::move(group), std::move(m));
}

AbelianEndomorphism AbelianEndomorphism::identity(FiniteAbelianGroup group) {
  return multiplication(std::move(group), 1);
}

FiniteAbelianGroup::Element AbelianEndomorphism::apply(const FiniteAbelianGroup::Element& e) const {
  std::size_t k = group_.generator_count();
  if (e.size() != k) throw std::invalid_argument("element size mismatch");
  FiniteAbelianGroup::Element out(k);
  const auto& d = group_.invariant_factors();
  for (std::size_t i = 0; i < k; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < k; ++j) acc += matrix_.at(i, j) * e[j];
    acc %= d[i];
    if (acc < 0) acc += d[i];
    out[i] = static_cast<std::int64_t>(acc);
  }
  return out;
}

AbelianEndomorphism AbelianEndomorphism::compose(const AbelianEndomorphism& inner) const {
  if (!(group_ == inner.group_)) throw std::invalid_argument("compose: group mismatch");
  return AbelianEndomorphism(group_, matrix_ * inner.matrix_);
}

AbelianEndomorphism AbelianEndomorphism::dual() const {
  std::size_t k = group_.generator_count();
  const auto& d = group_.invariant_factors();
  IntMatrix m(k, k);
  // chi(phi(h)) has index j entry sum_i c_i m_ij d_j / d_i; integrality is
  // exactly the well-definedness condition.
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) m.at(j, i) = matrix_.at(i, j) * d[j] / d[i];
  return AbelianEndomorphism(group_, std::move(m));
}

std::int64_t fixed_point_order(const AbelianEndomorphism& phi) {
  const auto& g = phi.group();
  if (g.is_trivial()) return 1;
  std::size_t k = g.generator_count();
  IntMatrix shifted = phi.matrix() - IntMatrix::identity(k);
  auto quotient = quotient_by_columns(shifted.augment_columns(factor_diagonal(g)));
  return quotient.order();
}

FiniteAbelianGroup lang_quotient(const AbelianEndomorphism& phi) {
  const auto& g = phi.group();
  if (g.is_trivial()) return FiniteAbelianGroup();
  std::size_t k = g.generator_count();
  IntMatrix shifted = phi.matrix() - IntMatrix::identity(k);
  auto quotient = quotient_by_columns(shifted.augment_columns(factor_diagonal(g)));
  return FiniteAbelianGroup(quotient.factors);
}

AbelianEndomorphism norm_endomorphism(const AbelianEndomorphism& phi, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("norm_endomorphism: m must be >= 1");
  std::size_t k = phi.group().generator_count();
  IntMatrix acc(k, k);
  IntMatrix power = IntMatrix::identity(k);
  for (std::int64_t t = 0; t < m; ++t) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) acc.at(i, j) += power.at(i, j);
    if (t + 1 < m) power = phi.matrix() * power;
  }
  return AbelianEndomorphism(phi.group(), std::move(acc));
}

std::vector<FiniteAbelianGroup::Element> characters(const FiniteAbelianGroup& h) {
  return h.elements();
}

}  // namespace mckay
