#pragma once

#include <cstdint>
#include <vector>

namespace mckay {

// Arithmetic context for F_q, q = p^n.  Elements are indices in [0, q):
// the coefficient vector (c_0, ..., c_{n-1}) of the residue modulo the
// context's irreducible polynomial, packed as sum c_i p^i.  The modulus is
// the monic irreducible polynomial of degree n whose packed non-leading
// coefficient tail is smallest, so contexts are reproducible without
// external polynomial tables.  Multiplication runs through exp/log tables
// for a fixed generator (the nonzero element of least index generating
// F_q^x).
class FqContext {
 public:
  FqContext(std::int64_t p, std::int64_t n);

  std::int64_t p() const { return p_; }
  std::int64_t n() const { return n_; }
  std::int64_t q() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  std::int64_t generator() const { return generator_; }

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inv(std::int64_t a) const;
  std::int64_t pow(std::int64_t a, std::int64_t e) const;

  // a^(p^j): the j-th power of the absolute Frobenius.
  std::int64_t frobenius(std::int64_t a, std::int64_t j = 1) const;

  // Tr_{F_q/F_p}(a), as an integer in [0, p).
  std::int64_t trace(std::int64_t a) const;

  std::int64_t exp_of(std::int64_t e) const;  // generator^e, e mod q-1
  std::int64_t log_of(std::int64_t a) const;  // discrete log, a != 0

  std::int64_t element_order(std::int64_t a) const;

 private:
  std::int64_t p_, n_, q_;
  std::vector<std::int64_t> modulus_;  // monic: coefficients c_0..c_n with c_n = 1
  std::int64_t generator_;
  std::vector<std::int32_t> exp_table_;  // size q-1
  std::vector<std::int32_t> log_table_;  // size q, log_table_[0] unused
  std::vector<std::int32_t> add_table_;  // q*q, only when q is small
  bool has_add_table_ = false;

  std::vector<std::int64_t> decode(std::int64_t a) const;
  std::int64_t encode(const std::vector<std::int64_t>& c) const;
  std::int64_t add_slow(std::int64_t a, std::int64_t b) const;
};

}  // namespace mckay
