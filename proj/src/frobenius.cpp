#include "mckay/frobenius.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::int64_t>::max() / base)
      throw resource_bound_exceeded("prime power exceeds 64-bit range");
    out *= base;
  }
  return out;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// V^{-1} for unimodular V, via a Smith decomposition (D must be I).
IntMatrix unimodular_inverse(const IntMatrix& v) {
  auto snf = smith_normal_form(v);
  if (!(snf.diagonal == IntMatrix::identity(v.rows())))
    throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
  return snf.right * snf.left;
}

}  // namespace

SplitFrobenius::SplitFrobenius(std::int64_t p_, std::int64_t n_, std::int64_t j_)
    : p(p_), n(n_), j(j_) {
  if (!is_prime(p)) throw std::invalid_argument("SplitFrobenius: p must be prime");
  if (n < 1 || j < 1 || n % j != 0)
    throw std::invalid_argument("SplitFrobenius: need j | n, both positive");
}

std::int64_t SplitFrobenius::q() const { return checked_pow(p, n); }
std::int64_t SplitFrobenius::level_q() const { return checked_pow(p, j); }

std::int64_t torus_fixed_order(const RootDatum& d, const SplitFrobenius& fr) {
  return checked_pow(fr.level_q() - 1, static_cast<std::int64_t>(d.rank()));
}

StabilizerTorus stabilizer_torus(const RootDatum& d, const std::vector<std::size_t>& subset) {
  StabilizerTorus st;
  st.subset = subset;
  std::sort(st.subset.begin(), st.subset.end());
  st.ambient_rank = d.rank();
  st.free_rank = d.rank() - st.subset.size();
  IntMatrix rows(st.subset.size(), d.rank());
  for (std::size_t t = 0; t < st.subset.size(); ++t) {
    if (st.subset[t] >= d.rank()) throw std::invalid_argument("subset index out of range");
    if (t > 0 && st.subset[t] == st.subset[t - 1])
      throw std::invalid_argument("subset has repeated index");
    for (std::size_t c = 0; c < d.rank(); ++c) rows.at(t, c) = d.cartan().at(st.subset[t], c);
  }
  st.row_snf = smith_normal_form(rows);
  if (st.row_snf.invariant_factors().size() != st.subset.size())
    throw internal_error("simple-root rows are not linearly independent");
  st.component_group = FiniteAbelianGroup::from_invariants(st.row_snf.invariant_factors());
  return st;
}

std::int64_t stabilizer_fixed_order(const StabilizerTorus& st, const SplitFrobenius& fr) {
  std::int64_t qj = fr.level_q();
  std::int64_t out = checked_pow(qj - 1, static_cast<std::int64_t>(st.free_rank));
  return out * fixed_point_order(AbelianEndomorphism::multiplication(st.component_group, qj));
}

FixedTorusEmbedding fixed_torus_embedding(const RootDatum& d, const StabilizerTorus& st,
                                          const SplitFrobenius& fr) {
  std::int64_t qm1 = fr.level_q() - 1;
  std::size_t r = d.rank();
  std::size_t s = st.subset.size();

  FixedTorusEmbedding out;
  // Diagonal invariants of the J-row submatrix; the i-th coordinate of the
  // Smith basis carries the subgroup of order gcd(d_i, q-1).
  std::vector<Int> diag(s);
  std::vector<std::int64_t> gcds(s);
  for (std::size_t i = 0; i < s; ++i) {
    diag[i] = st.row_snf.diagonal.at(i, i);
    gcds[i] = static_cast<std::int64_t>(gcd(diag[i], Int(qm1)));
  }
  std::vector<std::size_t> kept;  // torsion coordinates with nontrivial fixed part
  for (std::size_t i = 0; i < s; ++i)
    if (gcds[i] > 1) {
      kept.push_back(i);
      out.orders.push_back(gcds[i]);
    }
  out.torsion_count = kept.size();
  for (std::size_t i = 0; i < st.free_rank; ++i) out.orders.push_back(qm1);

  // Generators of Z^{F_j} as torus exponent vectors: through the Smith
  // basis of the full Cartan matrix, then converted to the J-basis.
  auto full_snf = smith_normal_form(d.cartan());
  IntMatrix v_full = full_snf.right;
  IntMatrix v_j_inv = unimodular_inverse(st.row_snf.right);

  std::vector<std::vector<std::int64_t>> center_exponents;
  for (std::size_t i = 0; i < r; ++i) {
    Int di = full_snf.diagonal.at(i, i);
    std::int64_t g = static_cast<std::int64_t>(gcd(di, Int(qm1)));
    if (g <= 1) continue;
    out.center_orders.push_back(g);
    std::vector<std::int64_t> expo(r, 0);
    // s-coordinate vector ((q-1)/g) e_i, mapped to torus exponents by V.
    for (std::size_t k = 0; k < r; ++k) {
      Int e = v_full.at(k, i) * (qm1 / g);
      Int red = e % qm1;
      if (red < 0) red += qm1;
      expo[k] = static_cast<std::int64_t>(red);
    }
    center_exponents.push_back(std::move(expo));
  }
  // Invariant factors must form a chain largest-last; Smith order gives that.
  for (const auto& expo : center_exponents) {
    // Convert to the J-Smith coordinates: f = V_J^{-1} e (mod q-1).
    std::vector<Int> f(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      Int acc = 0;
      for (std::size_t k = 0; k < r; ++k) acc += v_j_inv.at(i, k) * expo[k];
      acc %= qm1;
      if (acc < 0) acc += qm1;
      f[i] = acc;
    }
    std::vector<std::int64_t> coords;
    for (std::size_t t = 0; t < kept.size(); ++t) {
      std::size_t i = kept[t];
      std::int64_t step = qm1 / gcds[i];
      if (f[i] % step != 0)
        throw internal_error("center element does not lie in the stabilizer torus");
      coords.push_back(static_cast<std::int64_t>((f[i] / step) % gcds[i]));
    }
    for (std::size_t i = 0; i < s; ++i)
      if (gcds[i] <= 1 && f[i] != 0)
        throw internal_error("center element has component in a trivial coordinate");
    for (std::size_t i = s; i < r; ++i) coords.push_back(static_cast<std::int64_t>(f[i]));
    out.center_coords.push_back(std::move(coords));
  }
  return out;
}

FiniteAbelianGroup center_fixed_points(const RootDatum& d, const SplitFrobenius& fr) {
  std::int64_t qm1 = fr.level_q() - 1;
  std::vector<std::int64_t> factors;
  for (std::int64_t f : center(d).invariant_factors()) {
    std::int64_t g = std::gcd(f, qm1);
    if (g > 1) factors.push_back(g);
  }
  std::sort(factors.begin(), factors.end());
  return FiniteAbelianGroup(factors);
}

FiniteAbelianGroup h1_center(const RootDatum& d, const SplitFrobenius& fr) {
  return lang_quotient(AbelianEndomorphism::multiplication(center(d), fr.level_q()));
}

NormClass norm_map_classification(const RootDatum& d, std::int64_t p, std::int64_t n,
                                  std::int64_t j) {
  SplitFrobenius fr(p, n, j);
  FiniteAbelianGroup z = center(d);
  if (!z.is_trivial()) {
    std::int64_t order = z.order();
    bool prime = order >= 2 && [order] {
      for (std::int64_t t = 2; t * t <= order; ++t)
        if (order % t == 0) return false;
      return true;
    }();
    if (!prime || z.generator_count() != 1)
      throw unsupported_input("norm classification needs a center of prime order");
  }
  FiniteAbelianGroup zf = center_fixed_points(d, SplitFrobenius::full(p, n));
  if (zf.is_trivial()) return NormClass::surjective;
  // Norm = sum of the first m powers of multiplication by q_j, restricted
  // to Z^F; on a prime-order fixed subgroup it is zero or bijective.
  std::int64_t m = n / j;
  std::int64_t qj = fr.level_q();
  std::int64_t dord = zf.invariant_factors()[0];
  std::int64_t s = 0, pw = 1;
  for (std::int64_t t = 0; t < m; ++t) {
    s = (s + pw) % dord;
    pw = static_cast<std::int64_t>((Int(pw) * qj) % dord);
  }
  return s % dord == 0 ? NormClass::trivial : NormClass::surjective;
}

}  // namespace mckay
