#include "mckay/borel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t power_mod(std::int64_t base, std::int64_t e, std::int64_t m) {
  std::int64_t out = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) out = mulmod(out, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return out;
}

std::int64_t element_order_in(const std::vector<std::int64_t>& factors,
                              const std::vector<std::int64_t>& v) {
  std::int64_t order = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::int64_t f = factors[i] / std::gcd(factors[i], v[i]);
    order = std::lcm(order, f);
  }
  return order;
}

bool is_prime_int(std::int64_t x) {
  if (x < 2) return false;
  for (std::int64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

}  // namespace

std::uint32_t UnipotentCharacterIndex::support_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) mask |= (1u << i);
  return mask;
}

BorelContext::BorelContext(const RootDatum& datum, std::int64_t p, std::int64_t n)
    : datum_(datum), fr_(SplitFrobenius::full(p, n)), field_(p, n) {
  std::int64_t q = fr_.q();
  LieFamily fam = datum.family();
  if (q == 2 && (fam == LieFamily::B || fam == LieFamily::C))
    throw unsupported_input("B_m(2)/C_m(2): the derived-subgroup identification fails");
  if (fam == LieFamily::G && (q == 2 || q == 3))
    throw unsupported_input("G_2(2)/G_2(3): the derived-subgroup identification fails");
  if (fam == LieFamily::F && q == 2)
    throw unsupported_input("F_4(2): the derived-subgroup identification fails");
  if (datum.rank() > 20) throw resource_bound_exceeded("rank too large for subset enumeration");

  center_fixed_ = center_fixed_points(datum_, fr_);

  std::size_t r = datum.rank();
  std::int64_t qm1 = q - 1;
  subsets_.resize(std::size_t{1} << r);
  for (std::uint32_t mask = 0; mask < subsets_.size(); ++mask) {
    SubsetData& sd = subsets_[mask];
    sd.subset = mask_to_subset(mask);
    sd.torus = stabilizer_torus(datum_, sd.subset);
    sd.embed = fixed_torus_embedding(datum_, sd.torus, fr_);

    std::size_t s = sd.subset.size();
    IntMatrix span(s, r + s);
    for (std::size_t t = 0; t < s; ++t) {
      for (std::size_t c = 0; c < r; ++c) span.at(t, c) = datum_.cartan().at(sd.subset[t], c);
      span.at(t, r + t) = qm1;
    }
    sd.orbit_quotient = quotient_by_columns(span);
    sd.orbit_index_count = sd.orbit_quotient.order();

    std::int64_t h_fixed =
        fixed_point_order(AbelianEndomorphism::multiplication(sd.torus.component_group, q));
    if (sd.orbit_index_count != h_fixed)
      throw internal_error("orbit count disagrees with |H_J^F|");

    sd.stabilizer_order = 1;
    for (std::int64_t o : sd.embed.orders) sd.stabilizer_order *= o;
    if (sd.stabilizer_order != stabilizer_fixed_order(sd.torus, fr_))
      throw internal_error("stabilizer order disagrees with its factorization");
  }

  // Diagonal generator: a multiplier vector on the simple root subgroups
  // whose orbit class at full support generates the orbit quotient.  For
  // the classical families this is pinned to the multiplier of the
  // standard enveloping-group element so that the matrix-group side and
  // the label side realize the same automorphism.
  const SubsetData& full = subsets_.back();
  auto try_vector = [&](std::vector<std::int64_t> v) {
    for (auto& x : v) {
      x %= qm1;
      if (x < 0) x += qm1;
    }
    auto cls = full.orbit_quotient.coords(v);
    if (element_order_in(full.orbit_quotient.factors, cls) ==
        full.orbit_quotient.order()) {
      diag_dlog_ = v;
      return true;
    }
    return false;
  };
  std::vector<std::int64_t> canonical(r, 0);
  bool found = false;
  if (fam == LieFamily::A) {
    canonical[0] = -1;
    found = try_vector(canonical);
    if (!found) throw internal_error("canonical diagonal multiplier fails for type A");
  } else if (fam == LieFamily::C) {
    canonical[r - 1] = -1;
    found = try_vector(canonical);
    if (!found) throw internal_error("canonical diagonal multiplier fails for type C");
  } else {
    for (std::size_t i = 0; i < r && !found; ++i) {
      std::vector<std::int64_t> v(r, 0);
      v[i] = -1;
      found = try_vector(v);
    }
  }
  if (found) {
    for (std::uint32_t mask = 0; mask < subsets_.size(); ++mask) {
      SubsetData& sd = subsets_[mask];
      std::vector<std::int64_t> v;
      for (std::size_t idx : sd.subset) v.push_back(diag_dlog_[idx]);
      sd.diag_shift = sd.orbit_quotient.coords(v);
    }
  }
  // If no cyclic generator exists (non-cyclic orbit quotient), diag_dlog_
  // stays empty and the orbit-census operations reject the input.
}

std::vector<std::size_t> BorelContext::mask_to_subset(std::uint32_t mask) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < datum_.rank(); ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

std::int64_t BorelContext::closed_form_total() const {
  std::int64_t total = 0;
  for (const auto& sd : subsets_) total += sd.orbit_index_count * sd.stabilizer_order;
  return total;
}

namespace {

// Mixed-radix enumeration of coordinate vectors over the given orders.
bool advance(std::vector<std::int64_t>& v, const std::vector<std::int64_t>& orders) {
  std::size_t i = v.size();
  while (i > 0) {
    --i;
    if (++v[i] < orders[i]) return true;
    v[i] = 0;
  }
  return false;
}

std::int64_t flat_rank(const std::vector<std::int64_t>& v, const std::vector<std::int64_t>& orders) {
  std::int64_t out = 0;
  for (std::size_t i = 0; i < v.size(); ++i) out = out * orders[i] + v[i];
  return out;
}

}  // namespace

std::vector<BorelLabel> BorelContext::enumerate_labels() const {
  std::vector<BorelLabel> out;
  for (std::uint32_t mask = 0; mask < subsets_.size(); ++mask) {
    const SubsetData& sd = subsets_[mask];
    std::vector<std::int64_t> orbit(sd.orbit_quotient.factors.size(), 0);
    do {
      std::vector<std::int64_t> psi(sd.embed.orders.size(), 0);
      do {
        out.push_back(BorelLabel{mask, orbit, psi});
      } while (advance(psi, sd.embed.orders));
    } while (advance(orbit, sd.orbit_quotient.factors));
  }
  return out;
}

std::vector<std::int64_t> BorelContext::restriction_to_center(const BorelLabel& label) const {
  const SubsetData& sd = subsets_[label.subset_mask];
  const auto& orders = sd.embed.orders;
  std::int64_t lcm = 1;
  for (std::int64_t o : orders) lcm = std::lcm(lcm, o);
  std::vector<std::int64_t> nu;
  for (std::size_t l = 0; l < sd.embed.center_orders.size(); ++l) {
    const auto& coords = sd.embed.center_coords[l];
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      std::int64_t term = mulmod(label.psi[i] % lcm, mulmod(coords[i], lcm / orders[i], lcm), lcm);
      acc = (acc + term) % lcm;
    }
    std::int64_t m = sd.embed.center_orders[l];
    if ((static_cast<__int128>(acc) * m) % lcm != 0)
      throw internal_error("central value is not an |z|-th root of unity");
    nu.push_back(static_cast<std::int64_t>((static_cast<__int128>(acc) * m / lcm) % m));
  }
  return nu;
}

BorelLabel BorelContext::frobenius_on_label(const BorelLabel& label, std::int64_t level) const {
  if (level < 1 || fr_.n % level != 0)
    throw std::invalid_argument("frobenius level must divide n");
  const SubsetData& sd = subsets_[label.subset_mask];
  BorelLabel out = label;
  // Orbit indices transform covariantly (multiply by p^level), character
  // coordinates contravariantly (multiply by p^(n-level)).
  for (std::size_t i = 0; i < out.orbit.size(); ++i) {
    std::int64_t f = sd.orbit_quotient.factors[i];
    out.orbit[i] = mulmod(out.orbit[i], power_mod(fr_.p, level, f), f);
  }
  for (std::size_t i = 0; i < out.psi.size(); ++i) {
    std::int64_t o = sd.embed.orders[i];
    out.psi[i] = mulmod(out.psi[i], power_mod(fr_.p, fr_.n - level, o), o);
  }
  return out;
}

BorelLabel BorelContext::diagonal_on_label(const BorelLabel& label) const {
  if (diag_dlog_.empty())
    throw unsupported_input("no cyclic diagonal generator for this datum");
  const SubsetData& sd = subsets_[label.subset_mask];
  BorelLabel out = label;
  for (std::size_t i = 0; i < out.orbit.size(); ++i)
    out.orbit[i] = (out.orbit[i] + sd.diag_shift[i]) % sd.orbit_quotient.factors[i];
  return out;
}

std::vector<DiagonalOrbit> BorelContext::diagonal_orbits() const {
  std::vector<DiagonalOrbit> out;
  for (std::uint32_t mask = 0; mask < subsets_.size(); ++mask) {
    const SubsetData& sd = subsets_[mask];
    std::vector<std::int64_t> psi(sd.embed.orders.size(), 0);
    do {
      DiagonalOrbit orb;
      orb.subset_mask = mask;
      orb.psi = psi;
      orb.size = sd.orbit_index_count;
      orb.nu = restriction_to_center(BorelLabel{mask, std::vector<std::int64_t>(
                                                          sd.orbit_quotient.factors.size(), 0),
                                                psi});
      out.push_back(std::move(orb));
    } while (advance(psi, sd.embed.orders));
  }
  return out;
}

std::int64_t BorelContext::per_nu_count(const std::vector<std::int64_t>& nu) const {
  std::int64_t count = 0;
  for (const auto& orb : diagonal_orbits())
    if (orb.nu == nu) count += orb.size;
  return count;
}

OrbitCensus BorelContext::d_orbit_census(const std::vector<std::int64_t>& nu) const {
  std::int64_t d = center_order();
  if (d != 1 && !is_prime_int(d))
    throw unsupported_input("orbit census requires |Z^F| prime or trivial");
  OrbitCensus census;
  for (const auto& orb : diagonal_orbits()) {
    if (orb.nu != nu) continue;
    if (orb.size == 1)
      ++census.singleton_count;
    else if (orb.size == d)
      ++census.full_count;
    else
      throw internal_error("diagonal orbit size is neither 1 nor d");
  }
  return census;
}

std::int64_t BorelContext::fixed_label_census(std::int64_t level, std::int64_t size,
                                              const std::vector<std::int64_t>& mu) const {
  std::int64_t d = center_order();
  if (d != 1 && !is_prime_int(d))
    throw unsupported_input("fixed census requires |Z^F| prime or trivial");
  std::int64_t count = 0;
  for (const auto& orb : diagonal_orbits()) {
    if (orb.size != size || orb.nu != mu) continue;
    const SubsetData& sd = subsets_[orb.subset_mask];
    BorelLabel probe{orb.subset_mask,
                     std::vector<std::int64_t>(sd.orbit_quotient.factors.size(), 0), orb.psi};
    if (frobenius_on_label(probe, level).psi == orb.psi) ++count;
  }
  return count;
}

UnipotentCharacterIndex BorelContext::find_stable_regular_character(std::int64_t level) const {
  if (level < 1 || fr_.n % level != 0)
    throw std::invalid_argument("frobenius level must divide n");
  // The all-ones index is regular and lies in the prime field, hence is
  // fixed by every power of the absolute Frobenius.
  UnipotentCharacterIndex out;
  out.coeffs.assign(datum_.rank(), 1);
  return out;
}

std::int64_t BorelContext::brute_force_count(std::int64_t state_bound) const {
  std::size_t r = datum_.rank();
  std::int64_t q = fr_.q();
  std::int64_t states = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (states > state_bound / q)
      throw resource_bound_exceeded("q^r exceeds the brute-force bound");
    states *= q;
  }

  // Multiplier of the k-th coordinate generator (g in slot k) on the
  // character index at root alpha: g^(-a_{alpha,k}).
  std::vector<std::vector<std::int64_t>> mult(r, std::vector<std::int64_t>(r));
  for (std::size_t alpha = 0; alpha < r; ++alpha)
    for (std::size_t k = 0; k < r; ++k) {
      std::int64_t a = static_cast<std::int64_t>(datum_.cartan().at(alpha, k));
      mult[alpha][k] = field_.exp_of(-a);
    }

  std::int64_t torus_order = 1;
  for (std::size_t i = 0; i < r; ++i) torus_order *= (q - 1);

  std::vector<std::uint8_t> visited(states, 0);
  std::vector<std::int64_t> stack;
  std::vector<std::int64_t> coeffs(r), image(r);
  std::int64_t total = 0;
  for (std::int64_t start = 0; start < states; ++start) {
    if (visited[start]) continue;
    visited[start] = 1;
    stack.assign(1, start);
    std::int64_t orbit_size = 0;
    while (!stack.empty()) {
      std::int64_t state = stack.back();
      stack.pop_back();
      ++orbit_size;
      std::int64_t rem = state;
      for (std::size_t i = 0; i < r; ++i) {
        coeffs[i] = rem % q;
        rem /= q;
      }
      for (std::size_t k = 0; k < r; ++k) {
        std::int64_t next = 0;
        for (std::size_t i = r; i-- > 0;) next = next * q + field_.mul(coeffs[i], mult[i][k]);
        if (!visited[next]) {
          visited[next] = 1;
          stack.push_back(next);
        }
      }
    }
    if (torus_order % orbit_size != 0) throw internal_error("orbit size does not divide |T^F|");
    total += torus_order / orbit_size;
  }
  return total;
}

nlohmann::json BorelContext::labels_to_json() const {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& label : enumerate_labels()) {
    const SubsetData& sd = subsets_[label.subset_mask];
    nlohmann::json j;
    nlohmann::json subset = nlohmann::json::array();
    for (std::size_t idx : sd.subset) subset.push_back(idx + 1);
    j["J"] = subset;
    j["j"] = flat_rank(label.orbit, sd.orbit_quotient.factors) + 1;
    j["psi"] = label.psi;
    j["nu"] = restriction_to_center(label);
    labels.push_back(std::move(j));
  }

  nlohmann::json census;
  census["total"] = closed_form_total();
  nlohmann::json per_nu = nlohmann::json::array();
  for (const auto& nu : characters(center_fixed_)) {
    per_nu.push_back({{"nu", nu}, {"count", per_nu_count(nu)}});
  }
  census["per_nu"] = per_nu;
  std::int64_t d = center_order();
  if ((d == 1 || is_prime_int(d)) && !diag_dlog_.empty()) {
    nlohmann::json orbits = nlohmann::json::array();
    for (const auto& nu : characters(center_fixed_)) {
      auto c = d_orbit_census(nu);
      orbits.push_back({{"nu", nu}, {"N1", c.singleton_count}, {"Nd", c.full_count}});
    }
    census["d_orbits"] = orbits;
  }

  return nlohmann::json{{"schema", "mckay.borel_labels.v1"},
                        {"type", datum_.label()},
                        {"p", fr_.p},
                        {"n", fr_.n},
                        {"q", fr_.q()},
                        {"labels", labels},
                        {"census", census}};
}

std::string BorelContext::labels_to_tsv() const {
  std::ostringstream out;
  out << "# mckay.borel_labels.v1\ttype=" << datum_.label() << "\tp=" << fr_.p << "\tn=" << fr_.n
      << "\n";
  out << "J\tj\tpsi\tnu\n";
  auto join = [](const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s.empty() ? "-" : s;
  };
  for (const auto& label : enumerate_labels()) {
    const SubsetData& sd = subsets_[label.subset_mask];
    std::vector<std::int64_t> subset;
    for (std::size_t idx : sd.subset) subset.push_back(static_cast<std::int64_t>(idx) + 1);
    out << join(subset) << "\t" << flat_rank(label.orbit, sd.orbit_quotient.factors) + 1 << "\t"
        << join(label.psi) << "\t" << join(restriction_to_center(label)) << "\n";
  }
  return out.str();
}

bool BorelContext::orbit_quotients_prime_or_trivial() const {
  std::int64_t d = center_order();
  return d == 1 || is_prime_int(d);
}

}  // namespace mckay
