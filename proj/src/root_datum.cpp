#include "mckay/root_datum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

void add_edge(IntMatrix& c, std::size_t i, std::size_t j, long long aij, long long aji) {
  c.at(i, j) = aij;
  c.at(j, i) = aji;
}

IntMatrix cartan_matrix(LieFamily family, std::size_t n) {
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c.at(i, i) = 2;
  auto chain = [&](std::size_t upto) {
    for (std::size_t i = 0; i + 1 < upto; ++i) add_edge(c, i, i + 1, -1, -1);
  };
  switch (family) {
    case LieFamily::A:
      chain(n);
      break;
    case LieFamily::B:  // alpha_n short
      chain(n - 1);
      add_edge(c, n - 2, n - 1, -2, -1);
      break;
    case LieFamily::C:  // alpha_n long
      chain(n - 1);
      add_edge(c, n - 2, n - 1, -1, -2);
      break;
    case LieFamily::D:
      chain(n - 1);
      add_edge(c, n - 3, n - 1, -1, -1);
      break;
    case LieFamily::E:
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4.
      add_edge(c, 0, 2, -1, -1);
      for (std::size_t i = 2; i + 1 < n; ++i) add_edge(c, i, i + 1, -1, -1);
      add_edge(c, 1, 3, -1, -1);
      break;
    case LieFamily::F:  // alpha_1, alpha_2 long
      add_edge(c, 0, 1, -1, -1);
      add_edge(c, 1, 2, -2, -1);
      add_edge(c, 2, 3, -1, -1);
      break;
    case LieFamily::G:  // alpha_1 short
      add_edge(c, 0, 1, -1, -3);
      break;
  }
  return c;
}

// Symmetrize with positive integer weights and check positive definiteness
// via leading principal minors.
void validate_cartan(const IntMatrix& c) {
  std::size_t n = c.rows();
  std::vector<Int> w(n, 0);
  w[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || c.at(i, j) == 0 || w[i] == 0 || w[j] != 0) continue;
        // w_j * a_ji = w_i * a_ij
        Int num = w[i] * c.at(i, j);
        if (num % c.at(j, i) != 0) {
          for (auto& x : w)
            if (x != 0) x *= abs(c.at(j, i));
          num = w[i] * c.at(i, j);
        }
        w[j] = num / c.at(j, i);
        changed = true;
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (w[i] <= 0) throw internal_error("cartan symmetrizer failed (diagram disconnected?)");
  IntMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.at(i, j) = w[i] * c.at(i, j);
  if (!(s == s.transpose())) throw internal_error("cartan symmetrization not symmetric");
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = s.at(i, j);
    if (minor.determinant() <= 0) throw internal_error("cartan symmetrization not positive definite");
  }
}

std::size_t known_positive_root_count(LieFamily f, std::size_t n) {
  switch (f) {
    case LieFamily::A: return n * (n + 1) / 2;
    case LieFamily::B:
    case LieFamily::C: return n * n;
    case LieFamily::D: return n * (n - 1);
    case LieFamily::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case LieFamily::F: return 24;
    case LieFamily::G: return 6;
  }
  throw internal_error("unreachable");
}

}  // namespace

std::string family_name(LieFamily f) {
  switch (f) {
    case LieFamily::A: return "A";
    case LieFamily::B: return "B";
    case LieFamily::C: return "C";
    case LieFamily::D: return "D";
    case LieFamily::E: return "E";
    case LieFamily::F: return "F";
    case LieFamily::G: return "G";
  }
  throw internal_error("unreachable");
}

RootDatum::RootDatum(LieFamily family, std::size_t rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case LieFamily::A: ok = rank >= 1; break;
    case LieFamily::B: ok = rank >= 2; break;
    case LieFamily::C: ok = rank >= 2; break;
    case LieFamily::D: ok = rank >= 3; break;
    case LieFamily::E: ok = rank >= 6 && rank <= 8; break;
    case LieFamily::F: ok = rank == 4; break;
    case LieFamily::G: ok = rank == 2; break;
  }
  if (!ok) throw unsupported_input("unsupported type " + family_name(family) + std::to_string(rank));
  cartan_ = cartan_matrix(family, rank);
  validate_cartan(cartan_);
}

std::string RootDatum::label() const { return family_name(family_) + std::to_string(rank_); }

RootDatum build_root_datum(const std::string& label) {
  if (label.size() < 2) throw unsupported_input("bad type label '" + label + "'");
  LieFamily fam;
  switch (label[0]) {
    case 'A': fam = LieFamily::A; break;
    case 'B': fam = LieFamily::B; break;
    case 'C': fam = LieFamily::C; break;
    case 'D': fam = LieFamily::D; break;
    case 'E': fam = LieFamily::E; break;
    case 'F': fam = LieFamily::F; break;
    case 'G': fam = LieFamily::G; break;
    default: throw unsupported_input("bad type label '" + label + "'");
  }
  std::size_t rank = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (label[i] < '0' || label[i] > '9') throw unsupported_input("bad type label '" + label + "'");
    rank = rank * 10 + static_cast<std::size_t>(label[i] - '0');
  }
  return RootDatum(fam, rank);
}

PositiveRootSet positive_roots(const RootDatum& d) {
  std::size_t n = d.rank();
  const IntMatrix& c = d.cartan();
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto root = queue.back();
    queue.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      // s_j(root): subtract <root, alpha_j^vee> alpha_j
      std::int64_t pairing = 0;
      for (std::size_t i = 0; i < n; ++i)
        pairing += root[i] * static_cast<std::int64_t>(c.at(i, j));
      auto image = root;
      image[j] -= pairing;
      if (std::all_of(image.begin(), image.end(), [](std::int64_t x) { return x >= 0; }) &&
          seen.insert(image).second)
        queue.push_back(image);
    }
  }
  PositiveRootSet out;
  out.roots.assign(seen.begin(), seen.end());
  if (out.roots.size() != known_positive_root_count(d.family(), d.rank()))
    throw internal_error("positive root closure has wrong size for " + d.label());
  return out;
}

std::vector<std::int64_t> highest_root(const RootDatum& d) {
  auto roots = positive_roots(d);
  auto height = [](const std::vector<std::int64_t>& r) {
    return std::accumulate(r.begin(), r.end(), std::int64_t{0});
  };
  const std::vector<std::int64_t>* best = &roots.roots.front();
  for (const auto& r : roots.roots)
    if (height(r) > height(*best)) best = &r;
  for (const auto& r : roots.roots)
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] > (*best)[i]) throw internal_error("highest root is not dominant");
  return *best;
}

FiniteAbelianGroup center(const RootDatum& d) {
  return FiniteAbelianGroup::from_invariants(cokernel_torsion_invariants(d.cartan()));
}

FiniteAbelianGroup levi_center_component_group(const RootDatum& d,
                                               const std::vector<std::size_t>& subset) {
  IntMatrix rows(subset.size(), d.rank());
  for (std::size_t t = 0; t < subset.size(); ++t) {
    if (subset[t] >= d.rank()) throw std::invalid_argument("subset index out of range");
    for (std::size_t j = 0; j < d.rank(); ++j) rows.at(t, j) = d.cartan().at(subset[t], j);
  }
  return FiniteAbelianGroup::from_invariants(cokernel_torsion_invariants(rows));
}

bool is_good_prime(const RootDatum& d, std::int64_t p) {
  for (std::int64_t coeff : highest_root(d))
    if (coeff % p == 0) return false;
  return true;
}

bool is_nonsingular_prime(const RootDatum& d, std::int64_t p) {
  LieFamily f = d.family();
  if (p == 2 && (f == LieFamily::B || f == LieFamily::C || f == LieFamily::F || f == LieFamily::G))
    return false;
  if (p == 3 && f == LieFamily::G) return false;
  return true;
}

std::vector<std::int64_t> exponents(const RootDatum& d) {
  auto roots = positive_roots(d);
  std::map<std::int64_t, std::size_t> by_height;
  for (const auto& r : roots.roots)
    ++by_height[std::accumulate(r.begin(), r.end(), std::int64_t{0})];
  std::vector<std::int64_t> out;
  for (std::size_t j = 1; j <= d.rank(); ++j) {
    std::int64_t count = 0;
    for (const auto& [h, c] : by_height)
      if (c >= j) ++count;
    out.push_back(count);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int group_order(const RootDatum& d, std::int64_t q) {
  if (q < 2) throw std::invalid_argument("group_order: q must be >= 2");
  Int order = 1;
  std::size_t npos = positive_roots(d).size();
  for (std::size_t i = 0; i < npos; ++i) order *= q;
  for (std::int64_t m : exponents(d)) {
    Int factor = 1;
    for (std::int64_t t = 0; t < m + 1; ++t) factor *= q;
    order *= factor - 1;
  }
  return order;
}

void to_json(nlohmann::json& j, const RootDatum& d) {
  nlohmann::json cartan = nlohmann::json::array();
  for (std::size_t i = 0; i < d.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < d.rank(); ++k)
      row.push_back(static_cast<std::int64_t>(d.cartan().at(i, k)));
    cartan.push_back(row);
  }
  j = nlohmann::json{{"schema", "mckay.root_datum.v1"},
                     {"type", d.label()},
                     {"rank", d.rank()},
                     {"cartan", cartan},
                     {"isogeny", "simply_connected"}};
}

RootDatum root_datum_from_json(const nlohmann::json& j) {
  if (j.at("schema") != "mckay.root_datum.v1")
    throw unsupported_input("unknown root datum schema");
  RootDatum d = build_root_datum(j.at("type").get<std::string>());
  nlohmann::json expected;
  to_json(expected, d);
  if (expected.at("cartan") != j.at("cartan"))
    throw unsupported_input("cartan rows do not match type label");
  return d;
}

}  // namespace mckay
