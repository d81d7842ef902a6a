#include "mckay/fq.hpp"

#include <numeric>
#include <stdexcept>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

constexpr std::int64_t kAddTableLimit = 1024;
constexpr std::int64_t kFieldSizeLimit = 1 << 21;

std::vector<std::int64_t> prime_factors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) out.push_back(m);
  return out;
}

// Dense polynomial arithmetic over F_p, coefficients little-endian.
using Poly = std::vector<std::int64_t>;

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::int64_t p) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  std::size_t deg = modulus.size() - 1;
  for (std::size_t i = prod.size(); i-- > deg;) {
    std::int64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < deg; ++j) {
      prod[i - deg + j] = (prod[i - deg + j] - c * modulus[j]) % p;
      if (prod[i - deg + j] < 0) prod[i - deg + j] += p;
    }
  }
  prod.resize(deg);
  return prod;
}

Poly pow_mod(Poly base, std::int64_t e, const Poly& modulus, std::int64_t p) {
  Poly out{1};
  out.resize(modulus.size() - 1, 0);
  base.resize(modulus.size() - 1, 0);
  while (e > 0) {
    if (e & 1) out = mul_mod(out, base, modulus, p);
    base = mul_mod(base, base, modulus, p);
    e >>= 1;
  }
  return out;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    // a mod b
    std::int64_t lead = b.back();
    std::int64_t lead_inv = 1;
    for (std::int64_t t = 1; t < p; ++t)
      if (lead * t % p == 1) {
        lead_inv = t;
        break;
      }
    while (a.size() >= b.size() && !a.empty()) {
      std::int64_t c = a.back() * lead_inv % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = (a[shift + i] - c * b[i]) % p;
        if (a[shift + i] < 0) a[shift + i] += p;
      }
      a = trim(std::move(a));
    }
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::int64_t p, std::int64_t n) {
  // x^(p^n) = x mod f, and gcd(x^(p^(n/l)) - x, f) = 1 for prime l | n.
  std::int64_t pn = 1;
  for (std::int64_t i = 0; i < n; ++i) pn *= p;
  Poly x{0, 1};
  Poly xq = pow_mod(x, pn, f, p);
  Poly xv = x;
  xv.resize(f.size() - 1, 0);
  if (trim(xq) != trim(xv)) return false;
  for (std::int64_t l : prime_factors(n)) {
    std::int64_t e = 1;
    for (std::int64_t i = 0; i < n / l; ++i) e *= p;
    Poly g = pow_mod(x, e, f, p);
    // g - x
    Poly diff = g;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] - 1 + p) % p;
    Poly gc = poly_gcd(diff, f, p);
    if (trim(gc).size() > 1) return false;
  }
  return true;
}

}  // namespace

FqContext::FqContext(std::int64_t p, std::int64_t n) : p_(p), n_(n) {
  if (p < 2) throw std::invalid_argument("FqContext: p must be prime");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("FqContext: p must be prime");
  if (n < 1) throw std::invalid_argument("FqContext: n must be positive");
  q_ = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    q_ *= p;
    if (q_ > kFieldSizeLimit) throw resource_bound_exceeded("field size exceeds table limit");
  }

  // Least monic irreducible of degree n, ordered by packed coefficient tail.
  std::int64_t tail = 0;
  for (;; ++tail) {
    if (tail >= q_) throw internal_error("no irreducible polynomial found");
    Poly f(n + 1, 0);
    std::int64_t t = tail;
    for (std::int64_t i = 0; i < n; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[n] = 1;
    if (n == 1 || is_irreducible(f, p, n)) {
      modulus_.assign(f.begin(), f.end());
      break;
    }
  }

  // Generator: least element index of multiplicative order q-1.
  auto factors = prime_factors(q_ - 1);
  Poly mod(modulus_.begin(), modulus_.end());
  auto to_poly = [&](std::int64_t a) {
    Poly f(n, 0);
    for (std::int64_t i = 0; i < n; ++i) {
      f[i] = a % p;
      a /= p;
    }
    return f;
  };
  auto to_index = [&](const Poly& f) {
    std::int64_t a = 0;
    for (std::int64_t i = n - 1; i >= 0; --i) a = a * p + (i < (std::int64_t)f.size() ? f[i] : 0);
    return a;
  };
  generator_ = 0;
  for (std::int64_t g = 1; g < q_; ++g) {
    bool ok = q_ > 2 || g == 1;
    for (std::int64_t l : factors)
      if (to_index(pow_mod(to_poly(g), (q_ - 1) / l, mod, p)) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      generator_ = g;
      break;
    }
  }
  if (generator_ == 0) throw internal_error("no multiplicative generator found");

  exp_table_.resize(q_ - 1);
  log_table_.assign(q_, 0);
  Poly cur{1};
  cur.resize(n, 0);
  Poly gen = to_poly(generator_);
  for (std::int64_t e = 0; e < q_ - 1; ++e) {
    std::int64_t idx = to_index(cur);
    exp_table_[e] = static_cast<std::int32_t>(idx);
    log_table_[idx] = static_cast<std::int32_t>(e);
    cur = mul_mod(cur, gen, mod, p);
  }
  if (to_index(cur) != 1) throw internal_error("generator order mismatch");

  if (q_ <= kAddTableLimit) {
    add_table_.resize(q_ * q_);
    for (std::int64_t a = 0; a < q_; ++a)
      for (std::int64_t b = 0; b < q_; ++b)
        add_table_[a * q_ + b] = static_cast<std::int32_t>(add_slow(a, b));
    has_add_table_ = true;
  }
}

std::vector<std::int64_t> FqContext::decode(std::int64_t a) const {
  std::vector<std::int64_t> c(n_);
  for (std::int64_t i = 0; i < n_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::int64_t FqContext::encode(const std::vector<std::int64_t>& c) const {
  std::int64_t a = 0;
  for (std::int64_t i = n_ - 1; i >= 0; --i) a = a * p_ + c[i];
  return a;
}

std::int64_t FqContext::add_slow(std::int64_t a, std::int64_t b) const {
  auto ca = decode(a), cb = decode(b);
  for (std::int64_t i = 0; i < n_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return encode(ca);
}

std::int64_t FqContext::add(std::int64_t a, std::int64_t b) const {
  if (has_add_table_) return add_table_[a * q_ + b];
  return add_slow(a, b);
}

std::int64_t FqContext::neg(std::int64_t a) const {
  auto c = decode(a);
  for (std::int64_t i = 0; i < n_; ++i) c[i] = (p_ - c[i]) % p_;
  return encode(c);
}

std::int64_t FqContext::mul(std::int64_t a, std::int64_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_table_[(log_table_[a] + log_table_[b]) % (q_ - 1)];
}

std::int64_t FqContext::inv(std::int64_t a) const {
  if (a == 0) throw std::invalid_argument("division by zero in F_q");
  return exp_table_[(q_ - 1 - log_table_[a]) % (q_ - 1)];
}

std::int64_t FqContext::pow(std::int64_t a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw std::invalid_argument("division by zero in F_q");
    return e == 0 ? 1 : 0;
  }
  std::int64_t l = (log_table_[a] * (e % (q_ - 1))) % (q_ - 1);
  if (l < 0) l += q_ - 1;
  return exp_table_[l];
}

std::int64_t FqContext::frobenius(std::int64_t a, std::int64_t j) const {
  if (a == 0) return 0;
  if (q_ == 2) return a;
  std::int64_t e = 1;
  for (std::int64_t i = 0; i < j; ++i) e = (e * p_) % (q_ - 1);
  return exp_table_[(log_table_[a] * e) % (q_ - 1)];
}

std::int64_t FqContext::trace(std::int64_t a) const {
  std::int64_t acc = 0;
  std::int64_t cur = a;
  for (std::int64_t i = 0; i < n_; ++i) {
    acc = add(acc, cur);
    cur = frobenius(cur, 1);
  }
  if (acc % p_ != acc) throw internal_error("trace not in the prime field");
  return acc;
}

std::int64_t FqContext::exp_of(std::int64_t e) const {
  e %= (q_ - 1);
  if (e < 0) e += q_ - 1;
  return exp_table_[e];
}

std::int64_t FqContext::log_of(std::int64_t a) const {
  if (a == 0) throw std::invalid_argument("log of zero");
  return log_table_[a];
}

std::int64_t FqContext::element_order(std::int64_t a) const {
  if (a == 0) throw std::invalid_argument("order of zero");
  std::int64_t l = log_table_[a];
  if (l == 0) return 1;
  std::int64_t g = std::gcd(l, q_ - 1);
  return (q_ - 1) / g;
}

}  // namespace mckay
