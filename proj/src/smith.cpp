#include "mckay/smith.hpp"

#include <cstdlib>
#include <limits>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

// Position of the nonzero entry of smallest absolute value in the
// submatrix a[t.., t..], or {npos, npos} if that submatrix is zero.
std::pair<std::size_t, std::size_t> smallest_pivot(const IntMatrix& a, std::size_t t) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t bi = npos, bj = npos;
  Int best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Int& v = a.at(i, j);
      if (v == 0) continue;
      Int av = abs(v);
      if (bi == npos || av < best) {
        best = std::move(av);
        bi = i;
        bj = j;
      }
    }
  return {bi, bj};
}

void verify(const SmithDecomposition& s) {
  if (s.left * s.source * s.right != s.diagonal)
    throw internal_error("smith_normal_form: transform identity violated");
  Int du = s.left.determinant();
  Int dv = s.right.determinant();
  if (du != 1 && du != -1) throw internal_error("smith_normal_form: U not unimodular");
  if (dv != 1 && dv != -1) throw internal_error("smith_normal_form: V not unimodular");
  std::size_t k = std::min(s.diagonal.rows(), s.diagonal.cols());
  for (std::size_t i = 0; i < s.diagonal.rows(); ++i)
    for (std::size_t j = 0; j < s.diagonal.cols(); ++j)
      if (i != j && s.diagonal.at(i, j) != 0)
        throw internal_error("smith_normal_form: off-diagonal entry");
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const Int& a = s.diagonal.at(i, i);
    const Int& b = s.diagonal.at(i + 1, i + 1);
    if (a < 0 || b < 0) throw internal_error("smith_normal_form: negative invariant");
    if (a == 0 && b != 0) throw internal_error("smith_normal_form: zero before nonzero");
    if (a != 0 && b % a != 0) throw internal_error("smith_normal_form: divisibility violated");
  }
}

}  // namespace

std::vector<Int> SmithDecomposition::invariant_factors() const {
  std::vector<Int> out;
  std::size_t k = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (diagonal.at(i, i) != 0) out.push_back(diagonal.at(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  std::size_t k = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < k; ++t) {
    auto [pi, pj] = smallest_pivot(a, t);
    if (pi == npos) break;  // remaining block is zero
    a.swap_rows(t, pi);
    u.swap_rows(t, pi);
    a.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      bool disturbed = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = a.at(i, t) / a.at(t, t);
        if (q != 0) {
          a.add_row_multiple(i, t, -q);
          u.add_row_multiple(i, t, -q);
        }
        if (a.at(i, t) != 0) {
          // remainder becomes the new, strictly smaller pivot
          a.swap_rows(t, i);
          u.swap_rows(t, i);
          disturbed = true;
        }
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = a.at(t, j) / a.at(t, t);
        if (q != 0) {
          a.add_col_multiple(j, t, -q);
          v.add_col_multiple(j, t, -q);
        }
        if (a.at(t, j) != 0) {
          a.swap_cols(t, j);
          v.swap_cols(t, j);
          disturbed = true;
        }
      }
      if (disturbed) continue;

      // Pivot must divide everything below/right of it; if not, mix the
      // offending row in and reduce again.
      bool fixed = true;
      for (std::size_t i = t + 1; i < a.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < a.cols() && fixed; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            a.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
  }

  for (std::size_t t = 0; t < k; ++t)
    if (a.at(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }

  SmithDecomposition out{std::move(u), std::move(a), std::move(v), m};
  verify(out);
  return out;
}

std::vector<Int> cokernel_torsion_invariants(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  std::vector<Int> out;
  for (const Int& d : snf.invariant_factors())
    if (d > 1) out.push_back(d);
  return out;
}

std::int64_t ColumnQuotient::order() const {
  std::int64_t o = 1;
  for (std::int64_t f : factors) o *= f;
  return o;
}

std::vector<std::int64_t> ColumnQuotient::coords(const std::vector<std::int64_t>& v) const {
  if (v.size() != transform.cols()) throw std::invalid_argument("ColumnQuotient::coords size");
  std::vector<std::int64_t> out(factors.size());
  for (std::size_t t = 0; t < kept_rows.size(); ++t) {
    std::size_t i = kept_rows[t];
    Int acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += transform.at(i, j) * v[j];
    Int r = acc % factors[t];
    if (r < 0) r += factors[t];
    out[t] = static_cast<std::int64_t>(r);
  }
  return out;
}

ColumnQuotient quotient_by_columns(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  auto inv = snf.invariant_factors();
  if (inv.size() != a.rows())
    throw std::invalid_argument("quotient_by_columns: column span has infinite index");
  ColumnQuotient out;
  out.transform = snf.left;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (inv[i] > 1) {
      if (inv[i] > std::numeric_limits<std::int64_t>::max())
        throw resource_bound_exceeded("quotient_by_columns: invariant factor too large");
      out.factors.push_back(static_cast<std::int64_t>(inv[i]));
      out.kept_rows.push_back(i);
    }
  }
  return out;
}

}  // namespace mckay
