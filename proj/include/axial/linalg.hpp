#ifndef AXIAL_LINALG_HPP
#define AXIAL_LINALG_HPP

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "axial/fields.hpp"

/// Dense exact linear algebra over any Field: row reduction, rank, kernel,
/// span membership, direct-sum decomposition, eigenspaces for a prescribed
/// eigenvalue (the fusion law supplies the candidate set; no root-finding).
namespace axial {

struct NotInDirectSum : std::domain_error {
  NotInDirectSum() : std::domain_error("vector outside the direct sum") {}
};
struct DimensionMismatch : std::domain_error {
  DimensionMismatch() : std::domain_error("dimension mismatch") {}
};

template <class K>
using Vec = std::vector<K>;

template <class K>
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, const K& fill) : rows(r), cols(c), a(r * c, fill) {}
  K& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const K& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  Vec<K> row(std::size_t i) const {
    return Vec<K>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }
  bool operator==(const Mat&) const = default;
};

template <Field F>
Mat<typename F::Elem> identity_mat(const F& f, std::size_t n) {
  Mat<typename F::Elem> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

template <class K>
bool vec_is_zero(const Vec<K>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch{};
  Vec<K> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

template <class K>
Vec<K> vec_sub(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch{};
  Vec<K> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

template <class K, class S>
Vec<K> vec_scale(const S& cin, const Vec<K>& v) {
  K c(cin);  // force evaluation of expression-template scalars
  Vec<K> r(v);
  for (auto& x : r) x = c * x;
  return r;
}

template <class K>
Vec<K> mat_apply(const Mat<K>& m, const Vec<K>& v) {
  if (m.cols != v.size()) throw DimensionMismatch{};
  Vec<K> r;
  r.reserve(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    K s = m.at(i, 0) * v[0];
    for (std::size_t j = 1; j < m.cols; ++j) s = s + m.at(i, j) * v[j];
    r.push_back(s);
  }
  return r;
}

template <Field F>
Mat<typename F::Elem> mat_mul(const F& f, const Mat<typename F::Elem>& x,
                              const Mat<typename F::Elem>& y) {
  if (x.cols != y.rows) throw DimensionMismatch{};
  Mat<typename F::Elem> r(x.rows, y.cols, f.zero());
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (is_zero(x.at(i, k))) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
    }
  return r;
}

namespace detail {

// Plain Gauss-Jordan; works over any field. Returns pivot columns.
template <Field F>
std::vector<std::size_t> rref_in_place(const F& f, Mat<typename F::Elem>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && is_zero(m.at(piv, c))) ++piv;
    if (piv == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    typename F::Elem inv = f.one() / m.at(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = inv * m.at(r, j);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      typename F::Elem t = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(i, j) = m.at(i, j) - t * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Fraction-free (Bareiss) forward elimination over Z for the rational case:
// clears denominators row-wise, keeps intermediate entries as exact integer
// minors, then normalizes back to a reduced echelon form over Q.
inline std::vector<std::size_t> rref_in_place(const RationalField& f, Mat<Rational>& m) {
  const std::size_t nr = m.rows, nc = m.cols;
  std::vector<std::vector<mpz_class>> z(nr, std::vector<mpz_class>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < nc; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < nc; ++j) {
      mpq_class q = m.at(i, j) * Rational(l);
      q.canonicalize();
      z[i][j] = q.get_num();
    }
  }
  mpz_class prev = 1;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && z[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(z[r], z[piv]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        mpz_class t = z[r][c] * z[i][j] - z[i][c] * z[r][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = z[r][c];
    pivots.push_back(c);
    ++r;
  }
  // normalize + back-substitute over Q
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = Rational(z[i][j]);
  for (std::size_t k = pivots.size(); k-- > 0;) {
    std::size_t c = pivots[k];
    Rational inv = f.one() / m.at(k, c);
    for (std::size_t j = c; j < nc; ++j) m.at(k, j) = inv * m.at(k, j);
    for (std::size_t i = 0; i < k; ++i) {
      if (is_zero(m.at(i, c))) continue;
      Rational t = m.at(i, c);
      for (std::size_t j = c; j < nc; ++j) m.at(i, j) = m.at(i, j) - t * m.at(k, j);
    }
  }
  return pivots;
}

}  // namespace detail

/// Reduced row-echelon form; returns (rref matrix trimmed of zero rows, rank).
template <Field F>
std::pair<Mat<typename F::Elem>, std::size_t> rref(const F& f, Mat<typename F::Elem> m) {
  auto pivots = detail::rref_in_place(f, m);
  Mat<typename F::Elem> out(pivots.size(), m.cols, f.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  return {out, pivots.size()};
}

/// Row-reduced basis of a subspace, with ambient dimension.
template <Field F>
struct Subspace {
  F field;
  std::size_t ambient = 0;
  Mat<typename F::Elem> basis;             // rows in RREF
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return basis.rows; }

  static Subspace span(const F& f, std::size_t ambient,
                       const std::vector<Vec<typename F::Elem>>& gens) {
    Mat<typename F::Elem> m(gens.size(), ambient, f.zero());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].size() != ambient) throw DimensionMismatch{};
      for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = gens[i][j];
    }
    Subspace s{f, ambient, {}, {}};
    s.pivots = detail::rref_in_place(f, m);
    s.basis = Mat<typename F::Elem>(s.pivots.size(), ambient, f.zero());
    for (std::size_t i = 0; i < s.pivots.size(); ++i)
      for (std::size_t j = 0; j < ambient; ++j) s.basis.at(i, j) = m.at(i, j);
    return s;
  }

  bool contains(Vec<typename F::Elem> v) const {
    if (v.size() != ambient) throw DimensionMismatch{};
    for (std::size_t i = 0; i < basis.rows; ++i) {
      typename F::Elem c = v[pivots[i]];
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient; ++j) v[j] = v[j] - c * basis.at(i, j);
    }
    return vec_is_zero(v);
  }

  std::vector<Vec<typename F::Elem>> basis_rows() const {
    std::vector<Vec<typename F::Elem>> out;
    for (std::size_t i = 0; i < basis.rows; ++i) out.push_back(basis.row(i));
    return out;
  }
};

/// Kernel of m (as a subspace of the column space domain).
template <Field F>
Subspace<F> kernel(const F& f, const Mat<typename F::Elem>& m) {
  Mat<typename F::Elem> r = m;
  auto pivots = detail::rref_in_place(f, r);
  std::vector<bool> is_piv(m.cols, false);
  for (auto c : pivots) is_piv[c] = true;
  std::vector<Vec<typename F::Elem>> gens;
  for (std::size_t fc = 0; fc < m.cols; ++fc) {
    if (is_piv[fc]) continue;
    Vec<typename F::Elem> v(m.cols, f.zero());
    v[fc] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, fc);
    gens.push_back(std::move(v));
  }
  return Subspace<F>::span(f, m.cols, gens);
}

/// Kernel of (m - lambda I): the lambda-eigenspace of m.
template <Field F>
Subspace<F> eigenspace(const F& f, const Mat<typename F::Elem>& m,
                       const typename F::Elem& lambda) {
  if (m.rows != m.cols) throw DimensionMismatch{};
  Mat<typename F::Elem> s = m;
  for (std::size_t i = 0; i < m.rows; ++i) s.at(i, i) = s.at(i, i) - lambda;
  return kernel(f, s);
}

/// Coefficients c with sum c_i spanning[i] = v, if v lies in the span.
template <Field F>
std::optional<Vec<typename F::Elem>> solve_in_span(
    const F& f, const std::vector<Vec<typename F::Elem>>& spanning,
    const Vec<typename F::Elem>& v) {
  const std::size_t n = v.size(), m = spanning.size();
  Mat<typename F::Elem> aug(n, m + 1, f.zero());
  for (std::size_t j = 0; j < m; ++j) {
    if (spanning[j].size() != n) throw DimensionMismatch{};
    for (std::size_t i = 0; i < n; ++i) aug.at(i, j) = spanning[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) aug.at(i, m) = v[i];
  auto pivots = detail::rref_in_place(f, aug);
  if (!pivots.empty() && pivots.back() == m) return std::nullopt;  // inconsistent
  Vec<typename F::Elem> c(m, f.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = aug.at(i, m);
  return c;
}

template <Field F>
bool in_span(const F& f, const Vec<typename F::Elem>& v, const Subspace<F>& s) {
  (void)f;
  return s.contains(v);
}

/// Splits v into components lying in the given (independent) subspaces.
/// Throws NotInDirectSum if v is outside their sum.
template <Field F>
std::vector<Vec<typename F::Elem>> decompose(
    const F& f, const Vec<typename F::Elem>& v, const std::vector<Subspace<F>>& parts) {
  std::vector<Vec<typename F::Elem>> flat;
  std::vector<std::size_t> offsets;
  for (const auto& s : parts) {
    offsets.push_back(flat.size());
    for (auto& row : s.basis_rows()) flat.push_back(row);
  }
  auto c = solve_in_span(f, flat, v);
  if (!c) throw NotInDirectSum{};
  std::vector<Vec<typename F::Elem>> out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    Vec<typename F::Elem> comp(v.size(), f.zero());
    std::size_t base = offsets[k];
    for (std::size_t i = 0; i < parts[k].dim(); ++i)
      comp = vec_add(comp, vec_scale((*c)[base + i], flat[base + i]));
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace axial

#endif  // AXIAL_LINALG_HPP
