#ifndef AXIAL_HIGHWATER_HPP
#define AXIAL_HIGHWATER_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "axial/linalg.hpp"

/// Windowed model of the Highwater algebra H and its cover. Basis vectors are
/// a_i (|i| <= 2N) and s_{r,j} (j <= 2N; r in Z_3 only for the cover and
/// j in 3N). Products follow the cover's table with the conventions
/// s_{.,0} = 0 and s_{1,j} = s_{2,j} = s_{0,j} for j not divisible by 3; in
/// the quotient H all residues collapse and both s-product branches reduce to
/// a single rule. Products are defined when the operands' support radii sum
/// to at most 2N.
namespace axial {

struct SupportExceedsWindow : std::domain_error {
  SupportExceedsWindow() : std::domain_error("product support exceeds the window") {}
};
struct BadCharacteristic : std::invalid_argument {
  explicit BadCharacteristic(const std::string& w) : std::invalid_argument(w) {}
};

template <Field F>
class HighwaterWindow {
 public:
  using K = typename F::Elem;

  HighwaterWindow(const F& f, long radius, bool cover) : f_(f), N_(radius), cover_(cover) {
    if (f.characteristic() == 3)
      throw BadCharacteristic("the cover is not primitive in characteristic 3");
    for (long i = -2 * N_; i <= 2 * N_; ++i) {
      aidx_[i] = basis_.size();
      basis_.push_back({true, i, 0});
    }
    for (long j = 1; j <= 2 * N_; ++j) {
      for (int r = 0; r < (cover_ && j % 3 == 0 ? 3 : 1); ++r) {
        sidx_[{r, j}] = basis_.size();
        basis_.push_back({false, r, j});
      }
    }
  }

  std::size_t dim() const { return basis_.size(); }
  long radius() const { return N_; }
  bool cover() const { return cover_; }
  const F& field() const { return f_; }

  Vec<K> a(long i) const {
    Vec<K> v(dim(), f_.zero());
    v[aidx_.at(i)] = f_.one();
    return v;
  }

  /// s_{r,j} resolved through the index conventions.
  Vec<K> s(long r, long j) const {
    Vec<K> v(dim(), f_.zero());
    if (j == 0) return v;
    if (j < 0) j = -j;
    if (!cover_ || j % 3 != 0)
      v[sidx_.at({0, j})] = f_.one();
    else
      v[sidx_.at({static_cast<int>(((r % 3) + 3) % 3), j})] = f_.one();
    return v;
  }

  long support_radius(const Vec<K>& x) const {
    long r = 0;
    for (std::size_t k = 0; k < dim(); ++k) {
      if (is_zero(x[k])) continue;
      long rk = basis_[k].is_a ? std::abs(basis_[k].p) : basis_[k].q;
      if (rk > r) r = rk;
    }
    return r;
  }

  Vec<K> multiply(const Vec<K>& x, const Vec<K>& y) const {
    if (support_radius(x) + support_radius(y) > 2 * N_) throw SupportExceedsWindow{};
    Vec<K> out(dim(), f_.zero());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(y[j])) continue;
        Vec<K> m = basis_product(i, j);
        K c = x[i] * y[j];
        for (std::size_t k = 0; k < dim(); ++k) out[k] = out[k] + c * m[k];
      }
    }
    return out;
  }

  /// ad_{a_0} as a matrix; the window is invariant under it.
  Mat<K> adjoint_a0() const {
    Mat<K> m(dim(), dim(), f_.zero());
    Vec<K> a0 = a(0);
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec<K> ej(dim(), f_.zero());
      ej[j] = f_.one();
      Vec<K> col = multiply_nocheck(a0, ej);
      for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  /// lambda_{a_0}(x) through the Lagrange projector onto the 1-eigenspace;
  /// checks the projection is a pure a_0 multiple.
  K lambda_a0(const Vec<K>& x) const {
    Mat<K> ad = adjoint_a0();
    std::vector<K> evs = {f_.one(), f_.zero(), f_.from_int(2), f_.from_ratio(1, 2)};
    Vec<K> v = x;
    for (std::size_t t = 1; t < evs.size(); ++t) {
      Vec<K> w = mat_apply(ad, v);
      K den = f_.one() - evs[t];
      for (std::size_t k = 0; k < dim(); ++k) v[k] = (w[k] - evs[t] * v[k]) / den;
    }
    for (std::size_t k = 0; k < dim(); ++k)
      if (k != aidx_.at(0) && !is_zero(v[k]))
        throw std::logic_error("1-eigenprojection is not a multiple of a0");
    return v[aidx_.at(0)];
  }

  /// Sum of eigenspace dimensions of ad_{a_0} over {1,0,2,1/2} equals dim.
  bool direct_sum_ok() const {
    Mat<K> ad = adjoint_a0();
    std::vector<K> evs = {f_.one(), f_.zero(), f_.from_int(2), f_.from_ratio(1, 2)};
    std::size_t total = 0;
    for (const auto& lam : evs) total += eigenspace(f_, ad, lam).dim();
    return total == dim();
  }

  /// Lemma: a_i a_j = 1/2 (a_i + a_j) + s_{0,|i-j|} for all in-window i, j.
  bool prodottifacili() const {
    for (long i = -N_; i <= N_; ++i)
      for (long j = -N_; j <= N_; ++j) {
        if (i == j) continue;
        Vec<K> lhs = multiply(a(i), a(j));
        Vec<K> rhs = vec_add(vec_scale(f_.from_ratio(1, 2), vec_add(a(i), a(j))), s(0, i > j ? i - j : j - i));
        if (lhs != rhs) return false;
      }
    return true;
  }

  /// The Note-2 ideal J = < s_{0,j}-s_{2,j}, s_{1,j}-s_{0,j} : j in 3N >
  /// absorbs all in-window products (cover only).
  bool j_ideal_absorbs() const {
    if (!cover_) return true;
    std::vector<Vec<K>> gens;
    for (long j = 3; j <= 2 * N_; j += 3) {
      gens.push_back(vec_sub(s(0, j), s(2, j)));
      gens.push_back(vec_sub(s(1, j), s(0, j)));
    }
    auto J = Subspace<F>::span(f_, dim(), gens);
    for (std::size_t b = 0; b < dim(); ++b) {
      long rb = basis_[b].is_a ? std::abs(basis_[b].p) : basis_[b].q;
      if (rb > N_) continue;
      Vec<K> eb(dim(), f_.zero());
      eb[b] = f_.one();
      for (const auto& g : gens) {
        if (support_radius(g) > N_) continue;
        if (!J.contains(multiply(eb, g))) return false;
      }
    }
    return true;
  }

 private:
  struct BasisElem {
    bool is_a;
    long p;  // a-index, or s-residue
    long q;  // s-level
  };

  Vec<K> multiply_nocheck(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> out(dim(), f_.zero());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(y[j])) continue;
        Vec<K> m = basis_product(i, j);
        K c = x[i] * y[j];
        for (std::size_t k = 0; k < dim(); ++k) out[k] = out[k] + c * m[k];
      }
    }
    return out;
  }

  K delta(long r) const {
    r = ((r % 3) + 3) % 3;
    if (r == 0) return f_.zero();
    return r == 1 ? f_.one() : -f_.one();
  }

  Vec<K> basis_product(std::size_t i, std::size_t j) const {
    const BasisElem& x = basis_[i];
    const BasisElem& y = basis_[j];
    const K half = f_.from_ratio(1, 2);
    if (x.is_a && y.is_a) {
      if (x.p == y.p) return a(x.p);
      return vec_add(vec_scale(half, vec_add(a(x.p), a(y.p))), s(0, std::abs(x.p - y.p)));
    }
    if (x.is_a || y.is_a) {
      const BasisElem& ax = x.is_a ? x : y;
      const BasisElem& sx = x.is_a ? y : x;
      long i0 = ax.p, r = sx.p, jj = sx.q;
      Vec<K> out = vec_scale(f_.from_ratio(-3, 4), a(i0));
      out = vec_add(out, vec_scale(f_.from_ratio(3, 8), vec_add(a(i0 - jj), a(i0 + jj))));
      Vec<K> sv(dim(), f_.zero());
      sv[x.is_a ? j : i] = f_.one();
      out = vec_add(out, vec_scale(f_.from_ratio(3, 2), sv));
      if (cover_ && jj % 3 == 0) {
        K d = delta(i0 - r);
        if (!is_zero(d)) out = vec_add(out, vec_scale(d, vec_sub(s(r - 1, jj), s(r + 1, jj))));
      }
      return out;
    }
    long r = x.p, jj = x.q, t = y.p, kk = y.q;
    if (cover_ && jj % 3 == 0 && kk % 3 == 0) {
      Vec<K> out(dim(), f_.zero());
      long mr = -(r + t);
      for (long h : {jj, kk}) {
        Vec<K> term = vec_sub(vec_add(s(r, h), s(t, h)), s(mr, h));
        out = vec_add(out, vec_scale(f_.from_ratio(3, 4), term));
      }
      for (long h : {std::abs(jj - kk), jj + kk}) {
        Vec<K> term = vec_sub(vec_add(s(r, h), s(t, h)), s(mr, h));
        out = vec_add(out, vec_scale(f_.from_ratio(-3, 8), term));
      }
      return out;
    }
    Vec<K> out = vec_scale(f_.from_ratio(3, 4), vec_add(s(r, jj), s(t, kk)));
    if (cover_) {
      for (long xx : {0L, 1L, 2L}) {
        out = vec_add(out, vec_scale(f_.from_ratio(-1, 8),
                                     vec_add(s(xx, std::abs(jj - kk)), s(xx, jj + kk))));
      }
    } else {
      out = vec_add(out, vec_scale(f_.from_ratio(-3, 8),
                                   vec_add(s(0, std::abs(jj - kk)), s(0, jj + kk))));
    }
    return out;
  }

  F f_;
  long N_;
  bool cover_;
  std::vector<BasisElem> basis_;
  std::map<long, std::size_t> aidx_;
  std::map<std::pair<int, long>, std::size_t> sidx_;
};

}  // namespace axial

#endif  // AXIAL_HIGHWATER_HPP
