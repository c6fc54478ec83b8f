#ifndef AXIAL_AXIAL_HPP
#define AXIAL_AXIAL_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "axial/algebra.hpp"

/// Fusion laws of Table 1, axis verification (A0-A3), Miyamoto involutions,
/// the axis orbit a_i, the s-elements, projections lambda_i / lambda_i^f, and
/// the flip test.
namespace axial {

struct InadmissibleParameters : std::invalid_argument {
  explicit InadmissibleParameters(const std::string& what)
      : std::invalid_argument("inadmissible parameters: " + what) {}
};
struct AxisNotVerified : std::domain_error {
  AxisNotVerified() : std::domain_error("Miyamoto map of an unverified axis") {}
};

template <Field F>
class FusionLaw {
 public:
  using K = typename F::Elem;
  enum class Kind { jordan, monster };

  static FusionLaw jordan(const F& f, const K& eta) {
    check_unit_interval(f, eta, "eta");
    return FusionLaw(f, Kind::jordan, {f.one(), f.zero(), eta});
  }
  static FusionLaw monster(const F& f, const K& alpha, const K& beta) {
    check_unit_interval(f, alpha, "alpha");
    check_unit_interval(f, beta, "beta");
    if (alpha == beta) throw InadmissibleParameters("alpha = beta");
    return FusionLaw(f, Kind::monster, {f.one(), f.zero(), alpha, beta});
  }

  Kind kind() const { return kind_; }
  const std::vector<K>& eigenvalues() const { return evs_; }
  K alpha() const { return evs_[2]; }
  K beta() const { return evs_[kind_ == Kind::monster ? 3 : 2]; }

  /// Indices (into eigenvalues()) allowed for a product from V_i * V_j.
  std::set<std::size_t> star(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    if (kind_ == Kind::jordan) {
      // J(eta): eta*eta = {1,0}; 1*0 empty; eta absorbs 1 and 0
      if (i == 0 && j == 0) return {0};
      if (i == 0 && j == 1) return {};
      if (i == 1 && j == 1) return {1};
      if (j == 2) return i == 2 ? std::set<std::size_t>{0, 1} : std::set<std::size_t>{2};
      return {};
    }
    // M(alpha,beta), Table 1
    if (i == 0 && j == 0) return {0};
    if (i == 0 && j == 1) return {};
    if (i == 1 && j == 1) return {1};
    if (j == 2 && i <= 1) return {2};
    if (i == 2 && j == 2) return {0, 1};
    if (j == 3 && i <= 2) return {3};
    return {0, 1, 2};  // beta * beta
  }

  /// Index of the graded (negated) eigenvalue; monster law only.
  std::size_t graded_index() const { return 3; }

 private:
  FusionLaw(const F& f, Kind k, std::vector<K> evs)
      : field_(f), kind_(k), evs_(std::move(evs)) {}
  static void check_unit_interval(const F& f, const K& v, const char* name) {
    if (v == f.zero() || v == f.one())
      throw InadmissibleParameters(std::string(name) + " in {0,1}");
  }
  F field_;
  Kind kind_;
  std::vector<K> evs_;
};

struct AxisReport {
  bool idempotent = false;
  std::vector<std::size_t> eigen_dims;
  bool direct_sum_ok = false;
  bool fusion_ok = false;
  bool primitive = false;
  // eigenvalue-index pair and offending component when fusion fails
  std::optional<std::array<std::size_t, 3>> violation;
  bool pass() const { return idempotent && direct_sum_ok && fusion_ok && primitive; }
};

/// A0-A3 plus the exhaustive fusion check of an idempotent against a law.
template <Field F>
AxisReport axis_report(const Algebra<F>& alg, const FusionLaw<F>& law,
                       const Vec<typename F::Elem>& a) {
  using K = typename F::Elem;
  const F& f = alg.field();
  AxisReport rep;
  rep.idempotent = (alg.multiply(a, a) == a);
  Mat<K> ad = alg.adjoint(a);
  std::vector<Subspace<F>> sp;
  for (const auto& lam : law.eigenvalues()) sp.push_back(eigenspace(f, ad, lam));
  std::size_t total = 0;
  std::vector<Vec<K>> all;
  for (const auto& s : sp) {
    rep.eigen_dims.push_back(s.dim());
    total += s.dim();
    for (auto& r : s.basis_rows()) all.push_back(r);
  }
  rep.direct_sum_ok =
      total == alg.dim() && Subspace<F>::span(f, alg.dim(), all).dim() == alg.dim();
  rep.primitive = sp[0].dim() == 1;
  rep.fusion_ok = rep.direct_sum_ok;
  if (rep.direct_sum_ok) {
    for (std::size_t li = 0; li < sp.size() && rep.fusion_ok; ++li)
      for (std::size_t lj = li; lj < sp.size() && rep.fusion_ok; ++lj) {
        auto allowed = law.star(li, lj);
        for (const auto& u : sp[li].basis_rows()) {
          for (const auto& v : sp[lj].basis_rows()) {
            Vec<K> w = alg.multiply(u, v);
            if (vec_is_zero(w)) continue;
            auto parts = decompose(f, w, sp);
            for (std::size_t lk = 0; lk < sp.size(); ++lk) {
              if (!vec_is_zero(parts[lk]) && !allowed.count(lk)) {
                rep.fusion_ok = false;
                rep.violation = {li, lj, lk};
                break;
              }
            }
            if (!rep.fusion_ok) break;
          }
          if (!rep.fusion_ok) break;
        }
      }
  }
  return rep;
}

template <Field F>
class AxialAlgebra {
 public:
  using K = typename F::Elem;

  AxialAlgebra(Algebra<F> alg, FusionLaw<F> law, Vec<K> a0, Vec<K> a1)
      : alg_(std::move(alg)), law_(std::move(law)) {
    orbit_[0] = std::move(a0);
    orbit_[1] = std::move(a1);
  }

  const Algebra<F>& algebra() const { return alg_; }
  const FusionLaw<F>& law() const { return law_; }
  const F& field() const { return alg_.field(); }
  std::size_t dim() const { return alg_.dim(); }

  /// Eigenspace decomposition of ad_a over the law's eigenvalue set (cached).
  const std::vector<Subspace<F>>& eigenspaces(const Vec<K>& a) const {
    auto it = eigen_cache_.find(a);
    if (it != eigen_cache_.end()) return it->second;
    Mat<K> ad = alg_.adjoint(a);
    std::vector<Subspace<F>> sp;
    for (const auto& lam : law_.eigenvalues()) sp.push_back(eigenspace(field(), ad, lam));
    return eigen_cache_.emplace(a, std::move(sp)).first->second;
  }

  AxisReport verify_axis(const Vec<K>& a) const { return axis_report(alg_, law_, a); }

  /// Projection of x onto the axis a in the primitive decomposition.
  K lambda_of(const Vec<K>& a, const Vec<K>& x) const {
    const auto& sp = eigenspaces(a);
    std::vector<Subspace<F>> parts;
    parts.push_back(Subspace<F>::span(field(), dim(), {a}));
    for (std::size_t i = 1; i < sp.size(); ++i) parts.push_back(sp[i]);
    auto comps = decompose(field(), x, parts);
    auto c = solve_in_span(field(), {a}, comps[0]);
    return (*c)[0];
  }

  /// Miyamoto involution: fixes V_1 + V_0 + V_alpha, negates V_beta.
  const Mat<K>& miyamoto(const Vec<K>& a) const {
    auto it = tau_cache_.find(a);
    if (it != tau_cache_.end()) return it->second;
    if (law_.kind() != FusionLaw<F>::Kind::monster || !verify_axis(a).pass())
      throw AxisNotVerified{};
    const auto& sp = eigenspaces(a);
    std::vector<Subspace<F>> parts(sp.begin(), sp.end());
    Mat<K> tau(dim(), dim(), field().zero());
    for (std::size_t j = 0; j < dim(); ++j) {
      auto comps = decompose(field(), alg_.unit(j), parts);
      Vec<K> img(dim(), field().zero());
      for (std::size_t k = 0; k < comps.size(); ++k) {
        if (k == law_.graded_index())
          img = vec_sub(img, comps[k]);
        else
          img = vec_add(img, comps[k]);
      }
      for (std::size_t i = 0; i < dim(); ++i) tau.at(i, j) = img[i];
    }
    return tau_cache_.emplace(a, std::move(tau)).first->second;
  }

  /// a_i per the orbit convention a_{2i} = a_0^(rho^i), a_{2i+1} = a_1^(rho^i),
  /// rho = tau_0 tau_1 acting on the right (apply tau_0 first).
  const Vec<K>& axis(long i) const {
    for (;;) {
      auto it = orbit_.find(i);
      if (it != orbit_.end()) return it->second;
      long lo = orbit_.begin()->first, hi = orbit_.rbegin()->first;
      const Mat<K>& t0 = miyamoto(orbit_.at(0));
      const Mat<K>& t1 = miyamoto(orbit_.at(1));
      if (i > hi)
        orbit_[hi + 1] = mat_apply(t1, mat_apply(t0, orbit_.at(hi - 1)));
      else
        orbit_[lo - 1] = mat_apply(t0, mat_apply(t1, orbit_.at(lo + 1)));
    }
  }

  /// s_{i,n} = a_i a_{i+n} - beta (a_i + a_{i+n}).
  Vec<K> s_element(long i, long n) const {
    const Vec<K>& ai = axis(i);
    const Vec<K>& ain = axis(i + n);
    return vec_sub(alg_.multiply(ai, ain), vec_scale(law_.beta(), vec_add(ai, ain)));
  }

  /// (lambda_i, lambda_i^f); asserts the Lemma "s"(3) symmetry as a side check.
  std::pair<K, K> lambda_values(long i) const {
    K li = lambda_of(axis(0), axis(i));
    K lif = lambda_of(axis(1), axis(1 - i));
    if (!(lambda_of(axis(0), axis(-i)) == li))
      throw std::logic_error("lambda_{a0}(a_{-i}) != lambda_i");
    return {li, lif};
  }

  /// Attempts the flip a_i -> a_{1-i} as a linear map determined on an axis
  /// window plus its pairwise products; returns the matrix if it extends to an
  /// algebra automorphism, absent otherwise.
  std::optional<Mat<K>> flip_test(long window = 4) const {
    std::vector<Vec<K>> pre, post;
    for (long i = -window; i <= window + 1; ++i) {
      pre.push_back(axis(i));
      post.push_back(axis(1 - i));
    }
    std::size_t naxes = pre.size();
    for (std::size_t i = 0; i < naxes; ++i)
      for (std::size_t j = i; j < naxes; ++j) {
        pre.push_back(alg_.multiply(pre[i], pre[j]));
        post.push_back(alg_.multiply(post[i], post[j]));
      }
    // the map v -> f(v) is well-defined and total iff stacking (v | f(v))
    // does not raise the rank and the v's span V
    std::vector<Vec<K>> stacked;
    for (std::size_t k = 0; k < pre.size(); ++k) {
      Vec<K> row(pre[k]);
      row.insert(row.end(), post[k].begin(), post[k].end());
      stacked.push_back(std::move(row));
    }
    auto vspan = Subspace<F>::span(field(), dim(), pre);
    if (vspan.dim() != dim()) return std::nullopt;
    if (Subspace<F>::span(field(), 2 * dim(), stacked).dim() != dim()) return std::nullopt;
    // read the matrix off a spanning subset
    std::vector<Vec<K>> bas, img;
    for (std::size_t k = 0; k < pre.size() && bas.size() < dim(); ++k) {
      std::vector<Vec<K>> trial = bas;
      trial.push_back(pre[k]);
      if (Subspace<F>::span(field(), dim(), trial).dim() > bas.size()) {
        bas.push_back(pre[k]);
        img.push_back(post[k]);
      }
    }
    Mat<K> fmat(dim(), dim(), field().zero());
    for (std::size_t j = 0; j < dim(); ++j) {
      auto c = solve_in_span(field(), bas, alg_.unit(j));
      if (!c) return std::nullopt;
      Vec<K> col(dim(), field().zero());
      for (std::size_t k = 0; k < bas.size(); ++k) col = vec_add(col, vec_scale((*c)[k], img[k]));
      for (std::size_t i = 0; i < dim(); ++i) fmat.at(i, j) = col[i];
    }
    // verify: swaps the generators, involutive, multiplicative
    if (mat_apply(fmat, axis(0)) != axis(1) || mat_apply(fmat, axis(1)) != axis(0))
      return std::nullopt;
    if (mat_mul(field(), fmat, fmat) != identity_mat(field(), dim())) return std::nullopt;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i; j < dim(); ++j) {
        Vec<K> lhs = mat_apply(fmat, alg_.basis_product(i, j));
        Vec<K> rhs = alg_.multiply(mat_apply(fmat, alg_.unit(i)), mat_apply(fmat, alg_.unit(j)));
        if (lhs != rhs) return std::nullopt;
      }
    return fmat;
  }

  /// V* and V** of the symmetric theory: subalgebras generated by the orbit
  /// translates of a0 - a1 (resp. a0 - a2) under <f, Miy(V)>, computed by
  /// saturation under the generators and products.
  std::pair<Subspace<F>, Subspace<F>> vstar_spaces() const {
    auto f = flip_test();
    std::vector<Mat<K>> gens;
    gens.push_back(miyamoto(axis(0)));
    gens.push_back(miyamoto(axis(1)));
    if (f) gens.push_back(*f);
    auto saturate = [&](const Vec<K>& seed) {
      Subspace<F> s = Subspace<F>::span(field(), dim(), {seed});
      for (;;) {
        auto rows = s.basis_rows();
        std::vector<Vec<K>> next = rows;
        for (const auto& g : gens)
          for (const auto& r : rows) next.push_back(mat_apply(g, r));
        for (std::size_t i = 0; i < rows.size(); ++i)
          for (std::size_t j = i; j < rows.size(); ++j)
            next.push_back(alg_.multiply(rows[i], rows[j]));
        Subspace<F> grown = Subspace<F>::span(field(), dim(), next);
        if (grown.dim() == s.dim()) return s;
        s = std::move(grown);
      }
    };
    return {saturate(vec_sub(axis(0), axis(1))), saturate(vec_sub(axis(0), axis(2)))};
  }

 private:
  Algebra<F> alg_;
  FusionLaw<F> law_;
  mutable std::map<long, Vec<K>> orbit_;
  mutable std::map<Vec<K>, std::vector<Subspace<F>>> eigen_cache_;
  mutable std::map<Vec<K>, Mat<K>> tau_cache_;
};

}  // namespace axial

#endif  // AXIAL_AXIAL_HPP
