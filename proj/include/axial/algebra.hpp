#ifndef AXIAL_ALGEBRA_HPP
#define AXIAL_ALGEBRA_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "axial/linalg.hpp"

/// Structure-constant commutative algebras: products, closures, ideals,
/// quotients, annihilator, identity element, bilinear forms and radicals.
namespace axial {

struct IdealIsWholeAlgebra : std::domain_error {
  IdealIsWholeAlgebra() : std::domain_error("quotient by the whole algebra") {}
};
struct NoFormDefined : std::domain_error {
  NoFormDefined() : std::domain_error("algebra has no bilinear form") {}
};

template <Field F>
class Algebra {
 public:
  using K = typename F::Elem;

  Algebra(const F& f, std::vector<std::string> labels)
      : field_(f), dim_(labels.size()), labels_(std::move(labels)),
        mult_(dim_ * dim_, Vec<K>(dim_, f.zero())) {}

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Vec<K> unit(std::size_t i) const {
    Vec<K> v(dim_, field_.zero());
    v[i] = field_.one();
    return v;
  }

  void set_product(std::size_t i, std::size_t j, Vec<K> v) {
    if (v.size() != dim_) throw DimensionMismatch{};
    mult_[i * dim_ + j] = v;
    mult_[j * dim_ + i] = std::move(v);
  }
  const Vec<K>& basis_product(std::size_t i, std::size_t j) const {
    return mult_[i * dim_ + j];
  }

  void set_form_entry(std::size_t i, std::size_t j, const K& v) {
    if (!gram_) gram_ = Mat<K>(dim_, dim_, field_.zero());
    gram_->at(i, j) = v;
    gram_->at(j, i) = v;
  }
  bool has_form() const { return gram_.has_value(); }
  const Mat<K>& gram() const {
    if (!gram_) throw NoFormDefined{};
    return *gram_;
  }

  /// Bilinear extension of the structure constants.
  Vec<K> multiply(const Vec<K>& x, const Vec<K>& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch{};
    Vec<K> out(dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (is_zero(y[j])) continue;
        K c = x[i] * y[j];
        const Vec<K>& m = basis_product(i, j);
        for (std::size_t k = 0; k < dim_; ++k) out[k] = out[k] + c * m[k];
      }
    }
    return out;
  }

  K form(const Vec<K>& x, const Vec<K>& y) const {
    const Mat<K>& g = gram();
    K s = field_.zero();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) s = s + x[i] * g.at(i, j) * y[j];
    }
    return s;
  }

  /// Matrix of the adjoint map v -> a*v in the algebra basis.
  Mat<K> adjoint(const Vec<K>& a) const {
    Mat<K> m(dim_, dim_, field_.zero());
    for (std::size_t j = 0; j < dim_; ++j) {
      Vec<K> col = multiply(a, unit(j));
      for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  /// Smallest subspace containing the generators and closed under multiply:
  /// saturate by adjoining products of the current basis pairs until the rank
  /// stabilizes (at most dim iterations).
  Subspace<F> subalgebra_closure(const std::vector<Vec<K>>& generators) const {
    Subspace<F> s = Subspace<F>::span(field_, dim_, generators);
    for (;;) {
      auto rows = s.basis_rows();
      std::vector<Vec<K>> next = rows;
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
          next.push_back(multiply(rows[i], rows[j]));
      Subspace<F> grown = Subspace<F>::span(field_, dim_, next);
      if (grown.dim() == s.dim()) return s;
      s = std::move(grown);
    }
  }

  /// Smallest multiplication-absorbing subspace containing the vectors.
  Subspace<F> ideal_generated(const std::vector<Vec<K>>& vectors) const {
    Subspace<F> s = Subspace<F>::span(field_, dim_, vectors);
    for (;;) {
      auto rows = s.basis_rows();
      std::vector<Vec<K>> next = rows;
      for (const auto& r : rows)
        for (std::size_t b = 0; b < dim_; ++b) next.push_back(multiply(r, unit(b)));
      Subspace<F> grown = Subspace<F>::span(field_, dim_, next);
      if (grown.dim() == s.dim()) return s;
      s = std::move(grown);
    }
  }

  /// {x : x * A = 0}.
  Subspace<F> annihilator() const {
    Mat<K> stk(dim_ * dim_, dim_, field_.zero());
    for (std::size_t b = 0; b < dim_; ++b)
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k)
          stk.at(b * dim_ + k, i) = basis_product(i, b)[k];
    return kernel(field_, stk);
  }

  /// The unique e with e*x = x for all x, if it exists.
  std::optional<Vec<K>> identity_element() const {
    std::vector<Vec<K>> cols;  // columns indexed by e-coordinates
    for (std::size_t i = 0; i < dim_; ++i) {
      Vec<K> col;
      col.reserve(dim_ * dim_);
      for (std::size_t b = 0; b < dim_; ++b) {
        const Vec<K>& m = basis_product(i, b);
        for (std::size_t k = 0; k < dim_; ++k) col.push_back(m[k]);
      }
      cols.push_back(std::move(col));
    }
    Vec<K> rhs;
    rhs.reserve(dim_ * dim_);
    for (std::size_t b = 0; b < dim_; ++b)
      for (std::size_t k = 0; k < dim_; ++k)
        rhs.push_back(b == k ? field_.one() : field_.zero());
    auto c = solve_in_span(field_, cols, rhs);
    if (!c) return std::nullopt;
    for (std::size_t b = 0; b < dim_; ++b)
      if (multiply(*c, unit(b)) != unit(b)) return std::nullopt;
    return *c;
  }

  struct BilinearFormReport {
    bool is_invariant = false;
    Subspace<F> radical;
    std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> witness;
  };

  /// Invariance (kappa(uv,w)=kappa(u,vw)) on all basis triples; radical from
  /// the Gram kernel.
  BilinearFormReport form_check() const {
    const Mat<K>& g = gram();
    BilinearFormReport rep{true, kernel(field_, g), std::nullopt};
    for (std::size_t i = 0; i < dim_ && rep.is_invariant; ++i)
      for (std::size_t j = 0; j < dim_ && rep.is_invariant; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
          K lhs = form(basis_product(i, j), unit(k));
          K rhs = form(unit(i), basis_product(j, k));
          if (!(lhs == rhs)) {
            rep.is_invariant = false;
            rep.witness = {i, j, k};
            break;
          }
        }
    return rep;
  }

  struct Quotient {
    Algebra algebra;
    std::vector<std::size_t> complement;  // ambient coords kept as quotient basis
    Mat<K> projection;                    // quotient-dim x ambient-dim
  };

  /// Quotient by an ideal; the complement basis is the set of non-pivot
  /// coordinates of the ideal's row-reduced basis.
  Quotient quotient(const Subspace<F>& ideal) const {
    if (ideal.dim() >= dim_) throw IdealIsWholeAlgebra{};
    std::vector<bool> is_piv(dim_, false);
    for (auto c : ideal.pivots) is_piv[c] = true;
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!is_piv[i]) comp.push_back(i);

    Mat<K> proj(comp.size(), dim_, field_.zero());
    for (std::size_t c = 0; c < dim_; ++c) {
      // pi(e_c): reduce e_c modulo the ideal's row-reduced basis
      Vec<K> e(dim_, field_.zero());
      e[c] = field_.one();
      for (std::size_t r = 0; r < ideal.dim(); ++r) {
        K t = e[ideal.pivots[r]];
        if (is_zero(t)) continue;
        for (std::size_t k = 0; k < dim_; ++k) e[k] = e[k] - t * ideal.basis.at(r, k);
      }
      for (std::size_t q = 0; q < comp.size(); ++q) proj.at(q, c) = e[comp[q]];
    }

    std::vector<std::string> labels;
    for (auto c : comp) labels.push_back(labels_[c]);
    Algebra qa(field_, labels);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i; j < comp.size(); ++j)
        qa.set_product(i, j, mat_apply(proj, basis_product(comp[i], comp[j])));
    if (gram_) {
      // the form descends exactly when the ideal sits inside its radical
      bool descends = true;
      for (auto& row : ideal.basis_rows()) {
        for (std::size_t b = 0; b < dim_ && descends; ++b)
          if (!is_zero(form(row, unit(b)))) descends = false;
        if (!descends) break;
      }
      if (descends)
        for (std::size_t i = 0; i < comp.size(); ++i)
          for (std::size_t j = i; j < comp.size(); ++j)
            qa.set_form_entry(i, j, gram_->at(comp[i], comp[j]));
    }
    return Quotient{std::move(qa), std::move(comp), std::move(proj)};
  }

  /// Restricts the algebra to a multiplication-closed subspace, on the
  /// subspace's row-reduced basis. Returns the restricted algebra plus the
  /// coordinate map for ambient vectors lying in the subspace.
  struct Restriction {
    Algebra algebra;
    std::vector<Vec<K>> ambient_basis;
  };
  Restriction restrict_to(const Subspace<F>& s,
                          const std::vector<std::string>& sublabels = {}) const {
    auto rows = s.basis_rows();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < rows.size(); ++i)
      labels.push_back(i < sublabels.size() ? sublabels[i] : "b" + std::to_string(i));
    Algebra sub(field_, labels);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i; j < rows.size(); ++j) {
        auto c = solve_in_span(field_, rows, multiply(rows[i], rows[j]));
        if (!c) throw std::domain_error("subspace is not multiplication-closed");
        sub.set_product(i, j, *c);
      }
    if (gram_)
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
          sub.set_form_entry(i, j, form(rows[i], rows[j]));
    return Restriction{std::move(sub), std::move(rows)};
  }

  /// Coordinates of an ambient vector in subspace coordinates, if contained.
  std::optional<Vec<K>> coords_in(const std::vector<Vec<K>>& basis, const Vec<K>& v) const {
    return solve_in_span(field_, basis, v);
  }

  /// Checks that v_i |-> target.unit(i) is an algebra isomorphism from the
  /// span of the given independent vectors onto the target algebra.
  bool verify_basis_map(const std::vector<Vec<K>>& vecs, const Algebra& target) const {
    if (vecs.size() != target.dim()) return false;
    for (std::size_t i = 0; i < vecs.size(); ++i)
      for (std::size_t j = i; j < vecs.size(); ++j) {
        auto c = solve_in_span(field_, vecs, multiply(vecs[i], vecs[j]));
        if (!c || *c != target.basis_product(i, j)) return false;
      }
    return true;
  }

 private:
  F field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Vec<K>> mult_;
  std::optional<Mat<K>> gram_;
};

}  // namespace axial

#endif  // AXIAL_ALGEBRA_HPP
