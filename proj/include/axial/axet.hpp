#ifndef AXIAL_AXET_HPP
#define AXIAL_AXET_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "axial/axial.hpp"

/// Axis-orbit analysis: the axet of a finite-dimensional axial algebra,
/// X(n) / X'(3k) classification, the 6-transposition bound, and the even/odd
/// subalgebras.
namespace axial {

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(std::size_t n)
      : std::runtime_error("axet enumeration cap exceeded at " + std::to_string(n)) {}
};
struct InfiniteOrderDetected : std::runtime_error {
  InfiniteOrderDetected() : std::runtime_error("element order exceeds iteration cap") {}
};

struct AxetDescriptor {
  enum class Kind { X, Xprime, Window };
  Kind kind = Kind::Window;
  std::size_t n = 0;          // X(n) or X'(n); cap for Window
  std::size_t orbit0 = 0, orbit1 = 0;

  bool operator==(const AxetDescriptor&) const = default;
  std::string str() const {
    switch (kind) {
      case Kind::X: return "X(" + std::to_string(n) + ")";
      case Kind::Xprime: return "X'(" + std::to_string(n) + ")";
      default: return "Window(" + std::to_string(n) + ")";
    }
  }
};

/// BFS over the Miyamoto generators from {a0, a1}; axes are compared as exact
/// vectors. Orbits tracked per generator; classification per Theorem
/// "two-generated axets": equal orbits give X(|X|) (odd), disjoint equal-size
/// orbits X(2n), factor-two orbits X'(3k).
template <Field F>
AxetDescriptor compute_axet(const AxialAlgebra<F>& A, std::size_t cap = 64) {
  using K = typename F::Elem;
  std::map<Vec<K>, int> orbit_of;  // bitmask: 1 = reachable from a0, 2 = from a1
  orbit_of[A.axis(0)] = 1;
  orbit_of[A.axis(1)] |= 2;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<Vec<K>, int>> cur(orbit_of.begin(), orbit_of.end());
    for (const auto& [a, fa] : cur) {
      const Mat<K>& tau = A.miyamoto(a);
      for (const auto& [b, fb] : cur) {
        Vec<K> img = mat_apply(tau, b);
        int& flags = orbit_of[img];
        if ((flags | fb) != flags) {
          flags |= fb;
          grew = true;
        }
      }
    }
    if (orbit_of.size() > cap) return AxetDescriptor{AxetDescriptor::Kind::Window, cap, 0, 0};
  }
  std::size_t n0 = 0, n1 = 0, both = 0;
  for (const auto& [a, fl] : orbit_of) {
    if (fl & 1) ++n0;
    if (fl & 2) ++n1;
    if (fl == 3) ++both;
  }
  AxetDescriptor d;
  d.orbit0 = n0;
  d.orbit1 = n1;
  if (both > 0) {
    // orbits coincide (odd regular axet)
    d.kind = AxetDescriptor::Kind::X;
    d.n = orbit_of.size();
  } else if (n0 == n1) {
    d.kind = AxetDescriptor::Kind::X;
    d.n = n0 + n1;
  } else {
    d.kind = AxetDescriptor::Kind::Xprime;
    d.n = (n0 > n1 ? n0 : n1) / 2 * 3;
  }
  return d;
}

/// All axes of the (finite) axet, as exact vectors.
template <Field F>
std::vector<Vec<typename F::Elem>> axet_axes(const AxialAlgebra<F>& A, std::size_t cap = 64) {
  using K = typename F::Elem;
  std::set<Vec<K>> axes{A.axis(0), A.axis(1)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec<K>> cur(axes.begin(), axes.end());
    for (const auto& a : cur) {
      const Mat<K>& tau = A.miyamoto(a);
      for (const auto& b : cur)
        if (axes.insert(mat_apply(tau, b)).second) grew = true;
    }
    if (axes.size() > cap) throw CapExceeded(cap);
  }
  return {axes.begin(), axes.end()};
}

template <Field F>
std::size_t matrix_order(const F& f, const Mat<typename F::Elem>& m, std::size_t cap = 64) {
  Mat<typename F::Elem> id = identity_mat(f, m.rows), p = m;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = mat_mul(f, p, m);
  }
  throw InfiniteOrderDetected{};
}

/// max over axis pairs (a,b) of the order of tau_a tau_b; the 6-transposition
/// property asks for <= 6.
template <Field F>
std::pair<bool, std::size_t> six_transposition_check(const AxialAlgebra<F>& A,
                                                     std::size_t cap = 64) {
  auto axes = axet_axes(A, cap);
  std::size_t maxord = 1;
  for (const auto& a : axes)
    for (const auto& b : axes) {
      std::size_t o = matrix_order(A.field(), mat_mul(A.field(), A.miyamoto(a), A.miyamoto(b)), cap);
      if (o > maxord) maxord = o;
    }
  return {maxord <= 6, maxord};
}

/// The even and odd subalgebras (V_e, {a0,a2}) and (V_o, {a_-1,a1}) as axial
/// algebras on the closure bases.
template <Field F>
std::pair<AxialAlgebra<F>, AxialAlgebra<F>> even_odd_subalgebras(const AxialAlgebra<F>& A) {
  using K = typename F::Elem;
  auto build = [&A](const Vec<K>& g0, const Vec<K>& g1) {
    auto closure = A.algebra().subalgebra_closure({g0, g1});
    auto restr = A.algebra().restrict_to(closure);
    auto c0 = solve_in_span(A.field(), restr.ambient_basis, g0);
    auto c1 = solve_in_span(A.field(), restr.ambient_basis, g1);
    return AxialAlgebra<F>(std::move(restr.algebra), A.law(), *c0, *c1);
  };
  return {build(A.axis(0), A.axis(2)), build(A.axis(-1), A.axis(1))};
}

}  // namespace axial

#endif  // AXIAL_AXET_HPP
