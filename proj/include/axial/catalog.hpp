#ifndef AXIAL_CATALOG_HPP
#define AXIAL_CATALOG_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "axial/axet.hpp"
#include "axial/axial.hpp"

/// Constructors for every algebra of the classification tables, parameterized
/// exactly as in the tables, plus each table Note as an assertable property.
namespace axial {

struct EntryMeta {
  std::string key;          // CLI name
  std::string display;      // table notation
  std::string table;        // provenance
  std::vector<std::string> params;  // accepted parameter names
  bool symmetric = true;    // belongs to the symmetric classification
  std::optional<AxetDescriptor> expected_axet;
  std::vector<std::uint64_t> bad_chars;  // characteristics rejected beyond 2
  bool needs_sqrt97 = false;
};

inline const std::vector<EntryMeta>& catalog_entries() {
  using AD = AxetDescriptor;
  auto X = [](std::size_t n, std::size_t o0, std::size_t o1) {
    return AD{AD::Kind::X, n, o0, o1};
  };
  auto Xp = [](std::size_t n, std::size_t o0, std::size_t o1) {
    return AD{AD::Kind::Xprime, n, o0, o1};
  };
  static const std::vector<EntryMeta> entries = {
      {"1A", "1A", "Table 2", {"alpha", "beta"}, true, X(1, 1, 1), {}, false},
      {"2B", "2B", "Table 2", {"alpha", "beta"}, true, X(2, 1, 1), {}, false},
      {"3C", "3C(eta)", "Table 2", {"eta", "alpha"}, true, X(3, 3, 3), {}, false},
      {"3Cm1x", "3C(-1)x", "Table 2", {"alpha"}, true, X(3, 3, 3), {}, false},
      {"J", "J(delta)", "Table 2", {"delta", "alpha"}, true, std::nullopt, {}, false},
      {"J0x", "J(0)x", "Table 2", {"alpha"}, true, std::nullopt, {}, false},
      {"3A", "3A(alpha,beta)", "Table 3", {"alpha", "beta"}, true, X(3, 3, 3), {}, false},
      {"3Ax", "3A(alpha,(1-3alpha^2)/(3alpha-1))x", "Table 3", {"alpha"}, true, X(3, 3, 3), {}, false},
      {"4A", "4A(1/4,beta)", "Table 4", {"beta"}, true, X(4, 2, 2), {3}, false},
      {"4Ax", "4A(1/4,1/2)x", "Table 4", {}, true, X(4, 2, 2), {3}, false},
      {"4B", "4B(alpha,alpha^2/2)", "Table 5", {"alpha"}, true, X(4, 2, 2), {}, false},
      {"4Bx", "4B(-1,1/2)x", "Table 5", {}, true, X(4, 2, 2), {3}, false},
      {"4J", "4J(2beta,beta)", "Table 6", {"beta"}, true, X(4, 2, 2), {}, false},
      {"4Jx", "4J(-1/2,-1/4)x", "Table 6", {}, true, X(4, 2, 2), {3, 5}, false},
      {"4Yhalf", "4Y(1/2,beta)", "Table 7", {"beta"}, true, X(4, 2, 2), {}, false},
      {"4Yal", "4Y(alpha,(1-alpha^2)/2)", "Table 8", {"alpha"}, true, X(4, 2, 2), {}, false},
      {"5A", "5A(alpha,(5alpha-1)/8)", "Table 9", {"alpha"}, true, X(5, 5, 5), {}, false},
      {"6A", "6A(alpha,-alpha^2/(4(2alpha-1)))", "Table 10", {"alpha"}, true, X(6, 3, 3), {}, false},
      {"6Ax23", "6A(2/3,-1/3)x", "Table 10", {}, true, X(6, 3, 3), {3}, false},
      {"6Ax97p", "6A((1+sqrt97)/24,...)x", "Table 10", {}, true, X(6, 3, 3), {3}, true},
      {"6Ax97m", "6A((1-sqrt97)/24,...)x", "Table 10", {}, true, X(6, 3, 3), {3}, true},
      {"6J", "6J(2beta,beta)", "Table 11", {"beta"}, true, X(6, 3, 3), {}, false},
      {"6Jx", "6J(-2/7,-1/7)x", "Table 11", {}, true, X(6, 3, 3), {3, 7}, false},
      {"6Y", "6Y(1/2,2)", "Table 12", {}, true, X(6, 3, 3), {3}, false},
      {"6Yx", "6Y(1/2,2)x", "Table 12", {}, true, X(6, 3, 3), {3}, false},
      {"IY3", "IY3(alpha,1/2;mu)", "Table 13", {"alpha", "mu"}, true, std::nullopt, {}, false},
      {"IY3m1x", "IY3(-1,1/2;mu)x", "Table 13", {"mu"}, true, std::nullopt, {3}, false},
      {"IY3mu1x", "IY3(alpha,1/2;1)x", "Table 13", {"alpha"}, true, std::nullopt, {}, false},
      {"IY5", "IY5(alpha,1/2)", "Table 14", {"alpha"}, true, std::nullopt, {}, false},
      {"IY5x", "IY5(alpha,1/2)x", "Table 14", {"alpha"}, true, std::nullopt, {}, false},
      {"IH3", "IH3", "Table 15 (cover quotient)", {}, true, std::nullopt, {3}, false},
      {"Q2", "Q2(2beta,beta)", "Table 16", {"beta"}, false, X(4, 2, 2), {}, false},
      {"Q2x", "Q2(-1,-1/2)x", "Table 16", {}, false, X(4, 2, 2), {3}, false},
      {"Q2p", "Q2'(1/3,2/3)", "Table 17", {}, false, Xp(3, 2, 1), {3}, false},
      {"3Cp", "3C'(eta,1-eta)", "Table 18", {"eta"}, false, Xp(3, 1, 2), {}, false},
      {"4Bnu", "4B(-1,1/2;nu)x", "Table 19", {"nu"}, false, X(4, 2, 2), {3}, false},
  };
  return entries;
}

inline const EntryMeta& entry_meta(const std::string& key) {
  for (const auto& e : catalog_entries())
    if (e.key == key) return e;
  throw std::invalid_argument("unknown catalog entry: " + key);
}

template <Field F>
struct BuiltEntry {
  AxialAlgebra<F> A;
  std::map<std::string, Vec<typename F::Elem>> named;  // table's extra vectors
  std::map<std::string, typename F::Elem> scalars;     // resolved parameters
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InadmissibleParameters(what);
}

template <Field F>
typename F::Elem getp(const F& f, const std::map<std::string, typename F::Elem>& p,
                      const std::string& name,
                      std::optional<typename F::Elem> fallback = std::nullopt) {
  auto it = p.find(name);
  if (it != p.end()) return it->second;
  if (fallback) return *fallback;
  throw InadmissibleParameters("missing parameter --" + name);
}

template <Field F>
void check_not01(const F& f, const typename F::Elem& v, const std::string& name) {
  require(!(v == f.zero()) && !(v == f.one()), name + " must avoid {0,1}");
}

}  // namespace detail

/// Builds a catalog entry over the given field at the given parameters.
/// Throws InadmissibleParameters when a table precondition fails.
template <Field F>
BuiltEntry<F> build_entry(const F& f, const std::string& key,
                          const std::map<std::string, typename F::Elem>& prm) {
  using K = typename F::Elem;
  using detail::require;
  using detail::check_not01;
  const auto P = [&](const char* n, std::optional<K> d = std::nullopt) {
    return detail::getp(f, prm, n, d);
  };
  const K zero = f.zero(), one = f.one();
  const auto R = [&](long n, long d = 1) { return f.from_ratio(n, d); };
  const std::uint64_t ch = f.characteristic();
  for (auto bad : entry_meta(key).bad_chars)
    require(ch != bad, key + " undefined in characteristic " + std::to_string(bad));

  auto mk = [&](std::vector<std::string> labels) { return Algebra<F>(f, std::move(labels)); };
  auto U = [&](const Algebra<F>& a, std::initializer_list<std::pair<K, std::size_t>> terms) {
    Vec<K> v(a.dim(), zero);
    for (auto& [c, i] : terms) v[i] = v[i] + c;
    return v;
  };
  auto diag_units = [&](Algebra<F>& a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a.set_product(i, i, a.unit(i));
  };
  auto monster = [&](K al, K bt) { return FusionLaw<F>::monster(f, al, bt); };

  if (key == "1A") {
    K al = P("alpha", R(1, 4)), bt = P("beta", R(1, 32));
    Algebra<F> a = mk({"a0"});
    a.set_product(0, 0, a.unit(0));
    a.set_form_entry(0, 0, one);
    AxialAlgebra<F> A(a, monster(al, bt), a.unit(0), a.unit(0));
    return {std::move(A), {}, {{"alpha", al}, {"beta", bt}}};
  }

  if (key == "2B") {
    K al = P("alpha", R(1, 4)), bt = P("beta", R(1, 32));
    Algebra<F> a = mk({"a0", "a1"});
    diag_units(a, 2);
    a.set_product(0, 1, Vec<K>(2, zero));
    a.set_form_entry(0, 0, one);
    a.set_form_entry(1, 1, one);
    a.set_form_entry(0, 1, zero);
    AxialAlgebra<F> A(a, monster(al, bt), a.unit(0), a.unit(1));
    return {std::move(A), {}, {{"alpha", al}, {"beta", bt}}};
  }

  if (key == "3C" || key == "3Cp") {
    // 3C(eta) on (a0,a1,a*); 3C'(eta,1-eta) has its own products/form
    K eta = P("eta");
    check_not01(f, eta, "eta");
    Algebra<F> a = mk({"a0", "a1", "ast"});
    diag_units(a, 3);
    K h = eta / R(2);
    if (key == "3C") {
      K al = P("alpha", eta == R(1, 4) ? R(1, 3) : R(1, 4));
      check_not01(f, al, "alpha");
      require(!(al == eta), "alpha = eta");
      a.set_product(0, 1, U(a, {{h, 0}, {h, 1}, {-h, 2}}));
      a.set_product(0, 2, U(a, {{h, 0}, {-h, 1}, {h, 2}}));
      a.set_product(1, 2, U(a, {{-h, 0}, {h, 1}, {h, 2}}));
      for (int i = 0; i < 3; ++i) a.set_form_entry(i, i, one);
      a.set_form_entry(0, 1, h);
      a.set_form_entry(0, 2, h);
      a.set_form_entry(1, 2, h);
      AxialAlgebra<F> A(a, monster(al, eta), a.unit(0), a.unit(1));
      return {std::move(A), {{"ast", a.unit(2)}}, {{"alpha", al}, {"eta", eta}}};
    }
    require(!(eta == R(1, 2)), "eta = 1/2 is the Jordan case");
    K e1 = (one + eta) / R(2), e2 = (one - eta) / R(2);
    a.set_product(0, 2, U(a, {{e1, 0}, {-e2, 1}, {e2, 2}}));
    a.set_product(2, 1, U(a, {{e1, 0}, {-e2, 1}, {-e2, 2}}));
    a.set_product(0, 1, U(a, {{e1, 0}, {e2, 1}, {-e2, 2}}));
    a.set_form_entry(0, 0, R(2) - eta);
    a.set_form_entry(1, 1, eta + one);
    a.set_form_entry(2, 2, eta + one);
    a.set_form_entry(1, 2, eta * (eta + one) / R(2));
    a.set_form_entry(0, 1, (R(2) - eta) * (eta + one) / R(2));
    a.set_form_entry(0, 2, (R(2) - eta) * (eta + one) / R(2));
    AxialAlgebra<F> A(a, monster(eta, one - eta), a.unit(0), a.unit(1));
    return {std::move(A), {{"ast", a.unit(2)}}, {{"eta", eta}}};
  }

  if (key == "3Cm1x") {
    K al = P("alpha", R(1, 4));
    check_not01(f, al, "alpha");
    require(!(al == -one), "alpha = -1");
    Algebra<F> a = mk({"a0", "a1"});
    diag_units(a, 2);
    a.set_product(0, 1, U(a, {{-one, 0}, {-one, 1}}));
    a.set_form_entry(0, 0, one);
    a.set_form_entry(1, 1, one);
    a.set_form_entry(0, 1, -one / R(2));
    AxialAlgebra<F> A(a, monster(al, -one), a.unit(0), a.unit(1));
    return {std::move(A), {}, {{"alpha", al}}};
  }

  if (key == "J" || key == "J0x") {
    K al = P("alpha", R(2));
    K dl = key == "J" ? P("delta") : zero;
    check_not01(f, al, "alpha");
    require(!(al == R(1, 2)), "alpha = 1/2");
    if (key == "J") {
      Algebra<F> a = mk({"a0", "a1", "s01"});
      diag_units(a, 2);
      a.set_product(0, 1, U(a, {{R(1, 2), 0}, {R(1, 2), 1}, {one, 2}}));
      a.set_product(0, 2, U(a, {{dl, 0}}));
      a.set_product(1, 2, U(a, {{dl, 1}}));
      a.set_product(2, 2, U(a, {{dl, 2}}));
      a.set_form_entry(0, 0, one);
      a.set_form_entry(1, 1, one);
      a.set_form_entry(0, 1, R(2) * dl + one);
      a.set_form_entry(0, 2, dl);
      a.set_form_entry(1, 2, dl);
      a.set_form_entry(2, 2, R(2) * dl * dl);
      AxialAlgebra<F> A(a, monster(al, R(1, 2)), a.unit(0), a.unit(1));
      return {std::move(A), {{"s01", a.unit(2)}}, {{"alpha", al}, {"delta", dl}}};
    }
    Algebra<F> a = mk({"a0", "a1"});
    diag_units(a, 2);
    a.set_product(0, 1, U(a, {{R(1, 2), 0}, {R(1, 2), 1}}));
    a.set_form_entry(0, 0, one);
    a.set_form_entry(1, 1, one);
    a.set_form_entry(0, 1, one);
    AxialAlgebra<F> A(a, monster(al, R(1, 2)), a.unit(0), a.unit(1));
    return {std::move(A), {}, {{"alpha", al}}};
  }

  if (key == "3A" || key == "3Ax") {
    K al = P("alpha");
    check_not01(f, al, "alpha");
    require(!(R(2) * al == one), "alpha = 1/2");
    K bt;
    if (key == "3A") {
      bt = P("beta");
      check_not01(f, bt, "beta");
      require(!(al == bt), "alpha = beta");
    } else {
      require(!(R(3) * al == one), "3*alpha = 1");
      bt = (one - R(3) * al * al) / (R(3) * al - one);
      check_not01(f, bt, "derived beta");
      require(!(al == bt), "alpha = beta at this alpha");
    }
    K lam = (R(3) * al * al + R(3) * al * bt - al - R(2) * bt) / (R(4) * (R(2) * al - one));
    K az = -al * (R(3) * al * al + R(3) * al * bt - bt - one) / (R(4) * (R(2) * al - one));
    K half = (al - bt) / R(2);
    bool full = key == "3A";
    std::size_t d = full ? 4 : 3;
    Algebra<F> a = full ? mk({"a0", "a1", "a2", "z"}) : mk({"a0", "a1", "a2"});
    diag_units(a, 3);
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3;
      Vec<K> v(d, zero);
      for (int k = 0; k < 3; ++k) v[k] = half;
      v[i] = v[i] + bt;
      v[j] = v[j] + bt;
      if (full) v[3] = one;
      a.set_product(i, j, v);
    }
    if (full) {
      for (int i = 0; i < 3; ++i) a.set_product(i, 3, U(a, {{az, static_cast<std::size_t>(i)}}));
      a.set_product(3, 3, U(a, {{az, 3}}));
    }
    for (int i = 0; i < 3; ++i) a.set_form_entry(i, i, one);
    a.set_form_entry(0, 1, lam);
    a.set_form_entry(0, 2, lam);
    a.set_form_entry(1, 2, lam);
    if (full) {
      K zz = al * al * (R(9) * al + bt - R(5)) * (R(3) * al * al + R(3) * al * bt - bt - one) /
             (R(16) * (R(2) * al - one) * (R(2) * al - one));
      for (int i = 0; i < 3; ++i) a.set_form_entry(i, 3, az);
      a.set_form_entry(3, 3, zz);
    }
    AxialAlgebra<F> A(a, monster(al, bt), a.unit(0), a.unit(1));
    BuiltEntry<F> out{std::move(A), {}, {{"alpha", al}, {"beta", bt}}};
    if (full) out.named["z"] = out.A.algebra().unit(3);
    return out;
  }

  // --- the four-axis families share the Z4 index pattern am1,a0,a1,a2 ---
  auto z4 = [&](std::size_t extra_dim, std::vector<std::string> extra) {
    std::vector<std::string> labels = {"am1", "a0", "a1", "a2"};
    for (auto& s : extra) labels.push_back(s);
    (void)extra_dim;
    return mk(labels);
  };
  auto idx4 = [](long i) {  // am1,a0,a1,a2 -> 0..3 cyclically (Z4)
    long r = ((i + 1) % 4 + 4) % 4;
    return static_cast<std::size_t>(r);
  };

  if (key == "4A" || key == "4Ax") {
    K bt = key == "4A" ? P("beta") : R(1, 2);
    check_not01(f, bt, "beta");
    require(!(bt == R(1, 4)), "beta = alpha = 1/4");
    bool full = key == "4A";
    std::size_t d = full ? 5 : 4;
    Algebra<F> a = full ? z4(1, {"e"}) : z4(0, {});
    diag_units(a, full ? 5 : 4);
    if (full) a.set_product(4, 4, U(a, {{(R(2) * bt - one) / R(8), 4}}));
    K c1 = (one + R(4) * bt) / R(8), c2 = (one - R(4) * bt) / R(8);
    for (long i = -1; i <= 2; ++i)
      for (long j = i + 1; j <= 2; ++j) {
        long gap = (j - i) % 4;
        if (gap == 2) {
          a.set_product(idx4(i), idx4(j), Vec<K>(d, zero));
          continue;
        }
        Vec<K> v(d, zero);
        v[idx4(i)] = v[idx4(i)] + c1;
        v[idx4(j)] = v[idx4(j)] + c1;
        v[idx4(i + 2)] = v[idx4(i + 2)] + c2;
        v[idx4(j + 2)] = v[idx4(j + 2)] + c2;
        if (full) v[4] = one;
        a.set_product(idx4(i), idx4(j), v);
      }
    if (full)
      for (int i = 0; i < 4; ++i)
        a.set_product(i, 4, U(a, {{(R(2) * bt - one) / R(8), static_cast<std::size_t>(i)}}));
    for (std::size_t i = 0; i < d; ++i) a.set_form_entry(i, i, one);
    if (full) a.set_form_entry(4, 4, (R(2) * bt - one) * (R(2) * bt - one) / R(16));
    for (long i = -1; i <= 2; ++i)
      for (long j = i + 1; j <= 2; ++j)
        a.set_form_entry(idx4(i), idx4(j), (j - i) % 2 == 1 ? bt : zero);
    if (full)
      for (int i = 0; i < 4; ++i) a.set_form_entry(i, 4, (R(2) * bt - one) / R(8));
    AxialAlgebra<F> A(a, monster(R(1, 4), bt), a.unit(1), a.unit(2));
    BuiltEntry<F> out{std::move(A), {}, {{"alpha", R(1, 4)}, {"beta", bt}}};
    if (full) out.named["e"] = out.A.algebra().unit(4);
    return out;
  }

  if (key == "4B" || key == "4Bx") {
    K al = key == "4B" ? P("alpha") : -one;
    check_not01(f, al, "alpha");
    K bt = al * al / R(2);
    check_not01(f, bt, "beta = alpha^2/2");
    require(!(al == bt), "alpha = beta (alpha = 2)");
    K q4 = al * al / R(4);
    if (key == "4B") {
      Algebra<F> a = z4(1, {"c"});
      diag_units(a, 5);
      for (long i = -1; i <= 2; ++i) {
        for (long j = i + 1; j <= 2; ++j) {
          long gap = (j - i) % 4;
          Vec<K> v(5, zero);
          if (gap != 2) {
            v[idx4(i)] = v[idx4(i)] + q4;
            v[idx4(j)] = v[idx4(j)] + q4;
            v[4] = q4;
            v[idx4(i + 2)] = v[idx4(i + 2)] - q4;
            v[idx4(j + 2)] = v[idx4(j + 2)] - q4;
          } else {
            v[idx4(i)] = v[idx4(i)] + al / R(2);
            v[idx4(j)] = v[idx4(j)] + al / R(2);
            v[4] = -al / R(2);
          }
          a.set_product(idx4(i), idx4(j), v);
        }
        Vec<K> v(5, zero);
        v[idx4(i)] = al / R(2);
        v[4] = al / R(2);
        v[idx4(i + 2)] = v[idx4(i + 2)] - al / R(2);
        a.set_product(idx4(i), 4, v);
      }
      for (int i = 0; i < 5; ++i) a.set_form_entry(i, i, one);
      for (long i = -1; i <= 2; ++i) {
        for (long j = i + 1; j <= 2; ++j)
          a.set_form_entry(idx4(i), idx4(j), (j - i) % 2 == 1 ? q4 : K(al / R(2)));
        a.set_form_entry(idx4(i), 4, al / R(2));
      }
      AxialAlgebra<F> A(a, monster(al, bt), a.unit(1), a.unit(2));
      return {std::move(A), {{"c", A.algebra().unit(4)}}, {{"alpha", al}, {"beta", bt}}};
    }
    // 4Bx: quotient of 4B(-1,1/2) by F(a_{-1}+a0+a1+a2+2c), built as such
    auto parent = build_entry(f, "4B", {{"alpha", -one}});
    const auto& pa = parent.A.algebra();
    Vec<K> gen = U(pa, {{one, 0}, {one, 1}, {one, 2}, {one, 3}, {R(2), 4}});
    auto ideal = pa.ideal_generated({gen});
    require(ideal.dim() == 1, "4Bx ideal must be one-dimensional");
    auto quo = pa.quotient(ideal);
    AxialAlgebra<F> A(quo.algebra, monster(-one, R(1, 2)), mat_apply(quo.projection, pa.unit(1)),
                      mat_apply(quo.projection, pa.unit(2)));
    BuiltEntry<F> out{std::move(A), {}, {{"alpha", -one}, {"beta", R(1, 2)}}};
    out.named["am1"] = mat_apply(quo.projection, pa.unit(0));
    out.named["a2"] = mat_apply(quo.projection, pa.unit(3));
    out.named["c"] = mat_apply(quo.projection, pa.unit(4));
    return out;
  }

  if (key == "4J" || key == "4Jx") {
    K bt = key == "4J" ? P("beta") : -R(1, 4);
    check_not01(f, bt, "beta");
    require(!(R(2) * bt == one), "beta = 1/2 makes alpha = 1");
    check_not01(f, R(2) * bt, "alpha = 2beta");
    Algebra<F> a = z4(1, {"w"});
    diag_units(a, 5);
    a.set_product(4, 4, a.unit(4));
    for (long i = -1; i <= 2; ++i) {
      for (long j = i + 1; j <= 2; ++j) {
        long gap = (j - i) % 4;
        Vec<K> v(5, zero);
        if (gap != 2) {
          v[idx4(i)] = bt;
          v[idx4(j)] = bt;
          v[4] = -bt / R(2);
        }
        a.set_product(idx4(i), idx4(j), v);
      }
      Vec<K> v(5, zero);
      v[4] = bt;
      v[idx4(i)] = R(2) * bt;
      v[idx4(i - 1)] = v[idx4(i - 1)] - bt;
      v[idx4(i + 1)] = v[idx4(i + 1)] - bt;
      a.set_product(idx4(i), 4, v);
    }
    for (int i = 0; i < 4; ++i) a.set_form_entry(i, i, one);
    a.set_form_entry(4, 4, R(2));
    for (long i = -1; i <= 2; ++i) {
      for (long j = i + 1; j <= 2; ++j)
        a.set_form_entry(idx4(i), idx4(j), (j - i) % 2 == 1 ? bt : zero);
      a.set_form_entry(idx4(i), 4, R(2) * bt);
    }
    if (key == "4J") {
      AxialAlgebra<F> A(a, monster(R(2) * bt, bt), a.unit(1), a.unit(2));
      return {std::move(A), {{"w", A.algebra().unit(4)}}, {{"alpha", R(2) * bt}, {"beta", bt}}};
    }
    Vec<K> q = U(a, {{one, 0}, {one, 1}, {one, 2}, {one, 3}, {one, 4}});
    auto ideal = a.ideal_generated({q});
    require(ideal.dim() == 1, "4Jx ideal must be one-dimensional");
    auto quo = a.quotient(ideal);
    AxialAlgebra<F> A(quo.algebra, monster(-R(1, 2), -R(1, 4)),
                      mat_apply(quo.projection, a.unit(1)), mat_apply(quo.projection, a.unit(2)));
    BuiltEntry<F> out{std::move(A), {}, {{"alpha", -R(1, 2)}, {"beta", -R(1, 4)}}};
    out.named["am1"] = mat_apply(quo.projection, a.unit(0));
    out.named["a2"] = mat_apply(quo.projection, a.unit(3));
    out.named["w"] = mat_apply(quo.projection, a.unit(4));
    return out;
  }

  if (key == "4Yhalf") {
    K bt = P("beta");
    check_not01(f, bt, "beta");
    require(!(R(2) * bt == one), "beta = alpha = 1/2");
    Algebra<F> a = z4(1, {"z"});
    diag_units(a, 5);
    a.set_product(4, 4, a.unit(4));
    for (long i = -1; i <= 2; ++i) {
      for (long j = i + 1; j <= 2; ++j) {
        long gap = (j - i) % 4;
        Vec<K> v(5, zero);
        if (gap != 2) {
          v[idx4(i)] = v[idx4(i)] + bt / R(2);
          v[idx4(j)] = v[idx4(j)] + bt / R(2);
          v[idx4(i + 2)] = v[idx4(i + 2)] - bt / R(2);
          v[idx4(j + 2)] = v[idx4(j + 2)] - bt / R(2);
          v[4] = R(4) * bt * bt;
        } else {
          v[idx4(i)] = (one - R(4) * bt) / R(2);
          v[idx4(j)] = (one - R(4) * bt) / R(2);
          v[4] = R(4) * bt * (R(4) * bt - one);
        }
        a.set_product(idx4(i), idx4(j), v);
      }
      Vec<K> v(5, zero);
      v[idx4(i)] = R(1, 4);
      v[idx4(i + 2)] = -R(1, 4);
      v[4] = R(2) * bt;
      a.set_product(idx4(i), 4, v);
    }
    for (int i = 0; i < 4; ++i) a.set_form_entry(i, i, one);
    a.set_form_entry(4, 4, one);
    for (long i = -1; i <= 2; ++i) {
      for (long j = i + 1; j <= 2; ++j)
        a.set_form_entry(idx4(i), idx4(j),
                         (j - i) % 2 == 1 ? K(R(4) * bt * bt)
                                          : K((R(4) * bt - one) * (R(4) * bt - one)));
      a.set_form_entry(idx4(i), 4, R(2) * bt);
    }
    AxialAlgebra<F> A(a, monster(R(1, 2), bt), a.unit(1), a.unit(2));
    return {std::move(A), {{"z", A.algebra().unit(4)}}, {{"alpha", R(1, 2)}, {"beta", bt}}};
  }

  if (key == "4Yal") {
    K al = P("alpha");
    check_not01(f, al, "alpha");
    require(!(al == -one), "alpha = -1 makes beta = 0");
    K bt = (one - al * al) / R(2);
    check_not01(f, bt, "beta = (1-alpha^2)/2");
    require(!(al == bt), "alpha = beta");
    Algebra<F> a = z4(1, {"c"});
    diag_units(a, 5);
    a.set_product(4, 4, a.unit(4));
    K ap1 = al + one;
    for (long i = -1; i <= 2; ++i) {
      for (long j = i + 1; j <= 2; ++j) {
        long gap = (j - i) % 4;
        Vec<K> v(5, zero);
        if (gap != 2) {
          v[idx4(i)] = v[idx4(i)] + bt / R(2);
          v[idx4(j)] = v[idx4(j)] + bt / R(2);
          v[idx4(i + 2)] = v[idx4(i + 2)] - bt / R(2);
          v[idx4(j + 2)] = v[idx4(j + 2)] - bt / R(2);
          v[4] = ap1 * ap1 / R(4);
        } else {
          v[idx4(i)] = (al - one) / R(2);
          v[idx4(j)] = (al - one) / R(2);
          v[4] = ap1 / R(2);
        }
        a.set_product(idx4(i), idx4(j), v);
      }
      Vec<K> v(5, zero);
      v[idx4(i + 2)] = (al - one) / R(2);
      v[idx4(i)] = -(al - one) / R(2);
      v[4] = ap1 / R(2);
      a.set_product(idx4(i), 4, v);
    }
    for (int i = 0; i < 4; ++i) a.set_form_entry(i, i, one);
    a.set_form_entry(4, 4, (R(2) - al) / ap1);
    for (long i = -1; i <= 2; ++i) {
      for (long j = i + 1; j <= 2; ++j)
        a.set_form_entry(idx4(i), idx4(j),
                         (j - i) % 2 == 1 ? K((R(2) - al) * ap1 / R(4)) : K(al / R(2)));
      a.set_form_entry(idx4(i), 4, (R(2) - al) / R(2));
    }
    AxialAlgebra<F> A(a, monster(al, bt), a.unit(1), a.unit(2));
    return {std::move(A), {{"c", A.algebra().unit(4)}}, {{"alpha", al}, {"beta", bt}}};
  }

  if (key == "5A") {
    K al = P("alpha");
    check_not01(f, al, "alpha");
    K bt = (R(5) * al - one) / R(8);
    check_not01(f, bt, "beta = (5alpha-1)/8");
    require(!(al == bt), "alpha = beta (alpha = -1/3)");
    auto idx5 = [](long i) { return static_cast<std::size_t>(((i + 2) % 5 + 5) % 5); };
    Algebra<F> a = mk({"am2", "am1", "a0", "a1", "a2", "w"});
    diag_units(a, 6);
    K s = R(5) * al - one;
    for (long i = -2; i <= 2; ++i) {
      for (long j = i + 1; j <= 2; ++j) {
        long gap = (j - i) % 5;
        Vec<K> v(6, zero);
        v[idx5(i)] = v[idx5(i)] + R(3) * s / R(32);
        v[idx5(j)] = v[idx5(j)] + R(3) * s / R(32);
        for (long o = -2; o <= 2; ++o)
          if (o != i && o != j) v[idx5(o)] = v[idx5(o)] - s / R(32);
        v[5] = (gap == 1 || gap == 4) ? K(s / R(32)) : K(-s / R(32));
        a.set_product(idx5(i), idx5(j), v);
      }
      Vec<K> v(6, zero);
      K c = (R(3) * al + one) / R(8);
      v[5] = c;
      v[idx5(i - 1)] = v[idx5(i - 1)] + c;
      v[idx5(i + 1)] = v[idx5(i + 1)] + c;
      v[idx5(i + 2)] = v[idx5(i + 2)] - c;
      v[idx5(i - 2)] = v[idx5(i - 2)] - c;
      a.set_product(idx5(i), 5, v);
    }
    {
      K ww = (R(3) * al + one) * (R(7) - R(3) * al) / (R(8) * s);
      Vec<K> v(6, ww);
      v[5] = zero;
      a.set_product(5, 5, v);
    }
    for (int i = 0; i < 5; ++i) a.set_form_entry(i, i, one);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) a.set_form_entry(i, j, R(3) * s / R(32));
    for (int i = 0; i < 5; ++i) a.set_form_entry(i, 5, zero);
    a.set_form_entry(5, 5, R(5) * (R(3) * al + one) * (R(7) - R(3) * al) / (R(8) * s));
    AxialAlgebra<F> A(a, monster(al, bt), a.unit(2), a.unit(3));
    return {std::move(A), {{"w", A.algebra().unit(5)}}, {{"alpha", al}, {"beta", bt}}};
  }

  if (key == "6A" || key == "6Ax23" || key == "6Ax97p" || key == "6Ax97m") {
    K al;
    if (key == "6A")
      al = P("alpha");
    else if (key == "6Ax23")
      al = R(2, 3);
    else {
      // alpha = (1 +/- sqrt(97))/24: prime fields with 97 a square only
      if constexpr (std::is_same_v<F, PrimeField>) {
        K s97 = f.from_int(97);
        require(f.is_quadratic_residue(s97), "97 is not a square in " + f.name());
        K r = f.sqrt(s97);
        al = (one + (key == "6Ax97p" ? r : -r)) / R(24);
      } else {
        throw InadmissibleParameters("sqrt(97) entries require a prime field where 97 is a square");
      }
    }
    check_not01(f, al, "alpha");
    require(!(R(2) * al == one), "alpha = 1/2");
    K bt = -al * al / (R(4) * (R(2) * al - one));
    check_not01(f, bt, "beta");
    require(!(al == bt), "alpha = beta (alpha = 4/9)");
    auto idx6 = [](long i) { return static_cast<std::size_t>(((i + 2) % 6 + 6) % 6); };
    const std::size_t C = 6, Z = 7;
    Algebra<F> a = mk({"am2", "am1", "a0", "a1", "a2", "a3", "c", "z"});
    diag_units(a, 6);
    a.set_product(C, C, a.unit(C));
    a.set_product(C, Z, Vec<K>(8, zero));
    a.set_product(Z, Z, U(a, {{(al + R(2)) * (R(3) * al - R(2)) / (R(4) * (R(2) * al - one)), Z}}));
    K t2 = R(2) * al - one;
    for (long i = -2; i <= 3; ++i) {
      for (long j = i + 1; j <= 3; ++j) {
        long gap = (j - i) % 6;
        Vec<K> v(8, zero);
        if (gap == 1 || gap == 5) {
          long i0 = gap == 1 ? i : j;
          K cc = -al * al / (R(8) * t2);
          v[C] = cc;
          v[Z] = cc;
          v[idx6(i)] = v[idx6(i)] + cc;
          v[idx6(j)] = v[idx6(j)] + cc;
          for (long o : {i0 + 2, i0 + 3, i0 - 1, i0 - 2}) v[idx6(o)] = v[idx6(o)] - cc;
        } else if (gap == 2 || gap == 4) {
          long i0 = gap == 2 ? i : j;
          v[idx6(i0)] = al / R(4);
          v[idx6(i0 + 2)] = al / R(4);
          v[idx6(i0 + 4)] = al * (R(3) * al - one) / (R(4) * t2);
          v[Z] = -al * (R(5) * al - R(2)) / (R(8) * t2);
        } else {
          v[idx6(i)] = al / R(2);
          v[idx6(j)] = al / R(2);
          v[C] = -al / R(2);
        }
        a.set_product(idx6(i), idx6(j), v);
      }
      {
        Vec<K> v(8, zero);
        v[idx6(i)] = al / R(2);
        v[C] = al / R(2);
        v[idx6(i + 3)] = v[idx6(i + 3)] - al / R(2);
        a.set_product(idx6(i), C, v);
      }
      {
        Vec<K> v(8, zero);
        K cz = al * (R(3) * al - R(2)) / (R(4) * t2);
        v[idx6(i)] = R(2) * cz;
        v[idx6(i - 2)] = v[idx6(i - 2)] - cz;
        v[idx6(i + 2)] = v[idx6(i + 2)] - cz;
        v[Z] = cz;
        a.set_product(idx6(i), Z, v);
      }
    }
    for (int i = 0; i < 6; ++i) a.set_form_entry(i, i, one);
    a.set_form_entry(C, C, one);
    a.set_form_entry(C, Z, zero);
    a.set_form_entry(Z, Z, (al + R(2)) * (R(7) * al - R(4)) * (R(3) * al - R(2)) / (R(8) * t2 * t2));
    for (long i = -2; i <= 3; ++i) {
      for (long j = i + 1; j <= 3; ++j) {
        long gap = (j - i) % 6;
        K val = gap == 3 ? K(al / R(2))
                         : (gap == 1 || gap == 5)
                               ? K(-al * al * (R(3) * al - R(2)) / (R(16) * t2 * t2))
                               : K(al * (R(21) * al * al - R(18) * al + R(4)) / (R(16) * t2 * t2));
        a.set_form_entry(idx6(i), idx6(j), val);
      }
      a.set_form_entry(idx6(i), C, al / R(2));
      a.set_form_entry(idx6(i), Z, al * (R(7) * al - R(4)) * (R(3) * al - R(2)) / (R(8) * t2 * t2));
    }
    if (key == "6A") {
      AxialAlgebra<F> A(a, monster(al, bt), a.unit(2), a.unit(3));
      BuiltEntry<F> out{std::move(A), {}, {{"alpha", al}, {"beta", bt}}};
      out.named["c"] = out.A.algebra().unit(C);
      out.named["z"] = out.A.algebra().unit(Z);
      return out;
    }
    // quotients: by Fz (alpha = 2/3) or Fq (sqrt97 cases)
    Vec<K> gen;
    if (key == "6Ax23")
      gen = a.unit(Z);
    else {
      gen = Vec<K>(8, zero);
      K c1 = R(2) * t2 * (R(3) * al - R(2));
      for (int i = 0; i < 6; ++i) gen[i] = c1;
      gen[C] = (R(5) * al - R(2)) * (R(3) * al - R(2));
      gen[Z] = R(4) * t2 * (R(3) * al - one);
    }
    auto ideal = a.ideal_generated({gen});
    require(ideal.dim() == 1, "6A quotient ideal must be one-dimensional");
    auto quo = a.quotient(ideal);
    AxialAlgebra<F> A(quo.algebra, monster(al, bt), mat_apply(quo.projection, a.unit(2)),
                      mat_apply(quo.projection, a.unit(3)));
    BuiltEntry<F> out{std::move(A), {}, {{"alpha", al}, {"beta", bt}}};
    for (long i = -2; i <= 3; ++i)
      out.named["a" + std::to_string(i)] = mat_apply(quo.projection, a.unit(idx6(i)));
    out.named["c"] = mat_apply(quo.projection, a.unit(C));
    out.named["z"] = mat_apply(quo.projection, a.unit(Z));
    return out;
  }

  if (key == "6J" || key == "6Jx") {
    K bt = key == "6J" ? P("beta") : -R(1, 7);
    check_not01(f, bt, "beta");
    check_not01(f, R(2) * bt, "alpha = 2beta");
    auto idx6 = [](long i) { return static_cast<std::size_t>(((i + 2) % 6 + 6) % 6); };
    const std::size_t Uu = 6, W = 7;
    Algebra<F> a = mk({"am2", "am1", "a0", "a1", "a2", "a3", "u", "w"});
    diag_units(a, 6);
    a.set_product(Uu, Uu, a.unit(Uu));
    a.set_product(Uu, W, U(a, {{bt, Uu}}));
    a.set_product(W, W, U(a, {{bt + one, W}, {-bt, Uu}}));
    for (long i = -2; i <= 3; ++i) {
      for (long j = i + 1; j <= 3; ++j) {
        long gap = (j - i) % 6;
        Vec<K> v(8, zero);
        if (gap == 1 || gap == 5) {
          v[idx6(i)] = bt;
          v[idx6(j)] = bt;
          v[W] = -bt / R(2);
        } else if (gap == 2 || gap == 4) {
          long i0 = gap == 2 ? i : j;
          v[idx6(i)] = bt / R(2);
          v[idx6(j)] = bt / R(2);
          v[idx6(i0 + 4)] = v[idx6(i0 + 4)] - bt / R(2);
        } else {
          v[idx6(i)] = bt;
          v[idx6(j)] = bt;
          v[Uu] = -bt;
        }
        a.set_product(idx6(i), idx6(j), v);
      }
      {
        Vec<K> v(8, zero);
        v[idx6(i)] = bt;
        v[Uu] = bt;
        v[idx6(i + 3)] = v[idx6(i + 3)] - bt;
        a.set_product(idx6(i), Uu, v);
      }
      {
        Vec<K> v(8, zero);
        v[W] = bt;
        v[idx6(i)] = R(2) * bt;
        v[idx6(i - 1)] = v[idx6(i - 1)] - bt;
        v[idx6(i + 1)] = v[idx6(i + 1)] - bt;
        a.set_product(idx6(i), W, v);
      }
    }
    for (int i = 0; i < 6; ++i) a.set_form_entry(i, i, one);
    a.set_form_entry(Uu, Uu, one);
    a.set_form_entry(Uu, W, bt);
    a.set_form_entry(W, W, bt + R(2));
    for (long i = -2; i <= 3; ++i) {
      for (long j = i + 1; j <= 3; ++j) {
        long gap = (j - i) % 6;
        a.set_form_entry(idx6(i), idx6(j), (gap == 2 || gap == 4) ? K(bt / R(2)) : bt);
      }
      a.set_form_entry(idx6(i), Uu, bt);
      a.set_form_entry(idx6(i), W, R(2) * bt);
    }
    if (key == "6J") {
      AxialAlgebra<F> A(a, monster(R(2) * bt, bt), a.unit(2), a.unit(3));
      BuiltEntry<F> out{std::move(A), {}, {{"alpha", R(2) * bt}, {"beta", bt}}};
      out.named["u"] = out.A.algebra().unit(Uu);
      out.named["w"] = out.A.algebra().unit(W);
      return out;
    }
    Vec<K> q(8, one);
    auto ideal = a.ideal_generated({q});
    require(ideal.dim() == 1, "6Jx ideal must be one-dimensional");
    auto quo = a.quotient(ideal);
    AxialAlgebra<F> A(quo.algebra, monster(-R(2, 7), -R(1, 7)),
                      mat_apply(quo.projection, a.unit(2)), mat_apply(quo.projection, a.unit(3)));
    BuiltEntry<F> out{std::move(A), {}, {{"alpha", -R(2, 7)}, {"beta", -R(1, 7)}}};
    for (long i = -2; i <= 3; ++i)
      out.named["a" + std::to_string(i)] = mat_apply(quo.projection, a.unit(idx6(i)));
    out.named["u"] = mat_apply(quo.projection, a.unit(Uu));
    out.named["w"] = mat_apply(quo.projection, a.unit(W));
    return out;
  }

  if (key == "6Y" || key == "6Yx") {
    // basis am2,a0,a2,d,z ; generators a0 and a1 := am2 + d ; law M(1/2,2)
    Algebra<F> a = mk({"am2", "a0", "a2", "d", "z"});
    auto idxE = [](long i) {  // even index in {-2,0,2} mod 6 -> 0..2
      long r = ((i % 6) + 6) % 6;
      return static_cast<std::size_t>(r == 4 ? 0 : (r == 0 ? 1 : 2));
    };
    const std::size_t D = 3, Z = 4;
    for (long i : {-2L, 0L, 2L}) {
      a.set_product(idxE(i), idxE(i), a.unit(idxE(i)));
      a.set_product(idxE(i), D, U(a, {{R(1, 2), D}, {one, Z}}));
      a.set_product(idxE(i), Z, Vec<K>(5, zero));
    }
    for (long i : {-2L, 0L})
      for (long j = i + 2; j <= 2; j += 2) {
        Vec<K> v(5, zero);
        v[idxE(i)] = one;
        v[idxE(j)] = one;
        long other = -(i + j);  // the remaining even index mod 6
        v[idxE(other)] = -one;
        a.set_product(idxE(i), idxE(j), v);
      }
    a.set_product(D, D, U(a, {{-R(2), Z}}));
    a.set_product(D, Z, Vec<K>(5, zero));
    a.set_product(Z, Z, Vec<K>(5, zero));
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) a.set_form_entry(i, j, one);
    for (int i = 0; i < 5; ++i)
      for (int j = std::max(i, 3); j < 5; ++j) a.set_form_entry(i, j, zero);
    Vec<K> a1 = vec_add(a.unit(0), a.unit(D));
    if (key == "6Y") {
      AxialAlgebra<F> A(a, monster(R(1, 2), R(2)), a.unit(1), a1);
      BuiltEntry<F> out{std::move(A), {}, {{"alpha", R(1, 2)}, {"beta", R(2)}}};
      out.named["d"] = out.A.algebra().unit(D);
      out.named["z"] = out.A.algebra().unit(Z);
      return out;
    }
    auto ideal = a.ideal_generated({a.unit(Z)});
    require(ideal.dim() == 1, "6Yx ideal must be one-dimensional");
    auto quo = a.quotient(ideal);
    AxialAlgebra<F> A(quo.algebra, monster(R(1, 2), R(2)), mat_apply(quo.projection, a.unit(1)),
                      mat_apply(quo.projection, a1));
    BuiltEntry<F> out{std::move(A), {}, {{"alpha", R(1, 2)}, {"beta", R(2)}}};
    out.named["am2"] = mat_apply(quo.projection, a.unit(0));
    out.named["a2"] = mat_apply(quo.projection, a.unit(2));
    out.named["d"] = mat_apply(quo.projection, a.unit(D));
    return out;
  }

  if (key == "IY3" || key == "IY3m1x" || key == "IY3mu1x") {
    K al = key == "IY3m1x" ? -one : P("alpha");
    K mu = key == "IY3mu1x" ? one : P("mu");
    check_not01(f, al, "alpha");
    require(!(R(2) * al == one), "alpha = 1/2");
    Algebra<F> a = mk({"am1", "a0", "a1", "s01"});
    diag_units(a, 3);
    a.set_product(0, 1, U(a, {{R(1, 2), 0}, {R(1, 2), 1}, {one, 3}}));
    a.set_product(1, 2, U(a, {{R(1, 2), 1}, {R(1, 2), 2}, {one, 3}}));
    a.set_product(0, 2, U(a, {{R(1, 2), 0}, {R(1, 2), 2}, {R(2) * (mu + one), 3}}));
    K c1 = (al * al - al + one) * (mu - one) / R(4);
    K c2 = (R(2) * al - one) / R(8);
    K c3 = (R(2) * al - one) / R(2);
    for (std::size_t pos : {0u, 1u, 2u}) {
      Vec<K> v(4, zero);
      v[pos] = v[pos] + c1;
      v[0] = v[0] + c2;
      v[2] = v[2] + c2;
      v[1] = v[1] - R(2) * mu * c2;
      v[3] = c3;
      a.set_product(pos, 3, v);
    }
    {
      K d1 = (R(2) * al - one) * (al * al - R(3) * al + R(2)) / R(16) * (mu - one);
      K d2 = -(R(3) * al * al - R(5) * al + one) / R(4) * (mu - one);
      a.set_product(3, 3, U(a, {{d1, 0}, {-R(2) * mu * d1, 1}, {d1, 2}, {d2, 3}}));
    }
    K lam = al * (one - mu) / R(4) + (mu + one) / R(2);
    for (int i = 0; i < 3; ++i) a.set_form_entry(i, i, one);
    a.set_form_entry(0, 1, lam);
    a.set_form_entry(1, 2, lam);
    a.set_form_entry(0, 2, -(al * mu * mu - R(2) * mu * mu - al) / R(2));
    for (int i = 0; i < 3; ++i) a.set_form_entry(i, 3, -(al - R(2)) * (mu - one) / R(8));
    a.set_form_entry(3, 3, -(al - R(2)) * (al * al - al + one) * (mu - one) * (mu - one) / R(16));
    if (key == "IY3") {
      AxialAlgebra<F> A(a, monster(al, R(1, 2)), a.unit(1), a.unit(2));
      BuiltEntry<F> out{std::move(A), {}, {{"alpha", al}, {"beta", R(1, 2)}, {"mu", mu}}};
      out.named["s01"] = out.A.algebra().unit(3);
      return out;
    }
    // quotient by Fq, q = 4 s01 + (1-2alpha)(am1 + a1 - 2 mu a0)
    Vec<K> q = U(a, {{R(4), 3}, {one - R(2) * al, 0}, {one - R(2) * al, 2},
                     {-R(2) * mu * (one - R(2) * al), 1}});
    auto ideal = a.ideal_generated({q});
    require(ideal.dim() == 1, "IY3 quotient ideal must be one-dimensional");
    auto quo = a.quotient(ideal);
    AxialAlgebra<F> A(quo.algebra, monster(al, R(1, 2)), mat_apply(quo.projection, a.unit(1)),
                      mat_apply(quo.projection, a.unit(2)));
    BuiltEntry<F> out{std::move(A), {}, {{"alpha", al}, {"beta", R(1, 2)}, {"mu", mu}}};
    out.named["am1"] = mat_apply(quo.projection, a.unit(0));
    out.named["s01"] = mat_apply(quo.projection, a.unit(3));
    return out;
  }

  if (key == "IY5" || key == "IY5x") {
    K al = P("alpha");
    check_not01(f, al, "alpha");
    require(!(R(2) * al == one), "alpha = 1/2");
    auto idx5 = [](long i) { return static_cast<std::size_t>(i + 2); };  // -2..2 -> 0..4
    const std::size_t S = 5;
    Algebra<F> a = mk({"am2", "am1", "a0", "a1", "a2", "s01"});
    diag_units(a, 5);
    Vec<K> nvec = U(a, {{one, 0}, {-R(4), 1}, {R(6), 2}, {-R(4), 3}, {one, 4}});
    for (long i = -2; i <= 2; ++i)
      for (long j = i + 1; j <= 2; ++j) {
        long d = j - i;
        Vec<K> v(6, zero);
        if (d < 4) {
          v[idx5(i)] = R(1, 2);
          v[idx5(j)] = R(1, 2);
        }
        if (d == 1) {
          v[S] = one;
        } else if (d == 2) {
          v[S] = R(4);
          for (int k = 0; k < 5; ++k) v[k] = v[k] - R(1, 4) * nvec[k];
        } else if (d == 3) {
          v[S] = R(9);
          for (int k = 0; k < 5; ++k) v[k] = v[k] - R(3, 2) * nvec[k];
        } else {
          v[S] = R(16);
          v[idx5(1)] = R(20);
          v[idx5(-1)] = R(20);
          v[idx5(2)] = -R(9, 2);
          v[idx5(-2)] = -R(9, 2);
          v[idx5(0)] = -R(30);
        }
        a.set_product(idx5(i), idx5(j), v);
      }
    // a3 and a-3 via the recurrence a_{i+5} = a_i + 5(a_{i+4}-a_{i+1}) - 10(a_{i+3}-a_{i+2})
    Vec<K> a3 = U(a, {{one, 0}, {-R(5), 1}, {R(10), 2}, {-R(10), 3}, {R(5), 4}});
    Vec<K> am3 = U(a, {{R(5), 0}, {-R(10), 1}, {R(10), 2}, {-R(5), 3}, {one, 4}});
    auto axis_vec = [&](long x) -> Vec<K> {
      if (-2 <= x && x <= 2) return a.unit(idx5(x));
      return x == 3 ? a3 : am3;
    };
    K c = (R(2) * al - one) / R(8);
    for (long i = -2; i <= 2; ++i) {
      Vec<K> v(6, zero);
      v[S] = R(4) * c;
      v = vec_add(v, vec_scale(c, axis_vec(i - 1)));
      v = vec_add(v, vec_scale(c, axis_vec(i + 1)));
      v[idx5(i)] = v[idx5(i)] - R(2) * c;
      a.set_product(idx5(i), S, v);
    }
    {
      K cc = (R(2) * al - one) * (R(2) * al - R(3)) / R(32);
      Vec<K> v = vec_scale(cc, nvec);
      a.set_product(S, S, v);
    }
    for (int i = 0; i < 5; ++i)
      for (int j = i; j < 5; ++j) a.set_form_entry(i, j, one);
    for (int i = 0; i < 6; ++i) a.set_form_entry(i, 5, zero);
    if (key == "IY5") {
      AxialAlgebra<F> A(a, monster(al, R(1, 2)), a.unit(2), a.unit(3));
      BuiltEntry<F> out{std::move(A), {}, {{"alpha", al}, {"beta", R(1, 2)}}};
      out.named["s01"] = out.A.algebra().unit(S);
      out.named["n"] = nvec;
      return out;
    }
    auto ideal = a.ideal_generated({nvec});
    require(ideal.dim() == 1, "IY5x ideal must be one-dimensional");
    auto quo = a.quotient(ideal);
    AxialAlgebra<F> A(quo.algebra, monster(al, R(1, 2)), mat_apply(quo.projection, a.unit(2)),
                      mat_apply(quo.projection, a.unit(3)));
    BuiltEntry<F> out{std::move(A), {}, {{"alpha", al}, {"beta", R(1, 2)}}};
    out.named["s01"] = mat_apply(quo.projection, a.unit(S));
    return out;
  }

  if (key == "IH3") {
    Algebra<F> a = mk({"a0", "a1", "a2", "s01"});
    diag_units(a, 3);
    a.set_product(0, 1, U(a, {{R(1, 2), 0}, {R(1, 2), 1}, {one, 3}}));
    a.set_product(1, 2, U(a, {{R(1, 2), 1}, {R(1, 2), 2}, {one, 3}}));
    a.set_product(0, 2, U(a, {{R(1, 2), 0}, {R(1, 2), 2}}));
    a.set_product(0, 3, U(a, {{-R(3, 8), 0}, {R(3, 4), 1}, {-R(3, 8), 2}, {R(3, 2), 3}}));
    a.set_product(1, 3, U(a, {{R(3, 8), 0}, {-R(3, 4), 1}, {R(3, 8), 2}, {R(3, 2), 3}}));
    a.set_product(2, 3, U(a, {{-R(3, 8), 0}, {R(3, 4), 1}, {-R(3, 8), 2}, {R(3, 2), 3}}));
    a.set_product(3, 3, U(a, {{R(3, 2), 3}}));
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) a.set_form_entry(i, j, one);
    for (int i = 0; i < 4; ++i) a.set_form_entry(i, 3, zero);
    AxialAlgebra<F> A(a, monster(R(2), R(1, 2)), a.unit(0), a.unit(1));
    BuiltEntry<F> out{std::move(A), {}, {{"alpha", R(2)}, {"beta", R(1, 2)}}};
    out.named["s01"] = out.A.algebra().unit(3);
    return out;
  }

  if (key == "Q2" || key == "Q2x") {
    K bt = key == "Q2" ? P("beta") : -R(1, 2);
    check_not01(f, bt, "beta");
    check_not01(f, R(2) * bt, "alpha = 2beta");
    Algebra<F> a = z4(0, {});
    diag_units(a, 4);
    const std::size_t AM1 = 0, A0 = 1, A1 = 2, A2 = 3;
    a.set_product(A0, A1, U(a, {{-bt / R(2), AM1}, {bt, A0}, {bt / R(2), A1}}));
    a.set_product(A0, AM1, U(a, {{bt / R(2), AM1}, {bt, A0}, {-bt / R(2), A1}}));
    a.set_product(A2, A1, U(a, {{-bt / R(2), AM1}, {bt / R(2), A1}, {bt, A2}}));
    a.set_product(A2, AM1, U(a, {{bt / R(2), AM1}, {-bt / R(2), A1}, {bt, A2}}));
    a.set_product(AM1, A1, U(a, {{bt, AM1}, {-bt, A0}, {bt, A1}, {-bt, A2}}));
    a.set_product(A0, A2, Vec<K>(4, zero));
    a.set_form_entry(AM1, AM1, R(2));
    a.set_form_entry(A0, A0, one);
    a.set_form_entry(A1, A1, R(2));
    a.set_form_entry(A2, A2, one);
    a.set_form_entry(AM1, A0, bt);
    a.set_form_entry(A0, A1, bt);
    a.set_form_entry(A1, A2, bt);
    a.set_form_entry(AM1, A2, bt);
    a.set_form_entry(AM1, A1, R(2) * bt);
    a.set_form_entry(A0, A2, zero);
    if (key == "Q2") {
      AxialAlgebra<F> A(a, monster(R(2) * bt, bt), a.unit(A0), a.unit(A1));
      return {std::move(A), {}, {{"alpha", R(2) * bt}, {"beta", bt}}};
    }
    Vec<K> q(4, one);
    auto ideal = a.ideal_generated({q});
    require(ideal.dim() == 1, "Q2x radical must be one-dimensional");
    auto quo = a.quotient(ideal);
    AxialAlgebra<F> A(quo.algebra, monster(-one, -R(1, 2)), mat_apply(quo.projection, a.unit(A0)),
                      mat_apply(quo.projection, a.unit(A1)));
    BuiltEntry<F> out{std::move(A), {}, {{"alpha", -one}, {"beta", -R(1, 2)}}};
    out.named["am1"] = mat_apply(quo.projection, a.unit(AM1));
    out.named["a2"] = mat_apply(quo.projection, a.unit(A2));
    return out;
  }

  if (key == "Q2p") {
    Algebra<F> a = mk({"a0", "a1", "a2", "s"});
    diag_units(a, 3);
    a.set_product(3, 3, a.unit(3));  // forced by the fusion law; see ledger
    a.set_product(0, 1, U(a, {{R(2, 3), 0}, {R(1, 6), 1}, {-R(1, 6), 3}}));
    a.set_product(2, 1, U(a, {{R(1, 6), 1}, {R(2, 3), 2}, {-R(1, 6), 3}}));
    a.set_product(0, 2, Vec<K>(4, zero));
    a.set_product(0, 3, U(a, {{R(2, 3), 0}, {-R(1, 6), 1}, {R(1, 6), 3}}));
    a.set_product(2, 3, U(a, {{-R(1, 6), 1}, {R(2, 3), 2}, {R(1, 6), 3}}));
    a.set_product(1, 3, U(a, {{R(2, 3), 0}, {-R(1, 3), 1}, {R(2, 3), 2}, {-R(1, 3), 3}}));
    a.set_form_entry(0, 0, R(5, 8));
    a.set_form_entry(2, 2, R(5, 8));
    a.set_form_entry(1, 1, one);
    a.set_form_entry(3, 3, one);
    a.set_form_entry(0, 1, R(5, 12));
    a.set_form_entry(1, 2, R(5, 12));
    a.set_form_entry(0, 2, zero);
    a.set_form_entry(0, 3, R(5, 12));
    a.set_form_entry(2, 3, R(5, 12));
    a.set_form_entry(1, 3, R(1, 6));
    AxialAlgebra<F> A(a, monster(R(1, 3), R(2, 3)), a.unit(0), a.unit(1));
    BuiltEntry<F> out{std::move(A), {}, {{"alpha", R(1, 3)}, {"beta", R(2, 3)}}};
    out.named["s"] = out.A.algebra().unit(3);
    out.named["a2"] = out.A.algebra().unit(2);
    return out;
  }

  if (key == "4Bnu") {
    K nu = P("nu");
    Algebra<F> a = mk({"am1", "a0", "a1", "u"});
    diag_units(a, 3);
    const std::size_t AM1 = 0, A0 = 1, A1 = 2, Uu = 3;
    a.set_product(Uu, Uu, Vec<K>(4, zero));
    a.set_product(A0, A1, U(a, {{-R(3, 4), AM1}, {R(1, 2), A0}, {-R(1, 4), A1}, {(one + nu) / R(4), Uu}}));
    a.set_product(A0, AM1, U(a, {{-R(1, 4), AM1}, {R(1, 2), A0}, {-R(3, 4), A1}, {(one + nu) / R(4), Uu}}));
    a.set_product(AM1, A1, U(a, {{-one, AM1}, {-one, A1}, {nu / R(2), Uu}}));
    for (std::size_t i : {AM1, A0, A1}) a.set_product(i, Uu, Vec<K>(4, zero));
    for (std::size_t i : {AM1, A0, A1}) a.set_form_entry(i, i, one);
    a.set_form_entry(AM1, A0, R(1, 4));
    a.set_form_entry(A0, A1, R(1, 4));
    a.set_form_entry(AM1, A1, -R(1, 2));
    for (std::size_t i = 0; i < 4; ++i) a.set_form_entry(i, Uu, zero);
    AxialAlgebra<F> A(a, monster(-one, R(1, 2)), a.unit(A0), a.unit(A1));
    BuiltEntry<F> out{std::move(A), {}, {{"alpha", -one}, {"beta", R(1, 2)}, {"nu", nu}}};
    out.named["u"] = out.A.algebra().unit(Uu);
    return out;
  }

  throw std::invalid_argument("unknown catalog entry: " + key);
}

}  // namespace axial

#endif  // AXIAL_CATALOG_HPP
