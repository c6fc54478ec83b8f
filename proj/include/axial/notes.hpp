#ifndef AXIAL_NOTES_HPP
#define AXIAL_NOTES_HPP

#include <string>
#include <vector>

#include "axial/catalog.hpp"

/// Each table's Notes block as assertable properties: identity elements,
/// annihilators, radicals, quotient round trips, subalgebra isomorphisms via
/// the tables' explicit basis maps, and the axis facts the Notes state.
namespace axial {

struct NoteResult {
  std::string id;
  bool pass = false;
  bool skipped = false;  // explicit out-of-scope marker
  std::string detail;
};

namespace notedetail {

template <Field F>
NoteResult np(const std::string& id, bool ok, const std::string& detail = "") {
  return NoteResult{id, ok, false, detail};
}
inline NoteResult skip(const std::string& id, const std::string& why) {
  return NoteResult{id, true, true, why};
}

// identity element equals the given vector
template <Field F>
bool identity_is(const Algebra<F>& a, const Vec<typename F::Elem>& e) {
  auto got = a.identity_element();
  return got && *got == e;
}

// the one-dimensional span of v annihilates the algebra
template <Field F>
bool annihilates(const Algebra<F>& a, const Vec<typename F::Elem>& v) {
  auto ann = a.annihilator();
  return ann.contains(v) && !vec_is_zero(v);
}

}  // namespace notedetail

/// Runs the encoded Notes of a catalog entry. The entry must have been built
/// with the same parameters.
template <Field F>
std::vector<NoteResult> check_notes(const F& f, const std::string& key,
                                    const BuiltEntry<F>& e) {
  using K = typename F::Elem;
  using notedetail::annihilates;
  using notedetail::identity_is;
  using notedetail::skip;
  const auto np = [](const std::string& id, bool ok, const std::string& d = "") {
    return NoteResult{id, ok, false, d};
  };
  const auto& A = e.A;
  const auto& alg = A.algebra();
  const F& ff = f;
  const K one = f.one();
  auto R = [&](long n, long d = 1) { return f.from_ratio(n, d); };
  auto a = [&](long i) { return A.axis(i); };
  auto named = [&](const std::string& n) { return e.named.at(n); };
  auto scalar = [&](const std::string& n) { return e.scalars.at(n); };
  const std::uint64_t ch = f.characteristic();
  std::vector<NoteResult> out;

  auto build_target = [&](const std::string& tkey,
                          std::map<std::string, K> prm) { return build_entry(ff, tkey, prm); };
  auto iso_check = [&](const std::string& id, const std::vector<Vec<K>>& vecs,
                       const std::string& tkey, std::map<std::string, K> prm) {
    try {
      auto target = build_target(tkey, prm);
      out.push_back(np(id, alg.verify_basis_map(vecs, target.A.algebra())));
    } catch (InadmissibleParameters& ex) {
      out.push_back(np(id, false, ex.what()));
    }
  };

  if (key == "2B") {
    // 2B = J(-1/2)/F(a0+a1+2s01)
    auto par = build_target("J", {{"delta", -R(1, 2)}, {"alpha", scalar("alpha")}});
    const auto& pa = par.A.algebra();
    Vec<K> gen = vec_add(vec_add(pa.unit(0), pa.unit(1)), vec_scale(R(2), pa.unit(2)));
    auto ideal = pa.ideal_generated({gen});
    bool ok = ideal.dim() == 1;
    if (ok) {
      auto quo = pa.quotient(ideal);
      ok = quo.algebra.verify_basis_map(
          {mat_apply(quo.projection, pa.unit(0)), mat_apply(quo.projection, pa.unit(1))}, alg);
    }
    out.push_back(np("table2.6 2B = J(-1/2)/<a0+a1+2s01>", ok));
    out.push_back(np("table2 identity a0+a1", identity_is(alg, vec_add(a(0), a(1)))));
  }

  if (key == "3C") {
    K eta = scalar("eta");
    if (!(eta == -one)) {
      Vec<K> id_vec = vec_scale(one / (one + eta), vec_add(vec_add(a(0), a(1)), named("ast")));
      out.push_back(np("3C identity (a0+a1+ast)/(1+eta)", identity_is(alg, id_vec)));
    }
    out.push_back(np("table2.2 ast = a1^tau0",
                     mat_apply(A.miyamoto(a(0)), a(1)) == named("ast")));
    if (eta == R(1, 2)) {
      // 3C(1/2) = J(-3/8) under ast -> -(a0+a1+4 s01)
      auto tj = build_target("J", {{"delta", -R(3, 8)}, {"alpha", scalar("alpha")}});
      Vec<K> sm = vec_scale(-R(1, 4), vec_add(vec_add(a(0), a(1)), named("ast")));
      out.push_back(np("table2.7 3C(1/2)=J(-3/8)",
                       alg.verify_basis_map({a(0), a(1), sm}, tj.A.algebra())));
    }
  }

  if (key == "3Cm1x") {
    // quotient round trip from 3C(-1)
    auto par = build_target("3C", {{"eta", -one}, {"alpha", scalar("alpha")}});
    const auto& pa = par.A.algebra();
    Vec<K> gen = vec_add(vec_add(pa.unit(0), pa.unit(1)), pa.unit(2));
    auto ideal = pa.ideal_generated({gen});
    bool ok = ideal.dim() == 1;
    if (ok) {
      auto quo = pa.quotient(ideal);
      ok = quo.algebra.verify_basis_map(
          {mat_apply(quo.projection, pa.unit(0)), mat_apply(quo.projection, pa.unit(1))}, alg);
    }
    out.push_back(np("table2.3 3C(-1)x = 3C(-1)/<a0+a1+ast>", ok));
    if (ch == 3) {
      auto tj = build_target("J0x", {{"alpha", scalar("alpha")}});
      out.push_back(np("table2.8 char3 3C(-1)x = J(0)x",
                       alg.verify_basis_map({a(0), a(1)}, tj.A.algebra())));
    }
  }

  if (key == "3A" || key == "3Ax") {
    K al = scalar("alpha"), bt = scalar("beta");
    K crit_den = R(3) * al - one;
    bool degenerate = !is_zero(crit_den) && bt == (one - R(3) * al * al) / crit_den;
    if (key == "3A") {
      K c = al * (R(3) * al * al + R(3) * al * bt - bt - one);
      if (!degenerate) {
        Vec<K> id_vec = vec_scale(-R(4) * (R(2) * al - one) / c, named("z"));
        out.push_back(np("table3.2 identity -4(2al-1)/(al(3al^2+3albt-bt-1)) z",
                         identity_is(alg, id_vec)));
      } else {
        out.push_back(np("table3.2 z annihilates", annihilates(alg, named("z"))));
        auto rad = alg.form_check().radical;
        out.push_back(np("table3.3 radical = Fz", rad.dim() == 1 && rad.contains(named("z"))));
        auto ideal = alg.ideal_generated({named("z")});
        bool ok = ideal.dim() == 1;
        if (ok) {
          auto quo = alg.quotient(ideal);
          auto target = build_target("3Ax", {{"alpha", al}});
          ok = quo.algebra.verify_basis_map({mat_apply(quo.projection, alg.unit(0)),
                                             mat_apply(quo.projection, alg.unit(1)),
                                             mat_apply(quo.projection, alg.unit(2))},
                                            target.A.algebra());
        }
        out.push_back(np("table3.3 quotient = 3Ax", ok));
      }
    }
    // lambda lemma
    out.push_back(np("sub3A(1) lambda1",
                     A.lambda_values(1).first ==
                         (R(3) * al * al + R(3) * al * bt - al - R(2) * bt) /
                             (R(4) * (R(2) * al - one))));
    // s01 = z + (al-bt)/2 (a0+a1+a2)  (3A only)
    if (key == "3A") {
      Vec<K> rhs = vec_add(named("z"),
                           vec_scale((al - bt) / R(2), vec_add(vec_add(a(0), a(1)), a(2))));
      out.push_back(np("sub3A(2) s01", A.s_element(0, 1) == rhs));
    }
  }

  if (key == "4A" || key == "4Ax") {
    K bt = scalar("beta");
    if (key == "4A") {
      if (!(bt == R(1, 2))) {
        Vec<K> id_vec = vec_scale(R(8) / (R(2) * bt - one), named("e"));
        out.push_back(np("table4.1 identity 8/(2bt-1) e", identity_is(alg, id_vec)));
      } else {
        out.push_back(np("table4.1 e annihilates", annihilates(alg, named("e"))));
        out.push_back(np("table4.2 Fe in radical", alg.form_check().radical.contains(named("e"))));
        auto ideal = alg.ideal_generated({named("e")});
        bool ok = ideal.dim() == 1;
        if (ok) {
          auto quo = alg.quotient(ideal);
          auto target = build_target("4Ax", {});
          std::vector<Vec<K>> vecs;
          for (int i = 0; i < 4; ++i) vecs.push_back(mat_apply(quo.projection, alg.unit(i)));
          ok = quo.algebra.verify_basis_map(vecs, target.A.algebra());
        }
        out.push_back(np("table4.2 quotient = 4Ax", ok));
      }
    }
    // even/odd = 2B
    iso_check("table4.3 even = 2B", {a(0), a(2)}, "2B", {});
    iso_check("table4.3 odd = 2B", {a(-1), a(1)}, "2B", {});
    out.push_back(np("sub4A(1) lambda1 = beta", A.lambda_values(1).first == bt));
  }

  if (key == "4B") {
    K al = scalar("alpha");
    Vec<K> c = named("c");
    // c = 4/al^2 a0 a1 + (am1 + a2) - (a0 + a1)
    Vec<K> crec = vec_add(vec_scale(R(4) / (al * al), alg.multiply(a(0), a(1))),
                          vec_sub(vec_add(a(-1), a(2)), vec_add(a(0), a(1))));
    out.push_back(np("table5.1 c recovery", crec == c));
    out.push_back(np("table5.1 c is a J(alpha) axis",
                     axis_report(alg, FusionLaw<F>::jordan(ff, al), c).pass()));
    iso_check("table5.2 even = 3C(al) via (a0,a2,c)", {a(0), a(2), c}, "3C",
              {{"eta", al}, {"alpha", scalar("beta")}});
    iso_check("table5.2 odd = 3C(al) via (am1,a1,c)", {a(-1), a(1), c}, "3C",
              {{"eta", al}, {"alpha", scalar("beta")}});
    out.push_back(np("sub4B(1) lambda1 = al^2/4", A.lambda_values(1).first == al * al / R(4)));
    if (al == -one) {
      auto rad = alg.form_check().radical;
      auto ann = alg.annihilator();
      Vec<K> r1 = vec_add(vec_add(a(0), a(2)), c);
      Vec<K> r2 = vec_add(vec_add(a(-1), a(1)), c);
      out.push_back(np("table5.3 radical = annihilator, 2-dim",
                       rad.dim() == 2 && ann.dim() == 2 && rad.contains(r1) && rad.contains(r2) &&
                           ann.contains(r1) && ann.contains(r2)));
    }
  }

  if (key == "4Bx") {
    iso_check("table5.4 even = 3C(-1)x", {a(0), a(2)}, "3Cm1x", {});
    iso_check("table5.4 odd = 3C(-1)x", {a(-1), a(1)}, "3Cm1x", {});
  }

  if (key == "4J" || key == "4Jx") {
    out.push_back(skip("table6.1 4J(1/2,1/4)=4Y(1/2,1/4)",
                       "isomorphism stated without a basis map; general search out of scope"));
    if (key == "4J") {
      K bt = scalar("beta");
      Vec<K> q = vec_add(vec_add(vec_add(a(-1), a(0)), vec_add(a(1), a(2))), named("w"));
      if (!(bt == -R(1, 4))) {
        out.push_back(np("table6.2 identity q/(4bt+1)",
                         identity_is(alg, vec_scale(one / (R(4) * bt + one), q))));
      } else {
        out.push_back(np("table6.2 q annihilates", annihilates(alg, q)));
        auto rad = alg.form_check().radical;
        out.push_back(np("table6.3 radical = Fq", rad.dim() == 1 && rad.contains(q)));
      }
    }
    iso_check("table6.4 even = 2B", {a(0), a(2)}, "2B", {});
    iso_check("table6.4 odd = 2B", {a(-1), a(1)}, "2B", {});
  }

  if (key == "4Yhalf") {
    K bt = scalar("beta");
    Vec<K> z = named("z");
    Vec<K> id_vec = vec_scale(one / (one - R(2) * bt),
                              vec_add(vec_scale(R(1, 2), vec_add(vec_add(a(-1), a(0)), vec_add(a(1), a(2)))),
                                      vec_scale(one - R(6) * bt, z)));
    out.push_back(np("table7.1 identity", identity_is(alg, id_vec)));
    Vec<K> third = vec_add(vec_scale(-R(2) * bt, vec_add(a(0), a(2))),
                           vec_scale(R(4) * bt * (R(4) * bt - one), z));
    iso_check("table7.2 even = J(4bt(2bt-1))", {a(0), a(2), third}, "J",
              {{"delta", R(4) * bt * (R(2) * bt - one)}, {"alpha", R(2)}});
    out.push_back(np("sub4Y1/2(1) lambda1 = 4bt^2",
                     A.lambda_values(1).first == R(4) * bt * bt));
  }

  if (key == "4Yal") {
    K al = scalar("alpha");
    Vec<K> c = named("c");
    out.push_back(np("table8.2 c is a J(1-alpha) axis",
                     axis_report(alg, FusionLaw<F>::jordan(ff, one - al), c).pass()));
    // derived corrected third vector (a_i + a_{i+2} - (al+1)c)/al; see ledger
    Vec<K> ci = vec_scale(one / al, vec_sub(vec_add(a(0), a(2)), vec_scale(al + one, c)));
    iso_check("table8.3 even = 3C(al)", {a(0), a(2), ci}, "3C",
              {{"eta", al}, {"alpha", scalar("beta")}});
    out.push_back(np("sub4Y(1) lambda1",
                     A.lambda_values(1).first == (R(2) - al) * (one + al) / R(4)));
  }

  if (key == "5A") {
    K al = scalar("alpha");
    Vec<K> suma = vec_add(vec_add(vec_add(a(-2), a(-1)), vec_add(a(0), a(1))), a(2));
    if (ch != 5) {
      K bt = scalar("beta");
      out.push_back(np("table9.1 identity sum/(5(al-bt))",
                       identity_is(alg, vec_scale(one / (R(5) * (al - bt)), suma))));
    } else {
      out.push_back(np("table9.2 char5 sum annihilates", annihilates(alg, suma)));
      out.push_back(np("table9.2 char5 sum in radical", alg.form_check().radical.contains(suma)));
    }
    out.push_back(np("sub5A(1) lambda1 = 3(5al-1)/32",
                     A.lambda_values(1).first == R(3) * (R(5) * al - one) / R(32)));
    bool degenerate = ch == 5 || al == R(7, 3);
    if (degenerate) {
      auto rad = alg.form_check().radical;
      bool ok = rad.dim() == 5;
      for (long i = -2; i < 2 && ok; ++i) ok = rad.contains(vec_sub(a(i), a(i + 1)));
      Vec<K> d01 = vec_sub(a(0), a(1));
      ok = ok && rad.contains(alg.multiply(d01, d01));
      out.push_back(np("sub5A(5) radical dim 5 with difference vectors", ok));
    }
  }

  if (key == "6A" || key == "6Ax23" || key == "6Ax97p" || key == "6Ax97m") {
    K al = scalar("alpha"), bt = scalar("beta");
    bool is_quotient = key != "6A";
    auto av = [&](long i) { return is_quotient ? named("a" + std::to_string(i)) : a(i); };
    Vec<K> c = named("c"), z = named("z");
    Vec<K> suma(alg.dim(), f.zero());
    for (long i = -2; i <= 3; ++i) suma = vec_add(suma, av(i));
    K t2 = R(2) * al - one, t3 = R(3) * al - R(2);
    Vec<K> q = vec_add(vec_add(vec_scale(R(2) * t2 * t3, suma), vec_scale((R(5) * al - R(2)) * t3, c)),
                       vec_scale(R(4) * t2 * (R(3) * al - one), z));
    K idden = (R(12) * al * al - al - R(2)) * t3;
    if (key == "6A" && !is_zero(idden)) {
      out.push_back(np("table10.1 identity q/((12al^2-al-2)(3al-2))",
                       identity_is(alg, vec_scale(one / idden, q))));
    } else if (is_quotient) {
      out.push_back(np("table10.1 q annihilates in quotient",
                       vec_is_zero(q) || annihilates(alg, q)));
    }
    // subalgebra <<a_i, a_{i+3}>> = 3C(al) with basis (a_i, a_{i+3}, c)
    iso_check("table10.8 (a0,a3,c) = 3C(al)", {av(0), av(3), c}, "3C",
              {{"eta", al}, {"alpha", bt}});
    if (key == "6A") {
      if (!(al == R(2, 5))) {
        // even = 3A(al,bt) with derived fourth vector (see ledger)
        Vec<K> z3 = vec_sub(alg.multiply(av(0), av(2)),
                            vec_add(vec_scale(bt, vec_add(av(0), av(2))),
                                    vec_scale((al - bt) / R(2), vec_add(vec_add(av(0), av(2)), av(-2)))));
        iso_check("table10.4 even = 3A(al,bt)", {av(0), av(2), av(-2), z3}, "3A",
                  {{"alpha", al}, {"beta", bt}});
      } else {
        iso_check("table10.5 even = 3C(1/5) at al=2/5", {av(0), av(2), av(-2)}, "3C",
                  {{"eta", R(1, 5)}, {"alpha", R(2, 5)}});
      }
      out.push_back(np("subA6(1) lambda1",
                       A.lambda_values(1).first ==
                           al * al * (R(2) - R(3) * al) / (R(16) * t2 * t2)));
    }
  }

  if (key == "6J" || key == "6Jx") {
    out.push_back(skip("table11.1 6J(2/5,1/5)=6A(2/5,1/5)",
                       "isomorphism stated without a basis map; general search out of scope"));
    K bt = scalar("beta");
    bool is_quotient = key == "6Jx";
    auto av = [&](long i) { return is_quotient ? named("a" + std::to_string(i)) : a(i); };
    Vec<K> u = named("u"), w = named("w");
    Vec<K> q(alg.dim(), f.zero());
    for (long i = -2; i <= 3; ++i) q = vec_add(q, av(i));
    q = vec_add(q, vec_add(u, w));
    if (!is_quotient) {
      if (!(bt == -R(1, 7))) {
        out.push_back(np("table11.2 identity q/(7bt+1)",
                         identity_is(alg, vec_scale(one / (R(7) * bt + one), q))));
      } else {
        out.push_back(np("table11.2 q annihilates", annihilates(alg, q)));
      }
    } else {
      out.push_back(np("table11.3 q maps to zero", vec_is_zero(q)));
    }
    iso_check("table11.4 even = 3C(bt)", {av(0), av(2), av(-2)}, "3C",
              {{"eta", bt}, {"alpha", R(2) * bt}});
    iso_check("table11.5 (a0,a3,u) = 3C(2bt)", {av(0), av(3), u}, "3C",
              {{"eta", R(2) * bt}, {"alpha", bt}});
  }

  if (key == "6Y" || key == "6Yx") {
    bool is_quotient = key == "6Yx";
    Vec<K> d = named("d");
    Vec<K> am2 = is_quotient ? named("am2") : alg.unit(0);
    Vec<K> a2v = is_quotient ? named("a2") : alg.unit(2);
    out.push_back(np("table12.1 a1 = am2 + d", a(1) == vec_add(am2, d)));
    out.push_back(np("table12.4 lambda1 = 1", A.lambda_values(1).first == one));
    if (!is_quotient) {
      Vec<K> z = named("z");
      Vec<K> rhs = vec_sub(z, vec_add(vec_add(alg.unit(1), a2v),
                                      vec_add(am2, vec_scale(R(3, 2), d))));
      out.push_back(np("table12.5 s01 = z - (a0+a2+a4+3/2 d)", A.s_element(0, 1) == rhs));
      // J(0) subalgebra: (a0, a0+d, z)
      iso_check("table12.7 (a0, a0+d, z) = J(0)",
                {alg.unit(1), vec_add(alg.unit(1), d), z}, "J",
                {{"delta", f.zero()}, {"alpha", R(2)}});
    } else {
      iso_check("table12.8 (a0, a0+d) = J(0)x in quotient",
                {e.named.count("a0") ? named("a0") : alg.unit(1),
                 vec_add(e.named.count("a0") ? named("a0") : alg.unit(1), d)},
                "J0x", {});
    }
    // even/odd support 3C(2); see ledger for the Note-6 reading
    Vec<K> a0v = is_quotient ? Vec<K>(alg.unit(1)) : alg.unit(1);
    iso_check("table12.6 even = 3C(2) on (a0,a2,a4)", {a0v, a2v, am2}, "3C",
              {{"eta", R(2)}, {"alpha", R(1, 2)}});
    {
      Vec<K> odd_ast = vec_sub(vec_add(a(-1), a(1)), alg.multiply(a(-1), a(1)));
      iso_check("table12.6 odd = 3C(2)", {a(-1), a(1), odd_ast}, "3C",
                {{"eta", R(2)}, {"alpha", R(1, 2)}});
    }
  }

  if (key == "IY3" || key == "IY3m1x" || key == "IY3mu1x") {
    K al = scalar("alpha"), mu = scalar("mu");
    bool is_quotient = key != "IY3";
    out.push_back(np("subIY3(1) lambda1",
                     A.lambda_values(1).first == al * (one - mu) / R(4) + (mu + one) / R(2)));
    // recurrence a_{i+2} = a_{i-1} - (2mu+1)(a_i - a_{i+1})
    {
      bool ok = true;
      for (long i : {0L, 1L}) {
        Vec<K> rhs = vec_sub(a(i - 1), vec_scale(R(2) * mu + one, vec_sub(a(i), a(i + 1))));
        ok = ok && (a(i + 2) == rhs);
      }
      out.push_back(np("subIY3(2) recurrence", ok));
    }
    if (!is_quotient) {
      Vec<K> q = vec_add(vec_scale(R(4), named("s01")),
                         vec_scale(one - R(2) * al,
                                   vec_sub(vec_add(a(-1), a(1)), vec_scale(R(2) * mu, a(0)))));
      if (!(al == -one) && !(mu == one)) {
        out.push_back(np("table13.3 identity q/(al(al+1)(mu-1))",
                         identity_is(alg, vec_scale(one / (al * (al + one) * (mu - one)), q))));
        // MP basis (e,f,z1,z2): z1, z2 idempotent and 1 = z1+z2
        Vec<K> ev = vec_scale(one / (mu - one),
                              vec_add(vec_sub(a(-1), vec_scale(R(2), a(0))), a(1)));
        Vec<K> fv = vec_scale(one / (mu - one),
                              vec_add(vec_sub(a(-1), vec_scale(R(2) * mu, a(0))),
                                      vec_scale(R(2) * mu - one, a(1))));
        Vec<K> z1 = vec_scale(one / (al * (mu - one)),
                              vec_add(vec_add(vec_scale(one - al, vec_add(a(-1), a(1))),
                                              vec_scale(R(2) * mu * (al - one), a(0))),
                                      vec_scale(R(4), named("s01"))));
        Vec<K> z2 = vec_scale(one / ((al + one) * (mu - one)),
                              vec_add(vec_sub(vec_scale(al - R(2), vec_add(a(-1), a(1))),
                                              vec_scale(R(2) * mu * (al - R(2)), a(0))),
                                      vec_scale(-R(4), named("s01"))));
        bool basis_ok =
            Subspace<F>::span(ff, alg.dim(), {ev, fv, z1, z2}).dim() == 4;
        bool idem = alg.multiply(z1, z1) == z1 && alg.multiply(z2, z2) == z2;
        bool one_ok = identity_is(alg, vec_add(z1, z2));
        out.push_back(np("table13.6 MP basis (e,f,z1,z2)", basis_ok && idem && one_ok));
      } else {
        out.push_back(np("table13.3 q annihilates", annihilates(alg, q)));
      }
      if (mu == -R(1, 2)) {
        Vec<K> z = vec_sub(named("s01"),
                           vec_scale((al - R(1, 2)) / R(2), vec_add(vec_add(a(0), a(1)), a(-1))));
        iso_check("table13.5 IY3(al,1/2,-1/2) = 3A(al,1/2)", {a(0), a(1), a(-1), z}, "3A",
                  {{"alpha", al}, {"beta", R(1, 2)}});
      }
    }
  }

  if (key == "IY5" || key == "IY5x") {
    K al = scalar("alpha");
    out.push_back(np("subIY5(1) lambda1 = 1", A.lambda_values(1).first == one));
    {
      // a_{i+5} = a_i + 5(a_{i+4} - a_{i+1}) - 10(a_{i+3} - a_{i+2})
      Vec<K> rhs = vec_add(a(-2), vec_sub(vec_scale(R(5), vec_sub(a(2), a(-1))),
                                          vec_scale(R(10), vec_sub(a(1), a(0)))));
      out.push_back(np("subIY5(2) recurrence a3", a(3) == rhs));
    }
    if (key == "IY5") {
      Vec<K> n = named("n");
      out.push_back(np("table14.1 n annihilates", annihilates(alg, n)));
      out.push_back(np("table14.1 Fn in radical", alg.form_check().radical.contains(n)));
      if (ch == 5) {
        // char 5: IY5(al,1/2) = 5A(al,(5al-1)/8) via w = sum + 32/(5al-1) s01
        K s = R(5) * al - one;
        Vec<K> suma(alg.dim(), f.zero());
        for (long i = -2; i <= 2; ++i) suma = vec_add(suma, a(i));
        Vec<K> w = vec_add(suma, vec_scale(R(32) / s, named("s01")));
        iso_check("table14.2 char5 IY5 = 5A", {a(-2), a(-1), a(0), a(1), a(2), w}, "5A",
                  {{"alpha", al}});
      }
    }
  }

  if (key == "IH3") {
    out.push_back(np("subIH3(1) lambda1 = 1", A.lambda_values(1).first == one));
    {
      bool ok = true;
      for (long i : {0L, 1L, 2L}) {
        Vec<K> rhs = vec_add(vec_sub(a(i), a(i - 1)), a(i + 1));
        ok = ok && (a(i + 2) == rhs);
      }
      out.push_back(np("subIH3(2) recurrence", ok));
    }
    {
      auto [vst, vstst] = A.vstar_spaces();
      auto expect_star = Subspace<F>::span(
          ff, 4, {vec_sub(a(0), a(1)), vec_sub(a(1), a(2)), named("s01")});
      out.push_back(np("subIH3(4) V* = <a0-a1, a1-a2, s01>",
                       vst.dim() == 3 && vst.basis == expect_star.basis));
      out.push_back(np("subIH3(5) V** = <a0-a2>",
                       vstst.dim() == 1 && vstst.contains(vec_sub(a(0), a(2)))));
    }
    {
      // proper quotient J(0)x: ideal(a0 - 2a1 + a2)
      Vec<K> u = vec_add(vec_sub(a(0), vec_scale(R(2), a(1))), a(2));
      auto ideal = alg.ideal_generated({u});
      bool ok = ideal.dim() == 2;
      if (ok) {
        auto quo = alg.quotient(ideal);
        auto target = build_target("J0x", {{"alpha", R(2)}});
        ok = quo.algebra.verify_basis_map(
            {mat_apply(quo.projection, a(0)), mat_apply(quo.projection, a(1))},
            target.A.algebra());
      }
      out.push_back(np("subIH3(7) quotient by (a0-2a1+a2) = J(0)x", ok));
    }
  }

  if (key == "Q2" || key == "Q2x") {
    K bt = scalar("beta");
    bool is_quotient = key == "Q2x";
    auto am1 = is_quotient ? named("am1") : alg.unit(0);
    auto a2v = is_quotient ? named("a2") : alg.unit(3);
    iso_check("table16.4 even = 2B", {a(0), a2v}, "2B", {});
    if (!is_quotient) {
      iso_check("table16.5 odd = 3C(2bt)", {am1, a(1), vec_add(alg.unit(1), alg.unit(3))}, "3C",
                {{"eta", R(2) * bt}, {"alpha", bt}});
      if (bt == -R(1, 2)) {
        Vec<K> suma = vec_add(vec_add(alg.unit(0), alg.unit(1)), vec_add(alg.unit(2), alg.unit(3)));
        auto rad = alg.form_check().radical;
        out.push_back(np("table16.2 radical = F(sum)", rad.dim() == 1 && rad.contains(suma)));
      }
    } else {
      iso_check("table16.6 odd = 3C(-1)x", {am1, a(1)}, "3Cm1x", {});
    }
  }

  if (key == "Q2p") {
    Vec<K> s = named("s");
    Vec<K> idv = vec_scale(R(3), vec_sub(vec_add(a(1), s), vec_add(a(0), named("a2"))));
    out.push_back(np("table17.2 identity 3(s+a1-a0-a2) (ledger)", identity_is(alg, idv)));
    if (ch == 5) {
      auto rad = alg.form_check().radical;
      out.push_back(np("table17.4 char5 {a0,a2} in radical",
                       rad.contains(a(0)) && rad.contains(named("a2"))));
    }
    iso_check("table17.5 even = 2B", {a(0), named("a2")}, "2B", {});
    {
      auto odd = alg.subalgebra_closure({a(-1), a(1)});
      out.push_back(np("table17.5 odd = 1A", odd.dim() == 1 && odd.contains(a(1))));
    }
  }

  if (key == "3Cp") {
    K eta = scalar("eta");
    Vec<K> ast = named("ast");
    Vec<K> idv = vec_scale(one / eta, vec_sub(vec_add(a(1), ast), a(0)));
    out.push_back(np("table18.3 identity (a1+ast-a0)/eta", identity_is(alg, idv)));
    out.push_back(np("table18.4 a1^tau0 = ast", mat_apply(A.miyamoto(a(0)), a(1)) == ast));
    {
      // second reading M(1-eta,eta): a0^tau1 = 1 - ast
      AxialAlgebra<F> B(alg, FusionLaw<F>::monster(ff, one - eta, eta), alg.unit(0), alg.unit(1));
      Vec<K> rhs = vec_sub(idv, ast);
      out.push_back(np("table18.5 a0^tau1 = 1 - ast (law M(1-eta,eta))",
                       mat_apply(B.miyamoto(B.axis(1)), B.axis(0)) == rhs));
    }
    if (!(eta == -one))
      iso_check("table18.6 V1 = 3C(eta)", {a(1), ast, vec_sub(idv, a(0))}, "3C",
                {{"eta", eta}, {"alpha", one - eta}});
    else
      iso_check("table18.6 V1 = 3C(-1)x", {a(1), ast}, "3Cm1x", {});
    if (!(eta == R(2)))
      iso_check("table18.7 V0 = 3C(1-eta)",
                {a(0), vec_sub(idv, ast), vec_sub(idv, a(1))}, "3C",
                {{"eta", one - eta}, {"alpha", eta}});
    else
      iso_check("table18.7 V0 = 3C(-1)x", {a(0), vec_sub(idv, ast)}, "3Cm1x", {});
    {
      auto rad = alg.form_check().radical;
      if (eta == -one)
        out.push_back(np("table18.8 a1, ast in radical", rad.contains(a(1)) && rad.contains(ast)));
      else if (eta == R(2))
        out.push_back(np("table18.8 a0 in radical", rad.contains(a(0))));
      else
        out.push_back(np("table18.8 radical trivial", rad.dim() == 0));
    }
  }

  if (key == "4Bnu") {
    K nu = scalar("nu");
    Vec<K> u = named("u");
    {
      // round trip: 4B(-1,1/2) / F(nu(a0+a2) + (1-nu)(a1+am1) + c)
      auto par = build_target("4B", {{"alpha", -one}});
      const auto& pa = par.A.algebra();
      Vec<K> gen = vec_add(vec_add(vec_scale(nu, vec_add(pa.unit(1), pa.unit(3))),
                                   vec_scale(one - nu, vec_add(pa.unit(2), pa.unit(0)))),
                           par.named.at("c"));
      auto ideal = pa.ideal_generated({gen});
      bool ok = ideal.dim() == 1;
      if (ok) {
        auto quo = pa.quotient(ideal);
        Vec<K> uq = vec_sub(vec_add(mat_apply(quo.projection, pa.unit(2)),
                                    mat_apply(quo.projection, pa.unit(0))),
                            vec_add(mat_apply(quo.projection, pa.unit(1)),
                                    mat_apply(quo.projection, pa.unit(3))));
        ok = quo.algebra.verify_basis_map({mat_apply(quo.projection, pa.unit(0)),
                                           mat_apply(quo.projection, pa.unit(1)),
                                           mat_apply(quo.projection, pa.unit(2)), uq},
                                          alg);
      }
      out.push_back(np("table19.1 4Bnu = 4B(-1,1/2)/<nu(a0+a2)+(1-nu)(a1+am1)+c>", ok));
    }
    out.push_back(np("table19.2 a2 = -a0+a1+am1-u",
                     a(2) == vec_sub(vec_add(vec_sub(a(1), a(0)), alg.unit(0)), u)));
    Vec<K> third = vec_add(vec_scale(-one, vec_add(a(1), alg.unit(0))), vec_scale(nu, u));
    if (!is_zero(nu))
      iso_check("table19.3 odd = 3C(-1)", {a(1), alg.unit(0), third}, "3C",
                {{"eta", -one}, {"alpha", R(1, 2)}});
    else
      iso_check("table19.3 odd = 3C(-1)x", {a(1), alg.unit(0)}, "3Cm1x", {});
    if (!(nu == -one))
      iso_check("table19.4 even = 3C(-1)", {a(0), a(2), third}, "3C",
                {{"eta", -one}, {"alpha", R(1, 2)}});
    else
      iso_check("table19.4 even = 3C(-1)x", {a(0), a(2)}, "3Cm1x", {});
  }

  if (key == "J" || key == "J0x") {
    K dl = key == "J" ? scalar("delta") : f.zero();
    out.push_back(np("subJ(1) lambda1 = 2delta+1",
                     A.lambda_values(1).first == R(2) * dl + one));
    if (key == "J") {
      Vec<K> rhs = vec_add(vec_scale(-one, a(1)),
                           vec_sub(vec_scale(R(2) + R(8) * dl, a(0)),
                                   vec_scale(R(4), named("s01"))));
      out.push_back(np("subJ(2) a_{-1} recurrence", a(-1) == rhs));
      if (dl == -R(1, 2)) {
        auto [vst, vstst] = A.vstar_spaces();
        Vec<K> gen = vec_add(vec_add(a(0), a(1)), vec_scale(R(2), named("s01")));
        out.push_back(np("subJ(4) V** = <a0+a1+2s01> at delta=-1/2",
                         vstst.dim() == 1 && vstst.contains(gen)));
      }
    }
  }

  if (key == "2B")
    out.push_back(np("sub2B(1) lambda1 = 0", A.lambda_values(1).first == f.zero()));
  if (key == "3C" || key == "3Cm1x")
    out.push_back(np("sub3C(1) lambda1 = beta/2",
                     A.lambda_values(1).first == A.law().beta() / R(2)));

  return out;
}

}  // namespace axial

#endif  // AXIAL_NOTES_HPP
