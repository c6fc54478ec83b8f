#ifndef AXIAL_POLY_HPP
#define AXIAL_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "axial/fields.hpp"

/// Multivariate polynomials and rational functions over Q, on the fixed
/// symbol universe used by the coefficient bank and the algebra file format.
/// Terms are kept in graded-lex order with no zero coefficients stored.
namespace axial {

struct UnboundVariable : std::domain_error {
  UnboundVariable() : std::domain_error("unbound variable in evaluation") {}
};
struct DenominatorVanishes : std::domain_error {
  DenominatorVanishes() : std::domain_error("denominator vanishes at assignment") {}
};

enum class Sym : std::uint8_t {
  alpha, beta, lambda1, lambda1f, lambda2, lambda2f, mu, delta, nu, x
};
inline constexpr std::size_t kNumSyms = 10;

inline const char* sym_name(Sym s) {
  static const char* names[kNumSyms] = {"alpha", "beta",   "lambda1", "lambda1f", "lambda2",
                                        "lambda2f", "mu", "delta",  "nu",       "x"};
  return names[static_cast<std::size_t>(s)];
}

using ExpVec = std::array<std::uint8_t, kNumSyms>;

struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    int da = 0, db = 0;
    for (std::size_t i = 0; i < kNumSyms; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db;
    return a < b;  // lexicographic tiebreak over the fixed symbol order
  }
};

class MultiPoly {
 public:
  using Terms = std::map<ExpVec, Rational, GradedLexLess>;

  MultiPoly() = default;

  static MultiPoly constant(const Rational& c) {
    MultiPoly p;
    if (!axial::is_zero(c)) p.terms_[ExpVec{}] = c;
    return p;
  }
  static MultiPoly var(Sym s) {
    MultiPoly p;
    ExpVec e{};
    e[static_cast<std::size_t>(s)] = 1;
    p.terms_[e] = Rational(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        ExpVec e;
        for (std::size_t i = 0; i < kNumSyms; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    return MultiPoly::constant(c) * p;
  }
  MultiPoly pow(unsigned n) const {
    MultiPoly r = constant(Rational(1));
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  /// Swaps lambda1<->lambda1f and lambda2<->lambda2f (the bank's flip).
  MultiPoly flip() const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
      ExpVec ef = e;
      std::swap(ef[static_cast<std::size_t>(Sym::lambda1)],
                ef[static_cast<std::size_t>(Sym::lambda1f)]);
      std::swap(ef[static_cast<std::size_t>(Sym::lambda2)],
                ef[static_cast<std::size_t>(Sym::lambda2f)]);
      r.terms_[ef] = c;
    }
    return r;
  }

  /// Exact substitution at a point of the target field.
  template <Field F>
  typename F::Elem eval(const F& f,
                        const std::array<std::optional<typename F::Elem>, kNumSyms>& asg) const {
    typename F::Elem acc = f.zero();
    for (const auto& [e, c] : terms_) {
      typename F::Elem t = coeff_in(f, c);
      for (std::size_t i = 0; i < kNumSyms; ++i) {
        if (e[i] == 0) continue;
        if (!asg[i]) throw UnboundVariable{};
        for (std::uint8_t k = 0; k < e[i]; ++k) t = t * *asg[i];
      }
      acc = acc + t;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += to_string(it->second);
      for (std::size_t i = 0; i < kNumSyms; ++i)
        for (std::uint8_t k = 0; k < it->first[i]; ++k)
          out += std::string("*") + sym_name(static_cast<Sym>(i));
    }
    return out;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int t = 0;
      for (auto x : e) t += x;
      if (t > d) d = t;
    }
    return d;
  }

 private:
  void add_term(const ExpVec& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!axial::is_zero(c)) terms_[e] = c;
    } else {
      it->second = it->second + c;
      if (axial::is_zero(it->second)) terms_.erase(it);
    }
  }

  template <Field F>
  static typename F::Elem coeff_in(const F& f, const Rational& c) {
    if constexpr (std::is_same_v<F, RationalField>) return c;
    // exact transfer of num/den through the field's integer map
    typename F::Elem num = f.zero(), den = f.zero();
    mpz_class n = c.get_num(), d = c.get_den();
    bool neg = n < 0;
    if (neg) n = -n;
    typename F::Elem base = f.from_int(10);
    for (char ch : n.get_str()) num = num * base + f.from_int(ch - '0');
    for (char ch : d.get_str()) den = den * base + f.from_int(ch - '0');
    typename F::Elem r = num / den;
    if (neg) r = -r;
    return r;
  }

  Terms terms_;
};

inline MultiPoly operator*(long c, const MultiPoly& p) { return Rational(c) * p; }

/// Quotient of polynomials, normalized to primitive integer content with a
/// positive leading coefficient on the denominator (no gcd over Q(x..)).
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(MultiPoly::constant(Rational(1))) {}
  RationalFunction(MultiPoly n, MultiPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DivisionByZero{};
    normalize();
  }
  static RationalFunction from_poly(const MultiPoly& p) {
    return RationalFunction(p, MultiPoly::constant(Rational(1)));
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw DivisionByZero{};
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  bool is_zero() const { return num_.is_zero(); }

  /// Equality as rational functions (cross-multiplication; no gcd needed).
  bool operator==(const RationalFunction& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
  }

  RationalFunction flip() const { return RationalFunction(num_.flip(), den_.flip()); }

  template <Field F>
  typename F::Elem eval(const F& f,
                        const std::array<std::optional<typename F::Elem>, kNumSyms>& asg) const {
    auto d = den_.eval(f, asg);
    if (axial::is_zero(d)) throw DenominatorVanishes{};
    return num_.eval(f, asg) / d;
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = MultiPoly::constant(Rational(1));
      return;
    }
    // scale so both parts have integer coprime coefficients and the
    // denominator's leading (graded-lex-last) coefficient is positive
    mpz_class nlcm = 1, dlcm = 1, ngcd = 0, dgcd = 0;
    for (const auto& [e, c] : num_.terms()) mpz_lcm(nlcm.get_mpz_t(), nlcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [e, c] : den_.terms()) mpz_lcm(dlcm.get_mpz_t(), dlcm.get_mpz_t(), c.get_den().get_mpz_t());
    Rational scale = Rational(nlcm) * Rational(dlcm);
    MultiPoly n = scale * num_, d = scale * den_;
    for (const auto& [e, c] : n.terms()) mpz_gcd(ngcd.get_mpz_t(), ngcd.get_mpz_t(), c.get_num().get_mpz_t());
    for (const auto& [e, c] : d.terms()) mpz_gcd(dgcd.get_mpz_t(), dgcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ngcd.get_mpz_t(), dgcd.get_mpz_t());
    if (g > 0) {
      n = Rational(1, 1) / Rational(g) * n;
      d = Rational(1, 1) / Rational(g) * d;
    }
    if (sgn(d.terms().rbegin()->second) < 0) {
      n = -n;
      d = -d;
    }
    num_ = std::move(n);
    den_ = std::move(d);
  }

  MultiPoly num_;
  MultiPoly den_;
};

inline bool poly_equal_symbolic(const MultiPoly& p, const MultiPoly& q) { return p == q; }

}  // namespace axial

#endif  // AXIAL_POLY_HPP
