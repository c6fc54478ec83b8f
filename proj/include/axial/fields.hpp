#ifndef AXIAL_FIELDS_HPP
#define AXIAL_FIELDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

/// Exact scalar arithmetic: rationals with arbitrary-precision integers and
/// prime fields GF(p), p an odd prime. No floating point anywhere.
namespace axial {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};
struct MixedFields : std::domain_error {
  MixedFields() : std::domain_error("operands from different fields") {}
};

// ---------------------------------------------------------------------------
// Rationals. mpq_class keeps gcd(|num|,den)=1 and den>=1 canonically.
// ---------------------------------------------------------------------------

using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
  if (d == 0) throw DivisionByZero{};
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Parses "p", "-p/q" with arbitrary-precision integers.
inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZero{};
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// GF(p). Elements carry their modulus so that plain operator arithmetic works
// inside generic code; mixing moduli throws.
// ---------------------------------------------------------------------------

class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

  std::uint64_t residue() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  friend Fp operator+(Fp a, Fp b) { return Fp(a.v_ + b.match(a), b.p_); }
  friend Fp operator-(Fp a, Fp b) { return Fp(a.v_ + b.p_ - b.match(a), b.p_); }
  friend Fp operator*(Fp a, Fp b) {
    return Fp(static_cast<std::uint64_t>(
                  (static_cast<unsigned __int128>(a.v_) * b.match(a)) % b.p_),
              b.p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(p_ - v_, p_); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.match(a); }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }
  friend bool operator<(Fp a, Fp b) { return a.v_ < b.match(a); }  // container order

  Fp inverse() const {
    if (v_ == 0) throw DivisionByZero{};
    // extended Euclid on (v, p)
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(v_);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt; nt = tmp;
      tmp = r - q * nr;
      r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_);
  }

 private:
  std::uint64_t match(const Fp& other) const {
    if (p_ != other.p_) throw MixedFields{};
    return v_;
  }
  std::uint64_t v_;
  std::uint64_t p_;
};

inline bool is_zero(const Fp& x) { return x.residue() == 0; }
inline std::string to_string(const Fp& x) {
  return std::to_string(x.residue()) + " mod " + std::to_string(x.modulus());
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (std::uint64_t d = 29; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Field handles. Generic code takes a field object F with F::Elem and uses it
// to mint constants and to parse/print; the elements themselves carry the
// arithmetic.
// ---------------------------------------------------------------------------

struct RationalField {
  using Elem = Rational;
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(long n) const { return Rational(n); }
  Elem from_ratio(long n, long d) const { return rat(n, d); }
  Elem parse(const std::string& s) const { return parse_rational(s); }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const { return true; }
};

struct PrimeField {
  std::uint64_t p;

  explicit PrimeField(std::uint64_t mod) : p(mod) {
    if (p == 2 || !is_prime_u64(p))
      throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
  }

  using Elem = Fp;
  Elem zero() const { return Fp(0, p); }
  Elem one() const { return Fp(1, p); }
  Elem from_int(long n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }
  Elem from_ratio(long n, long d) const {
    if (from_int(d) == zero()) throw DivisionByZero{};
    return from_int(n) / from_int(d);
  }
  /// Accepts "k", "-k", "n/d", and "k mod p" (the modulus must agree).
  Elem parse(const std::string& s) const {
    auto mpos = s.find("mod");
    if (mpos != std::string::npos) {
      std::uint64_t q = std::stoull(s.substr(mpos + 3));
      if (q != p) throw MixedFields{};
      return from_int(std::stol(s.substr(0, mpos)));
    }
    auto slash = s.find('/');
    if (slash != std::string::npos)
      return from_int(std::stol(s.substr(0, slash))) /
             from_int(std::stol(s.substr(slash + 1)));
    return from_int(std::stol(s));
  }
  std::uint64_t characteristic() const { return p; }
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }
  bool operator==(const PrimeField& o) const { return p == o.p; }

  bool is_quadratic_residue(Elem a) const {
    if (is_zero(a)) return true;
    return pow_elem(a, (p - 1) / 2) == one();
  }

  /// Tonelli-Shanks. Requires is_quadratic_residue(a).
  Elem sqrt(Elem a) const {
    if (is_zero(a)) return a;
    if (!is_quadratic_residue(a)) throw std::domain_error("not a quadratic residue");
    if (p % 4 == 3) return pow_elem(a, (p + 1) / 4);
    std::uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    Elem z = from_int(2);
    while (is_quadratic_residue(z)) z = z + one();
    Elem m = from_int(0);
    std::uint64_t mm = s;
    Elem c = pow_elem(z, q);
    Elem t = pow_elem(a, q);
    Elem r = pow_elem(a, (q + 1) / 2);
    while (t != one()) {
      std::uint64_t i = 0;
      Elem tt = t;
      while (tt != one()) { tt = tt * tt; ++i; }
      Elem b = c;
      for (std::uint64_t k = 0; k + i + 1 < mm; ++k) b = b * b;
      mm = i;
      c = b * b;
      t = t * c;
      r = r * b;
    }
    (void)m;
    return r;
  }

  Elem pow_elem(Elem a, std::uint64_t e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = r * a;
      a = a * a;
      e >>= 1;
    }
    return r;
  }
};

template <typename F>
concept Field = requires(const F f, typename F::Elem a, const std::string& s) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.from_int(1L) } -> std::convertible_to<typename F::Elem>;
  { f.from_ratio(1L, 2L) } -> std::convertible_to<typename F::Elem>;
  { f.parse(s) } -> std::convertible_to<typename F::Elem>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { a + a };
  { a - a };
  { a * a };
  { a / a };
  { -a };
  { a == a };
};

}  // namespace axial

#endif  // AXIAL_FIELDS_HPP
