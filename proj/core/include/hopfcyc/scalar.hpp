#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "hopfcyc/error.hpp"

namespace hopfcyc {

enum class FieldKind { Rational, Prime, RationalFunction };

/// Descriptor of the ground field: Q, F_p, or Q(q) with q transcendental.
struct Field {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t p = 0;  // only for Prime

  static Field rational() { return {FieldKind::Rational, 0}; }
  static Field prime(std::uint64_t p);
  static Field rational_function() { return {FieldKind::RationalFunction, 0}; }

  /// Characteristic of the field (0 for Q and Q(q)).
  std::uint64_t characteristic() const { return kind == FieldKind::Prime ? p : 0; }
  std::string name() const;

  /// Parses "rational" | "Q" | "prime 5" | "F5" | "GF(5)" | "ratfunc" | "Q(q)".
  static Field parse(const std::string& text);

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind == b.kind && a.p == b.p;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }
};

/// Dense univariate polynomial over Q, coefficients low degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(mpq_class c);
  static Poly monomial(mpq_class c, int degree);
  static Poly q() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpq_class& lead() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const mpq_class& s) const;
  /// Euclidean division; throws on division by zero.
  static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
  static Poly gcd(Poly a, Poly b);  // monic, or zero
  Poly monic() const;

  mpq_class evaluate(const mpq_class& x) const;
  std::string to_string(const std::string& var = "q") const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Element of Q(q) kept as num/den with gcd 1 and monic den.
class RatFunc {
 public:
  RatFunc() : num_(), den_(mpq_class(1)) {}
  explicit RatFunc(const mpq_class& c) : num_(c), den_(mpq_class(1)) {}
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;

  /// Value at q = x, or nullopt when the denominator vanishes there.
  std::optional<mpq_class> evaluate(const mpq_class& x) const;
  std::string to_string() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_;
  Poly den_;
};

/// Residue in [0, p).
struct Fp {
  std::uint64_t value = 0;
  std::uint64_t p = 2;
};

/// Exact field element.  Arithmetic between different fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(const mpq_class& q) : v_(q) {  // NOLINT: implicit from rationals is convenient
    std::get<mpq_class>(v_).canonicalize();
  }
  Scalar(Fp f) : v_(f) {}                  // NOLINT
  Scalar(RatFunc r) : v_(std::move(r)) {}  // NOLINT

  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long n);
  static Scalar from_rational(const Field& f, const mpq_class& q);
  /// The transcendental q of Q(q).
  static Scalar parameter();

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(long long e) const;

  /// For Q(q): value at q = x (nullopt if a denominator vanishes); identity on Q.
  std::optional<mpq_class> specialize(const mpq_class& x) const;

  std::string to_string() const;

  const mpq_class* as_rational() const { return std::get_if<mpq_class>(&v_); }
  const Fp* as_prime() const { return std::get_if<Fp>(&v_); }
  const RatFunc* as_ratfunc() const { return std::get_if<RatFunc>(&v_); }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  std::variant<mpq_class, Fp, RatFunc> v_;
};

/// Parses a scalar expression over the given field: integers, a/b, q, q^k,
/// sums, products, quotients and parentheses.
Scalar parse_scalar(const std::string& text, const Field& f);

}  // namespace hopfcyc
