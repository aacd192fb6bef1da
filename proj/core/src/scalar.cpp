#include "hopfcyc/scalar.hpp"

#include <cctype>
#include <sstream>

namespace hopfcyc {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 128-bit to stay clear of overflow
  __int128 r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw Error("element not invertible in F_" + std::to_string(p));
  if (s0 < 0) s0 += p;
  return static_cast<std::uint64_t>(s0);
}

std::uint64_t reduce_int(long long n, std::uint64_t p) {
  long long m = n % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t rational_mod(const mpq_class& q, std::uint64_t p) {
  mpz_class pz(std::to_string(p));
  mpz_class n = q.get_num() % pz;
  if (n < 0) n += pz;
  mpz_class d = q.get_den() % pz;
  if (d == 0) throw Error("denominator vanishes in F_" + std::to_string(p));
  std::uint64_t nn = std::stoull(n.get_str());
  std::uint64_t dd = std::stoull(d.get_str());
  return mulmod(nn, invmod(dd, p), p);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t(1) << 62)) throw PreconditionError("prime too large");
  return {FieldKind::Prime, p};
}

std::string Field::name() const {
  switch (kind) {
    case FieldKind::Rational:
      return "rational";
    case FieldKind::Prime:
      return "prime " + std::to_string(p);
    case FieldKind::RationalFunction:
      return "ratfunc q";
  }
  return "?";
}

Field Field::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "rational" || t == "Q" || t == "QQ") return rational();
  if (t == "ratfunc" || t == "ratfuncq" || t == "Q(q)") return rational_function();
  std::string digits;
  if (t.rfind("prime", 0) == 0) digits = t.substr(5);
  else if (t.rfind("GF(", 0) == 0 && t.back() == ')') digits = t.substr(3, t.size() - 4);
  else if (t.rfind("F", 0) == 0) digits = t.substr(1);
  if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
    return prime(std::stoull(digits));
  throw PreconditionError("unknown field '" + text + "'");
}

// ---- Poly ----

Poly::Poly(mpq_class c) {
  if (c != 0) c_.push_back(std::move(c));
}

Poly Poly::monomial(mpq_class c, int degree) {
  Poly r;
  if (c == 0) return r;
  r.c_.assign(degree + 1, mpq_class(0));
  r.c_[degree] = std::move(c);
  return r;
}

mpq_class Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

Poly Poly::scaled(const mpq_class& s) const {
  if (s == 0) return Poly();
  Poly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  quot = Poly();
  rem = a;
  if (a.degree() < b.degree()) return;
  quot.c_.assign(a.degree() - b.degree() + 1, mpq_class(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    mpq_class f = rem.lead() / b.lead();
    quot.c_[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) rem.c_[i + shift] -= f * b.c_[i];
    rem.trim();
  }
  quot.trim();
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  mpq_class inv = 1 / lead();
  return scaled(inv);
}

mpq_class Poly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    mpq_class a = neg ? mpq_class(-c) : c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? "-" : "+";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + "*" + mono;
  }
  return out;
}

// ---- RatFunc ----

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw Error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(mpq_class(1));
    return;
  }
  Poly g = Poly::gcd(num, den);
  Poly q, r;
  if (g.degree() > 0) {
    Poly::divmod(num, g, q, r);
    num = q;
    Poly::divmod(den, g, q, r);
    den = q;
  }
  mpq_class inv = 1 / den.lead();
  num_ = num.scaled(inv);
  den_ = den.scaled(inv);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw Error("division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

std::optional<mpq_class> RatFunc::evaluate(const mpq_class& x) const {
  mpq_class d = den_.evaluate(x);
  if (d == 0) return std::nullopt;
  return num_.evaluate(x) / d;
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---- Scalar ----

Scalar Scalar::from_int(const Field& f, long long n) {
  switch (f.kind) {
    case FieldKind::Rational:
      return Scalar(mpq_class(static_cast<long>(n)));
    case FieldKind::Prime:
      return Scalar(Fp{reduce_int(n, f.p), f.p});
    case FieldKind::RationalFunction:
      return Scalar(RatFunc(mpq_class(static_cast<long>(n))));
  }
  return Scalar();
}

Scalar Scalar::from_rational(const Field& f, const mpq_class& q) {
  switch (f.kind) {
    case FieldKind::Rational:
      return Scalar(q);
    case FieldKind::Prime:
      return Scalar(Fp{rational_mod(q, f.p), f.p});
    case FieldKind::RationalFunction:
      return Scalar(RatFunc(q));
  }
  return Scalar();
}

Scalar Scalar::parameter() { return Scalar(RatFunc(Poly::q(), Poly(mpq_class(1)))); }

Field Scalar::field() const {
  if (std::holds_alternative<mpq_class>(v_)) return Field::rational();
  if (auto* f = std::get_if<Fp>(&v_)) return {FieldKind::Prime, f->p};
  return Field::rational_function();
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 0;
  if (auto* f = std::get_if<Fp>(&v_)) return f->value == 0;
  return std::get<RatFunc>(v_).is_zero();
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  if (auto* f = std::get_if<Fp>(&v_)) return f->value == 1;
  const RatFunc& r = std::get<RatFunc>(v_);
  return r.den().degree() == 0 && r.num() == Poly(mpq_class(1));
}

namespace {

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
  throw FieldMismatch("cannot combine scalars over " + a.field().name() + " and " +
                      b.field().name());
}

}  // namespace

#define HOPFCYC_BINOP(OP, QEXPR, FEXPR, REXPR)                                   \
  Scalar Scalar::operator OP(const Scalar& o) const {                            \
    if (v_.index() != o.v_.index()) mismatch(*this, o);                          \
    if (auto* a = std::get_if<mpq_class>(&v_)) {                                 \
      const mpq_class& b = std::get<mpq_class>(o.v_);                            \
      return Scalar(mpq_class(QEXPR));                                           \
    }                                                                            \
    if (auto* a = std::get_if<Fp>(&v_)) {                                        \
      const Fp& b = std::get<Fp>(o.v_);                                          \
      if (a->p != b.p) mismatch(*this, o);                                       \
      return Scalar(Fp{FEXPR, a->p});                                            \
    }                                                                            \
    const RatFunc* a = &std::get<RatFunc>(v_);                                   \
    const RatFunc& b = std::get<RatFunc>(o.v_);                                  \
    return Scalar(REXPR);                                                        \
  }

HOPFCYC_BINOP(+, *a + b, (a->value + b.value) % a->p, *a + b)
HOPFCYC_BINOP(-, *a - b, (a->value + a->p - b.value) % a->p, *a - b)
HOPFCYC_BINOP(*, *a * b, mulmod(a->value, b.value, a->p), *a * b)

#undef HOPFCYC_BINOP

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw Error("division by zero");
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  if (auto* a = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*a));
  if (auto* a = std::get_if<Fp>(&v_)) return Scalar(Fp{(a->p - a->value) % a->p, a->p});
  return Scalar(-std::get<RatFunc>(v_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (auto* a = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1 / *a));
  if (auto* a = std::get_if<Fp>(&v_)) return Scalar(Fp{invmod(a->value, a->p), a->p});
  return Scalar(RatFunc(mpq_class(1)) / std::get<RatFunc>(v_));
}

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : e;
  Scalar acc = one(field());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::optional<mpq_class> Scalar::specialize(const mpq_class& x) const {
  if (auto* a = std::get_if<mpq_class>(&v_)) return *a;
  if (auto* r = std::get_if<RatFunc>(&v_)) return r->evaluate(x);
  throw FieldMismatch("cannot specialize a prime-field scalar");
}

std::string Scalar::to_string() const {
  if (auto* a = std::get_if<mpq_class>(&v_)) return a->get_str();
  if (auto* a = std::get_if<Fp>(&v_)) return std::to_string(a->value);
  return std::get<RatFunc>(v_).to_string();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (auto* x = std::get_if<mpq_class>(&a.v_)) return *x == std::get<mpq_class>(b.v_);
  if (auto* x = std::get_if<Fp>(&a.v_)) {
    const Fp& y = std::get<Fp>(b.v_);
    return x->p == y.p && x->value == y.value;
  }
  return std::get<RatFunc>(a.v_) == std::get<RatFunc>(b.v_);
}

// ---- expression parser ----

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, const Field& f) : s_(s), f_(f) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " in scalar '" + s_ + "'", 1, static_cast<int>(pos_) + 1);
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v = v + term();
      } else if (peek('-')) {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == '(';
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v = v * unary();
      } else if (peek('/')) {
        ++pos_;
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else if (starts_atom()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        neg = s_[pos_] == '-';
        ++pos_;
      }
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      long long e = std::stoll(s_.substr(start, pos_ - start));
      if (base.is_zero() && neg) fail("division by zero");
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  Scalar atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 'q') {
      ++pos_;
      if (f_.kind != FieldKind::RationalFunction) fail("parameter q needs the field Q(q)");
      return Scalar::parameter();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class n(s_.substr(start, pos_ - start));
      return Scalar::from_rational(f_, mpq_class(n));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  Field f_;
  size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text, const Field& f) { return ExprParser(text, f).parse(); }

}  // namespace hopfcyc
