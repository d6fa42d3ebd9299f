#include "zk/scalar.hpp"

#include <cstdlib>

namespace zk {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::Fp(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
    fail(errc::usage, "field modulus must be a prime < 2^31, got " + std::to_string(p));
  return Field{Kind::prime, p};
}

std::string Field::str() const {
  return is_prime_field() ? "Fp:" + std::to_string(p) : "Q";
}

Field Field::parse(const std::string& s) {
  if (s == "Q") return Q();
  if (s.rfind("Fp:", 0) == 0) {
    char* end = nullptr;
    long long p = std::strtoll(s.c_str() + 3, &end, 10);
    if (end && *end == '\0') return Fp(p);
  }
  fail(errc::usage, "bad field spec '" + s + "' (expected Q or Fp:<p>)");
}

namespace {
std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  // extended Euclid; a != 0 mod p
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t -= q * nt; std::swap(t, nt);
    r -= q * nr; std::swap(r, nr);
  }
  if (r != 1) fail(errc::usage, "division by zero divisor in F_p");
  return mod_reduce(t, p);
}
}  // namespace

Scalar::Scalar(const Field& f, long value) : field_(f) {
  if (f.is_prime_field()) r_ = mod_reduce(value, f.p);
  else q_ = value;
}

Scalar::Scalar(const Field& f, const mpz_class& num, const mpz_class& den) : field_(f) {
  if (den == 0) fail(errc::usage, "zero denominator");
  if (f.is_prime_field()) {
    mpz_class pm(static_cast<long>(f.p));
    mpz_class n = num % pm, d = den % pm;
    std::int64_t ni = mod_reduce(n.get_si(), f.p);
    std::int64_t di = mod_reduce(d.get_si(), f.p);
    if (di == 0) fail(errc::usage, "denominator vanishes in F_p");
    r_ = static_cast<std::int64_t>((__int128)ni * mod_inv(di, f.p) % f.p);
  } else {
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& q) {
  return Scalar(f, q.get_num(), q.get_den());
}

bool Scalar::is_zero() const {
  return field_.is_prime_field() ? r_ == 0 : q_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_prime_field() ? r_ == 1 : q_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    fail(errc::mismatch, "scalar field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime_field()) r.r_ = mod_reduce(r_ + o.r_, field_.p);
  else r.q_ = q_ + o.q_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime_field()) r.r_ = mod_reduce(r_ - o.r_, field_.p);
  else r.q_ = q_ - o.q_;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime_field())
    r.r_ = static_cast<std::int64_t>((__int128)r_ * o.r_ % field_.p);
  else
    r.q_ = q_ * o.q_;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime_field()) r.r_ = mod_reduce(-r_, field_.p);
  else r.q_ = -q_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(errc::usage, "inverse of zero");
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime_field()) r.r_ = mod_inv(r_, field_.p);
  else r.q_ = 1 / q_;
  return r;
}

Scalar Scalar::pow(std::int64_t e) const {
  Scalar base = *this;
  if (e < 0) { base = inverse(); e = -e; }
  Scalar acc = Scalar::one(field_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_prime_field() ? r_ == o.r_ : q_ == o.q_;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  if (field_.kind != o.field_.kind) return field_.kind <=> o.field_.kind;
  if (field_.p != o.field_.p) return field_.p <=> o.field_.p;
  if (field_.is_prime_field()) return r_ <=> o.r_;
  int c = cmp(q_, o.q_);
  return c <=> 0;
}

std::string Scalar::str() const {
  if (field_.is_prime_field()) return std::to_string(r_);
  return q_.get_str();
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Scalar(f, mpz_class(s), mpz_class(1));
    return Scalar(f, mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    fail(errc::usage, "bad coefficient literal '" + s + "'");
  }
}

}  // namespace zk
