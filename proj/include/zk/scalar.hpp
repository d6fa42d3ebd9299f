#ifndef ZK_SCALAR_HPP
#define ZK_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "zk/error.hpp"

namespace zk {

/// Coefficient field: the rationals, or a prime field F_p.
struct Field {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::int64_t p = 0;  // modulus, prime, only when kind == prime

  static Field Q() { return Field{Kind::rationals, 0}; }
  static Field Fp(std::int64_t p);

  bool is_prime_field() const { return kind == Kind::prime; }
  bool operator==(const Field&) const = default;

  std::string str() const;               // "Q" or "Fp:<p>"
  static Field parse(const std::string&);
};

bool is_prime(std::int64_t n);

/// Exact field element. Rationals are GMP fractions in lowest terms with
/// positive denominator; prime-field values are residues in [0, p).
class Scalar {
 public:
  Scalar() = default;  // zero over Q
  Scalar(const Field& f, long value);
  Scalar(const Field& f, const mpz_class& num, const mpz_class& den);
  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  static Scalar from_mpq(const Field& f, const mpq_class& q);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // errors on division by zero
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::int64_t e) const;  // negative e inverts first

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Canonical total order (for use as map key); not an order of the field.
  std::strong_ordering operator<=>(const Scalar& o) const;

  const mpq_class& rational() const { return q_; }  // valid over Q
  std::int64_t residue() const { return r_; }       // valid over Fp

  std::string str() const;  // "7", "-3/4", residue digits over Fp
  static Scalar parse(const Field& f, const std::string& s);

 private:
  void check_same(const Scalar& o) const;
  Field field_ = Field::Q();
  mpq_class q_ = 0;       // rationals payload
  std::int64_t r_ = 0;    // prime-field payload
};

}  // namespace zk

#endif
