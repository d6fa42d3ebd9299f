#ifndef ZK_POLY_HPP
#define ZK_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zk/scalar.hpp"

namespace zk {

/// Exponent vector, one entry per ambient variable. Entries are >= 0 in
/// polynomial context; negative exponents are legal only on variables the
/// ring flags as invertible (Laurent variables).
using Monomial = std::vector<std::int32_t>;

std::int64_t total_degree(const Monomial& m);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // may go negative
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

/// Canonical storage order for polynomial terms (graded reverse lex with the
/// natural variable order). Independent of any Groebner term order.
struct MonoCanonLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Ambient polynomial ring: field, variable names, Laurent flags.
struct PolyRing {
  Field field;
  std::vector<std::string> vars;
  std::vector<bool> invertible;  // empty means all-false

  PolyRing(Field f, std::vector<std::string> v, std::vector<bool> inv = {})
      : field(f), vars(std::move(v)), invertible(std::move(inv)) {
    if (invertible.empty()) invertible.assign(vars.size(), false);
  }
  std::size_t nvars() const { return vars.size(); }
  bool operator==(const PolyRing& o) const {
    return field == o.field && vars == o.vars && invertible == o.invertible;
  }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(Field f, std::vector<std::string> vars, std::vector<bool> inv = {});

/// Sparse multivariate polynomial in canonical form: no zero coefficients,
/// terms keyed by exponent vector under the canonical order.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, MonoCanonLess>;

  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }
  static MultiPoly constant(RingPtr ring, const Scalar& c);
  static MultiPoly constant(RingPtr ring, long c);
  static MultiPoly variable(RingPtr ring, std::size_t i, std::int32_t exp = 1);
  static MultiPoly monomial(RingPtr ring, Monomial m, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;  // the coefficient of 1 (zero if absent)
  std::size_t term_count() const { return terms_.size(); }
  std::int64_t degree() const;  // total degree, -1 for the zero polynomial

  void add_term(const Monomial& m, const Scalar& c);  // merges, drops zeros

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const Scalar& c) const;
  MultiPoly pow(unsigned e) const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Substitution homomorphism: point length must equal the variable count.
  Scalar evaluate(std::span<const Scalar> point) const;

  /// Image under variable substitution into another ring.
  MultiPoly substitute(RingPtr target, std::span<const MultiPoly> images) const;

  /// Exact division: returns quotient iff divisor divides exactly.
  std::optional<MultiPoly> exact_divide(const MultiPoly& divisor) const;

  /// True iff at most one variable occurs; reports which one when some does.
  bool is_univariate(std::size_t* var_index = nullptr) const;
  std::vector<Scalar> dense_univariate_coeffs(std::size_t var) const;  // low to high

  std::string str() const;

 private:
  void check_compatible(const MultiPoly& o) const;
  RingPtr ring_;
  TermMap terms_;
};

MultiPoly operator*(const Scalar& c, const MultiPoly& p);

/// Shared-ring guard: error if two polynomials live in different rings.
void require_same_ring(const MultiPoly& a, const MultiPoly& b);

}  // namespace zk

#endif
