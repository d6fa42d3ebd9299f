#ifndef ZK_FACTOR_HPP
#define ZK_FACTOR_HPP

#include <map>
#include <vector>

#include "zk/poly.hpp"

namespace zk {

/// f = unit * prod (X - root_i)^mult_i * cofactor, cofactor monic without
/// roots in the field.
struct LinearFactorization {
  Scalar unit;
  std::map<Scalar, unsigned> roots;  // root -> multiplicity
  MultiPoly cofactor;
};

/// Strip all linear factors of a univariate polynomial. Over Q the roots are
/// found by the rational-root theorem, over F_p by exhaustive scan (p capped).
/// Errors: zero_polynomial for f = 0; cap_exceeded when the scan cap is hit.
LinearFactorization factor_linear(const MultiPoly& f, std::int64_t scan_cap = 1'000'000);

/// Invertible rational function over A^1 minus finitely many points, kept in
/// factored normal form: unit * prod (X - root)^exp with integer exponents.
struct FactoredUnit {
  Scalar unit;                       // nonzero
  std::map<Scalar, std::int64_t> exps;  // root -> exponent, zeros dropped

  FactoredUnit mul(const FactoredUnit& o) const;
  FactoredUnit inv() const;
  bool operator==(const FactoredUnit& o) const = default;

  /// (numerator, denominator) as polynomials in `ring` (univariate, var 0).
  std::pair<MultiPoly, MultiPoly> as_poly_pair(const RingPtr& ring) const;
};

/// Identity of rational functions by polynomial cross-multiplication.
bool factored_eq(const FactoredUnit& a, const FactoredUnit& b, const RingPtr& ring);

FactoredUnit factored_one(const Field& f);

}  // namespace zk

#endif
