#ifndef ZK_FRACTION_HPP
#define ZK_FRACTION_HPP

#include <vector>

#include "zk/ideal.hpp"
#include "zk/poly.hpp"

namespace zk {

/// Vector of fractions num_i / f^k over a localization A_f. The denominator
/// exponent is kept minimal for the stored numerator: while every component
/// is exactly divisible by f, the representation is reduced.
class LaurentFraction {
 public:
  LaurentFraction() = default;
  LaurentFraction(std::vector<MultiPoly> numerator, MultiPoly den_base, unsigned den_exp);

  static LaurentFraction zero(const RingPtr& ring, const MultiPoly& den_base, std::size_t rank);

  const std::vector<MultiPoly>& numerator() const { return num_; }
  const MultiPoly& den_base() const { return den_; }
  unsigned den_exp() const { return k_; }
  std::size_t rank() const { return num_.size(); }
  bool is_structurally_zero() const;

  LaurentFraction operator+(const LaurentFraction& o) const;  // same den base
  LaurentFraction operator-(const LaurentFraction& o) const;
  LaurentFraction operator-() const;
  LaurentFraction scaled(const MultiPoly& p) const;

  /// Same fraction with denominator exponent raised to k >= den_exp().
  LaurentFraction with_exponent(unsigned k) const;

 private:
  void reduce();
  std::vector<MultiPoly> num_;
  MultiPoly den_;
  unsigned k_ = 0;
};

/// Equality in the localization (A/I)_f: componentwise membership of
/// num_a f^{k_b} - num_b f^{k_a} in the saturation (I : f^infinity).
/// Denominator bases must coincide.
bool fraction_eq(const LaurentFraction& a, const LaurentFraction& b, const Ideal& ambient);

/// Zero test in (A/I)_f.
bool fraction_is_zero(const LaurentFraction& a, const Ideal& ambient);

}  // namespace zk

#endif
