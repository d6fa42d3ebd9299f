#ifndef ZK_ORDER_HPP
#define ZK_ORDER_HPP

#include <string>
#include <vector>

#include "zk/poly.hpp"

namespace zk {

/// Monomial order for Groebner computations. All kinds are total,
/// multiplicative and well-founded on non-negative exponent vectors.
struct TermOrder {
  enum class Kind { grevlex, lex, block };
  Kind kind = Kind::grevlex;
  std::size_t elim = 0;              // leading block size (block order only)
  std::vector<std::size_t> perm;     // perm[i] = variable shown at position i; empty = identity

  static TermOrder grevlex() { return {}; }
  static TermOrder lex() { return {Kind::lex, 0, {}}; }
  /// Block order eliminating the first `elim` (permuted) variables:
  /// grevlex within each block, leading block dominates.
  static TermOrder block(std::size_t elim, std::vector<std::size_t> perm = {}) {
    return {Kind::block, elim, std::move(perm)};
  }

  bool less(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

  std::string str() const;
  static TermOrder parse(const std::string& s);  // "grevlex" | "lex"
};

}  // namespace zk

#endif
