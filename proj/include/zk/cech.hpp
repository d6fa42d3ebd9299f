#ifndef ZK_CECH_HPP
#define ZK_CECH_HPP

#include <map>
#include <utility>
#include <vector>

#include "zk/fpalg.hpp"
#include "zk/fraction.hpp"
#include "zk/linalg.hpp"

namespace zk {

/// Finite cover of Spec A by standard opens D(f_1),...,D(f_n).
struct CechCover {
  FPAlgebra ambient;
  std::vector<MultiPoly> fs;

  std::size_t size() const { return fs.size(); }
  MultiPoly product_over(const std::vector<std::size_t>& tuple) const;
};

/// Degree-k cochain: values on strictly increasing (k+1)-tuples of cover
/// indices; the value on a permuted tuple carries the sign of the permutation
/// and tuples with repeats are zero. Each stored value is a fraction vector
/// whose denominator base is the product of the tuple's cover functions.
class Cochain {
 public:
  Cochain(CechCover cover, std::size_t degree, std::size_t rank);

  const CechCover& cover() const { return cover_; }
  std::size_t degree() const { return degree_; }
  std::size_t rank() const { return rank_; }

  void set(std::vector<std::size_t> tuple, LaurentFraction value);  // increasing tuple
  /// Value on any tuple (antisymmetric extension).
  LaurentFraction get(const std::vector<std::size_t>& tuple) const;
  const std::map<std::vector<std::size_t>, LaurentFraction>& values() const { return values_; }

  bool structurally_zero() const;

 private:
  CechCover cover_;
  std::size_t degree_;
  std::size_t rank_;
  std::map<std::vector<std::size_t>, LaurentFraction> values_;
};

/// Alternating-sum boundary: (d c)(l_0..l_{k+1}) = sum_j (-1)^j c(.. without l_j ..),
/// with restriction realized as denominator extension.
Cochain boundary(const Cochain& c);

/// Kernel membership: boundary(c) = 0 in every localization.
bool is_cocycle(const Cochain& c);

/// Degree-1 cocycle over a unimodular cover with coefficients in A^r:
/// s_ij = m_ij / (f_i f_j)^k, antisymmetric, satisfying the cocycle condition
/// up to saturation.
class CoprimeSystemCocycle {
 public:
  /// Validates unimodularity and the cocycle condition; witness may be empty
  /// (it is then computed). Errors: not_unimodular, cocycle_violation.
  CoprimeSystemCocycle(FPAlgebra ambient, std::vector<MultiPoly> fs,
                       std::vector<MultiPoly> witness, std::size_t rank,
                       std::map<std::pair<std::size_t, std::size_t>, LaurentFraction> s,
                       int clear_bound = 20);

  const FPAlgebra& ambient() const { return ambient_; }
  const std::vector<MultiPoly>& fs() const { return fs_; }
  const std::vector<MultiPoly>& witness() const { return witness_; }
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return fs_.size(); }

  /// Numerator of s_ij at the common cleared exponent (antisymmetric in i,j).
  std::vector<MultiPoly> cleared_numerator(std::size_t i, std::size_t j) const;
  unsigned cleared_exponent() const { return exponent_; }
  const LaurentFraction& stored(std::size_t i, std::size_t j) const;

 private:
  FPAlgebra ambient_;
  std::vector<MultiPoly> fs_;
  std::vector<MultiPoly> witness_;
  std::size_t rank_;
  std::map<std::pair<std::size_t, std::size_t>, LaurentFraction> s_;
  unsigned exponent_ = 1;  // common denominator exponent after clearing
};

struct H1Split {
  std::vector<LaurentFraction> u;  // u_i with denominator base f_i
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, bool>> checks;  // (i,j) -> verified
};

/// Explicit splitting u with u_j - u_i = s_ij, from the unimodularity witness;
/// every pair identity is verified (fraction_eq) before returning.
H1Split split_h1(const CoprimeSystemCocycle& z);

}  // namespace zk

#endif
