#ifndef ZK_PROJ_HPP
#define ZK_PROJ_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "zk/fpalg.hpp"
#include "zk/linalg.hpp"
#include "zk/poly.hpp"

namespace zk {

/// Point of P^n over a prime field, stored with the first nonzero coordinate
/// normalized to 1 (canonical representative).
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<Scalar> homogeneous);  // not all zero

  const std::vector<Scalar>& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size() - 1; }  // the n of P^n

  bool operator==(const ProjPoint& o) const { return coords_ == o.coords_; }
  bool operator<(const ProjPoint& o) const { return coords_ < o.coords_; }

 private:
  std::vector<Scalar> coords_;
};

/// Equality via vanishing of all 2x2 minors x_i y_j - y_i x_j.
bool point_eq(const ProjPoint& p, const ProjPoint& q);

/// Chart membership: indices i with p_i != 0, plus dehomogenized coordinates.
struct ChartCover {
  std::vector<std::size_t> charts;                    // nonempty
  std::vector<std::vector<Scalar>> dehomogenized;     // per chart, length n
};
ChartCover chart_cover(const ProjPoint& p);

/// All points of P^n(F_p), sorted; |P^n(F_p)| = (p^{n+1}-1)/(p-1).
std::vector<ProjPoint> enumerate_proj_points(std::size_t n, const Field& F,
                                             std::uint64_t cap = 1'000'000);

/// Units of the Laurent ring k[X]_X are exactly the monomials alpha X^n.
struct UnitClass {
  Scalar alpha;
  std::int64_t n;
};
std::optional<UnitClass> classify_unit(const MultiPoly& g);

/// Glue datum for O(d) on P^1: the Laurent unit X^{-d} on the chart overlap
/// (the sign convention glues O(-1) by multiplication with x).
class TwistGlue {
 public:
  explicit TwistGlue(MultiPoly unit);  // must classify as alpha X^n
  static TwistGlue twist(const Field& F, std::int64_t d);

  const MultiPoly& unit() const { return unit_; }
  TwistGlue tensor(const TwistGlue& o) const;
  std::int64_t degree() const;  // -n for glue unit alpha X^n

 private:
  MultiPoly unit_;
};

/// Cohomology query O(d) on P^n.
struct TwistSpec {
  std::size_t n = 1;
  std::int64_t d = 0;
  Field field = Field::Q();
};

/// Cech cohomology of O(d) on the standard cover of P^n, decomposed by
/// multidegree; dims H^0..H^n. Window stability (margin vs margin+1) is
/// asserted at runtime. jobs > 1 enables the OpenMP kernel.
std::vector<std::size_t> cohomology_Pn(const TwistSpec& spec, unsigned margin = 0, int jobs = 1);
/// Serial reference implementation (same contract and output).
std::vector<std::size_t> cohomology_Pn_serial(const TwistSpec& spec, unsigned margin = 0);

/// Closed-form oracle: H^0 = C(n+d, n) for d >= 0, H^n = C(-d-1, n) for
/// d <= -n-1, all other groups zero.
std::vector<std::size_t> closed_form_dims(const TwistSpec& spec);

/// Per-multidegree complex (exposed for tests): chart subsets admissible for
/// exponent vector e, boundary matrices, cohomology dims.
std::vector<std::size_t> multidegree_dims(std::size_t n, const std::vector<std::int64_t>& e,
                                          const Field& F);

/// Independent degree-0 oracle on P^1: dimension of the pullback of
/// k[X] -> k[X,Y]/(1-XY) <- k[Y] within polynomial degree `window`.
std::size_t p1_global_sections_dim(const Field& F, std::size_t window = 6);

}  // namespace zk

#endif
