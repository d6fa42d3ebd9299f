#ifndef ZK_FPALG_HPP
#define ZK_FPALG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zk/ideal.hpp"
#include "zk/poly.hpp"

namespace zk {

/// A finite presentation: n generators, m relations in n variables.
struct Presentation {
  std::size_t n = 0;
  std::vector<MultiPoly> relations;  // in an n-variable ring
  std::size_t m() const { return relations.size(); }
};

/// Finitely presented algebra k[x_1..x_n]/(relations), with the relation
/// ideal carried alongside.
class FPAlgebra {
 public:
  FPAlgebra() = default;
  FPAlgebra(RingPtr ring, std::vector<MultiPoly> relations);
  static FPAlgebra polynomial_ring(RingPtr ring) { return FPAlgebra(std::move(ring), {}); }
  static FPAlgebra base_field(const Field& f);  // n = 0, m = 0

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& relations() const { return rels_; }
  const Ideal& ideal() const { return ideal_; }
  std::size_t ngens() const { return ring_->nvars(); }

  MultiPoly reduce(const MultiPoly& f) const;  // normal form mod relations
  bool element_eq(const MultiPoly& a, const MultiPoly& b) const;

 private:
  RingPtr ring_;
  std::vector<MultiPoly> rels_;
  Ideal ideal_;
};

/// Weak nullstellensatz test: the zero algebra iff 1 lies in the relations.
bool is_trivial(const FPAlgebra& A);

/// Verified algebra homomorphism: generator images respecting all relations.
class AlgHom {
 public:
  AlgHom(FPAlgebra source, FPAlgebra target, std::vector<MultiPoly> images);
  static AlgHom identity(const FPAlgebra& A);

  const FPAlgebra& source() const { return src_; }
  const FPAlgebra& target() const { return dst_; }
  const std::vector<MultiPoly>& images() const { return images_; }

  MultiPoly apply(const MultiPoly& f) const;  // reduced in the target
  AlgHom compose_after(const AlgHom& first) const;  // this o first
  bool operator==(const AlgHom& o) const;  // structural, on reduced images

 private:
  FPAlgebra src_, dst_;
  std::vector<MultiPoly> images_;
};

/// The unique homomorphism L_xi -> M sending the presentation generators to
/// `solution`; errors with solution_invalid naming the failing relation.
AlgHom induced_hom(const Presentation& xi, const Field& field, const FPAlgebra& target,
                   const std::vector<MultiPoly>& solution);

/// Build L_xi = k[x_1..x_n]/(relations) with generated variable names.
FPAlgebra algebra_of_presentation(const Presentation& xi, const Field& field);

struct TensorResult {
  FPAlgebra product;
  AlgHom left, right;  // the two inclusions
};

/// A tensor B over the base field, or over C along f: C->A, g: C->B.
TensorResult tensor(const FPAlgebra& A, const FPAlgebra& B);
TensorResult tensor_over(const FPAlgebra& A, const FPAlgebra& B, const FPAlgebra& C,
                         const AlgHom& f, const AlgHom& g);

struct LocalizeResult {
  FPAlgebra localized;  // A[y]/(y f - 1)
  AlgHom canonical;     // A -> A_f
};

LocalizeResult localize(const FPAlgebra& A, const MultiPoly& f);

/// A point of Spec A with coordinates in F_p.
using RationalPoint = std::vector<Scalar>;

/// Exhaustive, duplicate-free, lexicographically sorted solution set over the
/// prime field of A. Errors with cap_exceeded when p^n > cap.
std::vector<RationalPoint> spec_points(const FPAlgebra& A, std::uint64_t cap = 1'000'000,
                                       int jobs = 1);
/// Serial reference implementation (identical contract and output).
std::vector<RationalPoint> spec_points_serial(const FPAlgebra& A, std::uint64_t cap = 1'000'000);

/// Contravariant action on points: x -> (evaluate(image_i, x))_i.
RationalPoint spec_map(const AlgHom& h, const RationalPoint& x);

/// All elements of A as reduced normal forms, enumerated over the standard
/// monomials. Infinite-dimensional algebras are truncated at total degree
/// `degree_bound`. Errors with cap_exceeded when the element count would
/// exceed `cap`.
std::vector<MultiPoly> enumerate_elements(const FPAlgebra& A, std::uint64_t cap = 1'000'000,
                                          std::int64_t degree_bound = 3);

struct SqcRoundtripReport {
  std::size_t element_count = 0;
  std::size_t stage_count = 0;
  std::size_t solution_count = 0;  // total solutions across stages
  std::size_t phi_evaluations = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

/// External synthetic-quasi-coherence roundtrip at finite stages: for every
/// element u of L_xi, phi(u) is materialized as i(f,s)(u) over every solution
/// s in every stage, and psi(phi(u)) -- the value at the identity stage with
/// the tautological solution -- is checked to equal u.
SqcRoundtripReport sqc_roundtrip(const Presentation& xi, const Field& field,
                                 const std::vector<FPAlgebra>& stages,
                                 std::uint64_t cap = 1'000'000, std::int64_t degree_bound = 3);

}  // namespace zk

#endif
