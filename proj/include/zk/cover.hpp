#ifndef ZK_COVER_HPP
#define ZK_COVER_HPP

#include <map>
#include <set>
#include <vector>

#include "zk/factor.hpp"
#include "zk/fpalg.hpp"
#include "zk/fraction.hpp"

namespace zk {

/// D(f) or D(f_1,...,f_n) inside Spec of the ambient algebra.
struct StandardOpen {
  FPAlgebra ambient;
  std::vector<MultiPoly> fs;  // nonempty

  StandardOpen(FPAlgebra a, MultiPoly f) : ambient(std::move(a)), fs{std::move(f)} {}
  StandardOpen(FPAlgebra a, std::vector<MultiPoly> f);
};

/// V(f_1,...,f_n).
struct ClosedSet {
  FPAlgebra ambient;
  std::vector<MultiPoly> fs;
};

/// D(f) contained in D(g_1,...,g_n): radical membership of f in I + (g).
/// The left side must be a single standard open.
bool open_contained(const StandardOpen& lhs, const StandardOpen& rhs);

/// V(fbar) contained in V(gbar): (gbar) contained in (fbar) in A.
bool closed_contained(const ClosedSet& lhs, const ClosedSet& rhs);

/// D(f) empty iff f nilpotent in A.
bool standard_open_empty(const StandardOpen& open);

/// Finitely generated ideals I_i over the localizations A_{f_i} of a
/// unimodular cover; generators are fractions with denominator base f_i.
class LocalIdealFamily {
 public:
  LocalIdealFamily(FPAlgebra ambient, std::vector<MultiPoly> cover,
                   std::vector<std::vector<LaurentFraction>> locals);

  const FPAlgebra& ambient() const { return ambient_; }
  const std::vector<MultiPoly>& cover() const { return cover_; }
  const std::vector<std::vector<LaurentFraction>>& locals() const { return locals_; }

 private:
  FPAlgebra ambient_;
  std::vector<MultiPoly> cover_;
  std::vector<std::vector<LaurentFraction>> locals_;
};

struct PatchResult {
  Ideal glued;
  // (i, j, generator index, direction) -> verified localized membership;
  // direction 0: glued generators land in I_i, 1: I_i generators lift.
  std::vector<std::tuple<std::size_t, std::size_t, bool>> checks;
};

/// Ideal patching: a finitely generated I with A_{f_i} I = I_i for all i.
/// Precondition (checked, error compatibility_failure): the local ideals
/// agree on all overlaps. Exponent search bounded by `power_bound`.
PatchResult patch_ideals(const LocalIdealFamily& fam, int power_bound = 20);

/// Split an invertible function on U cap V into g (invertible on U) times
/// h (invertible on V). f is given in factored normal form; its roots must
/// lie in shared, u_only or v_only (error unsupported_root otherwise).
struct UnitDecomposition {
  FactoredUnit g, h;
};

UnitDecomposition decompose_unit_on_intersection(const std::set<Scalar>& shared_roots,
                                                 const std::set<Scalar>& u_only_roots,
                                                 const std::set<Scalar>& v_only_roots,
                                                 const FactoredUnit& f);

/// Section-merging input: pieces U_i = A^1 minus removed_i with transition
/// units t_ij (i < j) satisfying t_ij s_i = s_j on overlaps. Concrete
/// sections are optional; when present the transitions must be their
/// quotients.
struct MergeInput {
  std::vector<std::set<Scalar>> removed;                               // per piece
  std::map<std::pair<std::size_t, std::size_t>, FactoredUnit> transitions;  // i < j
  std::vector<FactoredUnit> sections;  // empty, or one per piece
};

struct MergeOutput {
  std::set<Scalar> removed;              // complement of the union
  std::vector<FactoredUnit> unit_on_piece;  // v_i; t_ij = v_i / v_j (verified)
  std::vector<FactoredUnit> section;     // v_0 s_0 when sections were given
};

/// Iteratively merges two pieces at a time via decompose_unit_on_intersection;
/// the result restricted to piece i is v_i times the original section.
MergeOutput merge_sections(const MergeInput& in);

/// Constant cocycle on a pointed finite index set, with values in k^r.
class PointedCocycle {
 public:
  /// c[(i,j)] for all ordered pairs; validates the cocycle law
  /// c_ij + c_jk = c_ik (error cocycle_violation naming a triple).
  PointedCocycle(std::size_t count, std::size_t base_index,
                 std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>> values);

  std::size_t count() const { return count_; }
  std::size_t base_index() const { return base_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Scalar>& value(std::size_t i, std::size_t j) const;

 private:
  std::size_t count_, base_, rank_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>> values_;
};

/// u_i = -c_{i0,i}; satisfies u_i - u_j = c_ij for all pairs (verified).
std::vector<std::vector<Scalar>> trivialize_pointed_cocycle(const PointedCocycle& c);

}  // namespace zk

#endif
