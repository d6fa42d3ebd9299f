#include "zk/cover.hpp"

#include <algorithm>

namespace zk {

StandardOpen::StandardOpen(FPAlgebra a, std::vector<MultiPoly> f)
    : ambient(std::move(a)), fs(std::move(f)) {
  if (fs.empty()) fail(errc::usage, "the n-ary standard open needs a nonempty list");
}

namespace {

void require_same_ambient(const FPAlgebra& a, const FPAlgebra& b) {
  if (!(*a.ring() == *b.ring())) fail(errc::mismatch, "ambient algebras differ");
}

Ideal with_extra_gens(const FPAlgebra& A, const std::vector<MultiPoly>& extra) {
  std::vector<MultiPoly> gens = A.relations();
  for (const auto& g : extra) gens.push_back(g);
  return Ideal(A.ring(), std::move(gens));
}

}  // namespace

bool open_contained(const StandardOpen& lhs, const StandardOpen& rhs) {
  require_same_ambient(lhs.ambient, rhs.ambient);
  if (lhs.fs.size() != 1)
    fail(errc::usage, "containment test expects a single f on the left");
  return radical_membership(lhs.fs[0], with_extra_gens(rhs.ambient, rhs.fs));
}

bool closed_contained(const ClosedSet& lhs, const ClosedSet& rhs) {
  require_same_ambient(lhs.ambient, rhs.ambient);
  Ideal lhs_ideal = with_extra_gens(lhs.ambient, lhs.fs);
  for (const auto& g : rhs.fs)
    if (!membership(g, lhs_ideal)) return false;
  return true;
}

bool standard_open_empty(const StandardOpen& open) {
  if (open.fs.size() != 1) fail(errc::usage, "emptiness test expects a single f");
  // D(f) empty iff f nilpotent in A, i.e. f in sqrt(I)
  return radical_membership(open.fs[0], open.ambient.ideal());
}

// ---- ideal patching ----------------------------------------------------------

LocalIdealFamily::LocalIdealFamily(FPAlgebra ambient, std::vector<MultiPoly> cover,
                                   std::vector<std::vector<LaurentFraction>> locals)
    : ambient_(std::move(ambient)), cover_(std::move(cover)), locals_(std::move(locals)) {
  if (cover_.empty()) fail(errc::usage, "empty cover");
  if (locals_.size() != cover_.size())
    fail(errc::usage, "one local ideal per cover element expected");
  if (!is_unimodular(cover_, ambient_.ideal()))
    fail(errc::not_unimodular, "cover is not unimodular");
  for (std::size_t i = 0; i < cover_.size(); ++i)
    for (const auto& g : locals_[i]) {
      if (g.rank() != 1) fail(errc::usage, "ideal generators are rank-1 fractions");
      if (!(g.den_base() == cover_[i]))
        fail(errc::mismatch, "local generator denominator base must be f_i");
    }
}

PatchResult patch_ideals(const LocalIdealFamily& fam, int power_bound) {
  const auto& fs = fam.cover();
  const std::size_t n = fs.size();
  const FPAlgebra& A = fam.ambient();

  // numerators of the local generator lists
  std::vector<std::vector<MultiPoly>> nums(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& g : fam.locals()[i]) nums[i].push_back(g.numerator()[0]);

  // saturated local ideals (I_j + relations) : f_j^infty, reused throughout
  std::vector<Ideal> local_sat;
  local_sat.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<MultiPoly> gens = A.relations();
    for (const auto& g : nums[j]) gens.push_back(g);
    local_sat.push_back(saturation(Ideal(A.ring(), std::move(gens)), fs[j]));
  }

  // compatibility: every g in I_i lies in I_j localized at f_i f_j
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < nums[i].size(); ++k) {
        std::vector<MultiPoly> gens = A.relations();
        for (const auto& g : nums[j]) gens.push_back(g);
        Ideal overlap_sat = saturation(Ideal(A.ring(), std::move(gens)), fs[i] * fs[j]);
        if (!membership(nums[i][k], overlap_sat))
          fail(errc::compatibility_failure,
               "local ideals " + std::to_string(i) + " and " + std::to_string(j) +
                   " disagree on generator " + std::to_string(k));
      }
    }

  // clear denominators: g~_ik = f_i^L g_ik with L such that g~_ik lies in
  // every saturated I_j; membership in the saturation absorbs f_j powers,
  // the f_i power must be materialized
  std::vector<MultiPoly> glued_gens = A.relations();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& g : nums[i]) {
      MultiPoly lifted = g;
      int L = 0;
      auto everywhere = [&](const MultiPoly& cand) {
        for (std::size_t j = 0; j < n; ++j)
          if (j != i && !membership(cand, local_sat[j])) return false;
        return true;
      };
      while (!everywhere(lifted)) {
        if (++L > power_bound)
          fail(errc::internal, "denominator clearing exceeded the power bound");
        lifted = lifted * fs[i];
      }
      glued_gens.push_back(lifted);
    }
  Ideal glued(A.ring(), glued_gens);

  // verification: A_{f_i} I = I_i, both inclusions via saturation membership
  PatchResult out{glued, {}};
  Ideal glued_plus = glued;  // already contains the ambient relations
  for (std::size_t i = 0; i < n; ++i) {
    Ideal glued_sat = saturation(glued_plus, fs[i]);
    for (const auto& g : glued.generators()) {
      bool ok = membership(g, local_sat[i]);
      out.checks.emplace_back(i, out.checks.size(), ok);
      if (!ok) fail(errc::internal, "patch verification failed: glued generator escapes I_i");
    }
    for (const auto& g : nums[i]) {
      bool ok = membership(g, glued_sat);
      out.checks.emplace_back(i, out.checks.size(), ok);
      if (!ok) fail(errc::internal, "patch verification failed: local generator not recovered");
    }
  }
  return out;
}

// ---- unit decomposition on A^1 ------------------------------------------------

UnitDecomposition decompose_unit_on_intersection(const std::set<Scalar>& shared_roots,
                                                 const std::set<Scalar>& u_only_roots,
                                                 const std::set<Scalar>& v_only_roots,
                                                 const FactoredUnit& f) {
  for (const auto& a : shared_roots)
    if (u_only_roots.count(a) || v_only_roots.count(a))
      fail(errc::usage, "root support sets must be pairwise disjoint");
  for (const auto& a : u_only_roots)
    if (v_only_roots.count(a)) fail(errc::usage, "root support sets must be pairwise disjoint");

  for (const auto& [root, e] : f.exps) {
    if (shared_roots.count(root) || u_only_roots.count(root) || v_only_roots.count(root))
      continue;
    fail(errc::unsupported_root,
         "factor (X - " + root.str() + ") lies outside the declared support");
  }
  // g keeps the unit plus all shared and U-side factors, h the V-side ones
  UnitDecomposition out{factored_one(f.unit.field()), factored_one(f.unit.field())};
  out.g.unit = f.unit;
  for (const auto& [root, e] : f.exps) {
    if (v_only_roots.count(root)) out.h.exps.emplace(root, e);
    else out.g.exps.emplace(root, e);
  }
  return out;
}

MergeOutput merge_sections(const MergeInput& in) {
  const std::size_t n = in.removed.size();
  if (n == 0) fail(errc::usage, "merge needs at least one piece");
  if (!in.sections.empty() && in.sections.size() != n)
    fail(errc::usage, "sections, when given, must be one per piece");

  Field F = Field::Q();
  if (!in.sections.empty()) F = in.sections[0].unit.field();
  else if (!in.transitions.empty()) F = in.transitions.begin()->second.unit.field();
  else if (n > 1) fail(errc::usage, "transitions missing");
  RingPtr ring = make_ring(F, {"X"});

  // transition lookup with t_ji = t_ij^{-1}; derived from sections if absent
  auto transition = [&](std::size_t i, std::size_t j) -> FactoredUnit {
    auto it = in.transitions.find({std::min(i, j), std::max(i, j)});
    FactoredUnit t = factored_one(F);
    if (it != in.transitions.end()) t = it->second;
    else if (!in.sections.empty()) t = in.sections[std::max(i, j)].mul(in.sections[std::min(i, j)].inv());
    else fail(errc::usage, "no transition for pair (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
    return i < j ? t : t.inv();
  };

  // consistency of given data
  for (const auto& [ij, t] : in.transitions) {
    auto [i, j] = ij;
    if (!(i < j && j < n)) fail(errc::usage, "transitions are indexed by pairs i < j");
    for (const auto& [root, e] : t.exps)
      if (!in.removed[i].count(root) && !in.removed[j].count(root))
        fail(errc::unsupported_root, "transition not invertible on the overlap");
    if (!in.sections.empty() &&
        !factored_eq(t.mul(in.sections[i]), in.sections[j], ring))
      fail(errc::usage, "transition does not match the section quotient");
  }
  for (const auto& s : in.sections)
    if (!(s.unit.field() == F)) fail(errc::mismatch, "section field mismatch");

  MergeOutput out;
  out.unit_on_piece.assign(n, factored_one(F));
  std::set<Scalar> acc_removed = in.removed[0];
  std::vector<FactoredUnit> v(n, factored_one(F));

  for (std::size_t m = 1; m < n; ++m) {
    // transition from the accumulated section to piece m: tau (v_0 s_0) = s_m,
    // computed through piece 0 which is always part of the accumulation
    FactoredUnit tau = transition(0, m).mul(v[0].inv());
    std::set<Scalar> shared, u_only, v_only;
    for (const auto& a : acc_removed) {
      if (in.removed[m].count(a)) shared.insert(a);
      else u_only.insert(a);
    }
    for (const auto& a : in.removed[m])
      if (!acc_removed.count(a)) v_only.insert(a);
    UnitDecomposition d = decompose_unit_on_intersection(shared, u_only, v_only, tau);
    // g * (accumulated) and h^{-1} * s_m agree on the overlap
    for (std::size_t p = 0; p < m; ++p) v[p] = d.g.mul(v[p]);
    v[m] = d.h.inv();
    acc_removed = shared;
  }

  // verify t_ij = v_i / v_j for every declared overlap, and invertibility
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (in.transitions.find({i, j}) == in.transitions.end() && in.sections.empty()) continue;
      // convention t s_i = s_j and merged = v_i s_i = v_j s_j gives t = v_i / v_j
      if (!factored_eq(transition(i, j), v[i].mul(v[j].inv()), ring))
        fail(errc::internal, "merge self-check failed on pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [root, e] : v[i].exps)
      if (!in.removed[i].count(root))
        fail(errc::internal, "merged multiplier not invertible on its piece");

  out.removed = acc_removed;
  out.unit_on_piece = v;
  if (!in.sections.empty()) out.section.push_back(v[0].mul(in.sections[0]));
  return out;
}

// ---- pointed cocycles ----------------------------------------------------------

PointedCocycle::PointedCocycle(
    std::size_t count, std::size_t base_index,
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>> values)
    : count_(count), base_(base_index), rank_(0), values_(std::move(values)) {
  if (count_ == 0) fail(errc::usage, "pointed cocycle needs an inhabited index set");
  if (base_ >= count_) fail(errc::usage, "base index out of range");
  if (values_.empty()) fail(errc::usage, "cocycle values missing");
  rank_ = values_.begin()->second.size();
  for (std::size_t i = 0; i < count_; ++i)
    for (std::size_t j = 0; j < count_; ++j) {
      auto it = values_.find({i, j});
      if (it == values_.end())
        fail(errc::usage, "cocycle value missing for pair (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      if (it->second.size() != rank_) fail(errc::mismatch, "cocycle value rank mismatch");
    }
  for (std::size_t i = 0; i < count_; ++i)
    for (std::size_t j = 0; j < count_; ++j)
      for (std::size_t k = 0; k < count_; ++k)
        for (std::size_t c = 0; c < rank_; ++c) {
          Scalar lhs = value(i, j)[c] + value(j, k)[c];
          if (lhs != value(i, k)[c])
            fail(errc::cocycle_violation,
                 "cocycle law fails on (" + std::to_string(i) + "," + std::to_string(j) + "," +
                     std::to_string(k) + ")");
        }
}

const std::vector<Scalar>& PointedCocycle::value(std::size_t i, std::size_t j) const {
  return values_.at({i, j});
}

std::vector<std::vector<Scalar>> trivialize_pointed_cocycle(const PointedCocycle& c) {
  std::vector<std::vector<Scalar>> u(c.count());
  for (std::size_t i = 0; i < c.count(); ++i) {
    u[i].reserve(c.rank());
    for (std::size_t r = 0; r < c.rank(); ++r) u[i].push_back(-c.value(c.base_index(), i)[r]);
  }
  for (std::size_t i = 0; i < c.count(); ++i)
    for (std::size_t j = 0; j < c.count(); ++j)
      for (std::size_t r = 0; r < c.rank(); ++r)
        if (u[i][r] - u[j][r] != c.value(i, j)[r])
          fail(errc::internal, "trivialization self-check failed");
  return u;
}

}  // namespace zk
