#ifndef ZK_IDEAL_HPP
#define ZK_IDEAL_HPP

#include <optional>
#include <vector>

#include "zk/order.hpp"
#include "zk/poly.hpp"

namespace zk {

/// Ideal of a polynomial ring, with a lazily computed reduced Groebner
/// basis. The cache is written once per order; compute the basis before
/// sharing an Ideal across threads.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<MultiPoly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }

  /// Reduced, monic Groebner basis under `ord` (cached; recomputed when a
  /// different order is requested).
  const std::vector<MultiPoly>& basis(const TermOrder& ord = TermOrder::grevlex()) const;
  const TermOrder& cached_order() const { return order_; }

  bool operator==(const Ideal& o) const;  // ideal equality (mutual containment)

 private:
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
  mutable std::vector<MultiPoly> basis_;
  mutable bool have_basis_ = false;
  mutable TermOrder order_;
};

// ---- Groebner engine ------------------------------------------------------

/// Reduced monic Groebner basis of `gens` under `ord` (Buchberger with the
/// coprime-lead and chain criteria).
std::vector<MultiPoly> buchberger(const RingPtr& ring, const std::vector<MultiPoly>& gens,
                                  const TermOrder& ord);

/// Full normal form of f against `basis` under `ord`.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      const TermOrder& ord);

bool membership(const MultiPoly& f, const Ideal& I);
bool ideal_contains(const Ideal& I, const Ideal& J);  // J subset of I

/// Saturation (I : f^infinity), via elimination of T from I + (1 - T f).
Ideal saturation(const Ideal& I, const MultiPoly& f);

/// Ideal quotient (I : f), via intersection with the principal ideal (f).
Ideal ideal_quotient(const Ideal& I, const MultiPoly& f);

/// f in sqrt(I)? Rabinowitsch: 1 in I + (1 - T f).
bool radical_membership(const MultiPoly& f, const Ideal& I);

bool is_unimodular(const std::vector<MultiPoly>& fs, const Ideal& I);

/// Coefficients r with sum r_i f_i = 1 modulo I (representation tracked
/// through Buchberger). Errors with not_unimodular when no certificate exists.
std::vector<MultiPoly> unimodular_certificate(const std::vector<MultiPoly>& fs, const Ideal& I);

/// Number of standard monomials of ring/I, or nullopt when infinite.
std::optional<std::uint64_t> k_dimension(const Ideal& I);

/// Multiplication by f injective on ring/I, i.e. (I : f) = I.
bool is_regular(const MultiPoly& f, const Ideal& I);

/// Monomials outside the leading-term ideal, sorted canonically.
/// Errors with cap_exceeded if more than `cap` are found.
std::vector<Monomial> standard_monomials(const Ideal& I, std::size_t cap);

// ---- ring extension helpers ----------------------------------------------

/// Ring with extra (non-invertible) variables appended.
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra);

/// Reinterpret f in `bigger`, which must extend f's ring by appended variables.
MultiPoly lift_poly(const MultiPoly& f, const RingPtr& bigger);

/// Keep only basis elements free of the last `dropped` variables, projected
/// into `smaller`.
std::vector<MultiPoly> eliminate_last(const std::vector<MultiPoly>& basis, std::size_t dropped,
                                      const RingPtr& smaller);

/// Fresh variable name not colliding with existing ones ("T", "T1", ...).
std::string fresh_var_name(const PolyRing& ring, const std::string& stem);

}  // namespace zk

#endif
