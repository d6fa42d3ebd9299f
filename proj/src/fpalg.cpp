#include "zk/fpalg.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zk {

FPAlgebra::FPAlgebra(RingPtr ring, std::vector<MultiPoly> relations)
    : ring_(std::move(ring)), rels_(std::move(relations)), ideal_(ring_, rels_) {
  for (const auto& r : rels_)
    if (!(*r.ring() == *ring_)) fail(errc::mismatch, "relation outside the presentation ring");
}

FPAlgebra FPAlgebra::base_field(const Field& f) {
  return FPAlgebra(make_ring(f, {}), {});
}

MultiPoly FPAlgebra::reduce(const MultiPoly& f) const {
  return normal_form(f, ideal_.basis(), ideal_.cached_order());
}

bool FPAlgebra::element_eq(const MultiPoly& a, const MultiPoly& b) const {
  return reduce(a - b).is_zero();
}

bool is_trivial(const FPAlgebra& A) {
  return membership(MultiPoly::constant(A.ring(), 1), A.ideal());
}

// ---- homomorphisms ---------------------------------------------------------

AlgHom::AlgHom(FPAlgebra source, FPAlgebra target, std::vector<MultiPoly> images)
    : src_(std::move(source)), dst_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != src_.ngens())
    fail(errc::usage, "homomorphism image count does not match the generator count");
  if (!(src_.ring()->field == dst_.ring()->field))
    fail(errc::mismatch, "homomorphism between algebras over different fields");
  for (auto& im : images_) im = dst_.reduce(im);
  for (std::size_t i = 0; i < src_.relations().size(); ++i) {
    MultiPoly image = src_.relations()[i].substitute(dst_.ring(), images_);
    if (!membership(image, dst_.ideal()))
      fail(errc::well_definedness,
           "relation " + std::to_string(i) + " (" + src_.relations()[i].str() +
               ") is not respected by the generator images");
  }
}

AlgHom AlgHom::identity(const FPAlgebra& A) {
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < A.ngens(); ++i) images.push_back(MultiPoly::variable(A.ring(), i));
  return AlgHom(A, A, std::move(images));
}

MultiPoly AlgHom::apply(const MultiPoly& f) const {
  return dst_.reduce(f.substitute(dst_.ring(), images_));
}

AlgHom AlgHom::compose_after(const AlgHom& first) const {
  if (!(*first.dst_.ring() == *src_.ring()))
    fail(errc::mismatch, "homomorphism composition: target/source mismatch");
  std::vector<MultiPoly> images;
  images.reserve(first.images_.size());
  for (const auto& im : first.images_) images.push_back(apply(im));
  return AlgHom(first.src_, dst_, std::move(images));
}

bool AlgHom::operator==(const AlgHom& o) const {
  if (!(*src_.ring() == *o.src_.ring()) || !(*dst_.ring() == *o.dst_.ring())) return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (!dst_.element_eq(images_[i], o.images_[i])) return false;
  return true;
}

FPAlgebra algebra_of_presentation(const Presentation& xi, const Field& field) {
  std::vector<std::string> vars;
  vars.reserve(xi.n);
  for (std::size_t i = 0; i < xi.n; ++i) vars.push_back("x" + std::to_string(i + 1));
  RingPtr ring = make_ring(field, std::move(vars));
  std::vector<MultiPoly> rels;
  rels.reserve(xi.relations.size());
  for (const auto& r : xi.relations) {
    if (r.ring()->nvars() != xi.n) fail(errc::usage, "presentation relation arity mismatch");
    rels.push_back(lift_poly(r, ring));
  }
  return FPAlgebra(ring, std::move(rels));
}

AlgHom induced_hom(const Presentation& xi, const Field& field, const FPAlgebra& target,
                   const std::vector<MultiPoly>& solution) {
  if (solution.size() != xi.n) fail(errc::usage, "solution arity does not match presentation");
  for (std::size_t i = 0; i < xi.relations.size(); ++i) {
    MultiPoly v = xi.relations[i].substitute(target.ring(), solution);
    if (!membership(v, target.ideal()))
      fail(errc::solution_invalid,
           "relation " + std::to_string(i) + " (" + xi.relations[i].str() +
               ") is not satisfied by the proposed solution");
  }
  return AlgHom(algebra_of_presentation(xi, field), target, solution);
}

// ---- tensor / localization -------------------------------------------------

namespace {

std::vector<std::string> disjoint_names(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b,
                                        std::vector<std::string>* renamed_b) {
  std::vector<std::string> vars = a;
  for (const auto& name : b) {
    std::string candidate = name;
    int suffix = 1;
    while (std::find(vars.begin(), vars.end(), candidate) != vars.end())
      candidate = name + "_" + std::to_string(++suffix);
    vars.push_back(candidate);
    if (renamed_b) renamed_b->push_back(candidate);
  }
  return vars;
}

}  // namespace

TensorResult tensor(const FPAlgebra& A, const FPAlgebra& B) {
  if (!(A.ring()->field == B.ring()->field))
    fail(errc::mismatch, "tensor product over different fields");
  std::vector<std::string> renamed;
  RingPtr ring = make_ring(A.ring()->field, disjoint_names(A.ring()->vars, B.ring()->vars, &renamed));
  const std::size_t na = A.ngens();

  std::vector<MultiPoly> a_images, b_images;
  for (std::size_t i = 0; i < na; ++i) a_images.push_back(MultiPoly::variable(ring, i));
  for (std::size_t i = 0; i < B.ngens(); ++i) b_images.push_back(MultiPoly::variable(ring, na + i));

  std::vector<MultiPoly> rels;
  for (const auto& r : A.relations()) rels.push_back(r.substitute(ring, a_images));
  for (const auto& r : B.relations()) rels.push_back(r.substitute(ring, b_images));

  FPAlgebra prod(ring, std::move(rels));
  return {prod, AlgHom(A, prod, a_images), AlgHom(B, prod, b_images)};
}

TensorResult tensor_over(const FPAlgebra& A, const FPAlgebra& B, const FPAlgebra& C,
                         const AlgHom& f, const AlgHom& g) {
  if (!(*f.source().ring() == *C.ring()) || !(*g.source().ring() == *C.ring()) ||
      !(*f.target().ring() == *A.ring()) || !(*g.target().ring() == *B.ring()))
    fail(errc::mismatch, "tensor_over expects f: C->A and g: C->B");
  TensorResult t = tensor(A, B);
  std::vector<MultiPoly> rels = t.product.relations();
  for (std::size_t c = 0; c < C.ngens(); ++c) {
    MultiPoly via_a = f.images()[c].substitute(t.product.ring(), t.left.images());
    MultiPoly via_b = g.images()[c].substitute(t.product.ring(), t.right.images());
    rels.push_back(via_a - via_b);
  }
  FPAlgebra prod(t.product.ring(), std::move(rels));
  return {prod, AlgHom(A, prod, t.left.images()), AlgHom(B, prod, t.right.images())};
}

LocalizeResult localize(const FPAlgebra& A, const MultiPoly& f) {
  require_same_ring(f, MultiPoly::zero(A.ring()));
  RingPtr ring = extend_ring(A.ring(), {fresh_var_name(*A.ring(), "y")});
  std::vector<MultiPoly> rels;
  for (const auto& r : A.relations()) rels.push_back(lift_poly(r, ring));
  MultiPoly y = MultiPoly::variable(ring, ring->nvars() - 1);
  rels.push_back(y * lift_poly(f, ring) - MultiPoly::constant(ring, 1));
  FPAlgebra loc(ring, std::move(rels));
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < A.ngens(); ++i) images.push_back(MultiPoly::variable(ring, i));
  return {loc, AlgHom(A, loc, std::move(images))};
}

// ---- points ----------------------------------------------------------------

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base + 1) return cap + 1;
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

RationalPoint point_of_index(std::uint64_t idx, std::size_t n, const Field& F) {
  // most significant digit first: lexicographic order matches index order
  RationalPoint p(n, Scalar::zero(F));
  for (std::size_t i = n; i-- > 0;) {
    p[i] = Scalar(F, static_cast<long>(idx % static_cast<std::uint64_t>(F.p)));
    idx /= static_cast<std::uint64_t>(F.p);
  }
  return p;
}

bool satisfies(const FPAlgebra& A, const RationalPoint& p) {
  for (const auto& r : A.relations())
    if (!r.evaluate(p).is_zero()) return false;
  return true;
}

}  // namespace

std::vector<RationalPoint> spec_points_serial(const FPAlgebra& A, std::uint64_t cap) {
  const Field F = A.ring()->field;
  if (!F.is_prime_field()) fail(errc::usage, "point enumeration needs a finite field");
  const std::size_t n = A.ngens();
  std::uint64_t total = checked_pow(static_cast<std::uint64_t>(F.p), n, cap);
  if (total > cap) fail(errc::cap_exceeded, "point grid exceeds the enumeration cap");
  std::vector<RationalPoint> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    RationalPoint p = point_of_index(idx, n, F);
    if (satisfies(A, p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<RationalPoint> spec_points(const FPAlgebra& A, std::uint64_t cap, int jobs) {
  const Field F = A.ring()->field;
  if (!F.is_prime_field()) fail(errc::usage, "point enumeration needs a finite field");
  const std::size_t n = A.ngens();
  std::uint64_t total = checked_pow(static_cast<std::uint64_t>(F.p), n, cap);
  if (total > cap) fail(errc::cap_exceeded, "point grid exceeds the enumeration cap");
#ifdef _OPENMP
  if (jobs > 1 && total >= 64) {
    const int nchunks = jobs * 8;
    std::vector<std::vector<RationalPoint>> found(static_cast<std::size_t>(nchunks));
    // chunks are contiguous index ranges: concatenation preserves lex order
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int c = 0; c < nchunks; ++c) {
      std::uint64_t lo = total * static_cast<std::uint64_t>(c) / nchunks;
      std::uint64_t hi = total * (static_cast<std::uint64_t>(c) + 1) / nchunks;
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        RationalPoint p = point_of_index(idx, n, F);
        if (satisfies(A, p)) found[static_cast<std::size_t>(c)].push_back(std::move(p));
      }
    }
    std::vector<RationalPoint> out;
    for (auto& chunk : found)
      for (auto& p : chunk) out.push_back(std::move(p));
    return out;
  }
#else
  (void)jobs;
#endif
  return spec_points_serial(A, cap);
}

RationalPoint spec_map(const AlgHom& h, const RationalPoint& x) {
  RationalPoint out;
  out.reserve(h.images().size());
  for (const auto& im : h.images()) out.push_back(im.evaluate(x));
  return out;
}

// ---- element enumeration and the SQC roundtrip ------------------------------

std::vector<MultiPoly> enumerate_elements(const FPAlgebra& A, std::uint64_t cap,
                                          std::int64_t degree_bound) {
  const Field F = A.ring()->field;
  if (!F.is_prime_field()) fail(errc::usage, "element enumeration needs a finite field");
  std::vector<Monomial> basis;
  auto dim = k_dimension(A.ideal());
  if (dim) {
    basis = standard_monomials(A.ideal(), cap);
  } else {
    // infinite-dimensional: truncate the standard monomials by total degree
    const auto& gb = A.ideal().basis();
    std::vector<Monomial> lts;
    for (const auto& g : gb) {
      const Monomial* lm = nullptr;
      for (const auto& [m, c] : g.terms())
        if (!lm || A.ideal().cached_order().greater(m, *lm)) lm = &m;
      if (lm) lts.push_back(*lm);
    }
    const std::size_t n = A.ngens();
    Monomial cur(n, 0);
    while (true) {
      bool reducible = false;
      for (const auto& lt : lts)
        if (mono_divides(lt, cur)) { reducible = true; break; }
      if (!reducible && total_degree(cur) <= degree_bound) basis.push_back(cur);
      std::size_t i = 0;
      while (i < n) {
        if (++cur[i] <= degree_bound && total_degree(cur) <= degree_bound) break;
        cur[i] = 0;
        ++i;
      }
      if (i == n) break;
    }
    std::sort(basis.begin(), basis.end(),
              [](const Monomial& a, const Monomial& b) { return MonoCanonLess{}(a, b); });
  }
  std::uint64_t count = checked_pow(static_cast<std::uint64_t>(F.p), basis.size(), cap);
  if (count > cap) fail(errc::cap_exceeded, "element enumeration exceeds the cap");

  std::vector<MultiPoly> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    MultiPoly e(A.ring());
    std::uint64_t rest = idx;
    for (const auto& m : basis) {
      long digit = static_cast<long>(rest % static_cast<std::uint64_t>(F.p));
      rest /= static_cast<std::uint64_t>(F.p);
      if (digit != 0) e.add_term(m, Scalar(F, digit));
    }
    out.push_back(std::move(e));
  }
  return out;
}

SqcRoundtripReport sqc_roundtrip(const Presentation& xi, const Field& field,
                                 const std::vector<FPAlgebra>& stages, std::uint64_t cap,
                                 std::int64_t degree_bound) {
  SqcRoundtripReport rep;
  FPAlgebra L = algebra_of_presentation(xi, field);
  std::vector<MultiPoly> elements = enumerate_elements(L, cap, degree_bound);
  rep.element_count = elements.size();
  rep.stage_count = stages.size();

  // materialize phi(u) across every stage solution
  for (const auto& M : stages) {
    std::vector<MultiPoly> m_elements = enumerate_elements(M, cap, degree_bound);
    std::vector<std::vector<MultiPoly>> solutions;
    // all n-tuples of M-elements satisfying the presentation
    std::vector<std::size_t> odo(xi.n, 0);
    while (true) {
      std::vector<MultiPoly> cand;
      cand.reserve(xi.n);
      for (std::size_t i = 0; i < xi.n; ++i) cand.push_back(m_elements[odo[i]]);
      bool ok = true;
      for (const auto& r : xi.relations)
        if (!membership(r.substitute(M.ring(), cand), M.ideal())) { ok = false; break; }
      if (ok) solutions.push_back(std::move(cand));
      std::size_t i = 0;
      while (i < xi.n) {
        if (++odo[i] < m_elements.size()) break;
        odo[i] = 0;
        ++i;
      }
      if (i == xi.n || xi.n == 0) break;
    }
    rep.solution_count += solutions.size();
    for (const auto& s : solutions) {
      AlgHom phi_at = induced_hom(xi, field, M, s);
      for (const auto& u : elements) {
        (void)phi_at.apply(u);
        ++rep.phi_evaluations;
      }
    }
  }

  // psi(phi(u)) = value at the identity stage with the tautological solution
  std::vector<MultiPoly> tautological;
  for (std::size_t i = 0; i < xi.n; ++i)
    tautological.push_back(MultiPoly::variable(L.ring(), i));
  AlgHom id_stage = induced_hom(xi, field, L, tautological);
  for (const auto& u : elements) {
    MultiPoly back = id_stage.apply(u);
    if (!L.element_eq(back, u)) ++rep.failures;
  }
  return rep;
}

}  // namespace zk
