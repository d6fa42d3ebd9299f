#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>

#include "zk/ideal.hpp"

namespace zk {

// ---- TermOrder -------------------------------------------------------------

namespace {

// grevlex on a contiguous slice [lo, hi) of the exponent vector
bool grevlex_less_slice(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
  if (da != db) return da < db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

bool lex_less_slice(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
  const Monomial* pa = &a;
  const Monomial* pb = &b;
  Monomial ta, tb;
  if (!perm.empty()) {
    ta.resize(a.size()); tb.resize(b.size());
    for (std::size_t i = 0; i < perm.size(); ++i) { ta[i] = a[perm[i]]; tb[i] = b[perm[i]]; }
    pa = &ta; pb = &tb;
  }
  switch (kind) {
    case Kind::grevlex:
      return grevlex_less_slice(*pa, *pb, 0, pa->size());
    case Kind::lex:
      return lex_less_slice(*pa, *pb, 0, pa->size());
    case Kind::block: {
      if (grevlex_less_slice(*pa, *pb, 0, elim)) return true;
      if (grevlex_less_slice(*pb, *pa, 0, elim)) return false;
      return grevlex_less_slice(*pa, *pb, elim, pa->size());
    }
  }
  return false;
}

std::string TermOrder::str() const {
  switch (kind) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::block: return "block:" + std::to_string(elim);
  }
  return "?";
}

TermOrder TermOrder::parse(const std::string& s) {
  if (s == "grevlex") return grevlex();
  if (s == "lex") return lex();
  fail(errc::usage, "unknown term order '" + s + "'");
}

namespace {

bool order_eq(const TermOrder& a, const TermOrder& b) {
  return a.kind == b.kind && a.elim == b.elim && a.perm == b.perm;
}

// Working representation: terms sorted descending under the active order.
struct OPoly {
  std::vector<std::pair<Monomial, Scalar>> t;
  bool is_zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().first; }
  const Scalar& lc() const { return t.front().second; }
};

OPoly to_opoly(const MultiPoly& p, const TermOrder& ord) {
  OPoly r;
  r.t.assign(p.terms().begin(), p.terms().end());
  std::sort(r.t.begin(), r.t.end(),
            [&](const auto& x, const auto& y) { return ord.greater(x.first, y.first); });
  return r;
}

MultiPoly from_opoly(const RingPtr& ring, const OPoly& p) {
  MultiPoly r(ring);
  for (const auto& [m, c] : p.t) r.add_term(m, c);
  return r;
}

// a - c * X^m * b, merged under ord
OPoly sub_scaled(const OPoly& a, const Scalar& c, const Monomial& m, const OPoly& b,
                 const TermOrder& ord) {
  OPoly r;
  r.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (j == b.t.size()) { r.t.push_back(a.t[i++]); continue; }
    Monomial bm = mono_mul(b.t[j].first, m);
    Scalar bc = -(b.t[j].second * c);
    if (i == a.t.size()) { r.t.emplace_back(std::move(bm), bc); ++j; continue; }
    if (ord.greater(a.t[i].first, bm)) { r.t.push_back(a.t[i++]); continue; }
    if (ord.greater(bm, a.t[i].first)) { r.t.emplace_back(std::move(bm), bc); ++j; continue; }
    Scalar s = a.t[i].second + bc;
    if (!s.is_zero()) r.t.emplace_back(a.t[i].first, s);
    ++i; ++j;
  }
  return r;
}

// Full reduction: every term of f is reduced against leading terms of basis.
OPoly reduce_full(OPoly f, const std::vector<OPoly>& basis, const TermOrder& ord) {
  std::size_t pos = 0;  // terms before pos are in normal form
  while (pos < f.t.size()) {
    bool hit = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (!mono_divides(g.lm(), f.t[pos].first)) continue;
      Monomial m = mono_div(f.t[pos].first, g.lm());
      Scalar c = f.t[pos].second / g.lc();
      f = sub_scaled(f, c, m, g, ord);
      hit = true;
      break;
    }
    if (!hit) ++pos;
  }
  return f;
}

OPoly s_poly(const OPoly& f, const OPoly& g, const TermOrder& ord) {
  Monomial l = mono_lcm(f.lm(), g.lm());
  // l/lm(f) * f - (lc(f)/lc(g)) * l/lm(g) * g
  OPoly lhs;
  Monomial mf = mono_div(l, f.lm());
  lhs.t.reserve(f.t.size());
  for (const auto& [m, c] : f.t) lhs.t.emplace_back(mono_mul(m, mf), c);
  return sub_scaled(lhs, f.lc() / g.lc(), mono_div(l, g.lm()), g, ord);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::int64_t deg;
};

// Buchberger with the coprime-lead and chain criteria; optional tracking of
// representations in terms of the input generators.
std::vector<OPoly> buchberger_core(std::vector<OPoly> gens, const TermOrder& ord,
                                   std::vector<std::vector<OPoly>>* reps = nullptr) {
  std::vector<OPoly> g;
  std::vector<std::vector<OPoly>> rep;
  auto push_gen = [&](OPoly p, std::vector<OPoly> r) {
    g.push_back(std::move(p));
    if (reps) rep.push_back(std::move(r));
  };
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].is_zero()) continue;
    std::vector<OPoly> r;
    if (reps) {
      r.resize(gens.size());
      r[k].t.emplace_back(Monomial(gens[k].lm().size(), 0), Scalar::one(gens[k].lc().field()));
    }
    push_gen(gens[k], std::move(r));
  }

  auto make_pair = [&](std::size_t i, std::size_t j) {
    Pair p{i, j, mono_lcm(g[i].lm(), g[j].lm()), 0};
    p.deg = total_degree(p.lcm);
    return p;
  };

  std::vector<Pair> pending;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pending.push_back(make_pair(i, j));

  auto in_pending = [&](std::size_t a, std::size_t b) {
    for (const auto& p : pending)
      if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
    return false;
  };

  // tracked reduction: h = f - sum c_m X^m g_k, with representation updates
  auto reduce_tracked = [&](OPoly f, std::vector<OPoly> fr) {
    std::size_t pos = 0;
    while (pos < f.t.size()) {
      bool hit = false;
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k].is_zero()) continue;
        if (!mono_divides(g[k].lm(), f.t[pos].first)) continue;
        Monomial m = mono_div(f.t[pos].first, g[k].lm());
        Scalar c = f.t[pos].second / g[k].lc();
        f = sub_scaled(f, c, m, g[k], ord);
        if (reps)
          for (std::size_t u = 0; u < fr.size(); ++u)
            fr[u] = sub_scaled(fr[u], c, m, rep[k][u], ord);
        hit = true;
        break;
      }
      if (!hit) ++pos;
    }
    return std::make_pair(std::move(f), std::move(fr));
  };

  while (!pending.empty()) {
    // normal selection: smallest lcm degree first
    auto it = std::min_element(pending.begin(), pending.end(),
                               [](const Pair& a, const Pair& b) { return a.deg < b.deg; });
    Pair p = *it;
    pending.erase(it);

    if (mono_coprime(g[p.i].lm(), g[p.j].lm())) continue;
    // chain criterion: lcm divisible by some other leading monomial whose
    // pairs with i and j are both already treated
    bool chained = false;
    for (std::size_t k = 0; k < g.size() && !chained; ++k) {
      if (k == p.i || k == p.j || g[k].is_zero()) continue;
      if (mono_divides(g[k].lm(), p.lcm) && !in_pending(p.i, k) && !in_pending(p.j, k))
        chained = true;
    }
    if (chained) continue;

    OPoly s = s_poly(g[p.i], g[p.j], ord);
    std::vector<OPoly> sr;
    if (reps) {
      sr.resize(rep[p.i].size());
      Monomial mi = mono_div(p.lcm, g[p.i].lm());
      Monomial mj = mono_div(p.lcm, g[p.j].lm());
      Scalar cj = g[p.i].lc() / g[p.j].lc();
      for (std::size_t u = 0; u < sr.size(); ++u) {
        OPoly lhs;
        for (const auto& [m, c] : rep[p.i][u].t) lhs.t.emplace_back(mono_mul(m, mi), c);
        sr[u] = sub_scaled(lhs, cj, mj, rep[p.j][u], ord);
      }
    }
    auto [h, hr] = reduce_tracked(std::move(s), std::move(sr));
    if (h.is_zero()) continue;
    std::size_t idx = g.size();
    push_gen(std::move(h), std::move(hr));
    for (std::size_t k = 0; k < idx; ++k)
      if (!g[k].is_zero()) pending.push_back(make_pair(k, idx));
  }

  if (reps) *reps = std::move(rep);
  return g;
}

std::vector<OPoly> reduce_basis(std::vector<OPoly> g, const TermOrder& ord) {
  // minimalize: drop g_i whose leading monomial is divisible by another's
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j || g[j].is_zero()) continue;
      if (mono_divides(g[j].lm(), g[i].lm())) { g[i].t.clear(); break; }
    }
  }
  std::erase_if(g, [](const OPoly& p) { return p.is_zero(); });
  // tail-reduce each against the others
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<OPoly> others;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i) others.push_back(g[j]);
    g[i] = reduce_full(g[i], others, ord);
  }
  std::erase_if(g, [](const OPoly& p) { return p.is_zero(); });
  for (auto& p : g) {
    Scalar c = p.lc().inverse();
    for (auto& [m, s] : p.t) s = s * c;
  }
  std::sort(g.begin(), g.end(),
            [&](const OPoly& a, const OPoly& b) { return ord.less(a.lm(), b.lm()); });
  return g;
}

}  // namespace

std::vector<MultiPoly> buchberger(const RingPtr& ring, const std::vector<MultiPoly>& gens,
                                  const TermOrder& ord) {
  std::vector<OPoly> in;
  in.reserve(gens.size());
  for (const auto& p : gens) in.push_back(to_opoly(p, ord));
  auto basis = reduce_basis(buchberger_core(std::move(in), ord), ord);
  std::vector<MultiPoly> out;
  out.reserve(basis.size());
  for (const auto& p : basis) out.push_back(from_opoly(ring, p));
  return out;
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      const TermOrder& ord) {
  std::vector<OPoly> b;
  b.reserve(basis.size());
  for (const auto& p : basis) b.push_back(to_opoly(p, ord));
  return from_opoly(f.ring(), reduce_full(to_opoly(f, ord), b, ord));
}

// ---- Ideal -----------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (!(*g.ring() == *ring_)) fail(errc::mismatch, "generator outside the ambient ring");
}

const std::vector<MultiPoly>& Ideal::basis(const TermOrder& ord) const {
  if (!have_basis_ || !order_eq(order_, ord)) {
    basis_ = buchberger(ring_, gens_, ord);
    order_ = ord;
    have_basis_ = true;
  }
  return basis_;
}

bool membership(const MultiPoly& f, const Ideal& I) {
  require_same_ring(f, MultiPoly::zero(I.ring()));
  const auto& b = I.basis();
  return normal_form(f, b, I.cached_order()).is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  for (const auto& g : J.generators())
    if (!membership(g, I)) return false;
  return true;
}

bool Ideal::operator==(const Ideal& o) const {
  return ideal_contains(*this, o) && ideal_contains(o, *this);
}

// ---- extension helpers -----------------------------------------------------

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = ring->vars;
  std::vector<bool> inv = ring->invertible;
  for (const auto& v : extra) { vars.push_back(v); inv.push_back(false); }
  return make_ring(ring->field, std::move(vars), std::move(inv));
}

MultiPoly lift_poly(const MultiPoly& f, const RingPtr& bigger) {
  MultiPoly r(bigger);
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    mm.resize(bigger->nvars(), 0);
    r.add_term(mm, c);
  }
  return r;
}

std::vector<MultiPoly> eliminate_last(const std::vector<MultiPoly>& basis, std::size_t dropped,
                                      const RingPtr& smaller) {
  std::vector<MultiPoly> out;
  const std::size_t keep = smaller->nvars();
  for (const auto& p : basis) {
    bool pure = true;
    for (const auto& [m, c] : p.terms())
      for (std::size_t i = keep; i < keep + dropped; ++i)
        if (m[i] != 0) { pure = false; break; }
    if (!pure) continue;
    MultiPoly q(smaller);
    for (const auto& [m, c] : p.terms()) {
      Monomial mm(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(keep));
      q.add_term(mm, c);
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::string fresh_var_name(const PolyRing& ring, const std::string& stem) {
  auto used = [&](const std::string& s) {
    return std::find(ring.vars.begin(), ring.vars.end(), s) != ring.vars.end();
  };
  if (!used(stem)) return stem;
  for (int i = 1;; ++i) {
    std::string s = stem + std::to_string(i);
    if (!used(s)) return s;
  }
}

namespace {

TermOrder elim_last_order(std::size_t nvars, std::size_t k) {
  std::vector<std::size_t> perm;
  perm.reserve(nvars);
  for (std::size_t i = nvars - k; i < nvars; ++i) perm.push_back(i);
  for (std::size_t i = 0; i < nvars - k; ++i) perm.push_back(i);
  return TermOrder::block(k, std::move(perm));
}

}  // namespace

// ---- derived operations ----------------------------------------------------

Ideal saturation(const Ideal& I, const MultiPoly& f) {
  if (f.is_zero()) fail(errc::usage, "saturation at the zero element");
  RingPtr big = extend_ring(I.ring(), {fresh_var_name(*I.ring(), "T")});
  std::vector<MultiPoly> gens;
  for (const auto& g : I.generators()) gens.push_back(lift_poly(g, big));
  MultiPoly t = MultiPoly::variable(big, big->nvars() - 1);
  gens.push_back(MultiPoly::constant(big, 1) - t * lift_poly(f, big));
  auto basis = buchberger(big, gens, elim_last_order(big->nvars(), 1));
  return Ideal(I.ring(), eliminate_last(basis, 1, I.ring()));
}

bool radical_membership(const MultiPoly& f, const Ideal& I) {
  require_same_ring(f, MultiPoly::zero(I.ring()));
  RingPtr big = extend_ring(I.ring(), {fresh_var_name(*I.ring(), "T")});
  std::vector<MultiPoly> gens;
  for (const auto& g : I.generators()) gens.push_back(lift_poly(g, big));
  MultiPoly t = MultiPoly::variable(big, big->nvars() - 1);
  gens.push_back(MultiPoly::constant(big, 1) - t * lift_poly(f, big));
  auto basis = buchberger(big, gens, TermOrder::grevlex());
  return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

Ideal ideal_quotient(const Ideal& I, const MultiPoly& f) {
  if (f.is_zero()) {
    // (I : 0) is the whole ring
    return Ideal(I.ring(), {MultiPoly::constant(I.ring(), 1)});
  }
  // I cap (f) via the t-trick, then exact division by f
  RingPtr big = extend_ring(I.ring(), {fresh_var_name(*I.ring(), "T")});
  MultiPoly t = MultiPoly::variable(big, big->nvars() - 1);
  MultiPoly one_minus_t = MultiPoly::constant(big, 1) - t;
  std::vector<MultiPoly> gens;
  for (const auto& g : I.generators()) gens.push_back(t * lift_poly(g, big));
  gens.push_back(one_minus_t * lift_poly(f, big));
  auto basis = buchberger(big, gens, elim_last_order(big->nvars(), 1));
  std::vector<MultiPoly> inter = eliminate_last(basis, 1, I.ring());
  std::vector<MultiPoly> quot;
  for (const auto& g : inter) {
    auto q = g.exact_divide(f);
    if (!q) fail(errc::internal, "intersection with (f) produced a non-multiple of f");
    quot.push_back(std::move(*q));
  }
  return Ideal(I.ring(), std::move(quot));
}

bool is_regular(const MultiPoly& f, const Ideal& I) {
  // multiplication by f on ring/I is injective iff (I : f) is contained in I
  Ideal q = ideal_quotient(I, f);
  return ideal_contains(I, q);
}

bool is_unimodular(const std::vector<MultiPoly>& fs, const Ideal& I) {
  std::vector<MultiPoly> gens = I.generators();
  for (const auto& f : fs) gens.push_back(f);
  auto basis = buchberger(I.ring(), gens, TermOrder::grevlex());
  return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

std::vector<MultiPoly> unimodular_certificate(const std::vector<MultiPoly>& fs, const Ideal& I) {
  const TermOrder ord = TermOrder::grevlex();
  std::vector<OPoly> in;
  std::vector<MultiPoly> inputs = I.generators();
  const std::size_t split = inputs.size();  // inputs [0, split) generate I
  for (const auto& f : fs) inputs.push_back(f);
  for (const auto& p : inputs) in.push_back(to_opoly(p, ord));

  std::vector<std::vector<OPoly>> reps;
  auto basis = buchberger_core(std::move(in), ord, &reps);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& p = basis[k];
    if (p.is_zero() || p.t.size() != 1 || total_degree(p.lm()) != 0) continue;
    Scalar inv = p.lc().inverse();
    std::vector<MultiPoly> cert;
    cert.reserve(fs.size());
    for (std::size_t u = split; u < split + fs.size(); ++u)
      cert.push_back(from_opoly(I.ring(), reps[k][u]).scaled(inv));
    // verify: sum cert_i f_i = 1 modulo I
    MultiPoly acc = MultiPoly::constant(I.ring(), -1);
    for (std::size_t u = 0; u < fs.size(); ++u) acc = acc + cert[u] * fs[u];
    if (!membership(acc, I)) fail(errc::internal, "unimodular certificate failed verification");
    return cert;
  }
  fail(errc::not_unimodular, "sequence does not generate the unit ideal");
}

std::vector<Monomial> standard_monomials(const Ideal& I, std::size_t cap) {
  const auto& basis = I.basis();
  const std::size_t n = I.ring()->nvars();
  std::vector<Monomial> lts;
  for (const auto& g : basis) {
    // leading term under the cached order = max term
    const Monomial* lm = nullptr;
    for (const auto& [m, c] : g.terms())
      if (!lm || I.cached_order().greater(m, *lm)) lm = &m;
    if (lm) lts.push_back(*lm);
  }
  // finite iff every variable has a pure power among the leading terms
  std::vector<std::int32_t> bound(n, -1);
  for (const auto& m : lts) {
    std::size_t nz = 0, which = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] != 0) { ++nz; which = i; }
    if (nz == 0) return {};  // 1 is a leading term: the zero ring
    if (nz == 1 && (bound[which] < 0 || m[which] < bound[which])) bound[which] = m[which];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] < 0) fail(errc::cap_exceeded, "infinitely many standard monomials");

  std::vector<Monomial> out;
  Monomial cur(n, 0);
  auto divisible_by_lt = [&](const Monomial& m) {
    for (const auto& lt : lts)
      if (mono_divides(lt, m)) return true;
    return false;
  };
  while (true) {
    if (!divisible_by_lt(cur)) {
      out.push_back(cur);
      if (out.size() > cap) fail(errc::cap_exceeded, "standard monomial cap exceeded");
    }
    std::size_t i = 0;
    while (i < n) {
      if (++cur[i] < bound[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == n) break;
    if (n == 0) break;
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return MonoCanonLess{}(a, b);
  });
  return out;
}

std::optional<std::uint64_t> k_dimension(const Ideal& I) {
  try {
    return standard_monomials(I, std::size_t{1} << 40).size();
  } catch (const Error& e) {
    if (e.code == errc::cap_exceeded) return std::nullopt;
    throw;
  }
}

}  // namespace zk
