#include "zk/factor.hpp"

#include <algorithm>

namespace zk {

namespace {

// divisors of |n| found by trial division; errors out when a composite
// cofactor beyond the scan cap remains
std::vector<mpz_class> divisors(mpz_class n, std::int64_t cap) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> fac;
  if (n == 0) fail(errc::internal, "divisors of zero");
  for (mpz_class d = 2; d <= cap && d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) { n /= d; ++e; }
    if (e) fac.emplace_back(d, e);
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
      fail(errc::cap_exceeded, "coefficient too composite for the rational-root scan cap");
    fac.emplace_back(n, 1);
  }
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : fac) {
    std::size_t sz = out.size();
    mpz_class pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
    }
  }
  return out;
}

Scalar eval_univariate(const std::vector<Scalar>& coeffs, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

// divide dense coefficients by (X - a); remainder must be zero
std::vector<Scalar> deflate(const std::vector<Scalar>& coeffs, const Scalar& a) {
  std::vector<Scalar> q(coeffs.size() - 1, Scalar::zero(a.field()));
  Scalar carry = Scalar::zero(a.field());
  for (std::size_t i = coeffs.size(); i-- > 1;) {
    carry = coeffs[i] + carry * a;  // synthetic division, top down
    q[i - 1] = carry;
  }
  return q;
}

std::vector<Scalar> candidate_roots_q(const std::vector<Scalar>& coeffs, std::int64_t cap) {
  // clear to integer coefficients
  mpz_class den_lcm = 1;
  for (const auto& c : coeffs) den_lcm = lcm(den_lcm, c.rational().get_den());
  std::vector<mpz_class> ic;
  for (const auto& c : coeffs) {
    mpq_class q = c.rational() * den_lcm;
    ic.push_back(q.get_num());
  }
  std::size_t lo = 0;
  while (lo < ic.size() && ic[lo] == 0) ++lo;  // factor X^lo handled by caller
  if (lo == ic.size()) fail(errc::internal, "zero polynomial in root search");
  std::vector<Scalar> out;
  Field F = Field::Q();
  out.emplace_back(F, 0);  // in case of trailing zero coefficients
  auto ps = divisors(ic[lo], cap);
  auto qs = divisors(ic.back(), cap);
  for (const auto& p : ps)
    for (const auto& q : qs) {
      out.push_back(Scalar(F, p, q));
      out.push_back(Scalar(F, -p, q));
    }
  return out;
}

}  // namespace

LinearFactorization factor_linear(const MultiPoly& f, std::int64_t scan_cap) {
  if (f.is_zero()) fail(errc::zero_polynomial, "factor_linear: f = 0");
  std::size_t var = 0;
  if (!f.is_univariate(&var)) fail(errc::usage, "factor_linear expects a univariate polynomial");
  const Field F = f.ring()->field;
  const RingPtr ring = f.ring();

  std::vector<Scalar> coeffs = f.dense_univariate_coeffs(var);
  LinearFactorization out{Scalar::one(F), {}, MultiPoly::constant(ring, 1)};

  auto try_roots = [&](const std::vector<Scalar>& candidates) {
    bool progress = true;
    while (progress && coeffs.size() > 1) {
      progress = false;
      for (const auto& a : candidates) {
        if (coeffs.size() <= 1) break;
        while (coeffs.size() > 1 && eval_univariate(coeffs, a).is_zero()) {
          coeffs = deflate(coeffs, a);
          out.roots[a] += 1;
          progress = true;
        }
      }
    }
  };

  if (F.is_prime_field()) {
    if (F.p > scan_cap) fail(errc::cap_exceeded, "prime field exceeds the root scan cap");
    std::vector<Scalar> all;
    all.reserve(static_cast<std::size_t>(F.p));
    for (std::int64_t a = 0; a < F.p; ++a) all.emplace_back(F, a);
    try_roots(all);
  } else {
    try_roots(candidate_roots_q(coeffs, scan_cap));
  }

  // leading coefficient becomes the unit; cofactor monic with no roots left
  Scalar lead = coeffs.back();
  out.unit = lead;
  MultiPoly cof = MultiPoly::zero(ring);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m(ring->nvars(), 0);
    m[var] = static_cast<std::int32_t>(i);
    cof.add_term(m, coeffs[i] / lead);
  }
  out.cofactor = cof;
  return out;
}

FactoredUnit FactoredUnit::mul(const FactoredUnit& o) const {
  FactoredUnit r{unit * o.unit, exps};
  for (const auto& [a, e] : o.exps) {
    auto [it, fresh] = r.exps.emplace(a, e);
    if (!fresh) {
      it->second += e;
      if (it->second == 0) r.exps.erase(it);
    }
  }
  return r;
}

FactoredUnit FactoredUnit::inv() const {
  FactoredUnit r{unit.inverse(), {}};
  for (const auto& [a, e] : exps) r.exps.emplace(a, -e);
  return r;
}

std::pair<MultiPoly, MultiPoly> FactoredUnit::as_poly_pair(const RingPtr& ring) const {
  MultiPoly num = MultiPoly::constant(ring, unit);
  MultiPoly den = MultiPoly::constant(ring, 1);
  MultiPoly x = MultiPoly::variable(ring, 0);
  for (const auto& [a, e] : exps) {
    MultiPoly lin = x - MultiPoly::constant(ring, a);
    if (e > 0) num = num * lin.pow(static_cast<unsigned>(e));
    else den = den * lin.pow(static_cast<unsigned>(-e));
  }
  return {num, den};
}

bool factored_eq(const FactoredUnit& a, const FactoredUnit& b, const RingPtr& ring) {
  auto [an, ad] = a.as_poly_pair(ring);
  auto [bn, bd] = b.as_poly_pair(ring);
  return an * bd == bn * ad;
}

FactoredUnit factored_one(const Field& f) { return FactoredUnit{Scalar::one(f), {}}; }

}  // namespace zk
