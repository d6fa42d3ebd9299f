#include "zk/poly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace zk {

std::int64_t total_degree(const Monomial& m) {
  std::int64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

bool MonoCanonLess::operator()(const Monomial& a, const Monomial& b) const {
  std::int64_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // grevlex tie-break: a < b iff the rightmost nonzero entry of a-b is positive
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

RingPtr make_ring(Field f, std::vector<std::string> vars, std::vector<bool> inv) {
  return std::make_shared<const PolyRing>(f, std::move(vars), std::move(inv));
}

MultiPoly MultiPoly::constant(RingPtr ring, const Scalar& c) {
  MultiPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.ring_->nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::constant(RingPtr ring, long c) {
  Scalar s(ring->field, c);
  return constant(std::move(ring), s);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t i, std::int32_t exp) {
  if (i >= ring->nvars()) fail(errc::usage, "variable index out of range");
  if (exp < 0 && !ring->invertible[i])
    fail(errc::usage, "negative exponent on non-invertible variable " + ring->vars[i]);
  MultiPoly p(ring);
  Monomial m(ring->nvars(), 0);
  m[i] = exp;
  p.terms_.emplace(std::move(m), Scalar::one(ring->field));
  return p;
}

MultiPoly MultiPoly::monomial(RingPtr ring, Monomial m, const Scalar& c) {
  if (m.size() != ring->nvars()) fail(errc::usage, "monomial arity mismatch");
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] < 0 && !ring->invertible[i])
      fail(errc::usage, "negative exponent on non-invertible variable " + ring->vars[i]);
  MultiPoly p(ring);
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return total_degree(terms_.begin()->first) == 0 &&
         *std::min_element(terms_.begin()->first.begin(), terms_.begin()->first.end()) >= 0 &&
         *std::max_element(terms_.begin()->first.begin(), terms_.begin()->first.end()) <= 0;
}

Scalar MultiPoly::constant_value() const {
  Monomial one(ring_->nvars(), 0);
  auto it = terms_.find(one);
  return it == terms_.end() ? Scalar::zero(ring_->field) : it->second;
}

std::int64_t MultiPoly::degree() const {
  std::int64_t d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))
    fail(errc::mismatch, "polynomial ring mismatch");
}

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (!a.ring() || !b.ring() || !(*a.ring() == *b.ring()))
    fail(errc::mismatch, "polynomial ring mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  MultiPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

MultiPoly operator*(const Scalar& c, const MultiPoly& p) { return p.scaled(c); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc = constant(ring_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
  return *ring_ == *o.ring_ && terms_ == o.terms_;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->nvars())
    fail(errc::mismatch, "evaluation point arity mismatch");
  Scalar acc = Scalar::zero(ring_->field);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      t = t * point[i].pow(m[i]);
    }
    acc = acc + t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(RingPtr target, std::span<const MultiPoly> images) const {
  if (images.size() != ring_->nvars())
    fail(errc::mismatch, "substitution image arity mismatch");
  MultiPoly acc = MultiPoly::zero(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (m[i] < 0) fail(errc::usage, "cannot substitute into a Laurent monomial");
      t = t * images[i].pow(static_cast<unsigned>(m[i]));
    }
    acc = acc + t;
  }
  return acc;
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) fail(errc::usage, "division by the zero polynomial");
  MultiPoly rem = *this;
  MultiPoly quot(ring_);
  const auto lead = divisor.terms_.rbegin();  // canonical-order leading term
  while (!rem.is_zero()) {
    auto rl = rem.terms_.rbegin();
    if (!mono_divides(lead->first, rl->first)) return std::nullopt;
    Monomial q = mono_div(rl->first, lead->first);
    Scalar c = rl->second / lead->second;
    quot.add_term(q, c);
    MultiPoly sub = divisor * MultiPoly::monomial(ring_, q, c);
    rem = rem - sub;
  }
  return quot;
}

bool MultiPoly::is_univariate(std::size_t* var_index) const {
  std::size_t seen = ring_ ? ring_->nvars() : 0;
  bool found = false;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (found && seen != i) return false;
      found = true;
      seen = i;
    }
  }
  if (found && var_index) *var_index = seen;
  return true;
}

std::vector<Scalar> MultiPoly::dense_univariate_coeffs(std::size_t var) const {
  std::int32_t deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m[var]);
  std::vector<Scalar> out(static_cast<std::size_t>(deg) + 1, Scalar::zero(ring_->field));
  for (const auto& [m, c] : terms_) {
    if (m[var] < 0) fail(errc::usage, "dense coefficients of a Laurent polynomial");
    out[static_cast<std::size_t>(m[var])] = c;
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.str();
    if (!first) os << (cs[0] == '-' ? " - " : " + ");
    else if (cs[0] == '-') os << "-";
    std::string abs = cs[0] == '-' ? cs.substr(1) : cs;
    bool any_var = total_degree(m) != 0 ||
                   std::any_of(m.begin(), m.end(), [](auto e) { return e != 0; });
    if (!any_var || abs != "1") os << abs;
    bool star = !any_var || abs != "1";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (star) os << "*";
      os << ring_->vars[i];
      if (m[i] != 1) os << "^" << m[i];
      star = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace zk
