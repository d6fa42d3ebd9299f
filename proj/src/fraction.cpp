#include "zk/fraction.hpp"

namespace zk {

LaurentFraction::LaurentFraction(std::vector<MultiPoly> numerator, MultiPoly den_base,
                                 unsigned den_exp)
    : num_(std::move(numerator)), den_(std::move(den_base)), k_(den_exp) {
  if (num_.empty()) fail(errc::usage, "fraction numerator must have rank >= 1");
  if (den_.is_zero()) fail(errc::usage, "fraction denominator base is zero");
  for (const auto& n : num_) require_same_ring(n, den_);
  reduce();
}

LaurentFraction LaurentFraction::zero(const RingPtr& ring, const MultiPoly& den_base,
                                      std::size_t rank) {
  std::vector<MultiPoly> num(rank, MultiPoly::zero(ring));
  return LaurentFraction(std::move(num), den_base, 0);
}

bool LaurentFraction::is_structurally_zero() const {
  for (const auto& n : num_)
    if (!n.is_zero()) return false;
  return true;
}

void LaurentFraction::reduce() {
  if (is_structurally_zero()) { k_ = 0; return; }
  while (k_ > 0) {
    std::vector<MultiPoly> divided;
    divided.reserve(num_.size());
    bool ok = true;
    for (const auto& n : num_) {
      auto q = n.exact_divide(den_);
      if (!q) { ok = false; break; }
      divided.push_back(std::move(*q));
    }
    if (!ok) break;
    num_ = std::move(divided);
    --k_;
  }
}

LaurentFraction LaurentFraction::with_exponent(unsigned k) const {
  if (k < k_) fail(errc::usage, "cannot lower a denominator exponent");
  LaurentFraction r = *this;
  MultiPoly scale = den_.pow(k - k_);
  for (auto& n : r.num_) n = n * scale;
  r.k_ = k;
  return r;  // no reduce: deliberate common-denominator form
}

LaurentFraction LaurentFraction::operator+(const LaurentFraction& o) const {
  if (!(den_ == o.den_)) fail(errc::mismatch, "fraction denominator bases differ");
  if (num_.size() != o.num_.size()) fail(errc::mismatch, "fraction ranks differ");
  unsigned k = std::max(k_, o.k_);
  LaurentFraction a = with_exponent(k), b = o.with_exponent(k);
  std::vector<MultiPoly> num;
  num.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) num.push_back(a.num_[i] + b.num_[i]);
  return LaurentFraction(std::move(num), den_, k);
}

LaurentFraction LaurentFraction::operator-() const {
  LaurentFraction r = *this;
  for (auto& n : r.num_) n = -n;
  return r;
}

LaurentFraction LaurentFraction::operator-(const LaurentFraction& o) const {
  return *this + (-o);
}

LaurentFraction LaurentFraction::scaled(const MultiPoly& p) const {
  std::vector<MultiPoly> num;
  num.reserve(num_.size());
  for (const auto& n : num_) num.push_back(n * p);
  return LaurentFraction(std::move(num), den_, k_);
}

bool fraction_eq(const LaurentFraction& a, const LaurentFraction& b, const Ideal& ambient) {
  if (!(a.den_base() == b.den_base())) fail(errc::mismatch, "fraction denominator bases differ");
  if (a.rank() != b.rank()) fail(errc::mismatch, "fraction ranks differ");
  Ideal sat = saturation(ambient, a.den_base());
  MultiPoly fa = a.den_base().pow(b.den_exp());
  MultiPoly fb = a.den_base().pow(a.den_exp());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    MultiPoly d = a.numerator()[i] * fa - b.numerator()[i] * fb;
    if (!membership(d, sat)) return false;
  }
  return true;
}

bool fraction_is_zero(const LaurentFraction& a, const Ideal& ambient) {
  Ideal sat = saturation(ambient, a.den_base());
  for (const auto& n : a.numerator())
    if (!membership(n, sat)) return false;
  return true;
}

}  // namespace zk
