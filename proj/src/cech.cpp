#include "zk/cech.hpp"

#include <algorithm>

namespace zk {

MultiPoly CechCover::product_over(const std::vector<std::size_t>& tuple) const {
  MultiPoly p = MultiPoly::constant(ambient.ring(), 1);
  for (auto i : tuple) {
    if (i >= fs.size()) fail(errc::usage, "cover index out of range");
    p = p * fs[i];
  }
  return p;
}

Cochain::Cochain(CechCover cover, std::size_t degree, std::size_t rank)
    : cover_(std::move(cover)), degree_(degree), rank_(rank) {}

void Cochain::set(std::vector<std::size_t> tuple, LaurentFraction value) {
  if (tuple.size() != degree_ + 1) fail(errc::usage, "cochain tuple arity mismatch");
  if (!std::is_sorted(tuple.begin(), tuple.end()) ||
      std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end())
    fail(errc::usage, "cochain values are stored on strictly increasing tuples");
  if (value.rank() != rank_) fail(errc::mismatch, "cochain value rank mismatch");
  if (!(value.den_base() == cover_.product_over(tuple)))
    fail(errc::mismatch, "cochain denominator base must be the tuple's cover product");
  values_.insert_or_assign(std::move(tuple), std::move(value));
}

LaurentFraction Cochain::get(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != degree_ + 1) fail(errc::usage, "cochain tuple arity mismatch");
  std::vector<std::size_t> sorted = tuple;
  // count inversions for the permutation sign
  int sign = 1;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[i] == sorted[j])
        return LaurentFraction::zero(cover_.ambient.ring(), cover_.product_over(tuple), rank_);
      if (sorted[i] > sorted[j]) sign = -sign;
    }
  std::sort(sorted.begin(), sorted.end());
  auto it = values_.find(sorted);
  if (it == values_.end())
    return LaurentFraction::zero(cover_.ambient.ring(), cover_.product_over(sorted), rank_);
  return sign > 0 ? it->second : -it->second;
}

bool Cochain::structurally_zero() const {
  for (const auto& [t, v] : values_)
    if (!v.is_structurally_zero()) return false;
  return true;
}

Cochain boundary(const Cochain& c) {
  const std::size_t n = c.cover().size();
  const std::size_t k = c.degree();
  Cochain out(c.cover(), k + 1, c.rank());
  if (k + 2 > n) return out;  // no strictly increasing (k+2)-tuples

  std::vector<std::size_t> tuple(k + 2);
  // iterate strictly increasing (k+2)-tuples
  for (std::size_t i = 0; i < k + 2; ++i) tuple[i] = i;
  while (true) {
    MultiPoly base = c.cover().product_over(tuple);
    // common denominator exponent across the k+2 faces
    unsigned exp = 0;
    std::vector<LaurentFraction> faces;
    faces.reserve(k + 2);
    for (std::size_t j = 0; j < k + 2; ++j) {
      std::vector<std::size_t> face = tuple;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
      faces.push_back(c.get(face));
      exp = std::max(exp, faces.back().den_exp());
    }
    std::vector<MultiPoly> num(c.rank(), MultiPoly::zero(c.cover().ambient.ring()));
    for (std::size_t j = 0; j < k + 2; ++j) {
      // restrict m / F_face^e to the full tuple: multiply by f_{l_j}^e, then
      // raise to the common exponent
      const LaurentFraction& s = faces[j];
      MultiPoly scale = c.cover().fs[tuple[j]].pow(s.den_exp()) * base.pow(exp - s.den_exp());
      for (std::size_t r = 0; r < c.rank(); ++r) {
        MultiPoly t = s.numerator()[r] * scale;
        if (j % 2 == 1) t = -t;
        num[r] = num[r] + t;
      }
    }
    out.set(tuple, LaurentFraction(std::move(num), base, exp));

    // next strictly increasing combination
    std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(k + 2) - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] ==
                           n - (k + 2) + static_cast<std::size_t>(pos))
      --pos;
    if (pos < 0) break;
    ++tuple[static_cast<std::size_t>(pos)];
    for (std::size_t q = static_cast<std::size_t>(pos) + 1; q < k + 2; ++q)
      tuple[q] = tuple[q - 1] + 1;
  }
  return out;
}

bool is_cocycle(const Cochain& c) {
  Cochain b = boundary(c);
  for (const auto& [t, v] : b.values())
    if (!fraction_is_zero(v, c.cover().ambient.ideal())) return false;
  return true;
}

// ---- coprime-system cocycles and the H^1 splitting --------------------------

CoprimeSystemCocycle::CoprimeSystemCocycle(
    FPAlgebra ambient, std::vector<MultiPoly> fs, std::vector<MultiPoly> witness,
    std::size_t rank, std::map<std::pair<std::size_t, std::size_t>, LaurentFraction> s,
    int clear_bound)
    : ambient_(std::move(ambient)), fs_(std::move(fs)), witness_(std::move(witness)),
      rank_(rank), s_(std::move(s)) {
  const std::size_t l = fs_.size();
  if (l == 0) fail(errc::usage, "empty cover");
  if (!is_unimodular(fs_, ambient_.ideal())) fail(errc::not_unimodular, "cover is not unimodular");

  for (const auto& [ij, frac] : s_) {
    auto [i, j] = ij;
    if (!(i < j && j < l)) fail(errc::usage, "cocycle entries are indexed by pairs i < j");
    if (frac.rank() != rank_) fail(errc::mismatch, "cocycle value rank mismatch");
    if (!(frac.den_base() == fs_[i] * fs_[j]))
      fail(errc::mismatch, "cocycle denominator base must be f_i f_j");
  }

  // common exponent across all pairs
  unsigned K = 1;
  for (const auto& [ij, frac] : s_) K = std::max(K, frac.den_exp());

  auto numerator_at = [&](std::size_t i, std::size_t j, unsigned expnt) -> std::vector<MultiPoly> {
    // antisymmetric access, brought to exponent `expnt`
    std::vector<MultiPoly> out(rank_, MultiPoly::zero(ambient_.ring()));
    bool flip = i > j;
    auto it = s_.find({std::min(i, j), std::max(i, j)});
    if (i == j || it == s_.end()) return out;
    LaurentFraction v = it->second.with_exponent(expnt);
    for (std::size_t r = 0; r < rank_; ++r) out[r] = flip ? -v.numerator()[r] : v.numerator()[r];
    return out;
  };

  // cocycle condition: find a uniform clearing exponent t with
  // (f_i f_j f_k)^t (f_i^K m_jk - f_j^K m_ik + f_k^K m_ij) = 0 mod I
  unsigned t_clear = 0;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      for (std::size_t k = j + 1; k < l; ++k) {
        auto m_jk = numerator_at(j, k, K);
        auto m_ik = numerator_at(i, k, K);
        auto m_ij = numerator_at(i, j, K);
        MultiPoly p = fs_[i] * fs_[j] * fs_[k];
        Ideal sat = saturation(ambient_.ideal(), p);
        for (std::size_t r = 0; r < rank_; ++r) {
          MultiPoly expr = fs_[i].pow(K) * m_jk[r] - fs_[j].pow(K) * m_ik[r] +
                           fs_[k].pow(K) * m_ij[r];
          if (!membership(expr, sat))
            fail(errc::cocycle_violation,
                 "cocycle condition fails on triple (" + std::to_string(i) + "," +
                     std::to_string(j) + "," + std::to_string(k) + ")");
          unsigned t = 0;
          MultiPoly scaled = expr;
          while (!membership(scaled, ambient_.ideal())) {
            if (static_cast<int>(++t) > clear_bound)
              fail(errc::internal, "clearing exponent exceeded the configured bound");
            scaled = scaled * p;
          }
          t_clear = std::max(t_clear, t);
        }
      }

  // materialize the clearing: replace m_ij by (f_i f_j)^t m_ij at exponent K+t
  exponent_ = K + t_clear;
  for (auto& [ij, frac] : s_) frac = frac.with_exponent(exponent_);

  if (witness_.empty()) {
    std::vector<MultiPoly> powered;
    powered.reserve(l);
    for (const auto& f : fs_) powered.push_back(f.pow(exponent_));
    witness_ = unimodular_certificate(powered, ambient_.ideal());
  } else {
    if (witness_.size() != l) fail(errc::usage, "witness arity mismatch");
    // a witness for the plain cover certifies the powered one only if it was
    // built for exponent 1; verify whichever form was handed in
    MultiPoly acc = MultiPoly::constant(ambient_.ring(), -1);
    for (std::size_t i = 0; i < l; ++i) acc = acc + witness_[i] * fs_[i].pow(exponent_);
    if (!membership(acc, ambient_.ideal())) {
      std::vector<MultiPoly> powered;
      powered.reserve(l);
      for (const auto& f : fs_) powered.push_back(f.pow(exponent_));
      witness_ = unimodular_certificate(powered, ambient_.ideal());
    }
  }
}

std::vector<MultiPoly> CoprimeSystemCocycle::cleared_numerator(std::size_t i,
                                                               std::size_t j) const {
  std::vector<MultiPoly> out(rank_, MultiPoly::zero(ambient_.ring()));
  if (i == j) return out;
  auto it = s_.find({std::min(i, j), std::max(i, j)});
  if (it == s_.end()) return out;
  LaurentFraction v = it->second.with_exponent(exponent_);
  for (std::size_t r = 0; r < rank_; ++r)
    out[r] = (i < j) ? v.numerator()[r] : -v.numerator()[r];
  return out;
}

const LaurentFraction& CoprimeSystemCocycle::stored(std::size_t i, std::size_t j) const {
  auto it = s_.find({i, j});
  if (it == s_.end()) fail(errc::usage, "no stored cocycle entry for the requested pair");
  return it->second;
}

H1Split split_h1(const CoprimeSystemCocycle& z) {
  const std::size_t l = z.size();
  const unsigned K = z.cleared_exponent();
  const auto& fs = z.fs();
  const auto& r = z.witness();
  const RingPtr ring = z.ambient().ring();

  // u_i = - sum_k r_k m_ik / f_i^K   (proof formula of the splitting lemma)
  std::vector<std::vector<MultiPoly>> U(l);
  H1Split out;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<MultiPoly> acc(z.rank(), MultiPoly::zero(ring));
    for (std::size_t k = 0; k < l; ++k) {
      if (k == i) continue;
      auto m_ik = z.cleared_numerator(i, k);
      for (std::size_t c = 0; c < z.rank(); ++c) acc[c] = acc[c] - r[k] * m_ik[c];
    }
    U[i] = acc;
    out.u.emplace_back(acc, fs[i], K);
  }

  // self-check: u_j - u_i = s_ij in A_{f_i f_j}, for all pairs
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      MultiPoly base = fs[i] * fs[j];
      std::vector<MultiPoly> diff(z.rank(), MultiPoly::zero(ring));
      for (std::size_t c = 0; c < z.rank(); ++c)
        diff[c] = U[j][c] * fs[i].pow(K) - U[i][c] * fs[j].pow(K);
      LaurentFraction lhs(diff, base, K);
      LaurentFraction rhs(z.cleared_numerator(i, j), base, K);
      bool ok = fraction_eq(lhs, rhs, z.ambient().ideal());
      out.checks.push_back({{i, j}, ok});
      if (!ok)
        fail(errc::internal, "splitting self-check failed on pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    }
  return out;
}

}  // namespace zk
