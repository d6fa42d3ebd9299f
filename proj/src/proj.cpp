#include "zk/proj.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zk {

ProjPoint::ProjPoint(std::vector<Scalar> homogeneous) : coords_(std::move(homogeneous)) {
  if (coords_.empty()) fail(errc::usage, "projective point needs coordinates");
  std::size_t first = coords_.size();
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) { first = i; break; }
  if (first == coords_.size()) fail(errc::usage, "projective point must be nonzero");
  Scalar inv = coords_[first].inverse();
  for (auto& c : coords_) c = c * inv;
}

bool point_eq(const ProjPoint& p, const ProjPoint& q) {
  if (p.coords().size() != q.coords().size())
    fail(errc::mismatch, "projective points of different dimension");
  if (!(p.coords()[0].field() == q.coords()[0].field()))
    fail(errc::mismatch, "projective points over different fields");
  // all 2x2 minors vanish
  for (std::size_t i = 0; i < p.coords().size(); ++i)
    for (std::size_t j = i + 1; j < p.coords().size(); ++j) {
      Scalar minor = p.coords()[i] * q.coords()[j] - q.coords()[i] * p.coords()[j];
      if (!minor.is_zero()) return false;
    }
  return true;
}

ChartCover chart_cover(const ProjPoint& p) {
  ChartCover out;
  const std::size_t m = p.coords().size();
  for (std::size_t i = 0; i < m; ++i) {
    if (p.coords()[i].is_zero()) continue;
    out.charts.push_back(i);
    Scalar inv = p.coords()[i].inverse();
    std::vector<Scalar> dehom;
    dehom.reserve(m - 1);
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) dehom.push_back(p.coords()[j] * inv);
    out.dehomogenized.push_back(std::move(dehom));
  }
  return out;
}

std::vector<ProjPoint> enumerate_proj_points(std::size_t n, const Field& F, std::uint64_t cap) {
  if (!F.is_prime_field()) fail(errc::usage, "point enumeration needs a finite field");
  const std::uint64_t p = static_cast<std::uint64_t>(F.p);
  // representatives with first nonzero coordinate = 1, chart by chart
  std::uint64_t count = 0, power = 1;
  for (std::size_t i = 0; i <= n; ++i) { count += power; power *= p; }
  if (count > cap) fail(errc::cap_exceeded, "projective point count exceeds the cap");

  std::vector<ProjPoint> out;
  out.reserve(count);
  for (std::size_t lead = 0; lead <= n; ++lead) {
    const std::size_t free = n - lead;
    std::uint64_t grid = 1;
    for (std::size_t i = 0; i < free; ++i) grid *= p;
    for (std::uint64_t idx = 0; idx < grid; ++idx) {
      std::vector<Scalar> coords(n + 1, Scalar::zero(F));
      coords[lead] = Scalar::one(F);
      std::uint64_t rest = idx;
      for (std::size_t i = n + 1; i-- > lead + 1;) {
        coords[i] = Scalar(F, static_cast<long>(rest % p));
        rest /= p;
      }
      out.emplace_back(std::move(coords));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- Laurent units and twists -----------------------------------------------

std::optional<UnitClass> classify_unit(const MultiPoly& g) {
  if (g.term_count() != 1) return std::nullopt;
  std::size_t var = 0;
  if (!g.is_univariate(&var)) return std::nullopt;
  const auto& [m, c] = *g.terms().begin();
  std::int64_t e = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) e = m[i];
  return UnitClass{c, e};
}

namespace {
RingPtr laurent_ring(const Field& F) { return make_ring(F, {"X"}, {true}); }
}  // namespace

TwistGlue::TwistGlue(MultiPoly unit) : unit_(std::move(unit)) {
  if (!classify_unit(unit_))
    fail(errc::not_a_unit, "glue datum must be a Laurent monomial alpha X^n");
}

TwistGlue TwistGlue::twist(const Field& F, std::int64_t d) {
  RingPtr ring = laurent_ring(F);
  Monomial m{static_cast<std::int32_t>(-d)};
  return TwistGlue(MultiPoly::monomial(ring, m, Scalar::one(F)));
}

TwistGlue TwistGlue::tensor(const TwistGlue& o) const { return TwistGlue(unit_ * o.unit_); }

std::int64_t TwistGlue::degree() const {
  auto u = classify_unit(unit_);
  return -u->n;
}

// ---- twist cohomology --------------------------------------------------------

std::vector<std::size_t> multidegree_dims(std::size_t n, const std::vector<std::int64_t>& e,
                                          const Field& F) {
  if (e.size() != n + 1) fail(errc::usage, "multidegree arity mismatch");
  // chart subsets S of {0..n} (bitmask), admissible iff e_i >= 0 for i not in S
  const unsigned full = (1u << (n + 1));
  std::vector<std::vector<unsigned>> bases(n + 1);  // per degree k: masks with k+1 bits
  for (unsigned mask = 1; mask < full; ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i <= n; ++i)
      if (!(mask & (1u << i)) && e[i] < 0) { ok = false; break; }
    if (!ok) continue;
    unsigned bits = static_cast<unsigned>(__builtin_popcount(mask));
    bases[bits - 1].push_back(mask);
  }
  std::vector<std::size_t> spaces(n + 1);
  for (std::size_t k = 0; k <= n; ++k) spaces[k] = bases[k].size();

  std::vector<Matrix> boundaries;
  for (std::size_t k = 0; k + 1 <= n; ++k) {
    Matrix d(F, spaces[k + 1], spaces[k]);
    for (std::size_t col = 0; col < bases[k].size(); ++col) {
      unsigned s = bases[k][col];
      for (std::size_t i = 0; i <= n; ++i) {
        if (s & (1u << i)) continue;
        unsigned t = s | (1u << i);
        auto it = std::lower_bound(bases[k + 1].begin(), bases[k + 1].end(), t);
        if (it == bases[k + 1].end() || *it != t) continue;  // target not admissible? cannot happen
        std::size_t row = static_cast<std::size_t>(it - bases[k + 1].begin());
        // sign: (-1)^{position of i within the sorted tuple of t}
        unsigned before = t & ((1u << i) - 1);
        int sign = (__builtin_popcount(before) % 2 == 0) ? 1 : -1;
        d.at(row, col) = Scalar(F, sign);
      }
    }
    boundaries.push_back(std::move(d));
  }
  return cohomology_dims(spaces, boundaries);
}

namespace {

// multidegrees with sum d, every coordinate in [lo, hi]
std::vector<std::vector<std::int64_t>> window_multidegrees(std::size_t n, std::int64_t d,
                                                           std::int64_t lo, std::int64_t hi) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> e(n + 1, lo);
  // odometer over the first n coordinates; the last is determined by the sum
  while (true) {
    std::int64_t partial = 0;
    for (std::size_t i = 0; i < n; ++i) partial += e[i];
    std::int64_t last = d - partial;
    if (lo <= last && last <= hi) {
      e[n] = last;
      out.push_back(e);
    }
    std::size_t i = 0;
    while (i < n && ++e[i] > hi) { e[i] = lo; ++i; }
    if (i == n || n == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> sum_window(const TwistSpec& spec, std::int64_t lo, std::int64_t hi,
                                    int jobs) {
  auto degrees = window_multidegrees(spec.n, spec.d, lo, hi);
  std::vector<std::size_t> total(spec.n + 1, 0);
#ifdef _OPENMP
  if (jobs > 1) {
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(degrees.size());
    std::vector<std::vector<std::size_t>> partial(
        static_cast<std::size_t>(jobs), std::vector<std::size_t>(spec.n + 1, 0));
#pragma omp parallel num_threads(jobs)
    {
      auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        auto dims = multidegree_dims(spec.n, degrees[static_cast<std::size_t>(i)], spec.field);
        for (std::size_t q = 0; q <= spec.n; ++q) mine[q] += dims[q];
      }
    }
    for (const auto& p : partial)
      for (std::size_t q = 0; q <= spec.n; ++q) total[q] += p[q];
    return total;
  }
#else
  (void)jobs;
#endif
  for (const auto& e : degrees) {
    auto dims = multidegree_dims(spec.n, e, spec.field);
    for (std::size_t q = 0; q <= spec.n; ++q) total[q] += dims[q];
  }
  return total;
}

std::vector<std::size_t> cohomology_impl(const TwistSpec& spec, unsigned margin, int jobs) {
  if (spec.n < 1 || spec.n > 4) fail(errc::cap_exceeded, "n out of the supported range 1..4");
  if (spec.d < -12 || spec.d > 12) fail(errc::cap_exceeded, "|d| out of the supported range <= 12");
  const std::int64_t ad = spec.d < 0 ? -spec.d : spec.d;
  auto window = [&](unsigned m) {
    std::int64_t lo = -(ad + static_cast<std::int64_t>(spec.n) + 1 + m);
    std::int64_t hi = ad + m;
    return sum_window(spec, lo, hi, jobs);
  };
  std::vector<std::size_t> dims = window(margin);
  // window stability: one wider margin must not change the result
  if (window(margin + 1) != dims)
    fail(errc::internal, "multidegree window instability detected");
  return dims;
}

}  // namespace

std::vector<std::size_t> cohomology_Pn(const TwistSpec& spec, unsigned margin, int jobs) {
  return cohomology_impl(spec, margin, jobs);
}

std::vector<std::size_t> cohomology_Pn_serial(const TwistSpec& spec, unsigned margin) {
  return cohomology_impl(spec, margin, 1);
}

std::vector<std::size_t> closed_form_dims(const TwistSpec& spec) {
  auto binom = [](std::int64_t a, std::int64_t b) -> std::size_t {
    if (b < 0 || a < b) return 0;
    std::uint64_t r = 1;
    for (std::int64_t i = 1; i <= b; ++i)
      r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
    return static_cast<std::size_t>(r);
  };
  std::vector<std::size_t> dims(spec.n + 1, 0);
  const std::int64_t n = static_cast<std::int64_t>(spec.n);
  if (spec.d >= 0) dims[0] = binom(n + spec.d, n);
  if (spec.d <= -n - 1) dims[spec.n] = binom(-spec.d - 1, n);
  return dims;
}

std::size_t p1_global_sections_dim(const Field& F, std::size_t window) {
  // pairs (p, q) of polynomials of degree <= window with p(X) = q(1/X) in
  // k[X]_X: kernel of the Laurent-coefficient matching constraints
  const std::size_t unknowns = 2 * (window + 1);
  // constraints: coefficient of X^i for i in [-window, window]
  Matrix m(F, 2 * window + 1, unknowns);
  for (std::size_t i = 0; i <= window; ++i) {
    // p contributes +1 at X^i, q contributes -1 at X^{-j}
    m.at(window + i, i) = Scalar::one(F);
    m.at(window - i, window + 1 + i) = m.at(window - i, window + 1 + i) - Scalar::one(F);
  }
  return m.kernel_dim();
}

}  // namespace zk
