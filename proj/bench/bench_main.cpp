// Benchmark: serial reference vs OpenMP kernels for the twist-cohomology
// table and finite-field point enumeration.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zk/fpalg.hpp"
#include "zk/proj.hpp"

using Clock = std::chrono::steady_clock;

static double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

int main(int argc, char** argv) {
  int jobs = 2;
#ifdef _OPENMP
  jobs = omp_get_max_threads();
#endif
  if (argc > 1) jobs = std::atoi(argv[1]);

  std::printf("zk benchmark: serial reference vs OpenMP (%d threads)\n\n", jobs);

  // ---- twist cohomology over the acceptance grid ----
  {
    using zk::TwistSpec;
    std::vector<std::size_t> sink(5, 0);
    auto t0 = Clock::now();
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::int64_t d = -8; d <= 8; ++d) {
        auto dims = zk::cohomology_Pn_serial(TwistSpec{n, d, zk::Field::Q()}, 0);
        for (std::size_t q = 0; q < dims.size(); ++q) sink[q] += dims[q];
      }
    auto t1 = Clock::now();
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::int64_t d = -8; d <= 8; ++d) {
        auto dims = zk::cohomology_Pn(TwistSpec{n, d, zk::Field::Q()}, 0, jobs);
        for (std::size_t q = 0; q < dims.size(); ++q) sink[q] -= dims[q];
      }
    auto t2 = Clock::now();
    bool same = true;
    for (auto v : sink) same = same && v == 0;
    std::printf("pn-cohomology grid n=1..3, d=-8..8:\n");
    std::printf("  serial   %.3f s\n", seconds(t0, t1));
    std::printf("  parallel %.3f s  (x%.2f, results %s)\n\n", seconds(t1, t2),
                seconds(t0, t1) / seconds(t1, t2), same ? "identical" : "DIFFER");
  }

  // ---- point enumeration ----
  {
    auto ring = zk::make_ring(zk::Field::Fp(31), {"x", "y", "z", "w"});
    zk::MultiPoly f = zk::MultiPoly::variable(ring, 0).pow(2) +
                      zk::MultiPoly::variable(ring, 1).pow(2) +
                      zk::MultiPoly::variable(ring, 2).pow(2) -
                      zk::MultiPoly::variable(ring, 3).pow(2);
    zk::FPAlgebra A(ring, {f});
    auto t0 = Clock::now();
    auto serial = zk::spec_points_serial(A, 2'000'000);
    auto t1 = Clock::now();
    auto parallel = zk::spec_points(A, 2'000'000, jobs);
    auto t2 = Clock::now();
    std::printf("spec-points quadric over F_31^4 (%zu points):\n", serial.size());
    std::printf("  serial   %.3f s\n", seconds(t0, t1));
    std::printf("  parallel %.3f s  (x%.2f, results %s)\n", seconds(t1, t2),
                seconds(t0, t1) / seconds(t1, t2),
                serial == parallel ? "identical" : "DIFFER");
  }
  return 0;
}
