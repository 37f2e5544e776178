// Timing comparison between the serial exact assembly (reference path) and the
// OpenMP-parallel quadrature assembly, plus an entrywise agreement check.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "hdiv/assembly.hpp"
#include "hdiv/basis_hex.hpp"
#include "hdiv/basis_quad.hpp"
#include "hdiv/basis_tet.hpp"
#include "hdiv/basis_tri.hpp"

using namespace hdiv;

namespace {

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

double max_abs_diff(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  double m = 0.0;
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

void bench(const char* label, const BasisSet& set) {
  SymmetricMatrix exact_m(0), quad_m(0);
  double t_exact = timed([&] { exact_m = mass_matrix(set, AssemblyPath::Exact); });
  double t_quad = timed([&] { quad_m = mass_matrix(set, AssemblyPath::Quadrature); });
  double diff = max_abs_diff(exact_m, quad_m);
  std::printf("%-14s n=%4d  exact %8.3fs  quadrature %8.3fs  speedup %6.2fx  maxdiff %.2e\n",
              label, set.dimension(), t_exact, t_quad,
              t_quad > 0 ? t_exact / t_quad : 0.0, diff);
}

}  // namespace

int main(int argc, char** argv) {
  int p = argc > 1 ? std::atoi(argv[1]) : 3;
  int p3 = std::min(p, 4);
  std::printf("mass-matrix assembly, serial exact vs OpenMP quadrature\n");
  bench("quad", build_quad(std::min(p, 6)));
  bench("tri", build_tri(std::min(p, 6)));
  bench("hex", build_hex(p3));
  bench("tet first", build_tet(p3, TetVariant::FirstKind));
  bench("tet second", build_tet(p3, TetVariant::SecondKind));
  return 0;
}
