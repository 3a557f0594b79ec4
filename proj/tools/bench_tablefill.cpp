/*
  This is bench_tablefill.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

/*
  Times the parallel table fill against the serial reference on a finite
  and an affine system, each on a fresh pipeline so neither run inherits
  the other's caches. With a single hardware thread the two columns come
  out even; the point of the table is to show the overhead stays small
  and to measure the gain when more threads are available.
*/

#include <chrono>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ivhecke/canonical.h"
#include "ivhecke/classical.h"
#include "ivhecke/coxeter.h"
#include "ivhecke/hecke.h"
#include "ivhecke/involution.h"
#include "ivhecke/rpoly.h"
#include "ivhecke/tablefill.h"

using namespace ivh;

namespace {

constexpr std::size_t kCap = 1u << 20;

struct Pipeline {
  std::unique_ptr<CoxeterSystem> d_system;
  std::unique_ptr<Involutions> d_involutions;
  std::unique_ptr<HeckeModule> d_module;
  std::unique_ptr<RTable> d_r;
  std::unique_ptr<CanonicalBasis> d_basis;
  std::unique_ptr<KLTable> d_classical;
  std::unique_ptr<TableFill> d_fill;

  explicit Pipeline(std::unique_ptr<CoxeterSystem> system)
      : d_system(std::move(system)),
        d_involutions(new Involutions(*d_system)),
        d_module(new HeckeModule(*d_system, *d_involutions)),
        d_r(new RTable(*d_module)),
        d_basis(new CanonicalBasis(*d_r)),
        d_classical(new KLTable(*d_system)),
        d_fill(new TableFill(*d_basis, *d_classical)) {}
};

struct Bench {
  std::string d_name;
  std::vector<std::string> d_labels;
  std::vector<std::vector<int>> d_matrix;
  std::vector<int> d_star;
  int d_maxLen;
};

std::unique_ptr<CoxeterSystem> build(const Bench& bench) {
  return std::unique_ptr<CoxeterSystem>(
      new CoxeterSystem(bench.d_labels, bench.d_matrix, bench.d_star));
}

double seconds(void (*run)(Pipeline&, int), Pipeline& pipeline, int maxLen) {
  auto start = std::chrono::steady_clock::now();
  run(pipeline, maxLen);
  std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return elapsed.count();
}

void runSerial(Pipeline& pipeline, int maxLen) {
  pipeline.d_fill->fillSerial(maxLen, kCap);
}

void runParallel(Pipeline& pipeline, int maxLen) {
  pipeline.d_fill->fillParallel(maxLen, kCap);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled\n");
#endif
  std::printf("%-24s %6s %10s %10s %8s\n", "system", "rows", "serial",
              "parallel", "ratio");

  std::vector<Bench> benches;
  benches.push_back({"bc-rank3",
                     {"1", "2", "3"},
                     {{1, 3, 2}, {3, 1, 4}, {2, 4, 1}},
                     {0, 1, 2},
                     9});
  benches.push_back({"affine-a2-swap",
                     {"0", "1", "2"},
                     {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}},
                     {0, 2, 1},
                     10});

  for (const Bench& bench : benches) {
    Pipeline serialPipe(build(bench));
    double serial = seconds(runSerial, serialPipe, bench.d_maxLen);

    Pipeline parallelPipe(build(bench));
    double parallel = seconds(runParallel, parallelPipe, bench.d_maxLen);

    std::size_t rows =
        serialPipe.d_fill->fillSerial(bench.d_maxLen, kCap).size();
    std::printf("%-24s %6zu %9.3fs %9.3fs %8.2f\n", bench.d_name.c_str(),
                rows, serial, parallel, serial / parallel);
  }
  return 0;
}
