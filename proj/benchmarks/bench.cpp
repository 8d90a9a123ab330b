#include <benchmark/benchmark.h>

#include "zdg/bilinear.hpp"
#include "zdg/catalog.hpp"
#include "zdg/graph.hpp"
#include "zdg/presentation.hpp"

namespace {

void BM_CompilePresentation(benchmark::State& state) {
  for (auto _ : state) {
    zdg::FiniteAlgebra r = zdg::compile_presentation(
        "GF(3)[x,y,z]/(x*y, x*z, y*z, x^2 - y^2, x^2 - z^2)");
    benchmark::DoNotOptimize(r.dim());
  }
}
BENCHMARK(BM_CompilePresentation);

void BM_BuildGraph(benchmark::State& state) {
  zdg::FiniteAlgebra r = zdg::compile_presentation(
      "GF(3)[x,y,z]/(x*y, x*z, y*z, x^2 - y^2, x^2 - z^2)");
  for (auto _ : state) {
    zdg::CompressedGraph g = zdg::build_gamma_e(r);
    benchmark::DoNotOptimize(g.vertex_count());
  }
}
BENCHMARK(BM_BuildGraph);

void BM_CliqueTrivext(benchmark::State& state) {
  zdg::CatalogRing r = zdg::generate(
      zdg::FamilySpec{zdg::Family::TRIVEXT_LEN6, zdg::Prime(3), 0});
  zdg::CompressedGraph g = zdg::build_gamma_e(r.ring);
  for (auto _ : state) {
    zdg::GraphReport rep = zdg::clique_number(g);
    benchmark::DoNotOptimize(rep.clique_number);
  }
}
BENCHMARK(BM_CliqueTrivext);

void BM_OrthogonalSearch(benchmark::State& state) {
  zdg::Matrix g = zdg::Matrix::identity(zdg::Prime(3), 3);
  zdg::BilinearSpace space(g);
  for (auto _ : state) {
    auto res = zdg::search_orthogonal_sets(space, 4, true);
    benchmark::DoNotOptimize(res.candidates_checked);
  }
}
BENCHMARK(BM_OrthogonalSearch);

}  // namespace

BENCHMARK_MAIN();
