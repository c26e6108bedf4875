#include <benchmark/benchmark.h>

#include "sdskit/constructions.hpp"
#include "sdskit/equivalence.hpp"
#include "sdskit/io.hpp"
#include "sdskit/matrix.hpp"
#include "sdskit/search.hpp"
#include "sdskit/spence.hpp"

using namespace sdskit;

namespace {

const SdsFamily& z127() { return catalog_find("z127-4block")->family; }

void BM_DifferenceSpectrum_z127(benchmark::State& state) {
  const SdsFamily& f = z127();
  for (auto _ : state)
    benchmark::DoNotOptimize(difference_spectrum(*f.group, f.blocks));
}
BENCHMARK(BM_DifferenceSpectrum_z127);

void BM_VerifyCatalog(benchmark::State& state) {
  const auto& entries = catalog();
  for (auto _ : state)
    for (const CatalogEntry& e : entries)
      benchmark::DoNotOptimize(verify_sds(e.family));
}
BENCHMARK(BM_VerifyCatalog);

void BM_GoethalsSeidel508(benchmark::State& state) {
  const SdsFamily& f = z127();
  std::array<IntMatrix, 4> c;
  for (size_t i = 0; i < 4; ++i) c[i] = char_matrix(*f.group, f.blocks[i]);
  IntMatrix r = r_matrix(*f.group);
  for (auto _ : state)
    benchmark::DoNotOptimize(goethals_seidel(c[0], c[1], c[2], c[3], r));
}
BENCHMARK(BM_GoethalsSeidel508);

void BM_HadamardCheck508(benchmark::State& state) {
  const SdsFamily& f = z127();
  std::array<IntMatrix, 4> c;
  for (size_t i = 0; i < 4; ++i) c[i] = char_matrix(*f.group, f.blocks[i]);
  IntMatrix h = goethals_seidel(c[0], c[1], c[2], c[3], r_matrix(*f.group));
  for (auto _ : state) benchmark::DoNotOptimize(is_hadamard(h));
}
BENCHMARK(BM_HadamardCheck508)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm_gf27(benchmark::State& state) {
  const SdsFamily& f = catalog_find("gf27-a")->family;
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_form(f, true));
}
BENCHMARK(BM_CanonicalForm_gf27)->Unit(benchmark::kMillisecond);

void BM_Search_n9_kkss(benchmark::State& state) {
  SearchSpec spec;
  spec.group = parse_group_spec("cyclic:9");
  spec.k = {4, 4, 3, 2};
  spec.type = SymmetryType("kkss");
  for (auto _ : state) benchmark::DoNotOptimize(search(spec));
}
BENCHMARK(BM_Search_n9_kkss);

void BM_Search_n13_kkss(benchmark::State& state) {
  SearchSpec spec;
  spec.group = parse_group_spec("cyclic:13");
  spec.k = {6, 6, 4, 4};
  spec.type = SymmetryType("kkss");
  for (auto _ : state) benchmark::DoNotOptimize(search(spec));
}
BENCHMARK(BM_Search_n13_kkss)->Unit(benchmark::kMillisecond);

void BM_Spence63(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spence63());
}
BENCHMARK(BM_Spence63)->Unit(benchmark::kMillisecond);

void BM_DevelopBibd127(benchmark::State& state) {
  SdsFamily f = z127_family();
  for (auto _ : state) benchmark::DoNotOptimize(develop_bibd(f));
}
BENCHMARK(BM_DevelopBibd127)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
