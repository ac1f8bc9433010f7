#include <benchmark/benchmark.h>

#include "ravel/catalog.hpp"
#include "ravel/constituents.hpp"
#include "ravel/dsl.hpp"
#include "ravel/invariants.hpp"
#include "ravel/verify.hpp"

using namespace ravel;

namespace {

// numerator of [k], the (2,k) torus knot or link
PDCode twist_knot_pd(int k) {
    const Diagram d = numerator_closure(build_tangle_diagram(BoxVector({k})));
    const auto set = constituent_links(d);
    return extract_pd(d, set, set.links.back());
}

void BM_BracketRecursion(benchmark::State& st) {
    const PDCode pd = twist_knot_pd(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kauffman_bracket(pd));
}
BENCHMARK(BM_BracketRecursion)->DenseRange(3, 15, 4);

void BM_BracketStateSum(benchmark::State& st) {
    const PDCode pd = twist_knot_pd(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kauffman_bracket_state_sum(pd));
}
BENCHMARK(BM_BracketStateSum)->DenseRange(3, 15, 4);

void BM_Classify(benchmark::State& st, const char* text) {
    const ParsedInput in = parse_input(text);
    for (auto _ : st) benchmark::DoNotOptimize(classify_input(in));
}
BENCHMARK_CAPTURE(BM_Classify, exceptional, "M[[2,2],[0,1,2]] v(2,2,1)");
BENCHMARK_CAPTURE(BM_Classify, two_vertices, "M[[2,3],[0,1,2],[3,2]] v(1,2,1) v(2,2,1)");
BENCHMARK_CAPTURE(BM_Classify, planar, "M[[2,3]]");

void BM_Verify(benchmark::State& st, const char* text) {
    const ParsedInput in = parse_input(text);
    for (auto _ : st) benchmark::DoNotOptimize(verify(in));
}
BENCHMARK_CAPTURE(BM_Verify, exceptional, "M[[2,2],[0,1,2]] v(2,2,1)");
BENCHMARK_CAPTURE(BM_Verify, two_vertices, "M[[2,3],[0,1,2],[3,2]] v(1,2,1) v(2,2,1)");

void BM_PlanaritySearch(benchmark::State& st) {
    const Diagram d = classify_input(parse_input("M[[2,3]]")).closure;
    for (auto _ : st) benchmark::DoNotOptimize(planarity_search(d));
}
BENCHMARK(BM_PlanaritySearch);

void BM_CatalogInsertions(benchmark::State& st) {
    const auto m = parse_input("M[[2,3],[0,1,2],[3,2]]").presentation;
    for (auto _ : st) benchmark::DoNotOptimize(catalog_insertions(m, 2));
}
BENCHMARK(BM_CatalogInsertions);

}  // namespace
BENCHMARK_MAIN();
