#include <benchmark/benchmark.h>

#include <sparseres/discriminant.hpp>
#include <sparseres/groebner.hpp>
#include <sparseres/hyperdet.hpp>
#include <sparseres/resultant.hpp>
#include <sparseres/textio.hpp>

using namespace sparseres;

namespace
{

const CoefficientDomain kField = CoefficientDomain::primeField(33331);

void BM_PolyMultiply(benchmark::State &state)
{
    auto r = makeRing({"x", "y", "z"}, CoefficientDomain::integers());
    const auto terms = static_cast<int>(state.range(0));
    MultiPoly a(r), b(r);
    for (int i = 0; i < terms; ++i) {
        a += parsePolynomial(std::to_string(i + 1) + "*x^" + std::to_string(i) + "*y^" + std::to_string(terms - i), r);
        b += parsePolynomial(std::to_string(2 * i - 7) + "*y^" + std::to_string(i % 5) + "*z^" + std::to_string(i), r);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
    state.SetComplexityN(terms);
}
BENCHMARK(BM_PolyMultiply)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_GroebnerCyclic4(benchmark::State &state)
{
    auto r = makeRing({"a", "b", "c", "d"}, state.range(0) ? kField : CoefficientDomain::rationals());
    std::vector<MultiPoly> gens;
    for (const char *g : {"a+b+c+d", "a*b+b*c+c*d+d*a", "a*b*c+b*c*d+c*d*a+d*a*b", "a*b*c*d-1"}) {
        gens.push_back(parsePolynomial(g, r));
    }
    const Ideal ideal(r, gens);
    for (auto _ : state) {
        benchmark::DoNotOptimize(groebnerBasis(ideal, TermOrder::grevlex()));
    }
}
BENCHMARK(BM_GroebnerCyclic4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DenseResultant(benchmark::State &state)
{
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        clearOperatorCache();
        benchmark::DoNotOptimize(denseResultant({d, d}, 1));
    }
}
BENCHMARK(BM_DenseResultant)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_MixedTernaryResultant(benchmark::State &state)
{
    for (auto _ : state) {
        clearOperatorCache();
        benchmark::DoNotOptimize(denseResultant({1, 1, 2}, 2, kField));
    }
}
BENCHMARK(BM_MixedTernaryResultant)->Unit(benchmark::kMillisecond);

void BM_DenseDiscriminant(benchmark::State &state)
{
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(denseDiscriminant(1, d));
    }
}
BENCHMARK(BM_DenseDiscriminant)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_BoundaryDetNumeric(benchmark::State &state)
{
    const Shape shapes[] = {{2, 2, 3}, {2, 3, 4}, {4, 2, 5}, {2, 2, 2, 4}, {2, 2, 2, 2, 5}};
    const Shape &s = shapes[state.range(0)];
    auto m = randomMultidimMatrix(s, kField, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyperdet(m, DetMethod::Boundary));
    }
    state.SetLabel(std::to_string(detDegree(s).get_ui()) + " rows");
}
BENCHMARK(BM_BoundaryDetNumeric)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SchlafliNumeric(benchmark::State &state)
{
    const Shape shapes[] = {{2, 2, 2}, {3, 3, 2}, {4, 4, 2}, {2, 2, 2, 2}};
    auto m = randomMultidimMatrix(shapes[state.range(0)], kField, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyperdet(m, DetMethod::Schlafli));
    }
}
BENCHMARK(BM_SchlafliNumeric)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_SchlafliSymbolic(benchmark::State &state)
{
    const Shape shapes[] = {{2, 2, 2}, {2, 2, 3}, {3, 3, 2}};
    auto m = genericMultidimMatrix(shapes[state.range(0)]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyperdet(m, DetMethod::Schlafli));
    }
}
BENCHMARK(BM_SchlafliSymbolic)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Convolve(benchmark::State &state)
{
    auto a = randomMultidimMatrix({2, 2, 2, 4}, kField, 3);
    auto b = randomMultidimMatrix({4, 2, 5}, kField, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convolve(a, b));
    }
}
BENCHMARK(BM_Convolve);

} // namespace

BENCHMARK_MAIN();
