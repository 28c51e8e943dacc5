#include <benchmark/benchmark.h>

#include <plaincharts/blowup.hpp>
#include <plaincharts/format.hpp>
#include <plaincharts/projection.hpp>

#include <functional>

using namespace plaincharts;

namespace {

Polynomial dense_poly(const PolyRingPtr& ring, int degree, int seed) {
    Polynomial p = Polynomial::zero(ring);
    std::size_t n = ring->arity();
    long state = seed;
    std::function<void(Exponents&, std::size_t, int)> walk =
        [&](Exponents& e, std::size_t i, int left) {
            if (i == n) {
                state = state * 6364136223846793005L + 1442695040888963407L;
                long c = (state >> 33) % 19 - 9;
                if (c != 0) p += Polynomial::monomial(ring, e, Rational(c));
                return;
            }
            for (int d = 0; d <= left; ++d) {
                e[i] = d;
                walk(e, i + 1, left - d);
            }
            e[i] = 0;
        };
    Exponents e(n, 0);
    walk(e, 0, degree);
    return p;
}

void BM_polynomial_multiply(benchmark::State& state) {
    auto ring = PolyRing::make({"x", "y", "z"});
    Polynomial a = dense_poly(ring, static_cast<int>(state.range(0)), 1);
    Polynomial b = dense_poly(ring, static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_polynomial_multiply)->Arg(4)->Arg(8)->Arg(12);

void BM_buchberger_cyclic3(benchmark::State& state) {
    auto ring = PolyRing::make({"x", "y", "z"});
    Ideal ideal = Ideal::make(ring, {parse_polynomial("x+y+z", ring),
                                     parse_polynomial("x*y+y*z+z*x", ring),
                                     parse_polynomial("x*y*z-1", ring)});
    for (auto _ : state)
        benchmark::DoNotOptimize(buchberger_reduced(ideal, MonomialOrder::grevlex()));
}
BENCHMARK(BM_buchberger_cyclic3);

void BM_normal_form(benchmark::State& state) {
    auto ring = PolyRing::make({"x", "y", "z"});
    Ideal ideal = Ideal::make(ring, {parse_polynomial("y^2-x^3+x", ring),
                                     parse_polynomial("z^2-y^3+y", ring)});
    GroebnerBasis gb = buchberger_reduced(ideal, MonomialOrder::grevlex());
    Polynomial f = dense_poly(ring, 10, 3);
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(f, gb));
}
BENCHMARK(BM_normal_form);

void BM_blowup_atlas_elliptic(benchmark::State& state) {
    auto ring = PolyRing::make({"x", "y", "z"});
    CenterSpec c;
    c.ambient = AffinePatch::full(ring);
    c.subvariety_vars = {2};
    c.f = parse_polynomial("x-x^3+y^2", ring);
    c.point = RationalPoint(3, Rational(0));
    c.shift_var = "x";
    for (auto _ : state) benchmark::DoNotOptimize(plain_blowup_atlas(c));
}
BENCHMARK(BM_blowup_atlas_elliptic);

void BM_verify_atlas_codim2(benchmark::State& state) {
    auto ring = PolyRing::make({"x", "y", "z", "v"});
    CenterSpec c;
    c.ambient = AffinePatch::full(ring);
    c.subvariety_vars = {2, 3};
    c.f = parse_polynomial("x+x^2*y-y^3+x^3", ring);
    c.point = RationalPoint(4, Rational(0));
    c.shift_var = "x";
    BlowupAtlas atlas = plain_blowup_atlas(c);
    for (auto _ : state) benchmark::DoNotOptimize(verify_atlas(atlas));
}
BENCHMARK(BM_verify_atlas_codim2);

void BM_implicitize_twisted_cubic(benchmark::State& state) {
    auto ring = PolyRing::make({"x", "y", "z"});
    Ideal Z = Ideal::make(ring, {parse_polynomial("y-x^2", ring),
                                 parse_polynomial("z-x^3", ring)});
    LinearProjection proj;
    proj.matrix = {{Rational(3), Rational(1), Rational(-2)},
                   {Rational(1), Rational(-4), Rational(5)}};
    for (auto _ : state) benchmark::DoNotOptimize(implicitize(Z, proj));
}
BENCHMARK(BM_implicitize_twisted_cubic);

} // namespace

BENCHMARK_MAIN();
