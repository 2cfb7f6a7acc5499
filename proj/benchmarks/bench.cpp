#include <benchmark/benchmark.h>

#include <random>

#include "poisinv/autgrp.hpp"
#include "poisinv/expr.hpp"
#include "poisinv/invariants.hpp"
#include "poisinv/matrix.hpp"
#include "poisinv/poisson.hpp"
#include "poisinv/uenv.hpp"

using namespace poisinv;

namespace {

Cyclo dense_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    Cyclo c(0);
    for (unsigned k = 0; k < 4; ++k)
        c = c + Cyclo(make_rational(num(rng), den(rng))) * Cyclo::zeta(12).pow(k * 3 + 1);
    return c;
}

void bm_cyclo_mul(benchmark::State& state) {
    std::mt19937 rng(7);
    const Cyclo a = dense_scalar(rng), b = dense_scalar(rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_cyclo_mul);

void bm_poly_mul(benchmark::State& state) {
    const MultiPoly f = parse_poly("x1^2 + 2*x2*x3 - x3^2 + x1*x2 - 3*x2^2", 3);
    const MultiPoly g = parse_poly("x1^3 - x2^3 + x3^3 + x1*x2*x3 + 2*x1^2*x3", 3);
    for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(bm_poly_mul);

void bm_charpoly_6x6(benchmark::State& state) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-4, 4);
    Matrix m(6, 6);
    for (unsigned i = 0; i < 6; ++i)
        for (unsigned j = 0; j < 6; ++j) m.at(i, j) = Cyclo(entry(rng));
    for (auto _ : state) benchmark::DoNotOptimize(charpoly(m));
}
BENCHMARK(bm_charpoly_6x6);

void bm_normal_form(benchmark::State& state) {
    const PoissonStructure p = PoissonStructure::from_superpotential(
        parse_poly("1/3*x1^3 + 1/3*x2^3 + 1/3*x3^3 + 2*x1*x2*x3", 3));
    const Word w = {3, 0, 4, 1, 5, 2};  // y1 x1 y2 x2 y3 x3
    for (auto _ : state) {
        Envelope env(p);  // fresh cache so the rewrite actually runs
        benchmark::DoNotOptimize(env.normal_form(w));
    }
}
BENCHMARK(bm_normal_form);

void bm_molien_s3(benchmark::State& state) {
    std::vector<GradedMap> gens;
    gens.emplace_back(parse_matrix("[0,-1,0; -1,0,0; 2,2,1]"));
    gens.emplace_back(parse_matrix("[-1,0,0; 1,1,0; 1,0,1]"));
    const MatrixGroup g = group_closure(gens);
    for (auto _ : state) benchmark::DoNotOptimize(molien(g));
}
BENCHMARK(bm_molien_s3);

void bm_invariant_basis(benchmark::State& state) {
    std::vector<GradedMap> gens;
    gens.emplace_back(parse_matrix("[0,-1,0; -1,0,0; 2,2,1]"));
    gens.emplace_back(parse_matrix("[-1,0,0; 1,1,0; 1,0,1]"));
    const MatrixGroup g = group_closure(gens);
    for (auto _ : state) benchmark::DoNotOptimize(invariant_basis(g, 4));
}
BENCHMARK(bm_invariant_basis);

}  // namespace

BENCHMARK_MAIN();
