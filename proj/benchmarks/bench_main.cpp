#include <benchmark/benchmark.h>

#include <numbers>

#include "nonrigid/conjugacy.hpp"
#include "nonrigid/foliation.hpp"
#include "nonrigid/numerics/ode.hpp"
#include "nonrigid/projective.hpp"
#include "nonrigid/transverse.hpp"

using namespace nonrigid;

namespace {
constexpr double kPi = std::numbers::pi;
}

static void BM_LeafValue(benchmark::State& state) {
  const Complex x = std::polar(0.8, 2 * kPi / 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(foliation::leaf_value(0.05, Sector::Plus, Complex(0.3, 0.1), x));
  }
}
BENCHMARK(BM_LeafValue);

// Past pi/2 from the sector center the detour path is used.
static void BM_LeafValueDetour(benchmark::State& state) {
  const Complex x = std::polar(0.3, 0.9 * kPi);
  for (auto _ : state) {
    benchmark::DoNotOptimize(foliation::leaf_value(0.05, Sector::Plus, 1.0, x));
  }
}
BENCHMARK(BM_LeafValueDetour);

static void BM_HankelNumeric(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(foliation::hankel_numeric(3, 1));
}
BENCHMARK(BM_HankelNumeric);

static void BM_OdeTransport(benchmark::State& state) {
  const Complex x0 = 0.8 * Complex(0, 1);
  const numerics::Path arc({numerics::Arc{0.0, 0.8, kPi / 2, 2 * kPi / 5}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(numerics::ode_transport(0.05, x0, Complex(0.2, 0.4), arc));
  }
}
BENCHMARK(BM_OdeTransport);

static void BM_PsiInvert(benchmark::State& state) {
  const transverse::TransverseMap psi(Complex(0.03, 0.04), Sector::Minus);
  Complex w{0.37, -1.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi.invert(w));
    w += 1e-3;
  }
}
BENCHMARK(BM_PsiInvert);

static void BM_Phi(benchmark::State& state) {
  const conjugacy::ConjugacyMap m(0.05);
  const double r = state.range(0) / 100.0;
  const Complex x = std::polar(r, kPi / 4 + 0.02);
  for (auto _ : state) benchmark::DoNotOptimize(m.phi(x, Complex(0.4, -0.3)));
}
BENCHMARK(BM_Phi)->Arg(30)->Arg(80)->Arg(120)->Arg(300);

static void BM_PhiST(benchmark::State& state) {
  const conjugacy::ConjugacyMap m(0.05);
  const double s = std::ldexp(1.0, -static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(projective::phi_st(m, s, Complex(0.5, 0.25)));
}
BENCHMARK(BM_PhiST)->DenseRange(3, 10, 7);

static void BM_FormalSeries(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(foliation::formal_series_coefficients(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_FormalSeries)->Arg(36)->Arg(400);

BENCHMARK_MAIN();
