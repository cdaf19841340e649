#include <benchmark/benchmark.h>

#include "colink/scalar.hpp"

using namespace colink;

static void BM_ScalarMulReduce(benchmark::State& state) {
  Scalar l = Scalar::lambda();
  Scalar a = l.pow(3) + Scalar::qPow(2) - Scalar(Rational(7, 3));
  Scalar b = l.pow(2) - Scalar::sPow(-3);
  for (auto _ : state) {
    Scalar c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ScalarMulReduce);

BENCHMARK_MAIN();
