#include <benchmark/benchmark.h>

#include "harmocass/cassini.hpp"
#include "harmocass/geom.hpp"
#include "harmocass/oracle.hpp"
#include "harmocass/oscillator.hpp"

namespace {

using harmocass::geom::Point2;

void BM_ellipse_from_implicit(benchmark::State& state) {
  const harmocass::oscillator::OscillatorParams o(1.0, 1.0, 1.0);
  const auto conic = harmocass::oscillator::orbit_implicit(o, 1.0471975511965976);
  for (auto _ : state) {
    auto e = harmocass::geom::ellipse_from_implicit(conic);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_ellipse_from_implicit);

void BM_generator_axes(benchmark::State& state) {
  const Point2 P{1.3, -0.2}, Q{0.4, 0.9};
  for (auto _ : state) {
    auto ax = harmocass::geom::generator_axes(P, Q);
    benchmark::DoNotOptimize(ax);
  }
}
BENCHMARK(BM_generator_axes);

void BM_orbit_foci(benchmark::State& state) {
  const harmocass::oscillator::OscillatorParams o(1.0, 2.0, 1.5);
  double alpha = 0.0;
  for (auto _ : state) {
    alpha += 1e-3;
    auto f = harmocass::cassini::orbit_foci(o, alpha);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_orbit_foci);

void BM_reach_classification(benchmark::State& state) {
  const harmocass::oscillator::OscillatorParams o(1.0, 1.0, 1.0);
  for (auto _ : state) {
    auto r = harmocass::oscillator::reach_classification(o, {0.5, 0.5});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_reach_classification);

void BM_cassini_sample_polar(benchmark::State& state) {
  const harmocass::cassini::CassiniOval oval(1.0, 1.0);
  for (auto _ : state) {
    auto s = harmocass::cassini::cassini_sample_polar(oval, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_cassini_sample_polar)->Arg(360)->Arg(1440);

void BM_numeric_extrema_r(benchmark::State& state) {
  const Point2 P{1.0, 0.0}, Q{0.5, 0.8660254037844386};
  for (auto _ : state) {
    auto r = harmocass::oracle::numeric_extrema_r(P, Q);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_numeric_extrema_r);

void BM_numeric_envelope(benchmark::State& state) {
  const harmocass::oscillator::OscillatorParams o(1.0, 1.0, 1.0);
  harmocass::oracle::CurveFamily fam;
  fam.eval = [o](double alpha, double u) {
    return harmocass::oscillator::orbit_position(o, alpha, u * 2.0 * harmocass::geom::kPi);
  };
  fam.closed = true;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto est = harmocass::oracle::numeric_envelope(fam, n, n);
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_numeric_envelope)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
