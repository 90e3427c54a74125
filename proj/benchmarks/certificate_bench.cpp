#include "vfib/certificate.hpp"
#include "vfib/cover.hpp"
#include "vfib/transversality.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

vfib::tangle::MontesinosLink uniform_link(int n, long long p, long long q) {
  vfib::tangle::MontesinosLink link;
  for (int i = 0; i < n; ++i) link.tangles.push_back({q, p});
  return link;
}

void BM_certificate(benchmark::State& state) {
  auto link = uniform_link(3, state.range(0), 1);
  for (auto _ : state) {
    auto cert = vfib::cert::run_certificate(link);
    benchmark::DoNotOptimize(cert.outcome);
  }
}
BENCHMARK(BM_certificate)->Arg(5)->Arg(9)->Arg(13);

void BM_certificate_case2(benchmark::State& state) {
  auto link = uniform_link(static_cast<int>(state.range(0)), 5, 1);
  for (auto _ : state) {
    auto cert = vfib::cert::run_certificate(link);
    benchmark::DoNotOptimize(cert.outcome);
  }
}
BENCHMARK(BM_certificate_case2)->Arg(4)->Arg(6)->Arg(8);

void BM_intersection_records(benchmark::State& state) {
  auto link = uniform_link(3, state.range(0), 1);
  auto tower = vfib::cover::build_cover_tower(link);
  auto system = vfib::cover::reorient_curves(
      vfib::cover::decompose_arcs(vfib::cover::build_curve_system(tower)));
  auto lcurves = vfib::tv::build_l_curves(system);
  auto gamma = vfib::tv::build_gamma(system, lcurves);
  for (auto _ : state) {
    auto records = vfib::tv::compute_intersections(system, gamma);
    benchmark::DoNotOptimize(records.size());
  }
}
BENCHMARK(BM_intersection_records)->Arg(5)->Arg(13);

void BM_json_emission(benchmark::State& state) {
  auto cert = vfib::cert::run_certificate(uniform_link(3, 5, 1));
  for (auto _ : state) {
    std::string json = vfib::cert::certificate_json(cert);
    benchmark::DoNotOptimize(json.size());
  }
}
BENCHMARK(BM_json_emission);

}  // namespace

BENCHMARK_MAIN();
