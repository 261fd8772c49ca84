#include <benchmark/benchmark.h>

#include "soakit/construct.hpp"
#include "soakit/embed.hpp"
#include "soakit/fixtures.hpp"
#include "soakit/strength3.hpp"
#include "soakit/verify.hpp"

using namespace soakit;

namespace {

const Array& big_oa() {
  static const Array a = ovoid_oa(5);  // OA(625, 26, 5, 3)
  return a;
}

const Array& big_soa() {
  static const Array d = soa_from_semi_embeddable(ovoid_oa(4)).first;  // SOA(256, 17, 64, 3)
  return d;
}

void BM_VerifyOa(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_oa(big_oa(), 3));
}
void BM_VerifyOaSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::verify_oa(big_oa(), 3));
}

void BM_VerifySoa(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_soa(big_soa(), {4, 3}));
}
void BM_VerifySoaSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::verify_soa(big_soa(), {4, 3}));
}

void BM_VerifyGoa(benchmark::State& st) {
  const auto g = soa_to_goa(big_soa(), 4);
  for (auto _ : st) benchmark::DoNotOptimize(verify_goa(g));
}
void BM_VerifyGoaSerial(benchmark::State& st) {
  const auto g = soa_to_goa(big_soa(), 4);
  for (auto _ : st) benchmark::DoNotOptimize(serial::verify_goa(g));
}

void BM_SemiEmbed(benchmark::State& st) {
  const auto a = ovoid_oa(3);
  for (auto _ : st) benchmark::DoNotOptimize(is_semi_embeddable(a, 3));
}
void BM_SemiEmbedSerial(benchmark::State& st) {
  const auto a = ovoid_oa(3);
  for (auto _ : st) benchmark::DoNotOptimize(serial::is_semi_embeddable(a, 3));
}

}  // namespace

BENCHMARK(BM_VerifyOa)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyOaSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySoa)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySoaSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyGoa)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyGoaSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SemiEmbed)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SemiEmbedSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
