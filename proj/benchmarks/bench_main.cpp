#include <atanhcert/certifier.hpp>
#include <atanhcert/oracle.hpp>
#include <atanhcert/random.hpp>

#include <benchmark/benchmark.h>

#include <vector>

using namespace atanhcert;

namespace
{

std::vector<SamplePoint> sample_points(std::size_t n)
{
    CounterRng rng(5);
    std::vector<SamplePoint> pts(n);
    for (auto &p : pts) {
        p.lam = rng.uniform();
        for (auto &t : p.t) {
            t = rng.uniform(-0.999, 0.999);
        }
    }
    return pts;
}

Box sample_box(const SamplePoint &p, double w)
{
    Box b;
    b.lam = Interval::make(std::max(0.0, p.lam - w), std::min(1.0, p.lam + w));
    for (int i = 0; i < 3; ++i) {
        b.t[i] = Interval::make(std::max(-0.999, p.t[i] - w), std::min(0.999, p.t[i] + w));
    }
    return b;
}

void BM_interval_mul(benchmark::State &state)
{
    const auto x = Interval::make(-0.3, 0.7);
    const auto y = Interval::make(0.2, 1.9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(x, y));
    }
}
BENCHMARK(BM_interval_mul);

void BM_interval_atanh(benchmark::State &state)
{
    const auto x = Interval::make(-0.3, 0.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(atanh_iv(x));
    }
}
BENCHMARK(BM_interval_atanh);

void BM_point_gap(benchmark::State &state)
{
    const auto pts = sample_points(1024);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gap(pts[i++ & 1023]));
    }
}
BENCHMARK(BM_point_gap);

void BM_reference_eval(benchmark::State &state)
{
    const auto pts = sample_points(1024);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference_eval(pts[i++ & 1023]));
    }
}
BENCHMARK(BM_reference_eval);

void BM_gap_enclosure(benchmark::State &state)
{
    const auto enc = static_cast<Enclosure>(state.range(0));
    const auto pts = sample_points(1024);
    std::vector<Box> boxes;
    for (const auto &p : pts) {
        boxes.push_back(sample_box(p, 0.01));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gap_enclosure(boxes[i++ & 1023], enc));
    }
}
BENCHMARK(BM_gap_enclosure)->Arg(static_cast<int>(Enclosure::factored))->Arg(static_cast<int>(Enclosure::natural));

void BM_process_box(benchmark::State &state)
{
    const auto pts = sample_points(1024);
    std::vector<Box> boxes;
    for (const auto &p : pts) {
        boxes.push_back(sample_box(p, 0.01));
    }
    const CertConfig cfg;
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(process_box(boxes[i++ & 1023], cfg));
    }
}
BENCHMARK(BM_process_box);

void BM_certify_small(benchmark::State &state)
{
    CertConfig cfg;
    cfg.delta_margin = 0.05;
    for (auto _ : state) {
        const auto cert = certify(cfg, {.threads = 1});
        state.counters["boxes"] = static_cast<double>(cert.boxes_processed);
    }
}
BENCHMARK(BM_certify_small)->Unit(benchmark::kMillisecond);

void BM_scan_random(benchmark::State &state)
{
    ScanConfig cfg;
    cfg.mode = ScanMode::random;
    cfg.sample_count = 100'000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_gap(cfg, 1e-11, 1));
    }
    state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(BM_scan_random)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
