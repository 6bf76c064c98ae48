// Bitset kernels against the serial raw-definition scans.

#include <benchmark/benchmark.h>

#include "grw/classify.hpp"
#include "grw/parallel.hpp"
#include "grw/reference.hpp"
#include "grw/spec.hpp"

using namespace grw;

namespace {

struct Fixture {
  std::shared_ptr<RingContext> ctx;
  IdealSubset p;
  std::vector<std::size_t> positions;
  std::vector<Elem> hom;
};

Fixture& fixture(int which) {
  static const char* specs[] = {
      "ring: gaussian(8); grading: gaussian; ideal P: gens []",
      "ring: product(gaussian(2), gaussian(4)); grading: product; ideal P: gens [(0,2), (0,2i)]",
      "ring: matrix(zn(4), 2); grading: checkerboard; ideal P: gens []",
  };
  static std::vector<std::unique_ptr<Fixture>> cache(3);
  auto& f = cache[which];
  if (!f) {
    auto doc = parse_spec(specs[which]);
    f = std::make_unique<Fixture>();
    f->ctx = std::make_shared<RingContext>(doc.ring);
    f->p = doc.ideals[0].ideal;
    f->positions = f->ctx->all_positions();
    f->hom = doc.ring->homogeneous_order();
    f->ctx->homogeneous_table();
    f->ctx->good_rows(f->p.members(), false);
  }
  return *f;
}

void label(benchmark::State& state) {
  static const char* names[] = {"Z_8[i]", "Z_2[i]xZ_4[i]", "M_2(Z_4)"};
  state.SetLabel(names[state.range(0)]);
}

void BM_KernelCount(benchmark::State& state) {
  auto& f = fixture(static_cast<int>(state.range(0)));
  set_num_workers(static_cast<int>(state.range(1)));
  const auto& t = f.ctx->homogeneous_table();
  const auto& good = f.ctx->good_rows(f.p.members(), false);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_triples(t, good, f.p.members(), TripleRule::TwoAbsorbing,
                                           f.positions, f.positions, f.positions));
  set_num_workers(0);
  label(state);
}

void BM_ReferenceCount(benchmark::State& state) {
  auto& f = fixture(static_cast<int>(state.range(0)));
  const auto& r = f.ctx->ring();
  const auto all = reference::carrier(r);
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::all_triples(r, f.p.members(), all,
                                                    TripleRule::TwoAbsorbing, f.hom, f.hom, f.hom)
                                 .size());
  label(state);
}

void BM_ClassifyIdeal(benchmark::State& state) {
  auto& f = fixture(static_cast<int>(state.range(0)));
  set_num_workers(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    RingContext fresh(f.ctx->graded_ptr());
    benchmark::DoNotOptimize(classify_ideal(fresh, f.p));
  }
  set_num_workers(0);
  label(state);
}

}  // namespace

BENCHMARK(BM_KernelCount)->ArgsProduct({{0, 1, 2}, {1, 4}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ReferenceCount)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyIdeal)->ArgsProduct({{0, 1, 2}, {1, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
