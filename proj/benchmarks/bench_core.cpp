#include <benchmark/benchmark.h>

#include <random>

#include "twobraid/braiding2.hpp"
#include "twobraid/kz_forms.hpp"
#include "twobraid/quasi_invariant.hpp"

using namespace twobraid;

namespace {

const StringModel& model() {
  static StringModel m;
  return m;
}

TensorElement random_word(std::mt19937_64& rng, std::size_t len) {
  std::vector<Letter> alphabet = model().g_basis(3);
  TensorMonomial m;
  m.slots.resize(1);
  for (std::size_t i = 0; i < len; ++i)
    m.slots[0].push_back(alphabet[rng() % alphabet.size()]);
  return TensorElement::monomial(m);
}

TensorElement random_an(std::mt19937_64& rng, int arity, int terms) {
  std::vector<Letter> g = model().g_basis(2);
  TensorElement out(arity);
  for (int t = 0; t < terms; ++t) {
    TensorMonomial m;
    m.slots.resize(static_cast<std::size_t>(arity));
    for (auto& slot : m.slots)
      for (std::size_t i = 0, len = rng() % 3; i < len; ++i)
        slot.push_back(g[rng() % g.size()]);
    m.slots[rng() % arity].push_back(
        StringModel::fun(static_cast<int>(rng() % 3)));
    out.add(m, Rational(1 + static_cast<long>(rng() % 3)));
  }
  return out;
}

void BM_PbwNormalize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<TensorElement> inputs;
  for (int i = 0; i < 32; ++i)
    inputs.push_back(random_word(rng, static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pbw_normalize(inputs[i++ % inputs.size()], model()));
  }
}
BENCHMARK(BM_PbwNormalize)->Arg(4)->Arg(6)->Arg(8);

void BM_UnNormalize(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<TensorElement> inputs;
  for (int i = 0; i < 32; ++i)
    inputs.push_back(random_an(rng, static_cast<int>(state.range(0)), 3));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(un_normalize(inputs[i++ % inputs.size()], model()));
  }
}
BENCHMARK(BM_UnNormalize)->Arg(2)->Arg(3)->Arg(4);

void BM_WedgeNormalize(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int n = static_cast<int>(state.range(0));
  std::vector<FormGen> gens;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) gens.push_back(form_gen(a, b));
  std::vector<std::vector<FormGen>> words;
  for (int i = 0; i < 64; ++i) {
    std::vector<FormGen> w;
    for (int d = 0; d < 3; ++d) w.push_back(gens[rng() % gens.size()]);
    words.push_back(std::move(w));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge_word(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_WedgeNormalize)->Arg(4)->Arg(6);

void BM_CoherenceDefect(benchmark::State& state) {
  QuasiInvariantTensor q = string_tensor(model());
  for (auto _ : state) {
    benchmark::DoNotOptimize(coherence_defect(q, model()));
  }
}
BENCHMARK(BM_CoherenceDefect);

void BM_TwoCurvature(benchmark::State& state) {
  Braiding2 b = build_braiding(string_tensor(model()), model());
  PQData pq = pq_arrow_parts(b, 3);
  Connection2 c = build_connection(pq, b.tensor().r, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_curvature(c));
  }
}
BENCHMARK(BM_TwoCurvature);

}  // namespace

BENCHMARK_MAIN();
