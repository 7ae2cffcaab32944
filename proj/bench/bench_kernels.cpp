// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <random>

#include "regmeasure/groups.hpp"
#include "regmeasure/kernels.hpp"
#include "regmeasure/monoid.hpp"

using namespace regmeasure;

namespace {

Dfa random_dfa(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  const Alphabet abc("abc");
  std::vector<StateId> delta(n * abc.size());
  for (auto& t : delta) t = static_cast<StateId>(rng() % n);
  std::vector<bool> accepting(n);
  for (std::size_t q = 0; q < n; ++q) accepting[q] = rng() % 2;
  return Dfa(abc, n, 0, std::move(accepting), std::move(delta));
}

struct Tree {
  std::vector<std::uint32_t> right, parent, letter;
  kernels::CayleyTree view;
  explicit Tree(const FiniteMonoid& m) {
    right.assign(m.right_cayley().begin(), m.right_cayley().end());
    parent.resize(m.size());
    letter.resize(m.size());
    for (ElementId x = 1; x < m.size(); ++x) {
      const Word& w = m.word(x);
      parent[x] = m.evaluate(w.substr(0, w.size() - 1));
      letter[x] = m.alphabet().index(w.back());
    }
    view = {m.size(), m.alphabet().size(), 0, right, parent, letter};
  }
};

template <bool Parallel>
void count_steps(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Dfa d = random_dfa(n, 7);
  kernels::Predecessors pred(d);
  std::vector<BigInt> cur(n, 0), next(n);
  cur[0] = 1;
  for (auto _ : state) {
    for (int step = 0; step < 32; ++step) {
      if constexpr (Parallel) {
        kernels::parallel::count_step(d, pred, cur, next);
      } else {
        kernels::serial::count_step(d, cur, next);
      }
      std::swap(cur, next);
    }
    benchmark::DoNotOptimize(cur.data());
  }
}

template <bool Parallel>
void table(benchmark::State& state) {
  FiniteMonoid g = build_group(GroupPreset::parse("dihedral:" + std::to_string(state.range(0))));
  Tree t(g);
  for (auto _ : state) {
    auto out = Parallel ? kernels::parallel::multiplication_table(t.view) : kernels::serial::multiplication_table(t.view);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void associativity(benchmark::State& state) {
  FiniteMonoid g = build_group(GroupPreset::parse("dihedral:" + std::to_string(state.range(0))));
  Tree t(g);
  auto tab = kernels::serial::multiplication_table(t.view);
  for (auto _ : state) {
    auto v = Parallel ? kernels::parallel::associativity_violations(tab, g.size())
                      : kernels::serial::associativity_violations(tab, g.size());
    benchmark::DoNotOptimize(v);
  }
}

}  // namespace

BENCHMARK(count_steps<false>)->Arg(256)->Arg(4096);
BENCHMARK(count_steps<true>)->Arg(256)->Arg(4096);
BENCHMARK(table<false>)->Arg(256)->Arg(2048);
BENCHMARK(table<true>)->Arg(256)->Arg(2048);
BENCHMARK(associativity<false>)->Arg(64)->Arg(200);
BENCHMARK(associativity<true>)->Arg(64)->Arg(200);

BENCHMARK_MAIN();
