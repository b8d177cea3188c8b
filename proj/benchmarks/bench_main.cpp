#include <benchmark/benchmark.h>

#include "monoidlab/families.hpp"
#include "monoidlab/fmon.hpp"
#include "monoidlab/lattice.hpp"
#include "monoidlab/rees.hpp"

using namespace monoidlab;

namespace {
  void bm_rees_satisfies_step2(benchmark::State& state) {
    auto const rho = state.range(0) == 0 ? families::Permutation::identity(2)
                                         : families::Permutation::parse("2 1");
    auto const c   = families::step2_construction(1, 1, rho);
    auto const m   = rees::ReesMonoid::build(std::vector<Word>{c.u});
    Identity const id(c.a, c.a_prime);
    for (auto _ : state) {
      benchmark::DoNotOptimize(rees::satisfies(m, id));
    }
  }
  BENCHMARK(bm_rees_satisfies_step2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void bm_fmon_satisfies(benchmark::State& state) {
    auto const m  = fmon::from_rees(rees::ReesMonoid::build(
        families::variety_generators(families::VarietySpec::parse("chain-zigzag:1"))));
    auto const id = Identity::parse("x z x t x y s y = x z x t y x s y");
    for (auto _ : state) {
      benchmark::DoNotOptimize(fmon::satisfies(m, id));
    }
  }
  BENCHMARK(bm_fmon_satisfies)->Unit(benchmark::kMillisecond);

  void bm_direct_successors(benchmark::State& state) {
    auto const [u, v] = families::step1_words();
    std::vector<Identity> const sigma{Identity(u, v)};
    for (auto _ : state) {
      benchmark::DoNotOptimize(direct_successors(u, sigma));
    }
  }
  BENCHMARK(bm_direct_successors)->Unit(benchmark::kMillisecond);

  void bm_deduce(benchmark::State& state) {
    std::vector<Identity> const sigma{Identity::parse("x x = x x x"),
                                      Identity::parse("x x y = x y x"),
                                      Identity::parse("x y x = y x x")};
    auto const id = families::Permutation::identity(2);
    auto const u  = families::a_word(1, 1, id);
    auto const v  = families::a_prime_word(1, 1, id);
    SearchBudget b;
    b.max_word_length = u.size() + 3;
    for (auto _ : state) {
      benchmark::DoNotOptimize(deduce(u, v, sigma, b));
    }
  }
  BENCHMARK(bm_deduce)->Unit(benchmark::kMillisecond);

  void bm_truncated_theory(benchmark::State& state) {
    auto const m = fmon::from_rees(rees::ReesMonoid::build(std::vector<Word>{Word::parse("x y")}));
    fmon::TheoryParams const p{static_cast<std::size_t>(state.range(0)), 3};
    for (auto _ : state) {
      benchmark::DoNotOptimize(fmon::truncated_theory(m, p));
    }
  }
  BENCHMARK(bm_truncated_theory)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

  void bm_modular_elements(benchmark::State& state) {
    auto const l = lattice::boolean(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(lattice::modular_elements(l));
    }
  }
  BENCHMARK(bm_modular_elements)->DenseRange(2, 5);
}  // namespace

BENCHMARK_MAIN();
