#include <benchmark/benchmark.h>

#include <string>
#include <variant>
#include <vector>

#include "ssi/model.hpp"
#include "ssi/path.hpp"
#include "ssi/quantum.hpp"
#include "ssi/state_space.hpp"
#include "ssi/text_format.hpp"

namespace {

// A chain with a forking second operation: s_i --next--> s_{i+1} and
// s_i --fork--> {s_{i+1}, s_{i+2}} at even indices.
ssi::GameModel make_chain(std::size_t n) {
    std::vector<ssi::State> states;
    for (std::size_t i = 0; i < n; ++i) {
        states.push_back({"s" + std::to_string(i), {}});
    }
    std::vector<ssi::Transition> transitions;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        transitions.push_back({states[i].id, "next", {{states[i + 1].id, 1}}});
        if (i % 2 == 0 && i + 2 < n) {
            transitions.push_back({states[i].id,
                                   "fork",
                                   {{states[i + 1].id, {1, 2}}, {states[i + 2].id, {1, 2}}}});
        }
    }
    return ssi::build_model(std::move(states),
                            {{"next", ssi::OpKind::Player, 1}, {"fork", ssi::OpKind::Game, 1}},
                            std::move(transitions), {"s0"},
                            {"s" + std::to_string(n - 1)});
}

ssi::StateSpace chain_space(std::size_t n) {
    return std::get<ssi::StateSpace>(ssi::validate(make_chain(n)));
}

void BM_validate(benchmark::State& state) {
    const ssi::GameModel model = make_chain(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto result = ssi::validate(model);
        benchmark::DoNotOptimize(result);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_validate)->RangeMultiplier(8)->Range(64, 32768)->Complexity();

void BM_speedrun(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const ssi::StateSpace space = chain_space(n);
    const std::set<std::string> from = {"s0"};
    const std::set<std::string> to = {"s" + std::to_string(n - 1)};
    for (auto _ : state) {
        auto result = ssi::speedrun(space, from, to);
        benchmark::DoNotOptimize(result);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_speedrun)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_enumerate_paths(benchmark::State& state) {
    const ssi::StateSpace space = chain_space(64);
    for (auto _ : state) {
        ssi::PathEnumerator enumerator(space, {"s0"}, static_cast<std::size_t>(state.range(0)));
        std::size_t count = 0;
        while (enumerator.next()) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_enumerate_paths)->DenseRange(4, 12, 4);

void BM_step(benchmark::State& state) {
    const ssi::StateSpace space = chain_space(16);
    ssi::SplitMix64 rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssi::step(space, "s0", "fork", rng));
    }
}
BENCHMARK(BM_step);

void BM_parse_model(benchmark::State& state) {
    const std::string text =
        ssi::io::serialize_model(make_chain(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssi::io::parse_model(text));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_parse_model)->RangeMultiplier(8)->Range(64, 4096);

void BM_run_qct(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssi::qct::run_qct(static_cast<std::size_t>(state.range(0)), 42));
    }
}
BENCHMARK(BM_run_qct)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
