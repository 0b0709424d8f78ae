#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "scs/fm_index.hpp"
#include "scs/merge_graph.hpp"
#include "scs/overlap_engine.hpp"
#include "scs/pipeline.hpp"
#include "scs/text_model.hpp"

namespace {

using namespace scs;

// fragments sampled from a random genome at ~4x coverage
std::vector<std::string> fragments(int64_t n_total, int64_t frag_len = 256) {
    std::mt19937_64 rng(1234);
    static const char ACGT[4] = {'A', 'C', 'G', 'T'};
    const int64_t genome_len = std::max<int64_t>(frag_len, n_total / 4);
    std::string genome(genome_len, 'A');
    std::uniform_int_distribution<int> base(0, 3);
    for (auto& ch : genome) ch = ACGT[base(rng)];
    std::uniform_int_distribution<int64_t> pos(0, genome_len - frag_len);
    std::vector<std::string> out;
    for (int64_t i = 0; i < n_total / frag_len; ++i)
        out.push_back(genome.substr(pos(rng), frag_len));
    return out;
}

struct prepared {
    alphabet alpha;
    string_set set;
    fm_index fm;
};

const prepared& prepared_instance(int64_t n) {
    static std::map<int64_t, prepared> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        prepared p;
        const auto frags = fragments(n);
        p.alpha = alphabet::from_strings(frags);
        std::vector<std::vector<code_t>> encoded;
        for (const auto& s : frags) encoded.push_back(p.alpha.encode(s));
        p.set = dedup_and_filter(encoded);
        p.fm = fm_index::build(build_concatenation(p.set, p.alpha.sigma));
        it = cache.emplace(n, std::move(p)).first;
    }
    return it->second;
}

void BM_index_build(benchmark::State& state) {
    const int64_t n = state.range(0);
    const auto frags = fragments(n);
    const alphabet alpha = alphabet::from_strings(frags);
    std::vector<std::vector<code_t>> encoded;
    for (const auto& s : frags) encoded.push_back(alpha.encode(s));
    const auto set = dedup_and_filter(encoded);
    const auto concat = build_concatenation(set, alpha.sigma);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fm_index::build(concat));
    }
    state.SetItemsProcessed(state.iterations() * concat.size());
}
BENCHMARK(BM_index_build)->Arg(1 << 16)->Arg(1 << 18)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_superstring_phase(benchmark::State& state) {
    const auto& p = prepared_instance(state.range(0));
    for (auto _ : state) {
        iterator_schedule sched(init_iterators(p.fm, p.set));
        merge_state ms(p.set.m);
        const merge_plan plan = run_greedy(p.fm, sched, ms);
        benchmark::DoNotOptimize(build_superstring(p.set, plan));
    }
    state.SetItemsProcessed(state.iterations() * p.set.n_chars);
}
BENCHMARK(BM_superstring_phase)->Arg(1 << 16)->Arg(1 << 18)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_left_extend(benchmark::State& state) {
    const auto& p = prepared_instance(1 << 18);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> code(1, int(p.fm.sigma()));
    lex_range r = p.fm.root_range();
    for (auto _ : state) {
        const lex_range next = p.fm.left_extend(r, code_t(code(rng)));
        r = next.empty() ? p.fm.root_range() : next;
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_left_extend);

void BM_suffix_link(benchmark::State& state) {
    const auto& p = prepared_instance(1 << 18);
    const auto its = init_iterators(p.fm, p.set);
    size_t k = 0;
    lex_range r = its[0].range;
    int64_t d = its[0].d;
    for (auto _ : state) {
        if (d <= 1) {
            k = (k + 1) % its.size();
            r = its[k].range;
            d = its[k].d;
            if (d == 0) continue;
        }
        r = p.fm.suffix_link(r);
        --d;
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_suffix_link);

void BM_next_one(benchmark::State& state) {
    std::mt19937_64 rng(99);
    const int64_t m = 100000;
    for (auto _ : state) {
        state.PauseTiming();
        merge_state ms(m);
        std::vector<int64_t> order(m);
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        state.ResumeTiming();
        for (int64_t k : order) {
            benchmark::DoNotOptimize(ms.next_one(k - 1));
            ms.clear_right_available(k);
        }
    }
    state.SetItemsProcessed(state.iterations() * m);
}
BENCHMARK(BM_next_one)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
