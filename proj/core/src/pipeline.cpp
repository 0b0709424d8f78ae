#include "scs/pipeline.hpp"

#include <chrono>

#include "scs/oracles.hpp"

namespace scs {

namespace {

using clock = std::chrono::steady_clock;

double seconds_since(clock::time_point t0) {
    return std::chrono::duration<double>(clock::now() - t0).count();
}

oracle_comparison compare_with_oracle(const pipeline_result& r) {
    oracle_comparison cmp;
    const auto naive = oracle::naive_greedy(r.set.strings);
    if (naive.head != r.plan.head) {
        cmp.match = false;
        cmp.detail = "path head differs: compact " + std::to_string(r.plan.head) +
                     " vs oracle " + std::to_string(naive.head);
        return cmp;
    }
    for (int64_t k = 1; k <= r.set.m; ++k) {
        if (naive.successor[k] != r.plan.successor[k] ||
            naive.overlap_length[k] != r.plan.overlap_length[k]) {
            cmp.match = false;
            cmp.detail = "edge leaving string " + std::to_string(k) +
                         " differs: compact -> " + std::to_string(r.plan.successor[k]) +
                         " (overlap " + std::to_string(r.plan.overlap_length[k]) +
                         "), oracle -> " + std::to_string(naive.successor[k]) +
                         " (overlap " + std::to_string(naive.overlap_length[k]) + ")";
            return cmp;
        }
    }
    if (naive.superstring != r.superstring_codes) {
        cmp.match = false;
        cmp.detail = "superstrings differ";
    }
    return cmp;
}

} // namespace

pipeline_result run_pipeline_on_strings(std::vector<std::string> strings,
                                        const pipeline_options& options) {
    pipeline_result r;
    const auto t_total = clock::now();
    r.originals = std::move(strings);

    auto t0 = clock::now();
    r.alpha = alphabet::from_strings(r.originals);
    std::vector<std::vector<code_t>> encoded;
    encoded.reserve(r.originals.size());
    for (const auto& s : r.originals) encoded.push_back(r.alpha.encode(s));
    r.stats.parse_seconds += seconds_since(t0);

    t0 = clock::now();
    r.set = dedup_and_filter(encoded);
    r.stats.preprocess_seconds = seconds_since(t0);

    t0 = clock::now();
    const concatenation concat = build_concatenation(r.set, r.alpha.sigma);
    r.index = fm_index::build(concat);
    r.stats.index_build_seconds = seconds_since(t0);

    t0 = clock::now();
    iterator_schedule schedule(init_iterators(r.index, r.set));
    merge_state state(r.set.m);
    r.plan = run_greedy(r.index, schedule, state, options.trace);
    r.edges = state.edges();
    r.superstring_codes = build_superstring(r.set, r.plan);
    r.superstring = r.alpha.decode(r.superstring_codes);
    r.stats.superstring_seconds = seconds_since(t0);

    r.stats.m_original = int64_t(r.originals.size());
    r.stats.m_kept = r.set.m;
    r.stats.n_chars = r.set.n_chars;
    r.stats.sigma = r.alpha.sigma;
    r.stats.concat_length = concat.size();
    r.stats.superstring_length = int64_t(r.superstring_codes.size());
    r.stats.merges = int64_t(r.edges.size());
    for (const auto& e : r.edges) r.stats.total_overlap += e.overlap;

    const auto sizes = r.index.sizes();
    r.stats.bwt_bits = sizes.bwt_bits;
    r.stats.c_array_bits = sizes.c_array_bits;
    r.stats.topology_bits = sizes.topology_bits;
    r.stats.iterator_bits = schedule.size_bits();
    r.stats.merge_state_bits = state.size_bits();

    t0 = clock::now();
    r.verification = verify_superstring(r.originals, r.superstring);
    r.stats.verify_seconds = seconds_since(t0);

    if (options.run_oracle) r.oracle = compare_with_oracle(r);

    r.stats.total_seconds = seconds_since(t_total);
    return r;
}

pipeline_result run_pipeline(std::string_view input_bytes, input_format format,
                             const pipeline_options& options) {
    const auto t0 = clock::now();
    parse_result parsed = parse_input(input_bytes, format);
    const double parse_s = seconds_since(t0);

    pipeline_result r = run_pipeline_on_strings(std::move(parsed.strings), options);
    r.warnings = std::move(parsed.warnings);
    r.stats.parse_seconds += parse_s;
    return r;
}

} // namespace scs
