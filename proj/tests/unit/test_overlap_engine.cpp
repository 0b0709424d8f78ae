#include "doctest.h"

#include <random>

#include "generators.hpp"
#include "scs/fm_index.hpp"
#include "scs/oracles.hpp"
#include "scs/overlap_engine.hpp"
#include "scs/text_model.hpp"

using namespace scs;

namespace {

struct fixture {
    alphabet alpha;
    string_set set;
    fm_index fm;
};

fixture make(const std::vector<std::string>& raw) {
    fixture f;
    f.alpha = alphabet::from_strings(raw);
    std::vector<std::vector<code_t>> encoded;
    for (const auto& s : raw) encoded.push_back(f.alpha.encode(s));
    f.set = dedup_and_filter(encoded);
    f.fm = fm_index::build(build_concatenation(f.set, f.alpha.sigma));
    return f;
}

} // namespace

TEST_CASE("init_iterators worked examples") {
    SUBCASE("aab/abb") {
        const auto f = make({"aab", "abb"});
        const auto its = init_iterators(f.fm, f.set);
        REQUIRE(its.size() == 2);
        CHECK(its[0].id == 1);
        CHECK(its[0].d == 2);
        CHECK(its[0].range == lex_range{5, 6});  // "ab"
        CHECK(its[1].id == 2);
        CHECK(its[1].d == 1);
        CHECK(its[1].range == lex_range{7, 9});  // "b"
    }
    SUBCASE("aa/bb: both stop at depth 1") {
        const auto f = make({"aa", "bb"});
        const auto its = init_iterators(f.fm, f.set);
        REQUIRE(its.size() == 2);
        CHECK(its[0].d == 1);
        CHECK(its[1].d == 1);
        CHECK(its[0].range == f.fm.backward_search(f.alpha.encode("a")));
        CHECK(its[1].range == f.fm.backward_search(f.alpha.encode("b")));
    }
    SUBCASE("single string has no right-maximal proper suffix") {
        const auto f = make({"a"});
        const auto its = init_iterators(f.fm, f.set);
        REQUIRE(its.size() == 1);
        CHECK(its[0].d == 0);
        CHECK(its[0].range == f.fm.root_range());
    }
}

TEST_CASE("iterator schedule sweeps depths in non-increasing order") {
    const auto f = make({"abab", "babb", "bb", "aa"});
    auto its = init_iterators(f.fm, f.set);
    iterator_schedule sched(its);

    int64_t last_d = std::numeric_limits<int64_t>::max();
    int64_t last_pos = -1;
    int64_t steps = 0;
    while (overlap_iterator* it = sched.next()) {
        const int64_t pos = it - sched.iterators().data();
        REQUIRE(it->d <= last_d);
        if (it->d == last_d) REQUIRE(pos > last_pos);  // position ascending within a level
        last_d = it->d;
        last_pos = pos;
        ++steps;
        if (it->d > 0) {
            it->range = f.fm.suffix_link(it->range);
            --it->d;
            sched.requeue(*it);
        } else {
            it->retired = true;
        }
    }
    CHECK(steps == sched.total_budget());
}

TEST_CASE("run_greedy worked examples") {
    SUBCASE("aab + abb overlap 2") {
        const auto f = make({"aab", "abb"});
        iterator_schedule sched(init_iterators(f.fm, f.set));
        merge_state state(f.set.m);
        const merge_plan plan = run_greedy(f.fm, sched, state);
        CHECK(plan.head == 1);
        CHECK(plan.successor[1] == 2);
        CHECK(plan.overlap_length[1] == 2);
        CHECK(state.edges() == std::vector<merge_edge>{{1, 2, 2}});
        CHECK(f.alpha.decode(build_superstring(f.set, plan)) == "aabb");
    }
    SUBCASE("ab + ba: cycle prevented") {
        const auto f = make({"ab", "ba"});
        iterator_schedule sched(init_iterators(f.fm, f.set));
        merge_state state(f.set.m);
        const merge_plan plan = run_greedy(f.fm, sched, state);
        CHECK(state.edges() == std::vector<merge_edge>{{1, 2, 1}});
        CHECK(f.alpha.decode(build_superstring(f.set, plan)) == "aba");
    }
    SUBCASE("aa + bb: zero-overlap merge at the d=0 sweep") {
        const auto f = make({"aa", "bb"});
        iterator_schedule sched(init_iterators(f.fm, f.set));
        merge_state state(f.set.m);
        const merge_plan plan = run_greedy(f.fm, sched, state);
        CHECK(state.edges() == std::vector<merge_edge>{{1, 2, 0}});
        CHECK(f.alpha.decode(build_superstring(f.set, plan)) == "aabb");
    }
    SUBCASE("m = 1: empty plan") {
        const auto f = make({"abc"});
        iterator_schedule sched(init_iterators(f.fm, f.set));
        merge_state state(1);
        const merge_plan plan = run_greedy(f.fm, sched, state);
        CHECK(plan.head == 1);
        CHECK(plan.edge_count() == 0);
        CHECK(f.alpha.decode(build_superstring(f.set, plan)) == "abc");
    }
}

TEST_CASE("trace records one entry per merge attempt") {
    const auto f = make({"ab", "ba"});
    iterator_schedule sched(init_iterators(f.fm, f.set));
    merge_state state(f.set.m);
    std::vector<merge_attempt> attempts;
    run_greedy(f.fm, sched, state, [&](const merge_attempt& a) { attempts.push_back(a); });
    REQUIRE(!attempts.empty());
    CHECK(attempts.back().result == merge_attempt::outcome::accept);
    CHECK(attempts.back().j == 2);
}

TEST_CASE("engine plan matches the quadratic greedy on random instances") {
    testing::rng_t rng(161803);
    for (int trial = 0; trial < 400; ++trial) {
        const int sigma = trial % 2 ? 2 : 4;
        std::uniform_int_distribution<int64_t> m_dist(0, 10);
        const auto raw = testing::random_code_strings(rng, m_dist(rng), 8, sigma);
        const auto set = dedup_and_filter(raw);
        const fm_index fm = fm_index::build(build_concatenation(set, sigma));

        iterator_schedule sched(init_iterators(fm, set));
        merge_state state(set.m);
        const merge_plan plan = run_greedy(fm, sched, state);
        const auto naive = oracle::naive_greedy(set.strings);

        REQUIRE(plan.head == naive.head);
        for (int64_t k = 1; k <= set.m; ++k) {
            REQUIRE(plan.successor[k] == naive.successor[k]);
            REQUIRE(plan.overlap_length[k] == naive.overlap_length[k]);
        }
        if (set.m > 0) {
            REQUIRE(build_superstring(set, plan) == naive.superstring);
            REQUIRE(int64_t(state.edges().size()) == set.m - 1);
        }

        // recorded edge depths are non-increasing (greedy order)
        for (size_t e = 1; e < state.edges().size(); ++e)
            REQUIRE(state.edges()[e - 1].overlap >= state.edges()[e].overlap);
    }
}

TEST_CASE("every iterator is processed at most init_d + 1 times") {
    const auto f = make({"abab", "bbba", "aabb", "abba"});
    auto its = init_iterators(f.fm, f.set);
    int64_t budget = 0;
    for (const auto& it : its) budget += it.init_d + 1;
    iterator_schedule sched(std::move(its));
    CHECK(sched.total_budget() == budget);
    merge_state state(f.set.m);
    CHECK_NOTHROW(run_greedy(f.fm, sched, state));  // budget guard stays quiet
}
