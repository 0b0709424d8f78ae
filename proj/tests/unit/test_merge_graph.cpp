#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "scs/merge_graph.hpp"

using namespace scs;

namespace {

// linear-scan reference for next_one
int64_t scan_next_one(const std::vector<bool>& avail, int64_t k, int64_t m) {
    for (int64_t j = k + 1; j <= m; ++j)
        if (avail[j]) return j;
    return m + 1;
}

} // namespace

TEST_CASE("next_one worked examples") {
    SUBCASE("fresh state") {
        merge_state st(5);
        CHECK(st.next_one(2) == 3);
        CHECK(st.next_one(0) == 1);
        CHECK(st.next_one(5) == 6);
    }
    SUBCASE("clear 3 then 4") {
        merge_state st(5);
        st.clear_right_available(3);
        CHECK(st.next_one(2) == 4);
        CHECK(st.next_one(3) == 4);
        st.clear_right_available(4);
        CHECK(st.next_one(2) == 5);
        CHECK(st.next_one(3) == 5);
        CHECK(st.next_one(4) == 5);
    }
    SUBCASE("clear 1") {
        merge_state st(5);
        st.clear_right_available(1);
        CHECK(st.next_one(0) == 2);
    }
    SUBCASE("m = 1, clear everything") {
        merge_state st(1);
        st.clear_right_available(1);
        CHECK(st.next_one(0) == 2);
    }
}

TEST_CASE("clear_right_available rejects double clears") {
    merge_state st(3);
    st.clear_right_available(2);
    CHECK_THROWS_AS(st.clear_right_available(2), contract_error);
}

TEST_CASE("next_one equals a linear scan under random clear sequences") {
    std::mt19937_64 rng(1212);
    for (int trial = 0; trial < 60; ++trial) {
        const int64_t m = std::uniform_int_distribution<int64_t>(1, 200)(rng);
        merge_state st(m);
        std::vector<bool> avail(m + 1, true);
        std::vector<int64_t> order(m);
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);

        for (int64_t k : order) {
            st.clear_right_available(k);
            avail[k] = false;
            for (int64_t q = 0; q <= m; ++q)
                REQUIRE(st.next_one(q) == scan_next_one(avail, q, m));
        }
    }
}

TEST_CASE("try_merge worked examples") {
    SUBCASE("accept, then cycle rejection") {
        merge_state st(2);
        const auto e1 = st.try_merge(1, {2, 2}, 2);
        REQUIRE(e1.has_value());
        CHECK(*e1 == merge_edge{1, 2, 2});
        CHECK(st.leftend(2) == 1);
        CHECK(st.rightend(1) == 2);
        CHECK(st.merges() == 1);

        bool cycle = false;
        const auto e2 = st.try_merge(2, {1, 1}, 1, &cycle);
        CHECK(!e2.has_value());
        CHECK(cycle);
    }
    SUBCASE("empty interval") {
        merge_state st(2);
        CHECK(!st.try_merge(1, {}, 0).has_value());
    }
    SUBCASE("left side not available") {
        merge_state st(2);
        st.try_merge(1, {2, 2}, 1);
        CHECK_THROWS_AS(st.try_merge(1, {2, 2}, 0), contract_error);
    }
    SUBCASE("self merge rejected through the cycle test") {
        merge_state st(1);
        bool cycle = false;
        CHECK(!st.try_merge(1, {1, 1}, 0, &cycle).has_value());
        CHECK(cycle);
    }
}

TEST_CASE("at most one candidate per interval can fail the cycle test") {
    // random merge sequences on small m; after every accepted merge, for
    // every i at most one j has rightend[j] == i
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        const int64_t m = std::uniform_int_distribution<int64_t>(1, 6)(rng);
        merge_state st(m);
        for (int step = 0; step < 3 * m; ++step) {
            const int64_t i = std::uniform_int_distribution<int64_t>(1, m)(rng);
            if (!st.left_available(i)) continue;
            st.try_merge(i, {1, m}, 0);
            for (int64_t a = 1; a <= m; ++a) {
                int count = 0;
                for (int64_t j = 1; j <= m; ++j)
                    if (st.right_available(j) && st.rightend(j) == a) ++count;
                REQUIRE(count <= 1);
            }
        }
    }
}

TEST_CASE("chains stay simple paths: successor walk visits each member once") {
    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 100; ++trial) {
        const int64_t m = std::uniform_int_distribution<int64_t>(1, 12)(rng);
        merge_state st(m);
        int64_t accepted = 0;
        while (accepted < m - 1) {
            const int64_t i = std::uniform_int_distribution<int64_t>(1, m)(rng);
            if (!st.left_available(i)) continue;
            if (st.try_merge(i, {1, m}, 0)) ++accepted;
        }
        // exactly one head; walking covers all m nodes without repeats
        std::vector<int> indeg(m + 1, 0);
        for (int64_t k = 1; k <= m; ++k)
            if (st.successor()[k]) ++indeg[st.successor()[k]];
        int64_t head = 0, heads = 0;
        for (int64_t k = 1; k <= m; ++k)
            if (indeg[k] == 0) { head = k; ++heads; }
        REQUIRE(heads == 1);
        std::vector<bool> seen(m + 1, false);
        int64_t cur = head, visited = 0;
        while (cur != 0) {
            REQUIRE(!seen[cur]);
            seen[cur] = true;
            ++visited;
            REQUIRE(visited <= m);
            cur = st.successor()[cur];
        }
        REQUIRE(visited == m);
    }
}

TEST_CASE("state dump is a parseable TSV") {
    merge_state st(2);
    st.try_merge(1, {2, 2}, 1);
    std::ostringstream out;
    st.dump(out);
    const std::string s = out.str();
    CHECK(s.find("k\tleftavail") == 0);
    CHECK(s.find("\n1\t0\t1\t1\t2\t2\t1\n") != std::string::npos);
}
