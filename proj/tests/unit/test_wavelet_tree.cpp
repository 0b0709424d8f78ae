#include "doctest.h"

#include <random>
#include <vector>

#include "generators.hpp"
#include "scs/wavelet_tree.hpp"

using namespace scs;

TEST_CASE("wavelet tree access/rank/select against linear scans") {
    testing::rng_t rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int64_t> len_dist(1, trial < 40 ? 300 : 20000);
        std::uniform_int_distribution<int> sigma_dist(0, 7);
        const int64_t n = len_dist(rng);
        const int sigma = sigma_dist(rng);  // codes 0..sigma

        std::uniform_int_distribution<int> code_dist(0, sigma);
        std::vector<code_t> seq(n);
        for (auto& c : seq) c = code_t(code_dist(rng));

        const wavelet_tree wt(seq, sigma + 1);
        REQUIRE(wt.size() == n);

        std::vector<std::vector<int64_t>> occ(sigma + 1);
        for (int64_t i = 0; i < n; ++i) occ[seq[i]].push_back(i);

        std::uniform_int_distribution<int64_t> pos_dist(0, n - 1);
        for (int q = 0; q < 200; ++q) {
            const int64_t i = pos_dist(rng);
            REQUIRE(wt.access(i) == seq[i]);
        }
        for (int c = 0; c <= sigma; ++c) {
            REQUIRE(wt.count(code_t(c)) == int64_t(occ[c].size()));
            int64_t running = 0, next_check = 0;
            for (int64_t i = 0; i <= n; ++i) {
                if (i == next_check) {
                    REQUIRE(wt.rank(i, code_t(c)) == running);
                    next_check += 1 + (n / 97);
                }
                if (i < n && seq[i] == c) ++running;
            }
            for (int64_t j = 1; j <= int64_t(occ[c].size()); ++j)
                REQUIRE(wt.select(j, code_t(c)) == occ[c][j - 1]);
        }
    }
}

TEST_CASE("wavelet tree degenerate alphabets") {
    SUBCASE("single symbol") {
        std::vector<code_t> seq(17, 0);
        const wavelet_tree wt(seq, 1);
        CHECK(wt.rank(17, 0) == 17);
        CHECK(wt.select(5, 0) == 4);
        CHECK(wt.access(16) == 0);
    }
    SUBCASE("rank of absent code") {
        std::vector<code_t> seq{0, 0, 0};
        const wavelet_tree wt(seq, 2);
        CHECK(wt.rank(3, 1) == 0);
    }
}
