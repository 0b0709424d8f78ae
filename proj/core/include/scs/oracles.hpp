/*
 * oracles.hpp
 *
 * Independent brute-force reference implementations used for testing and
 * for the --oracle CLI mode: naive suffix sorting and range queries, a
 * quadratic greedy with the same tie policy as the compact engine, and an
 * exhaustive optimal-superstring search. Deliberately shares no algorithm
 * code with the main pipeline; performance does not matter here.
 */

#ifndef SCS_ORACLES_HPP
#define SCS_ORACLES_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scs/types.hpp"

namespace scs::oracle {

// Suffix array by comparison sort, O(n^2 log n).
std::vector<int64_t> naive_suffix_array(std::span<const code_t> text);

std::vector<code_t> naive_bwt(std::span<const code_t> text,
                              std::span<const int64_t> sa);

// Precomputed naive index for range queries on one text.
class naive_index {
public:
    explicit naive_index(std::vector<code_t> text);

    const std::vector<int64_t>& sa() const { return sa_; }
    const std::vector<code_t>& bwt() const { return bwt_; }

    // Lexicographic range of the suffixes prefixed by `pattern` (linear scan).
    lex_range pattern_range(std::span<const code_t> pattern) const;

    // Range of c concatenated with the string whose range/depth is given.
    lex_range left_extend(std::span<const code_t> alpha, code_t c) const;

    // Suffix link semantics including the non-right-maximal fallback: the
    // range of alpha extended to the shortest right-maximal superstring of
    // c*alpha, computed from boundary LCPs.
    lex_range suffix_link(std::span<const code_t> c_alpha) const;

    // Definitional right-maximality: followed by two or more distinct codes.
    bool right_maximal(std::span<const code_t> alpha) const;

    const std::vector<code_t>& text() const { return text_; }

private:
    int64_t boundary_lcp(int64_t k) const;  // LCP of ranks k and k+1

    std::vector<code_t> text_;
    std::vector<int64_t> sa_;
    std::vector<int64_t> isa_;
    std::vector<code_t> bwt_;
    std::vector<int64_t> lcp_;  // lcp_[k] = LCP of ranks k and k+1, 1-indexed
};

// Longest suffix of s_i equal to a prefix of s_j, by direct comparison.
// Self-overlaps (i == j) are restricted to proper overlaps.
struct overlap_table {
    std::vector<std::vector<int32_t>> ov;  // ov[i][j], 1-based ids

    static overlap_table build(const std::vector<std::vector<code_t>>& strings);
};

struct naive_plan {
    std::vector<int32_t> successor;       // [1..m], 0 = none
    std::vector<int32_t> overlap_length;  // [1..m]
    int64_t head = 0;
    // recorded edges in acceptance order: (left, right, overlap)
    std::vector<std::array<int64_t, 3>> edges;
    std::vector<code_t> superstring;
};

// Quadratic greedy over a preprocessed (distinct, containment-free,
// sorted) set, replicating the engine's exact attempt order and tie
// policy; its plan must be edge-for-edge identical to the compact one.
naive_plan naive_greedy(const std::vector<std::vector<code_t>>& kept);

// Minimum superstring length over all permutations; m <= 8.
int64_t exhaustive_optimal(const std::vector<std::vector<code_t>>& kept);

} // namespace scs::oracle

#endif
