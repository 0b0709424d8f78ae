/*
 * bp_topology.hpp
 *
 * Suffix tree topology as a balanced parentheses sequence (2 bits per
 * node, '(' = 1), built from the LCP array. Supports the navigation the
 * suffix link needs: leaf_select, lca, leftmost_leaf, rightmost_leaf.
 *
 * Conventions: BP symbol positions are 0-indexed. excess(t) is the number
 * of '(' minus ')' among the first t symbols, t in [0, bp_length]; a node
 * is identified by the positions of its opening and closing parenthesis.
 * lca is answered with a range-minimum over excess plus one backward and
 * one forward excess search, all served by a 512-bit block decomposition
 * with a segment tree of per-block minima.
 */

#ifndef SCS_BP_TOPOLOGY_HPP
#define SCS_BP_TOPOLOGY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "scs/bitvector.hpp"

namespace scs {

class suffix_tree_topology {
public:
    struct node {
        int64_t open = 0;
        int64_t close = 0;
        bool operator==(const node&) const = default;
    };

    suffix_tree_topology() = default;

    // Build from the boundary LCP array: lcp[k] = LCP of the suffixes with
    // lexicographic ranks k and k+1 (1-indexed), k = 1..n_leaves-1.
    suffix_tree_topology(std::span<const int32_t> lcp, int64_t n_leaves);

    // Rebuild navigation from a serialized BP sequence.
    suffix_tree_topology(std::vector<uint64_t> bp_words, int64_t bp_len);

    int64_t n_leaves() const { return n_leaves_; }
    int64_t n_nodes() const { return bp_.size() / 2; }
    int64_t bp_length() const { return bp_.size(); }
    const bit_vector_rs& bp() const { return bp_; }

    node root() const { return {0, bp_.size() - 1}; }

    // Leaf with 1-indexed rank j (left-to-right = lexicographic order).
    node leaf(int64_t j) const;

    node lca(node u, node v) const;

    // 1-indexed rank of the first/last leaf in v's subtree.
    int64_t leftmost_leaf(node v) const { return leaf_rank(v.open) + 1; }
    int64_t rightmost_leaf(node v) const { return leaf_rank(v.close); }

    // Leaves whose opening parenthesis lies before position p.
    int64_t leaf_rank(int64_t p) const;

    int64_t size_bits() const;

    // excess after the first t symbols
    int64_t excess(int64_t t) const { return 2 * bp_.rank1(t) - t; }

private:
    void build_aux();
    int64_t leaf_word(int64_t w) const;
    // min excess(t) over t in [l, r] (prefix lengths, 1 <= l <= r <= P)
    int64_t min_excess(int64_t l, int64_t r) const;
    // largest t <= p0 with excess(t) <= target (>= 0 exists since excess(0)=0)
    int64_t bwd_excess_le(int64_t p0, int64_t target) const;
    // smallest t >= p0 with excess(t) <= target
    int64_t fwd_excess_le(int64_t p0, int64_t target) const;

    static constexpr int64_t BLOCK = 512;

    bit_vector_rs bp_;
    int64_t n_leaves_ = 0;
    // rank/select directory over the virtual leaf bits ("()" openings)
    std::vector<uint64_t> leaf_super_;
    std::vector<uint32_t> leaf_blocks_;
    // per-block minimum excess plus a segment tree over it
    std::vector<int32_t> blk_min_;
    std::vector<int32_t> seg_;
    int64_t seg_leaves_ = 0;
};

// BP construction used by the topology: one interval-stack pass over the
// LCP array counting, per leaf, the internal nodes opening and closing
// there. Exposed for tests.
void bp_from_lcp(std::span<const int32_t> lcp, int64_t n_leaves,
                 std::vector<uint64_t>& words_out, int64_t& bp_len_out);

} // namespace scs

#endif
