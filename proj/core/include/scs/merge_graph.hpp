/*
 * merge_graph.hpp
 *
 * Bookkeeping for the growing path structure: availability of each string
 * as a merge's left/right side, chain endpoints for cycle prevention,
 * recorded edges, and the union-find successor structure answering
 * next_one over the monotone-clearing rightavailable bits.
 */

#ifndef SCS_MERGE_GRAPH_HPP
#define SCS_MERGE_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "scs/types.hpp"

namespace scs {

class packed_bits {
public:
    packed_bits() = default;
    packed_bits(int64_t n, bool ones)
        : n_(n), words_((n + 64) / 64, ones ? ~uint64_t(0) : 0) {}

    bool get(int64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void clear(int64_t i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    int64_t size_bits() const { return 64 * int64_t(words_.size()); }

private:
    int64_t n_ = 0;
    std::vector<uint64_t> words_;
};

// Union-find over positions 0..m (0 is a sentinel treated as cleared).
// Groups are zero-runs plus the one-position immediately left of each;
// next_one(k) is the first set position after k, m+1 when none.
class next_one_uf {
public:
    next_one_uf() = default;
    explicit next_one_uf(int64_t m) : m_(m), parent_(m + 1), size_(m + 1, 1), next_(m + 1) {
        for (int64_t k = 0; k <= m; ++k) {
            parent_[k] = int32_t(k);
            next_[k] = int32_t(k + 1);
        }
    }

    int64_t next_one(int64_t k) { return next_[find(k)]; }

    // rightavailable[k] just flipped to 0
    void on_clear(int64_t k, bool right_neighbor_cleared) {
        const int32_t q = next_[find(k)];
        unite(k, k - 1);
        if (right_neighbor_cleared) unite(k, k + 1);
        next_[find(k)] = q;
    }

    int64_t size_bits() const {
        return 64 + 32 * (int64_t(parent_.size()) + size_.size() + next_.size());
    }

private:
    int64_t find(int64_t x) {
        int64_t root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            int64_t up = parent_[x];
            parent_[x] = int32_t(root);
            x = up;
        }
        return root;
    }

    void unite(int64_t a, int64_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = int32_t(a);
        size_[a] += size_[b];
    }

    int64_t m_ = 0;
    std::vector<int32_t> parent_;
    std::vector<int32_t> size_;
    std::vector<int32_t> next_;
};

struct merge_edge {
    int64_t left = 0;
    int64_t right = 0;
    int64_t overlap = 0;
    bool operator==(const merge_edge&) const = default;
};

class merge_state {
public:
    merge_state() = default;
    explicit merge_state(int64_t m);

    int64_t m() const { return m_; }
    int64_t merges() const { return int64_t(edges_.size()); }

    bool left_available(int64_t k) const { return leftavail_.get(k); }
    bool right_available(int64_t k) const { return rightavail_.get(k); }
    int64_t leftend(int64_t k) const { return leftend_[k]; }
    int64_t rightend(int64_t k) const { return rightend_[k]; }

    // Smallest j > k with rightavailable[j] = 1, or m+1.
    int64_t next_one(int64_t k);

    void clear_right_available(int64_t k);

    // Attempt the merge of i with a candidate from ids, at overlap d.
    // Scans at most two available candidates; rejects the one whose chain
    // already ends at i (that covers self-merges too). cycle_rejected, if
    // given, reports whether that rejection fired.
    std::optional<merge_edge> try_merge(int64_t i, id_interval ids, int64_t d,
                                        bool* cycle_rejected = nullptr);

    const std::vector<int32_t>& successor() const { return successor_; }
    const std::vector<int32_t>& overlap_length() const { return overlaplength_; }
    const std::vector<merge_edge>& edges() const { return edges_; }

    // Debug dump: one row per string id.
    void dump(std::ostream& out) const;

    int64_t size_bits() const;

private:
    int64_t m_ = 0;
    packed_bits leftavail_, rightavail_;
    std::vector<int32_t> leftend_, rightend_;
    std::vector<int32_t> successor_, overlaplength_;
    std::vector<merge_edge> edges_;
    next_one_uf uf_;
};

} // namespace scs

#endif
