#include "scs/bp_topology.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <limits>
#include <utility>

namespace scs {

namespace {

struct byte_exc_entry {
    int8_t delta;        // excess change across the byte's 8 symbols
    int8_t min_prefix;   // min excess after 1..8 symbols, relative to byte start
    int8_t min_rel_end;  // min excess after 0..7 symbols, relative to byte end
};

const std::array<byte_exc_entry, 256>& byte_exc_table() {
    static const std::array<byte_exc_entry, 256> table = [] {
        std::array<byte_exc_entry, 256> t{};
        for (int b = 0; b < 256; ++b) {
            int pre[9] = {0};
            int minp = 127;
            for (int i = 0; i < 8; ++i) {
                pre[i + 1] = pre[i] + (((b >> i) & 1) ? 1 : -1);
                minp = std::min(minp, pre[i + 1]);
            }
            int minrel = 127;
            for (int j = 0; j < 8; ++j) minrel = std::min(minrel, pre[j] - pre[8]);
            t[b] = {int8_t(pre[8]), int8_t(minp), int8_t(minrel)};
        }
        return t;
    }();
    return table;
}

} // namespace

void bp_from_lcp(std::span<const int32_t> lcp, int64_t n_leaves,
                 std::vector<uint64_t>& words_out, int64_t& bp_len_out) {
    assert(n_leaves >= 1);
    const int64_t n = n_leaves;
    std::vector<int32_t> opens(n, 0), closes(n, 0);

    // One pass over the LCP boundaries maintaining the stack of open
    // lcp-intervals (depth, leftmost leaf). Every interval contributes one
    // '(' before its leftmost leaf and one ')' after its rightmost leaf.
    std::vector<std::pair<int32_t, int32_t>> st;
    st.push_back({0, 0});
    opens[0] += 1;
    int64_t n_internal = 1;
    for (int64_t k = 1; k <= n; ++k) {
        const int32_t l = (k < n) ? lcp[k] : -1;
        int32_t lb = int32_t(k - 1);
        while (!st.empty() && l < st.back().first) {
            closes[k - 1] += 1;
            lb = st.back().second;
            st.pop_back();
        }
        if (k < n && l > st.back().first) {
            st.push_back({l, lb});
            opens[lb] += 1;
            ++n_internal;
        }
    }
    assert(st.empty());

    bp_len_out = 2 * (n + n_internal);
    words_out.assign((bp_len_out + 63) / 64, 0);
    int64_t p = 0;
    auto put_open = [&] { words_out[p >> 6] |= uint64_t(1) << (p & 63); ++p; };
    for (int64_t j = 0; j < n; ++j) {
        for (int32_t c = 0; c < opens[j]; ++c) put_open();
        put_open();  // leaf "("
        ++p;         // leaf ")"
        p += closes[j];
    }
    assert(p == bp_len_out);
}

suffix_tree_topology::suffix_tree_topology(std::span<const int32_t> lcp,
                                           int64_t n_leaves) {
    std::vector<uint64_t> words;
    int64_t len = 0;
    bp_from_lcp(lcp, n_leaves, words, len);
    bp_ = bit_vector_rs(std::move(words), len);
    build_aux();
    assert(n_leaves_ == n_leaves);
}

suffix_tree_topology::suffix_tree_topology(std::vector<uint64_t> bp_words,
                                           int64_t bp_len) {
    bp_ = bit_vector_rs(std::move(bp_words), bp_len);
    build_aux();
}

int64_t suffix_tree_topology::leaf_word(int64_t w) const {
    const auto& words = bp_.words();
    uint64_t cur = words[w];
    uint64_t next = (w + 1 < int64_t(words.size())) ? words[w + 1] : 0;
    // bit p set iff bp[p] = '(' and bp[p+1] = ')'
    return int64_t(cur & ~((cur >> 1) | (next << 63)));
}

void suffix_tree_topology::build_aux() {
    const int64_t P = bp_.size();
    const int64_t SUPER = bit_vector_rs::SUPER_BITS;
    const int64_t n_words = (P + 63) / 64;
    const int64_t n_blocks = P / BLOCK + 1;
    const int64_t n_super = P / SUPER + 1;

    leaf_blocks_.assign(n_blocks, 0);
    leaf_super_.assign(n_super, 0);
    int64_t acc = 0, super_acc = 0;
    for (int64_t b = 0; b < n_blocks; ++b) {
        if (b % (SUPER / BLOCK) == 0) {
            super_acc = acc;
            leaf_super_[b / (SUPER / BLOCK)] = acc;
        }
        leaf_blocks_[b] = uint32_t(acc - super_acc);
        const int64_t w0 = b * (BLOCK / 64);
        const int64_t w1 = std::min(w0 + BLOCK / 64, n_words);
        for (int64_t w = w0; w < w1; ++w)
            acc += std::popcount(uint64_t(leaf_word(w)));
    }
    n_leaves_ = acc;

    // per-block excess minima
    const auto& BT = byte_exc_table();
    const int64_t nb = (P + BLOCK - 1) / BLOCK;
    blk_min_.assign(nb, std::numeric_limits<int32_t>::max());
    int64_t exc = 0;
    for (int64_t b = 0; b < nb; ++b) {
        const int64_t t1 = std::min((b + 1) * BLOCK, P);
        int64_t t = b * BLOCK;
        int64_t mn = std::numeric_limits<int64_t>::max();
        while (t + 8 <= t1) {
            const uint8_t byte = uint8_t(bp_.words()[t >> 6] >> (t & 63));
            mn = std::min(mn, exc + BT[byte].min_prefix);
            exc += BT[byte].delta;
            t += 8;
        }
        while (t < t1) {
            exc += bp_.get(t) ? 1 : -1;
            mn = std::min(mn, exc);
            ++t;
        }
        blk_min_[b] = int32_t(mn);
    }
    assert(exc == 0);

    seg_leaves_ = 1;
    while (seg_leaves_ < nb) seg_leaves_ <<= 1;
    seg_.assign(2 * seg_leaves_, std::numeric_limits<int32_t>::max());
    for (int64_t i = 0; i < nb; ++i) seg_[seg_leaves_ + i] = blk_min_[i];
    for (int64_t i = seg_leaves_ - 1; i >= 1; --i)
        seg_[i] = std::min(seg_[2 * i], seg_[2 * i + 1]);
}

int64_t suffix_tree_topology::leaf_rank(int64_t p) const {
    assert(p >= 0 && p <= bp_.size());
    const int64_t SUPER = bit_vector_rs::SUPER_BITS;
    const int64_t b = p / BLOCK;
    int64_t r = leaf_super_[p / SUPER] + leaf_blocks_[b];
    const int64_t w0 = b * (BLOCK / 64);
    const int64_t wi = p >> 6;
    for (int64_t w = w0; w < wi; ++w) r += std::popcount(uint64_t(leaf_word(w)));
    if (p & 63)
        r += std::popcount(uint64_t(leaf_word(wi)) & ((uint64_t(1) << (p & 63)) - 1));
    return r;
}

suffix_tree_topology::node suffix_tree_topology::leaf(int64_t j) const {
    assert(j >= 1 && j <= n_leaves_);
    const int64_t SUPER = bit_vector_rs::SUPER_BITS;
    int64_t lo = 0, hi = int64_t(leaf_super_.size()) - 1;
    while (lo < hi) {
        int64_t mid = (lo + hi + 1) / 2;
        if (int64_t(leaf_super_[mid]) < j) lo = mid; else hi = mid - 1;
    }
    const int64_t s = lo;
    int64_t rem = j - leaf_super_[s];
    const int64_t b0 = s * (SUPER / BLOCK);
    const int64_t b1 = std::min<int64_t>(b0 + SUPER / BLOCK, leaf_blocks_.size()) - 1;
    lo = b0;
    hi = b1;
    while (lo < hi) {
        int64_t mid = (lo + hi + 1) / 2;
        if (int64_t(leaf_blocks_[mid]) < rem) lo = mid; else hi = mid - 1;
    }
    rem -= leaf_blocks_[lo];
    for (int64_t w = lo * (BLOCK / 64);; ++w) {
        const uint64_t lw = uint64_t(leaf_word(w));
        const int c = std::popcount(lw);
        if (rem <= c) {
            const int64_t open = w * 64 + select_in_word(lw, int(rem));
            return {open, open + 1};
        }
        rem -= c;
    }
}

int64_t suffix_tree_topology::min_excess(int64_t l, int64_t r) const {
    assert(1 <= l && l <= r && r <= bp_.size());
    const auto& BT = byte_exc_table();
    auto scan = [&](int64_t a, int64_t b) {
        int64_t exc = excess(a - 1);
        int64_t mn = std::numeric_limits<int64_t>::max();
        int64_t t = a;
        while (t <= b && ((t - 1) & 7) != 0) {
            exc += bp_.get(t - 1) ? 1 : -1;
            mn = std::min(mn, exc);
            ++t;
        }
        while (t + 7 <= b) {
            const uint8_t byte = uint8_t(bp_.words()[(t - 1) >> 6] >> ((t - 1) & 63));
            mn = std::min(mn, exc + BT[byte].min_prefix);
            exc += BT[byte].delta;
            t += 8;
        }
        while (t <= b) {
            exc += bp_.get(t - 1) ? 1 : -1;
            mn = std::min(mn, exc);
            ++t;
        }
        return mn;
    };

    const int64_t bl = (l - 1) / BLOCK, br = (r - 1) / BLOCK;
    if (bl == br) return scan(l, r);
    int64_t mn = std::min(scan(l, (bl + 1) * BLOCK), scan(br * BLOCK + 1, r));
    // full blocks strictly between
    int64_t lo = bl + 1, hi = br - 1;
    if (lo <= hi) {
        lo += seg_leaves_;
        hi += seg_leaves_;
        int64_t m2 = std::numeric_limits<int32_t>::max();
        while (lo <= hi) {
            if (lo & 1) m2 = std::min<int64_t>(m2, seg_[lo++]);
            if (!(hi & 1)) m2 = std::min<int64_t>(m2, seg_[hi--]);
            lo >>= 1;
            hi >>= 1;
        }
        mn = std::min(mn, m2);
    }
    return mn;
}

int64_t suffix_tree_topology::fwd_excess_le(int64_t p0, int64_t target) const {
    const auto& BT = byte_exc_table();
    const int64_t P = bp_.size();
    auto scan = [&](int64_t a, int64_t b) -> int64_t {
        int64_t exc = excess(a - 1);
        int64_t t = a;
        while (t <= b) {
            if (((t - 1) & 7) == 0 && t + 7 <= b) {
                const uint8_t byte = uint8_t(bp_.words()[(t - 1) >> 6] >> ((t - 1) & 63));
                if (exc + BT[byte].min_prefix > target) {
                    exc += BT[byte].delta;
                    t += 8;
                    continue;
                }
            }
            exc += bp_.get(t - 1) ? 1 : -1;
            if (exc <= target) return t;
            ++t;
        }
        return -1;
    };

    assert(p0 >= 1);
    const int64_t b0 = (p0 - 1) / BLOCK;
    int64_t r = scan(p0, std::min((b0 + 1) * BLOCK, P));
    if (r >= 0) return r;
    // descend for the first later block whose min reaches the target
    int64_t node = 1;
    int64_t nl = 0, nr = seg_leaves_ - 1;
    if (seg_[1] > target || b0 + 1 > nr) return -1;
    // find leftmost leaf index >= b0+1 with value <= target
    int64_t found = -1;
    {
        struct frame { int64_t node, nl, nr; };
        std::vector<frame> stk{{node, nl, nr}};
        while (!stk.empty()) {
            auto [nd, a, b] = stk.back();
            stk.pop_back();
            if (b < b0 + 1 || seg_[nd] > target) continue;
            if (a == b) {
                found = a;
                break;
            }
            int64_t mid = (a + b) / 2;
            // left child first: push right then left
            stk.push_back({2 * nd + 1, mid + 1, b});
            stk.push_back({2 * nd, a, mid});
        }
    }
    if (found < 0) return -1;
    r = scan(found * BLOCK + 1, std::min((found + 1) * BLOCK, P));
    assert(r >= 0);
    return r;
}

int64_t suffix_tree_topology::bwd_excess_le(int64_t p0, int64_t target) const {
    assert(target >= 0);
    if (p0 <= 0) return 0;
    const auto& BT = byte_exc_table();
    auto scan = [&](int64_t a, int64_t b) -> int64_t {
        int64_t exc = excess(b);
        int64_t t = b;
        while (t >= a) {
            if (exc <= target) return t;
            if ((t & 7) == 0 && t >= 8 && t - 8 >= a - 1) {
                const uint8_t byte = uint8_t(bp_.words()[(t - 8) >> 6] >> ((t - 8) & 63));
                if (exc + BT[byte].min_rel_end > target) {
                    exc -= BT[byte].delta;
                    t -= 8;
                    continue;
                }
            }
            exc -= bp_.get(t - 1) ? 1 : -1;
            --t;
        }
        return -1;
    };

    const int64_t b0 = (p0 - 1) / BLOCK;
    int64_t r = scan(b0 * BLOCK + 1, p0);
    if (r >= 0) return r;
    // rightmost earlier block whose min reaches the target
    int64_t found = -1;
    if (b0 >= 1 && seg_[1] <= target) {
        struct frame { int64_t node, nl, nr; };
        std::vector<frame> stk{{1, 0, seg_leaves_ - 1}};
        while (!stk.empty()) {
            auto [nd, a, b] = stk.back();
            stk.pop_back();
            if (a > b0 - 1 || seg_[nd] > target) continue;
            if (a == b) {
                found = a;
                break;
            }
            int64_t mid = (a + b) / 2;
            // right child first: push left then right
            stk.push_back({2 * nd, a, mid});
            stk.push_back({2 * nd + 1, mid + 1, b});
        }
    }
    if (found < 0) return 0;  // excess(0) = 0 <= target
    r = scan(found * BLOCK + 1, std::min((found + 1) * BLOCK, bp_.size()));
    assert(r >= 0);
    return r;
}

suffix_tree_topology::node suffix_tree_topology::lca(node u, node v) const {
    if (u.open == v.open) return u;
    if (u.open > v.open) std::swap(u, v);
    // minimum excess between the two opening parentheses identifies the
    // depth of the lca; one backward and one forward search find its own
    // parentheses
    const int64_t m = min_excess(u.open + 1, v.open + 1);
    const int64_t open = bwd_excess_le(u.open, m - 1);
    const int64_t close_boundary = fwd_excess_le(v.open + 1, m - 1);
    assert(close_boundary >= 1);
    return {open, close_boundary - 1};
}

int64_t suffix_tree_topology::size_bits() const {
    return bp_.size_bits() + 64 * int64_t(leaf_super_.size()) +
           32 * int64_t(leaf_blocks_.size()) + 32 * int64_t(blk_min_.size()) +
           32 * int64_t(seg_.size());
}

} // namespace scs
