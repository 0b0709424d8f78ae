#include "scs/bitvector.hpp"

#include <bit>
#include <cassert>

namespace scs {

int select_in_word(uint64_t w, int j) {
    assert(j >= 1 && j <= std::popcount(w));
    int pos = 0;
    while (true) {
        int c = std::popcount(w & 0xffu);
        if (j <= c) break;
        j -= c;
        w >>= 8;
        pos += 8;
    }
    for (;; ++pos, w >>= 1) {
        if (w & 1) {
            if (--j == 0) return pos;
        }
    }
}

void bit_vector_rs::clear_tail() {
    if (n_ & 63) {
        words_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
    }
}

void bit_vector_rs::build_rank() {
    const int64_t n_blocks = n_ / BLOCK_BITS + 1;
    const int64_t n_super = n_ / SUPER_BITS + 1;
    blocks_.assign(n_blocks, 0);
    super_.assign(n_super, 0);

    int64_t acc = 0;        // ones before current block
    int64_t super_acc = 0;  // ones before current superblock
    for (int64_t b = 0; b < n_blocks; ++b) {
        if (b % (SUPER_BITS / BLOCK_BITS) == 0) {
            super_acc = acc;
            super_[b / (SUPER_BITS / BLOCK_BITS)] = acc;
        }
        blocks_[b] = uint32_t(acc - super_acc);
        const int64_t w0 = b * (BLOCK_BITS / 64);
        const int64_t w1 = std::min<int64_t>(w0 + BLOCK_BITS / 64, words_.size());
        for (int64_t w = w0; w < w1; ++w) acc += std::popcount(words_[w]);
    }
    total_ones_ = acc;
}

int64_t bit_vector_rs::rank1(int64_t i) const {
    assert(i >= 0 && i <= n_);
    const int64_t b = i / BLOCK_BITS;
    int64_t r = super_[i / SUPER_BITS] + blocks_[b];
    const int64_t w0 = b * (BLOCK_BITS / 64);
    const int64_t wi = i >> 6;
    for (int64_t w = w0; w < wi; ++w) r += std::popcount(words_[w]);
    if (i & 63) r += std::popcount(words_[wi] & ((uint64_t(1) << (i & 63)) - 1));
    return r;
}

int64_t bit_vector_rs::select1(int64_t j) const {
    assert(j >= 1 && j <= total_ones_);
    // superblock: last s with super_[s] < j
    int64_t lo = 0, hi = int64_t(super_.size()) - 1;
    while (lo < hi) {
        int64_t mid = (lo + hi + 1) / 2;
        if (super_[mid] < j) lo = mid; else hi = mid - 1;
    }
    const int64_t s = lo;
    int64_t rem = j - super_[s];
    // block within superblock: last b with blocks_[b] < rem
    const int64_t b0 = s * (SUPER_BITS / BLOCK_BITS);
    const int64_t b1 = std::min<int64_t>(b0 + SUPER_BITS / BLOCK_BITS, blocks_.size()) - 1;
    lo = b0;
    hi = b1;
    while (lo < hi) {
        int64_t mid = (lo + hi + 1) / 2;
        if (int64_t(blocks_[mid]) < rem) lo = mid; else hi = mid - 1;
    }
    const int64_t b = lo;
    rem -= blocks_[b];
    for (int64_t w = b * (BLOCK_BITS / 64);; ++w) {
        int c = std::popcount(words_[w]);
        if (rem <= c) return w * 64 + select_in_word(words_[w], int(rem));
        rem -= c;
    }
}

int64_t bit_vector_rs::select0(int64_t j) const {
    assert(j >= 1 && j <= n_ - total_ones_);
    // zeros before superblock s start: s*SUPER_BITS - super_[s]
    int64_t lo = 0, hi = int64_t(super_.size()) - 1;
    while (lo < hi) {
        int64_t mid = (lo + hi + 1) / 2;
        if (mid * SUPER_BITS - int64_t(super_[mid]) < j) lo = mid; else hi = mid - 1;
    }
    const int64_t s = lo;
    int64_t rem = j - (s * SUPER_BITS - super_[s]);
    const int64_t b0 = s * (SUPER_BITS / BLOCK_BITS);
    const int64_t b1 = std::min<int64_t>(b0 + SUPER_BITS / BLOCK_BITS, blocks_.size()) - 1;
    lo = b0;
    hi = b1;
    while (lo < hi) {
        int64_t mid = (lo + hi + 1) / 2;
        int64_t zeros_before = (mid - b0) * BLOCK_BITS - int64_t(blocks_[mid]);
        if (zeros_before < rem) lo = mid; else hi = mid - 1;
    }
    const int64_t b = lo;
    rem -= (b - b0) * BLOCK_BITS - blocks_[b];
    for (int64_t w = b * (BLOCK_BITS / 64);; ++w) {
        uint64_t inv = ~words_[w];
        if (w == int64_t(words_.size()) - 1 && (n_ & 63))
            inv &= (uint64_t(1) << (n_ & 63)) - 1;
        int c = std::popcount(inv);
        if (rem <= c) return w * 64 + select_in_word(inv, int(rem));
        rem -= c;
    }
}

} // namespace scs
