/*
 * bitvector.hpp
 *
 * Plain uncompressed bit vector with O(1) rank and O(log n) select.
 * Rank directory: one absolute 64-bit count per 65536-bit superblock and
 * one relative 32-bit count per 512-bit block (~6.4% overhead).
 */

#ifndef SCS_BITVECTOR_HPP
#define SCS_BITVECTOR_HPP

#include <cstdint>
#include <vector>

namespace scs {

class bit_vector_rs {
public:
    static constexpr int64_t BLOCK_BITS = 512;
    static constexpr int64_t SUPER_BITS = 65536;

    bit_vector_rs() = default;
    explicit bit_vector_rs(int64_t n_bits) : n_(n_bits), words_((n_bits + 63) / 64, 0) {}
    explicit bit_vector_rs(std::vector<uint64_t> words, int64_t n_bits)
        : n_(n_bits), words_(std::move(words)) {
        words_.resize((n_ + 63) / 64, 0);
        clear_tail();
        build_rank();
    }

    void set(int64_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    bool get(int64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    // Call once after the last set(); rank/select are invalid before this.
    void finalize() {
        clear_tail();
        build_rank();
    }

    int64_t size() const { return n_; }
    int64_t ones() const { return total_ones_; }
    int64_t zeros() const { return n_ - total_ones_; }
    const std::vector<uint64_t>& words() const { return words_; }

    // Number of 1 bits in positions [0, i).
    int64_t rank1(int64_t i) const;
    int64_t rank0(int64_t i) const { return i - rank1(i); }

    // 0-indexed position of the j-th (1-indexed) set/unset bit.
    int64_t select1(int64_t j) const;
    int64_t select0(int64_t j) const;

    int64_t size_bits() const {
        return 64 * int64_t(words_.size()) + 64 * int64_t(super_.size()) +
               32 * int64_t(blocks_.size());
    }

private:
    void clear_tail();
    void build_rank();

    int64_t n_ = 0;
    int64_t total_ones_ = 0;
    std::vector<uint64_t> words_;
    std::vector<uint64_t> super_;   // ones before each superblock
    std::vector<uint32_t> blocks_;  // ones before each block, relative to its superblock
};

// Position (0..63) of the j-th (1-indexed) set bit of w. Caller guarantees
// popcount(w) >= j.
int select_in_word(uint64_t w, int j);

} // namespace scs

#endif
