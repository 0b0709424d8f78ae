/*
 * wavelet_tree.hpp
 *
 * Wavelet tree over integer codes 0..sigma, stored levelwise (matrix
 * layout): one bit vector per bit of the code, most significant first,
 * with a stable zero/one partition between levels. access, rank and
 * select all cost O(log sigma) bit-vector operations.
 */

#ifndef SCS_WAVELET_TREE_HPP
#define SCS_WAVELET_TREE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "scs/bitvector.hpp"
#include "scs/types.hpp"

namespace scs {

class wavelet_tree {
public:
    wavelet_tree() = default;

    // alphabet_size = number of distinct codes (codes are 0..alphabet_size-1).
    wavelet_tree(std::span<const code_t> codes, int64_t alphabet_size);

    int64_t size() const { return n_; }
    int64_t alphabet_size() const { return alphabet_size_; }
    int levels() const { return levels_; }

    code_t access(int64_t i) const;

    // Occurrences of c in positions [0, i).
    int64_t rank(int64_t i, code_t c) const;

    // 0-indexed position of the j-th (1-indexed) occurrence of c.
    int64_t select(int64_t j, code_t c) const;

    // Total occurrences of c.
    int64_t count(code_t c) const { return rank(n_, c); }

    int64_t size_bits() const;

private:
    int64_t n_ = 0;
    int64_t alphabet_size_ = 0;
    int levels_ = 0;
    std::vector<bit_vector_rs> level_bits_;
    std::vector<int64_t> zeros_;  // zeros at each level
};

} // namespace scs

#endif
