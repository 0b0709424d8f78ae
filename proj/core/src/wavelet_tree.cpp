#include "scs/wavelet_tree.hpp"

#include <bit>
#include <cassert>

namespace scs {

namespace {
int bits_for(int64_t alphabet_size) {
    if (alphabet_size <= 2) return 1;
    return 64 - std::countl_zero(uint64_t(alphabet_size - 1));
}
} // namespace

wavelet_tree::wavelet_tree(std::span<const code_t> codes, int64_t alphabet_size)
    : n_(int64_t(codes.size())),
      alphabet_size_(alphabet_size),
      levels_(bits_for(alphabet_size)) {
    std::vector<code_t> cur(codes.begin(), codes.end());
    std::vector<code_t> nxt(cur.size());
    level_bits_.reserve(levels_);
    zeros_.reserve(levels_);

    for (int l = 0; l < levels_; ++l) {
        const int shift = levels_ - 1 - l;
        bit_vector_rs bv(n_);
        int64_t z = 0;
        for (int64_t i = 0; i < n_; ++i) {
            if ((cur[i] >> shift) & 1)
                bv.set(i);
            else
                ++z;
        }
        bv.finalize();
        // stable partition: zeros first, ones after
        int64_t p0 = 0, p1 = z;
        for (int64_t i = 0; i < n_; ++i) {
            if ((cur[i] >> shift) & 1)
                nxt[p1++] = cur[i];
            else
                nxt[p0++] = cur[i];
        }
        zeros_.push_back(z);
        level_bits_.push_back(std::move(bv));
        cur.swap(nxt);
    }
}

code_t wavelet_tree::access(int64_t i) const {
    assert(i >= 0 && i < n_);
    code_t c = 0;
    for (int l = 0; l < levels_; ++l) {
        const bit_vector_rs& bv = level_bits_[l];
        if (bv.get(i)) {
            c = code_t((c << 1) | 1);
            i = zeros_[l] + bv.rank1(i);
        } else {
            c = code_t(c << 1);
            i = bv.rank0(i);
        }
    }
    return c;
}

int64_t wavelet_tree::rank(int64_t i, code_t c) const {
    assert(i >= 0 && i <= n_);
    assert(int64_t(c) < alphabet_size_);
    int64_t s = 0, e = i;
    for (int l = 0; l < levels_; ++l) {
        const bit_vector_rs& bv = level_bits_[l];
        if ((c >> (levels_ - 1 - l)) & 1) {
            s = zeros_[l] + bv.rank1(s);
            e = zeros_[l] + bv.rank1(e);
        } else {
            s = bv.rank0(s);
            e = bv.rank0(e);
        }
    }
    return e - s;
}

int64_t wavelet_tree::select(int64_t j, code_t c) const {
    assert(j >= 1 && int64_t(c) < alphabet_size_);
    // walk down to the start of c's interval at the bottom level
    int64_t s = 0;
    for (int l = 0; l < levels_; ++l) {
        const bit_vector_rs& bv = level_bits_[l];
        if ((c >> (levels_ - 1 - l)) & 1)
            s = zeros_[l] + bv.rank1(s);
        else
            s = bv.rank0(s);
    }
    // bottom position of the j-th occurrence, then invert level by level
    int64_t p = s + j - 1;
    for (int l = levels_ - 1; l >= 0; --l) {
        const bit_vector_rs& bv = level_bits_[l];
        if ((c >> (levels_ - 1 - l)) & 1)
            p = bv.select1(p - zeros_[l] + 1);
        else
            p = bv.select0(p + 1);
    }
    return p;
}

int64_t wavelet_tree::size_bits() const {
    int64_t bits = 64 * int64_t(zeros_.size());
    for (const auto& bv : level_bits_) bits += bv.size_bits();
    return bits;
}

} // namespace scs
