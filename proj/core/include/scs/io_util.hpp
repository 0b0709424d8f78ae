/*
 * io_util.hpp
 *
 * Little-endian binary IO and fixed-width code packing shared by the
 * dump formats.
 */

#ifndef SCS_IO_UTIL_HPP
#define SCS_IO_UTIL_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "scs/types.hpp"

namespace scs {

inline void write_u64le(std::ostream& out, uint64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = (v >> (8 * i)) & 0xff;
    out.write(reinterpret_cast<const char*>(buf), 8);
}

inline uint64_t read_u64le(std::istream& in) {
    unsigned char buf[8];
    in.read(reinterpret_cast<char*>(buf), 8);
    if (!in) throw parse_error("unexpected end of stream");
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t(buf[i]) << (8 * i);
    return v;
}

// Smallest b >= 1 with 2^b > max_value.
inline int bits_per_value(uint64_t max_value) {
    int b = 1;
    while ((uint64_t(1) << b) <= max_value) ++b;
    return b;
}

// Codes packed LSB-first at a fixed width, padded to whole 64-bit words.
inline std::vector<uint64_t> pack_codes(std::span<const code_t> codes, int bits) {
    const int64_t total_bits = int64_t(codes.size()) * bits;
    std::vector<uint64_t> words((total_bits + 63) / 64, 0);
    int64_t p = 0;
    for (code_t c : codes) {
        words[p >> 6] |= uint64_t(c) << (p & 63);
        if ((p & 63) + bits > 64) words[(p >> 6) + 1] |= uint64_t(c) >> (64 - (p & 63));
        p += bits;
    }
    return words;
}

inline std::vector<code_t> unpack_codes(std::span<const uint64_t> words, int64_t count,
                                        int bits) {
    std::vector<code_t> codes(count);
    const uint64_t mask = (bits >= 64) ? ~uint64_t(0) : (uint64_t(1) << bits) - 1;
    int64_t p = 0;
    for (int64_t i = 0; i < count; ++i) {
        uint64_t v = words[p >> 6] >> (p & 63);
        if ((p & 63) + bits > 64) v |= words[(p >> 6) + 1] << (64 - (p & 63));
        codes[i] = code_t(v & mask);
        p += bits;
    }
    return codes;
}

inline void write_words(std::ostream& out, std::span<const uint64_t> words) {
    for (uint64_t w : words) write_u64le(out, w);
}

inline std::vector<uint64_t> read_words(std::istream& in, int64_t count) {
    std::vector<uint64_t> words(count);
    for (int64_t i = 0; i < count; ++i) words[i] = read_u64le(in);
    return words;
}

} // namespace scs

#endif
