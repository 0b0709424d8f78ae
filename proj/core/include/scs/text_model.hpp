/*
 * text_model.hpp
 *
 * Input preprocessing: parsing (FASTA or line-delimited), alphabet
 * construction, duplicate and containment removal, and the separator
 * delimited concatenation the index is built over.
 *
 * The concatenation carries a leading separator in addition to the usual
 * trailing ones: S = $ s_1 $ s_2 $ ... $ s_m $. Suffixes starting with the
 * separator then occupy lexicographic ranks 1..m+1, rank 1 being the lone
 * final "$" and rank p in [2, m+1] the one in front of kept string p-1.
 */

#ifndef SCS_TEXT_MODEL_HPP
#define SCS_TEXT_MODEL_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scs/types.hpp"

namespace scs {

// Injective map between the input symbols (bytes) and codes 1..sigma,
// monotone in byte order so code comparisons equal byte comparisons.
// Code 0 is reserved for the separator and is below every symbol code.
struct alphabet {
    std::array<int16_t, 256> symbol_to_code;  // -1 when absent
    std::vector<unsigned char> code_to_symbol;  // [1..sigma]; [0] unused
    int64_t sigma = 0;

    alphabet() { symbol_to_code.fill(-1); code_to_symbol.assign(1, 0); }

    static alphabet from_strings(const std::vector<std::string>& strings);

    std::vector<code_t> encode(std::string_view s) const;
    std::string decode(std::span<const code_t> codes) const;
};

enum class input_format { lines, fasta };

struct parse_result {
    std::vector<std::string> strings;   // file order, empties skipped
    std::vector<std::string> warnings;  // one per skipped empty string
};

// Raw bytes -> symbol strings. Lines format: one string per non-empty
// line. FASTA: ">" headers, sequence lines of a record concatenated,
// case preserved. A 0x00 byte (the dump format's separator) is rejected.
parse_result parse_input(std::string_view bytes, input_format format);

// Distinct, containment-free, lexicographically sorted code strings.
struct string_set {
    std::vector<std::vector<code_t>> strings;  // rank r <-> strings[r-1]
    std::vector<int64_t> origin_map;   // original index -> kept rank (1-based)
    std::vector<int64_t> kept_origin;  // kept rank-1 -> first original index
    int64_t m = 0;
    int64_t n_chars = 0;
};

// Collapses duplicates to their first occurrence, removes every string
// contained in another (detected by occurrence counting on a first-pass
// suffix array over the deduplicated concatenation), and sorts the rest.
// origin_map points removed strings at a kept witness containing them.
string_set dedup_and_filter(const std::vector<std::vector<code_t>>& strings);

struct concatenation {
    std::vector<code_t> codes;           // $ s_1 $ s_2 $ ... $ s_m $
    std::vector<int64_t> start_offsets;  // first character of each kept string
    int64_t m = 0;
    int64_t n_chars = 0;
    int64_t sigma = 0;

    int64_t size() const { return int64_t(codes.size()); }
};

concatenation build_concatenation(const string_set& set, int64_t sigma);

// Versioned binary dump ("SCS1"): sigma, m, n_chars as 64-bit LE, then the
// code sequence packed at ceil(log2(sigma+1)) bits per code.
void dump_concatenation(const concatenation& concat, std::ostream& out);
concatenation load_concatenation(std::istream& in);

} // namespace scs

#endif
