#include "scs/text_model.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <numeric>
#include <ostream>

#include "scs/io_util.hpp"
#include "scs/suffix_sort.hpp"

namespace scs {

alphabet alphabet::from_strings(const std::vector<std::string>& strings) {
    std::array<bool, 256> seen{};
    for (const auto& s : strings)
        for (unsigned char ch : s) seen[ch] = true;

    alphabet a;
    for (int b = 0; b < 256; ++b) {
        if (seen[b]) {
            a.code_to_symbol.push_back((unsigned char)b);
            a.symbol_to_code[b] = int16_t(++a.sigma);
        }
    }
    return a;
}

std::vector<code_t> alphabet::encode(std::string_view s) const {
    std::vector<code_t> codes;
    codes.reserve(s.size());
    for (unsigned char ch : s) {
        const int16_t c = symbol_to_code[ch];
        if (c < 0) throw contract_error("symbol not in alphabet");
        codes.push_back(code_t(c));
    }
    return codes;
}

std::string alphabet::decode(std::span<const code_t> codes) const {
    std::string s;
    s.reserve(codes.size());
    for (code_t c : codes) {
        if (c == SEPARATOR || int64_t(c) > sigma)
            throw contract_error("code not in alphabet");
        s.push_back(char(code_to_symbol[c]));
    }
    return s;
}

namespace {

void check_no_nul(std::string_view line, int64_t line_no) {
    if (line.find('\0') != std::string_view::npos)
        throw parse_error("input contains the reserved separator byte 0x00", line_no);
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

} // namespace

parse_result parse_input(std::string_view bytes, input_format format) {
    parse_result res;
    int64_t line_no = 0;

    auto for_each_line = [&](auto&& fn) {
        size_t pos = 0;
        while (pos <= bytes.size()) {
            if (pos == bytes.size()) {
                break;  // no trailing empty line after final newline
            }
            size_t nl = bytes.find('\n', pos);
            std::string_view line = (nl == std::string_view::npos)
                                        ? bytes.substr(pos)
                                        : bytes.substr(pos, nl - pos);
            ++line_no;
            fn(strip_cr(line));
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
    };

    if (format == input_format::lines) {
        for_each_line([&](std::string_view line) {
            check_no_nul(line, line_no);
            if (line.empty()) {
                res.warnings.push_back("line " + std::to_string(line_no) +
                                       ": empty string skipped");
                return;
            }
            res.strings.emplace_back(line);
        });
        return res;
    }

    // FASTA
    bool in_record = false;
    std::string current;
    std::string current_name;
    int64_t record_line = 0;
    auto flush = [&] {
        if (!in_record) return;
        if (current.empty()) {
            res.warnings.push_back("record '" + current_name + "' (line " +
                                   std::to_string(record_line) +
                                   "): empty sequence skipped");
        } else {
            res.strings.push_back(std::move(current));
        }
        current.clear();
    };
    for_each_line([&](std::string_view line) {
        check_no_nul(line, line_no);
        if (!line.empty() && line.front() == '>') {
            flush();
            in_record = true;
            current_name = std::string(line.substr(1));
            record_line = line_no;
            return;
        }
        if (line.empty()) return;
        if (!in_record)
            throw parse_error("sequence data before first FASTA header", line_no);
        current.append(line);
    });
    flush();
    return res;
}

namespace {

// Lexicographic range (1-indexed, inclusive) of the suffixes of `text`
// prefixed by `pat`, via binary search over the suffix array.
lex_range sa_pattern_range(std::span<const code_t> text, std::span<const int32_t> sa,
                           std::span<const code_t> pat) {
    const int64_t n = int64_t(text.size());
    auto suffix_less_than_pat = [&](int32_t start) {
        auto suffix = text.subspan(start);
        return std::lexicographical_compare(suffix.begin(), suffix.end(), pat.begin(),
                                            pat.end());
    };
    auto suffix_starts_with_ge = [&](int32_t start) {
        // truncated suffix > pat?
        auto suffix = text.subspan(start, std::min<int64_t>(n - start, pat.size()));
        return std::lexicographical_compare(pat.begin(), pat.end(), suffix.begin(),
                                            suffix.end());
    };
    auto lo = std::partition_point(sa.begin(), sa.end(), suffix_less_than_pat);
    auto hi = std::partition_point(lo, sa.end(),
                                   [&](int32_t s) { return !suffix_starts_with_ge(s); });
    return {lo - sa.begin() + 1, hi - sa.begin()};
}

} // namespace

string_set dedup_and_filter(const std::vector<std::vector<code_t>>& strings) {
    for (const auto& s : strings)
        if (s.empty()) throw contract_error("empty string passed to dedup_and_filter");

    const int64_t n_orig = int64_t(strings.size());
    string_set result;
    result.origin_map.assign(n_orig, 0);
    if (n_orig == 0) return result;

    // Sort original indices by content, ties by input order; duplicates
    // collapse onto the earliest original index.
    std::vector<int64_t> order(n_orig);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int64_t a, int64_t b) {
        if (strings[a] != strings[b]) return strings[a] < strings[b];
        return a < b;
    });

    std::vector<int64_t> distinct_rep;       // distinct idx -> earliest original idx
    std::vector<int64_t> orig_to_distinct(n_orig);
    for (int64_t k = 0; k < n_orig; ++k) {
        const int64_t o = order[k];
        if (k == 0 || strings[o] != strings[order[k - 1]])
            distinct_rep.push_back(o);
        orig_to_distinct[o] = int64_t(distinct_rep.size()) - 1;
    }
    const int64_t n_distinct = int64_t(distinct_rep.size());

    // First pass: concatenate the distinct strings and count occurrences.
    // A string occurring more than once is a proper substring of another
    // (separators prevent cross-boundary matches, and duplicates are gone).
    std::vector<code_t> concat;
    std::vector<int64_t> starts(n_distinct);
    int64_t total = 0;
    for (int64_t i = 0; i < n_distinct; ++i) total += int64_t(strings[distinct_rep[i]].size());
    concat.reserve(total + n_distinct + 1);
    concat.push_back(SEPARATOR);
    for (int64_t i = 0; i < n_distinct; ++i) {
        starts[i] = int64_t(concat.size());
        const auto& s = strings[distinct_rep[i]];
        concat.insert(concat.end(), s.begin(), s.end());
        concat.push_back(SEPARATOR);
    }
    const std::vector<int32_t> sa = build_suffix_array(concat);

    std::vector<int64_t> witness(n_distinct, -1);  // containing distinct idx, -1 = kept
    for (int64_t i = 0; i < n_distinct; ++i) {
        const auto& s = strings[distinct_rep[i]];
        const lex_range r = sa_pattern_range(concat, sa, s);
        assert(r.size() >= 1);
        if (r.size() <= 1) continue;
        for (int64_t k = r.lo - 1; k < r.hi; ++k) {
            const int64_t pos = sa[k];
            if (pos == starts[i]) continue;  // the string's own block
            const auto it = std::upper_bound(starts.begin(), starts.end(), pos);
            const int64_t block = (it - starts.begin()) - 1;
            assert(block >= 0 && pos + int64_t(s.size()) <=
                                     starts[block] + int64_t(strings[distinct_rep[block]].size()));
            witness[i] = block;
            break;
        }
        assert(witness[i] >= 0);
    }

    // Kept = non-contained distinct strings, already in sorted order.
    std::vector<int64_t> distinct_to_rank(n_distinct, 0);
    for (int64_t i = 0; i < n_distinct; ++i) {
        if (witness[i] >= 0) continue;
        result.strings.push_back(strings[distinct_rep[i]]);
        result.kept_origin.push_back(distinct_rep[i]);
        distinct_to_rank[i] = int64_t(result.strings.size());  // 1-based
        result.n_chars += int64_t(result.strings.back().size());
    }
    result.m = int64_t(result.strings.size());

    // Resolve witness chains (a witness may itself be contained).
    auto kept_rank_of = [&](int64_t distinct_idx) {
        int64_t w = distinct_idx;
        while (witness[w] >= 0) w = witness[w];
        return distinct_to_rank[w];
    };
    for (int64_t o = 0; o < n_orig; ++o)
        result.origin_map[o] = kept_rank_of(orig_to_distinct[o]);

    return result;
}

concatenation build_concatenation(const string_set& set, int64_t sigma) {
    concatenation c;
    c.m = set.m;
    c.n_chars = set.n_chars;
    c.sigma = sigma;
    c.codes.reserve(set.n_chars + set.m + 1);
    c.start_offsets.reserve(set.m);
    c.codes.push_back(SEPARATOR);
    for (const auto& s : set.strings) {
        c.start_offsets.push_back(int64_t(c.codes.size()));
        c.codes.insert(c.codes.end(), s.begin(), s.end());
        c.codes.push_back(SEPARATOR);
    }
    assert(int64_t(c.codes.size()) == c.n_chars + c.m + 1);
    return c;
}

namespace {
constexpr char CONCAT_MAGIC[4] = {'S', 'C', 'S', '1'};
}

void dump_concatenation(const concatenation& concat, std::ostream& out) {
    out.write(CONCAT_MAGIC, 4);
    write_u64le(out, uint64_t(concat.sigma));
    write_u64le(out, uint64_t(concat.m));
    write_u64le(out, uint64_t(concat.n_chars));
    const int bits = bits_per_value(uint64_t(concat.sigma));
    write_words(out, pack_codes(concat.codes, bits));
}

concatenation load_concatenation(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || !std::equal(magic, magic + 4, CONCAT_MAGIC))
        throw parse_error("bad magic: not an SCS1 dump");

    concatenation c;
    c.sigma = int64_t(read_u64le(in));
    c.m = int64_t(read_u64le(in));
    c.n_chars = int64_t(read_u64le(in));
    const int64_t n = c.n_chars + c.m + 1;
    const int bits = bits_per_value(uint64_t(c.sigma));
    const int64_t n_words = (n * bits + 63) / 64;
    c.codes = unpack_codes(read_words(in, n_words), n, bits);

    // recover block starts and validate the separator layout
    int64_t zeros = 0;
    for (int64_t i = 0; i < n; ++i) {
        if (c.codes[i] == SEPARATOR) {
            ++zeros;
            if (i + 1 < n && c.codes[i + 1] != SEPARATOR)
                c.start_offsets.push_back(i + 1);
        } else if (int64_t(c.codes[i]) > c.sigma) {
            throw parse_error("code out of range in SCS1 dump");
        }
    }
    if (n < 1 || c.codes.front() != SEPARATOR || c.codes.back() != SEPARATOR ||
        zeros != c.m + 1 || int64_t(c.start_offsets.size()) != c.m)
        throw parse_error("inconsistent SCS1 dump");
    return c;
}

} // namespace scs
