#include "scs/fm_index.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>

#include "scs/io_util.hpp"
#include "scs/suffix_sort.hpp"

namespace scs {

code_t c_array::code_for_rank(int64_t rank) const {
    assert(rank >= 1 && rank <= counts.back());
    // largest c with counts[c] < rank
    const auto it = std::upper_bound(counts.begin(), counts.end(), rank - 1);
    return code_t((it - counts.begin()) - 1);
}

fm_index fm_index::build(const concatenation& concat) {
    if (concat.size() < 1) throw contract_error("cannot index an empty concatenation");

    fm_index fm;
    fm.n_ = concat.size();
    fm.m_ = concat.m;
    fm.sigma_ = concat.sigma;

    const std::vector<int32_t> sa = build_suffix_array(concat.codes);

    // BWT[k] = codes[SA[k]-1]; the wrap at the rank of suffix 0 lands on
    // the final separator, which is the defined value for that slot.
    std::vector<code_t> bwt_codes(fm.n_);
    for (int64_t k = 0; k < fm.n_; ++k) {
        const int32_t p = sa[k];
        bwt_codes[k] = p > 0 ? concat.codes[p - 1] : concat.codes[fm.n_ - 1];
    }
    fm.bwt_ = wavelet_tree(bwt_codes, fm.sigma_ + 1);

    fm.c_.counts.assign(fm.sigma_ + 2, 0);
    for (code_t c : concat.codes) ++fm.c_.counts[int64_t(c) + 1];
    for (int64_t c = 1; c < int64_t(fm.c_.counts.size()); ++c)
        fm.c_.counts[c] += fm.c_.counts[c - 1];

    const std::vector<int32_t> lcp = build_lcp_array(concat.codes, sa);
    fm.topo_ = suffix_tree_topology(lcp, fm.n_);
    return fm;
}

lex_range fm_index::left_extend(lex_range range, code_t c) const {
    if (int64_t(c) > sigma_)
        throw contract_error("left_extend: code out of range");
    if (range.empty() || range.lo < 1 || range.hi > n_)
        throw contract_error("left_extend: invalid range");
    const int64_t base = c_[c];
    return {base + bwt_.rank(range.lo - 1, c) + 1, base + bwt_.rank(range.hi, c)};
}

lex_range fm_index::suffix_link(lex_range range) const {
    if (range.empty() || range.lo < 1 || range.hi > n_)
        throw contract_error("suffix_link: invalid range");
    const code_t c = c_.code_for_rank(range.lo);
    if (c == SEPARATOR)
        throw contract_error("suffix_link: range of a separator-initial string");
    const int64_t base = c_[c];
    assert(range.hi - base <= bwt_.count(c));

    const int64_t leaf_lo = bwt_.select(range.lo - base, c) + 1;
    const int64_t leaf_hi = bwt_.select(range.hi - base, c) + 1;
    const auto v = topo_.lca(topo_.leaf(leaf_lo), topo_.leaf(leaf_hi));
    return {topo_.leftmost_leaf(v), topo_.rightmost_leaf(v)};
}

lex_range fm_index::backward_search(std::span<const code_t> pattern) const {
    lex_range r = root_range();
    for (int64_t k = int64_t(pattern.size()) - 1; k >= 0; --k) {
        r = left_extend(r, pattern[k]);
        if (r.empty()) return r;
    }
    return r;
}

bool fm_index::is_right_maximal(lex_range range_c_alpha, lex_range range_alpha) const {
    return suffix_link(range_c_alpha) == range_alpha;
}

id_interval fm_index::string_ids_from_separator_range(lex_range range) const {
    if (range.empty()) return {};
    if (range.lo < 1 || range.hi > m_ + 1)
        throw contract_error("string_ids_from_separator_range: range not within the separator block");
    if (range.hi < 2) return {};
    return {std::max<int64_t>(range.lo, 2) - 1, range.hi - 1};
}

fm_index::size_report fm_index::sizes() const {
    return {bwt_.size_bits(), c_.size_bits(), topo_.size_bits()};
}

namespace {
constexpr char INDEX_MAGIC[8] = {'S', 'C', 'S', 'I', 'D', 'X', '1', '\0'};
}

void fm_index::save(std::ostream& out) const {
    out.write(INDEX_MAGIC, 8);

    // component 1: parameters
    write_u64le(out, 3 * 8);
    write_u64le(out, uint64_t(n_));
    write_u64le(out, uint64_t(m_));
    write_u64le(out, uint64_t(sigma_));

    // component 2: C-array
    write_u64le(out, uint64_t(c_.counts.size()) * 8);
    for (int64_t v : c_.counts) write_u64le(out, uint64_t(v));

    // component 3: BWT codes, packed
    const int bits = bits_per_value(uint64_t(sigma_));
    std::vector<code_t> bwt_codes(n_);
    for (int64_t k = 0; k < n_; ++k) bwt_codes[k] = bwt_.access(k);
    const auto packed = pack_codes(bwt_codes, bits);
    write_u64le(out, uint64_t(packed.size()) * 8);
    write_words(out, packed);

    // component 4: BP sequence
    const auto& bp = topo_.bp();
    write_u64le(out, uint64_t(bp.words().size() * 8 + 8));
    write_u64le(out, uint64_t(bp.size()));
    write_words(out, bp.words());
}

fm_index fm_index::load(std::istream& in) {
    char magic[8];
    in.read(magic, 8);
    if (!in || !std::equal(magic, magic + 8, INDEX_MAGIC))
        throw parse_error("bad magic: not an SCSIDX1 index (version mismatch?)");

    fm_index fm;
    if (read_u64le(in) != 3 * 8) throw parse_error("SCSIDX1: bad parameter block");
    fm.n_ = int64_t(read_u64le(in));
    fm.m_ = int64_t(read_u64le(in));
    fm.sigma_ = int64_t(read_u64le(in));
    if (fm.n_ < 1 || fm.m_ < 0 || fm.sigma_ < 0 || fm.n_ < fm.m_ + 1)
        throw parse_error("SCSIDX1: inconsistent parameters");

    const int64_t c_len = int64_t(read_u64le(in));
    if (c_len != (fm.sigma_ + 2) * 8) throw parse_error("SCSIDX1: bad C-array length");
    fm.c_.counts.resize(fm.sigma_ + 2);
    for (auto& v : fm.c_.counts) v = int64_t(read_u64le(in));
    if (fm.c_.counts.front() != 0 || fm.c_.counts.back() != fm.n_ ||
        !std::is_sorted(fm.c_.counts.begin(), fm.c_.counts.end()))
        throw parse_error("SCSIDX1: invalid C-array");

    const int bits = bits_per_value(uint64_t(fm.sigma_));
    const int64_t bwt_bytes = int64_t(read_u64le(in));
    if (bwt_bytes != int64_t((fm.n_ * bits + 63) / 64) * 8)
        throw parse_error("SCSIDX1: bad BWT length");
    const auto packed = read_words(in, bwt_bytes / 8);
    const auto bwt_codes = unpack_codes(packed, fm.n_, bits);
    for (code_t c : bwt_codes)
        if (int64_t(c) > fm.sigma_) throw parse_error("SCSIDX1: BWT code out of range");
    fm.bwt_ = wavelet_tree(bwt_codes, fm.sigma_ + 1);

    const int64_t bp_bytes = int64_t(read_u64le(in));
    const int64_t bp_len = int64_t(read_u64le(in));
    if (bp_bytes != int64_t((bp_len + 63) / 64) * 8 + 8 || bp_len < 2)
        throw parse_error("SCSIDX1: bad BP length");
    fm.topo_ = suffix_tree_topology(read_words(in, (bp_len + 63) / 64), bp_len);
    if (fm.topo_.n_leaves() != fm.n_)
        throw parse_error("SCSIDX1: BP leaf count does not match text length");
    return fm;
}

} // namespace scs
