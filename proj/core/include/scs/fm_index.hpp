/*
 * fm_index.hpp
 *
 * The compact index: BWT in a wavelet tree, C-array, and the balanced
 * parentheses suffix tree topology. Immutable after construction; safe
 * for concurrent readers.
 *
 * Lexicographic ranks are 1-indexed. Left extension maps the range of a
 * string alpha to the range of c*alpha:
 *
 *     [C[c] + rank_BWT(lo-1, c) + 1,  C[c] + rank_BWT(hi, c)]
 *
 * The suffix link maps the range of c*alpha to the range of alpha via
 * select on the BWT and an LCA in the topology; on a string that is not
 * right-maximal it lands on the range of its shortest right-maximal
 * right-extension instead, which is exactly what makes the right
 * maximality test below work.
 */

#ifndef SCS_FM_INDEX_HPP
#define SCS_FM_INDEX_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "scs/bp_topology.hpp"
#include "scs/text_model.hpp"
#include "scs/types.hpp"
#include "scs/wavelet_tree.hpp"

namespace scs {

// counts[c] = number of text positions holding a code strictly below c;
// counts[sigma+1] = N.
struct c_array {
    std::vector<int64_t> counts;

    int64_t operator[](int64_t c) const { return counts[c]; }
    int64_t alphabet_size() const { return int64_t(counts.size()) - 1; }

    // The unique c with counts[c] < rank <= counts[c+1].
    code_t code_for_rank(int64_t rank) const;

    int64_t size_bits() const { return 64 * int64_t(counts.size()); }
};

class fm_index {
public:
    fm_index() = default;

    static fm_index build(const concatenation& concat);

    int64_t text_length() const { return n_; }
    int64_t num_strings() const { return m_; }
    int64_t sigma() const { return sigma_; }

    lex_range root_range() const { return {1, n_}; }

    lex_range left_extend(lex_range range, code_t c) const;
    lex_range suffix_link(lex_range range) const;
    lex_range backward_search(std::span<const code_t> pattern) const;
    bool is_right_maximal(lex_range range_c_alpha, lex_range range_alpha) const;

    // Kept-string ids covered by a separator-initial range (a result of
    // left-extending with the separator). Rank 1, the lone final "$",
    // never maps to a string.
    id_interval string_ids_from_separator_range(lex_range range) const;

    const wavelet_tree& bwt() const { return bwt_; }
    const c_array& counts() const { return c_; }
    const suffix_tree_topology& topology() const { return topo_; }

    struct size_report {
        int64_t bwt_bits = 0;
        int64_t c_array_bits = 0;
        int64_t topology_bits = 0;
        int64_t total() const { return bwt_bits + c_array_bits + topology_bits; }
    };
    size_report sizes() const;

    // Versioned binary serialization ("SCSIDX1"), little-endian, each
    // component length-prefixed. Navigation structures are rebuilt on load.
    void save(std::ostream& out) const;
    static fm_index load(std::istream& in);

private:
    int64_t n_ = 0;
    int64_t m_ = 0;
    int64_t sigma_ = 0;
    wavelet_tree bwt_;
    c_array c_;
    suffix_tree_topology topo_;
};

} // namespace scs

#endif
