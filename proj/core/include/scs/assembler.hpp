/*
 * assembler.hpp
 *
 * Turns the recorded merge edges into the superstring by walking the
 * Hamiltonian path, plus the final containment check and run statistics.
 */

#ifndef SCS_ASSEMBLER_HPP
#define SCS_ASSEMBLER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scs/merge_graph.hpp"
#include "scs/text_model.hpp"
#include "scs/types.hpp"

namespace scs {

// The m-1 directed merge edges as successor/overlap arrays plus the unique
// path head (the id that never appears as a successor).
struct merge_plan {
    std::vector<int32_t> successor;       // [1..m], 0 = none
    std::vector<int32_t> overlap_length;  // [1..m], overlap on the edge leaving i
    int64_t head = 0;                     // 0 iff m = 0
    int64_t m = 0;

    int64_t edge_count() const;
    static merge_plan from_state(const merge_state& state);
};

// Concatenates along the path, dropping each incoming overlap. Throws
// contract_error if a recorded overlap does not match suffix == prefix or
// the path does not cover all m strings.
std::vector<code_t> build_superstring(const string_set& set, const merge_plan& plan);

struct verify_report {
    bool pass = true;
    std::vector<int64_t> missing;  // 0-based indices into the checked list
};

// Checks that every given string occurs in `output` (suffix-array based,
// near-linear). Works on raw symbol strings, after decoding.
verify_report verify_superstring(const std::vector<std::string>& originals,
                                 std::string_view output);

struct run_stats {
    int64_t m_original = 0;
    int64_t m_kept = 0;
    int64_t n_chars = 0;
    int64_t sigma = 0;
    int64_t concat_length = 0;
    int64_t superstring_length = 0;
    int64_t total_overlap = 0;
    int64_t merges = 0;

    double parse_seconds = 0;
    double preprocess_seconds = 0;
    double index_build_seconds = 0;
    double superstring_seconds = 0;
    double verify_seconds = 0;
    double total_seconds = 0;

    int64_t bwt_bits = 0;
    int64_t c_array_bits = 0;
    int64_t topology_bits = 0;
    int64_t iterator_bits = 0;
    int64_t merge_state_bits = 0;
    int64_t total_bits() const {
        return bwt_bits + c_array_bits + topology_bits + iterator_bits + merge_state_bits;
    }
};

} // namespace scs

#endif
