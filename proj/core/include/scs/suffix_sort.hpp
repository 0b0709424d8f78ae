/*
 * suffix_sort.hpp
 *
 * Suffix array construction (SA-IS, linear time) and Kasai LCP.
 */

#ifndef SCS_SUFFIX_SORT_HPP
#define SCS_SUFFIX_SORT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "scs/types.hpp"

namespace scs {

// Suffix array of a code sequence. Returned sa[k] is the 0-based starting
// position of the suffix with 1-indexed lexicographic rank k+1. Ties cannot
// occur: a unique sentinel smaller than every code is appended internally.
std::vector<int32_t> build_suffix_array(std::span<const code_t> text);

// lcp[k] = length of the longest common prefix of the suffixes with ranks
// k and k+1 (1-indexed), for k = 1..n-1; lcp[0] is unused and set to 0.
std::vector<int32_t> build_lcp_array(std::span<const code_t> text,
                                     std::span<const int32_t> sa);

} // namespace scs

#endif
