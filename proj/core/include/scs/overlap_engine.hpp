/*
 * overlap_engine.hpp
 *
 * Enumerates all prefix-suffix overlaps in decreasing length and drives
 * the greedy merges. One iterator per kept string starts at the string's
 * longest right-maximal proper suffix and descends one suffix link per
 * processing step; a separator left-extension at each step yields the ids
 * of the strings sharing that prefix.
 *
 * Tie policy: attempts are ordered by (depth descending, then iterator
 * position ascending in the (init_d desc, id asc) array). The run stops
 * after m-1 merges or when every iterator is exhausted.
 */

#ifndef SCS_OVERLAP_ENGINE_HPP
#define SCS_OVERLAP_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "scs/assembler.hpp"
#include "scs/fm_index.hpp"
#include "scs/merge_graph.hpp"
#include "scs/text_model.hpp"
#include "scs/types.hpp"

namespace scs {

struct overlap_iterator {
    int64_t id = 0;      // kept string id, 1-based
    lex_range range;     // range of the current length-d suffix
    int64_t d = 0;       // current depth
    int64_t init_d = 0;
    bool retired = false;
};

// Backward-searches each string for as long as the current suffix stays
// right-maximal; result sorted by (init_d desc, id asc).
std::vector<overlap_iterator> init_iterators(const fm_index& fm, const string_set& set);

// Depth-bucketed sweep over the sorted iterator array: next() hands out
// the iterator with the maximum current depth, ties by array position;
// requeue() re-enters an advanced iterator one level down.
class iterator_schedule {
public:
    iterator_schedule() = default;
    explicit iterator_schedule(std::vector<overlap_iterator> iterators);

    overlap_iterator* next();
    void requeue(overlap_iterator& it);

    int64_t current_depth() const { return depth_; }
    const std::vector<overlap_iterator>& iterators() const { return its_; }
    int64_t total_budget() const { return budget_; }  // sum of (init_d + 1)

    int64_t size_bits() const {
        return 64 * 5 * int64_t(its_.size()) +
               32 * int64_t(cur_.capacity() + nxt_.capacity());
    }

private:
    std::vector<overlap_iterator> its_;
    std::vector<int32_t> cur_, nxt_;  // indices descended from the level above
    int64_t cur_pos_ = 0;
    int64_t fresh_pos_ = 0;  // next iterator entering at its init_d
    int64_t depth_ = -1;
    int64_t budget_ = 0;
};

struct merge_attempt {
    int64_t i = 0;
    int64_t d = 0;
    id_interval candidates;
    enum class outcome { none, cycle_none, accept } result = outcome::none;
    int64_t j = 0;  // accepted right side, 0 otherwise
};

using trace_fn = std::function<void(const merge_attempt&)>;

// Algorithm main loop; returns the completed plan. `state` must be fresh
// with state.m() == set.m.
merge_plan run_greedy(const fm_index& fm, iterator_schedule& schedule,
                      merge_state& state, const trace_fn& trace = nullptr);

} // namespace scs

#endif
