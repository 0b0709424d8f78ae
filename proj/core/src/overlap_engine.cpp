#include "scs/overlap_engine.hpp"

#include <algorithm>
#include <cassert>

namespace scs {

std::vector<overlap_iterator> init_iterators(const fm_index& fm, const string_set& set) {
    std::vector<overlap_iterator> its;
    its.reserve(set.m);
    for (int64_t i = 1; i <= set.m; ++i) {
        const auto& s = set.strings[i - 1];
        overlap_iterator it;
        it.id = i;
        it.range = fm.root_range();
        it.d = 0;
        while (it.d < int64_t(s.size())) {
            const code_t c = s[s.size() - 1 - it.d];
            const lex_range ext = fm.left_extend(it.range, c);
            assert(!ext.empty());
            if (!fm.is_right_maximal(ext, it.range)) break;
            it.range = ext;
            ++it.d;
        }
        // the whole string right-maximal would mean it occurs inside
        // another string, which preprocessing removed
        if (it.d == int64_t(s.size()))
            throw contract_error("init_iterators: set is not containment-free");
        it.init_d = it.d;
        its.push_back(it);
    }
    std::sort(its.begin(), its.end(), [](const overlap_iterator& a, const overlap_iterator& b) {
        if (a.init_d != b.init_d) return a.init_d > b.init_d;
        return a.id < b.id;
    });
    return its;
}

iterator_schedule::iterator_schedule(std::vector<overlap_iterator> iterators)
    : its_(std::move(iterators)) {
    depth_ = its_.empty() ? -1 : its_[0].init_d;
    for (const auto& it : its_) budget_ += it.init_d + 1;
}

overlap_iterator* iterator_schedule::next() {
    while (depth_ >= 0) {
        if (cur_pos_ < int64_t(cur_.size())) {
            overlap_iterator& it = its_[cur_[cur_pos_++]];
            assert(it.d == depth_ && !it.retired);
            return &it;
        }
        if (fresh_pos_ < int64_t(its_.size()) && its_[fresh_pos_].init_d == depth_) {
            return &its_[fresh_pos_++];
        }
        // level exhausted; descend
        --depth_;
        cur_.swap(nxt_);
        nxt_.clear();
        cur_pos_ = 0;
    }
    return nullptr;
}

void iterator_schedule::requeue(overlap_iterator& it) {
    assert(it.d == depth_ - 1 && !it.retired);
    nxt_.push_back(int32_t(&it - its_.data()));
}

merge_plan run_greedy(const fm_index& fm, iterator_schedule& schedule,
                      merge_state& state, const trace_fn& trace) {
    const int64_t m = state.m();
    const int64_t merges_needed = std::max<int64_t>(m - 1, 0);
    const int64_t budget = schedule.total_budget();
    int64_t steps = 0;

    while (state.merges() < merges_needed) {
        overlap_iterator* it = schedule.next();
        if (it == nullptr) break;
        if (++steps > budget)
            throw std::logic_error("run_greedy: processing budget exceeded");

        if (!state.left_available(it->id)) {
            it->retired = true;  // can never again be a merge's left side
            continue;
        }

        const lex_range ext = fm.left_extend(it->range, SEPARATOR);
        if (!ext.empty()) {
            const id_interval ids = fm.string_ids_from_separator_range(ext);
            if (!ids.empty()) {
                bool cycle = false;
                const auto edge = state.try_merge(it->id, ids, it->d, &cycle);
                if (trace) {
                    merge_attempt a;
                    a.i = it->id;
                    a.d = it->d;
                    a.candidates = ids;
                    a.result = edge ? merge_attempt::outcome::accept
                               : cycle ? merge_attempt::outcome::cycle_none
                                       : merge_attempt::outcome::none;
                    a.j = edge ? edge->right : 0;
                    trace(a);
                }
            }
        }

        if (it->d == 0) {
            it->retired = true;
            continue;
        }
        it->range = fm.suffix_link(it->range);
        --it->d;
        schedule.requeue(*it);
    }

    return merge_plan::from_state(state);
}

} // namespace scs
